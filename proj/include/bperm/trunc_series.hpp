// include/bperm/trunc_series.hpp - power series in one distinguished
// variable, kept modulo main_var^(order+1), with LaurentPoly coefficients
// that may themselves be truncated in t and q.

#pragma once

#include <bperm/laurent_poly.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bperm {

/// `u` is external to the coefficient ring; `t` and `q` mean the series is
/// the t- or q-expansion of a polynomial, so coefficients must not contain
/// that variable.
enum class MainVar { u, t, q };

std::string_view main_var_name(MainVar v) noexcept;

class TruncSeries {
public:
    TruncSeries(MainVar main, int order, Caps caps = {});

    static TruncSeries constant(const LaurentPoly &c, MainVar main, int order, Caps caps = {});
    /// Coefficients beyond `order` are dropped.
    static TruncSeries from_coefficients(std::vector<LaurentPoly> coeffs, MainVar main, int order, Caps caps = {});
    /// The main variable to the power k (zero if k > order).
    static TruncSeries main_power(int k, MainVar main, int order, Caps caps = {});
    /// Splits p by powers of a t or q main variable.
    static TruncSeries from_poly(const LaurentPoly &p, MainVar main, int order, Caps caps = {});

    [[nodiscard]] MainVar main_var() const noexcept { return main_; }
    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const Caps &caps() const noexcept { return caps_; }
    [[nodiscard]] const LaurentPoly &operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const std::vector<LaurentPoly> &coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept;

    TruncSeries &operator+=(const TruncSeries &o);
    TruncSeries &operator-=(const TruncSeries &o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries &b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries &b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator-(TruncSeries a);

    /// Every coefficient multiplied by c, then truncated.
    [[nodiscard]] TruncSeries scaled(const LaurentPoly &c) const;
    /// main_var -> c * main_var, i.e. coefficient k multiplied by c^k.
    [[nodiscard]] TruncSeries dilated(const LaurentPoly &c) const;

    /// Multiplicative inverse. Coefficient 0 must be invertible in the
    /// truncated coefficient ring. Throws Error{not_invertible}.
    [[nodiscard]] TruncSeries inverse() const;

    /// Sum of c_k * main_var^k for a t or q main variable.
    [[nodiscard]] LaurentPoly to_poly() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

private:
    void check_compatible(const TruncSeries &o) const;
    void normalize();

    MainVar main_;
    Caps caps_;
    std::vector<LaurentPoly> coeffs_; // size order + 1
};

/// Product of (1 - a * step^k * main_var) for k = 0..factors-1, or until a
/// factor is truncated away when `factors` is empty. Throws
/// Error{not_invertible} for an empty count whose factors never vanish.
TruncSeries pochhammer_series(const LaurentPoly &a, const Monomial &step, std::optional<int> factors, MainVar main,
                              int order, const Caps &caps);

/// e(u) = sum u^n / (base;base)_n.
TruncSeries q_exp_small(const Monomial &base, MainVar main, int order, const Caps &caps);
/// E(u) = sum base^C(n,2) u^n / (base;base)_n.
TruncSeries q_exp_large(const Monomial &base, MainVar main, int order, const Caps &caps);

} // namespace bperm
