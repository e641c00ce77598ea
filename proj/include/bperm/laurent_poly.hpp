// include/bperm/laurent_poly.hpp - sparse Laurent polynomials in t, q, Y0,
// Y1, Z with arbitrary-precision integer coefficients.

#pragma once

#include <bperm/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bperm {

using BigInt = boost::multiprecision::cpp_int;

enum class Var : std::uint8_t { t, q, Y0, Y1, Z };
inline constexpr std::size_t kVarCount = 5;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::t, Var::q, Var::Y0, Var::Y1, Var::Z};

std::string_view var_name(Var v) noexcept;

struct Monomial {
    std::array<int, kVarCount> exps{};

    static Monomial one() noexcept { return {}; }
    static Monomial of(Var v, int power = 1) noexcept {
        Monomial m;
        m[v] = power;
        return m;
    }

    int operator[](Var v) const noexcept { return exps[static_cast<std::size_t>(v)]; }
    int &operator[](Var v) noexcept { return exps[static_cast<std::size_t>(v)]; }

    [[nodiscard]] bool is_one() const noexcept;
    /// Sum of absolute exponents; the grading of the canonical term order.
    [[nodiscard]] int abs_degree() const noexcept;

    Monomial &operator*=(const Monomial &o) noexcept {
        for (std::size_t i = 0; i < kVarCount; ++i)
            exps[i] += o.exps[i];
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial &b) noexcept { return a *= b; }
    [[nodiscard]] Monomial pow(int k) const noexcept;

    friend bool operator==(const Monomial &, const Monomial &) = default;
};

/// Canonical term order: by abs_degree ascending, then exponent vectors in
/// (t, q, Y0, Y1, Z) order, larger first.
bool canonical_less(const Monomial &a, const Monomial &b) noexcept;

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept;
};

std::string format_monomial(const Monomial &m);

/// Per-variable inclusive upper bounds on exponents. A capped variable must
/// never carry a negative exponent.
struct Caps {
    std::array<std::optional<int>, kVarCount> max{};

    static Caps none() { return {}; }
    Caps &with(Var v, int bound) {
        max[static_cast<std::size_t>(v)] = bound;
        return *this;
    }
    [[nodiscard]] std::optional<int> of(Var v) const { return max[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool any() const noexcept;
    /// True when m survives truncation; throws Error{truncation_violation}
    /// on a negative exponent in a capped variable.
    [[nodiscard]] bool admits(const Monomial &m) const;
    /// Sum of exponents over the capped variables.
    [[nodiscard]] int capped_degree(const Monomial &m) const noexcept;
    [[nodiscard]] int total_budget() const noexcept;

    friend bool operator==(const Caps &, const Caps &) = default;
};

class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        BigInt coeff;
        friend bool operator==(const Term &, const Term &) = default;
    };

    LaurentPoly() = default;
    LaurentPoly(long long c); // NOLINT: integers embed as constants
    LaurentPoly(const BigInt &c);

    static LaurentPoly monomial(const Monomial &m, const BigInt &c = 1);
    static LaurentPoly var(Var v, int power = 1) { return monomial(Monomial::of(v, power)); }
    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static LaurentPoly from_terms(std::vector<Term> terms);

    [[nodiscard]] const std::vector<Term> &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
    [[nodiscard]] BigInt coefficient(const Monomial &m) const;
    [[nodiscard]] BigInt constant_term() const { return coefficient(Monomial::one()); }
    [[nodiscard]] std::optional<int> min_exponent(Var v) const noexcept;
    [[nodiscard]] std::optional<int> max_exponent(Var v) const noexcept;
    /// True if no variable other than `v` occurs.
    [[nodiscard]] bool is_univariate_in(Var v) const noexcept;

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator-(LaurentPoly a);

    [[nodiscard]] LaurentPoly pow(unsigned k) const;
    [[nodiscard]] LaurentPoly times_monomial(const Monomial &m, const BigInt &c = 1) const;

    /// Drops every term rejected by `caps`.
    [[nodiscard]] LaurentPoly truncated(const Caps &caps) const;

    /// Simultaneous substitution of each listed variable by a single term
    /// (coefficient times monomial, coefficient may be 0). Throws
    /// Error{not_invertible} for a negative power of 0 and
    /// Error{inexact_division} for a negative power of a coefficient other
    /// than +-1.
    [[nodiscard]] LaurentPoly substitute(std::initializer_list<std::pair<Var, Term>> images) const;
    [[nodiscard]] LaurentPoly substitute(std::span<const std::pair<Var, Term>> images) const;
    /// Variable set to an integer constant.
    [[nodiscard]] LaurentPoly specialize(Var v, long long value) const;
    /// v -> v^(1/factor). Throws Error{half_integer_exponent} unless every
    /// exponent of v is divisible by factor.
    [[nodiscard]] LaurentPoly deflate(Var v, int factor) const;

    /// Value at an integer point given in (t, q, Y0, Y1, Z) order. Negative
    /// powers are only allowed at +-1 (Error{inexact_division}).
    [[nodiscard]] BigInt evaluate(const std::array<long long, kVarCount> &point) const;

    [[nodiscard]] std::string to_string() const;
    /// Inverse of to_string; throws Error{parse_error}.
    static LaurentPoly parse(std::string_view text);

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
    std::vector<Term> terms_; // canonical order, nonzero coefficients
};

/// Product with every term rejected by `caps` dropped on the fly.
LaurentPoly multiply_truncated(const LaurentPoly &a, const LaurentPoly &b, const Caps &caps);

/// Inverse of f modulo the caps: f's constant term must be +-1 and every
/// other term must have positive degree in the capped variables. Throws
/// Error{not_invertible}.
LaurentPoly inverse_truncated(const LaurentPoly &f, const Caps &caps);

/// num / den where den involves only `v`, with nonnegative exponents and a
/// leading coefficient of +-1. Throws Error{inexact_division} on a nonzero
/// remainder.
LaurentPoly divide_exact(const LaurentPoly &num, const LaurentPoly &den, Var v);

struct TermDifference {
    Monomial mono;
    BigInt expected;
    BigInt actual;
};

/// First monomial, in canonical order, whose coefficients differ.
std::optional<TermDifference> first_difference(const LaurentPoly &expected, const LaurentPoly &actual);

} // namespace bperm
