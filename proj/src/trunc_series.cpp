#include <bperm/trunc_series.hpp>

#include <bperm/q_builders.hpp>

#include <algorithm>
#include <utility>

namespace bperm {

std::string_view main_var_name(MainVar v) noexcept {
    switch (v) {
    case MainVar::u: return "u";
    case MainVar::t: return "t";
    case MainVar::q: return "q";
    }
    return "?";
}

namespace {

std::optional<Var> as_var(MainVar m) {
    switch (m) {
    case MainVar::t: return Var::t;
    case MainVar::q: return Var::q;
    case MainVar::u: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

TruncSeries::TruncSeries(MainVar main, int order, Caps caps)
    : main_(main), caps_(caps), coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {
    if (order < 0)
        throw Error(Errc::out_of_range, "negative truncation order " + std::to_string(order));
    if (const auto v = as_var(main); v && caps_.of(*v))
        throw Error(Errc::truncation_violation, "main variable " + std::string(main_var_name(main)) +
                                                    " cannot also be capped in the coefficients");
}

TruncSeries TruncSeries::constant(const LaurentPoly &c, MainVar main, int order, Caps caps) {
    TruncSeries s(main, order, caps);
    s.coeffs_[0] = c;
    s.normalize();
    return s;
}

TruncSeries TruncSeries::from_coefficients(std::vector<LaurentPoly> coeffs, MainVar main, int order, Caps caps) {
    TruncSeries s(main, order, caps);
    for (std::size_t k = 0; k < coeffs.size() && k < s.coeffs_.size(); ++k)
        s.coeffs_[k] = std::move(coeffs[k]);
    s.normalize();
    return s;
}

TruncSeries TruncSeries::main_power(int k, MainVar main, int order, Caps caps) {
    TruncSeries s(main, order, caps);
    if (k >= 0 && k <= order)
        s.coeffs_[static_cast<std::size_t>(k)] = 1;
    return s;
}

TruncSeries TruncSeries::from_poly(const LaurentPoly &p, MainVar main, int order, Caps caps) {
    const auto v = as_var(main);
    if (!v)
        throw Error(Errc::parse_error, "a polynomial has no u-expansion");
    TruncSeries s(main, order, caps);
    std::vector<std::vector<LaurentPoly::Term>> buckets(s.coeffs_.size());
    for (const auto &t : p.terms()) {
        const int e = t.mono[*v];
        if (e < 0)
            throw Error(Errc::truncation_violation,
                        "negative power of main variable " + std::string(main_var_name(main)));
        if (e > order)
            continue;
        Monomial m = t.mono;
        m[*v] = 0;
        buckets[static_cast<std::size_t>(e)].push_back({m, t.coeff});
    }
    for (std::size_t k = 0; k < buckets.size(); ++k)
        s.coeffs_[k] = LaurentPoly::from_terms(std::move(buckets[k]));
    s.normalize();
    return s;
}

bool TruncSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly &c) { return c.is_zero(); });
}

void TruncSeries::check_compatible(const TruncSeries &o) const {
    if (main_ != o.main_ || caps_ != o.caps_ || coeffs_.size() != o.coeffs_.size())
        throw Error(Errc::truncation_violation, "series with different truncations");
}

void TruncSeries::normalize() {
    const auto v = as_var(main_);
    for (auto &c : coeffs_) {
        if (v && c.max_exponent(*v).value_or(0) != 0)
            throw Error(Errc::truncation_violation, "coefficient contains the main variable " +
                                                        std::string(main_var_name(main_)));
        if (caps_.any())
            c = c.truncated(caps_);
    }
}

TruncSeries &TruncSeries::operator+=(const TruncSeries &o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncSeries &TruncSeries::operator-=(const TruncSeries &o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncSeries operator-(TruncSeries a) {
    for (auto &c : a.coeffs_)
        c = -c;
    return a;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
    a.check_compatible(b);
    TruncSeries r(a.main_, a.order(), a.caps_);
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!b.coeffs_[j].is_zero())
                r.coeffs_[i + j] += multiply_truncated(a.coeffs_[i], b.coeffs_[j], a.caps_);
    }
    return r;
}

TruncSeries TruncSeries::scaled(const LaurentPoly &c) const {
    TruncSeries r = *this;
    for (auto &x : r.coeffs_)
        x = multiply_truncated(x, c, caps_);
    r.normalize();
    return r;
}

TruncSeries TruncSeries::dilated(const LaurentPoly &c) const {
    TruncSeries r = *this;
    LaurentPoly power = 1;
    for (auto &x : r.coeffs_) {
        x = multiply_truncated(x, power, caps_);
        power = multiply_truncated(power, c, caps_);
    }
    r.normalize();
    return r;
}

TruncSeries TruncSeries::inverse() const {
    const LaurentPoly g0 = inverse_truncated(coeffs_[0], caps_);
    TruncSeries g(main_, order(), caps_);
    g.coeffs_[0] = g0;
    // g_n = -g_0 * sum_{k=1..n} f_k g_{n-k}
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        LaurentPoly acc;
        for (std::size_t k = 1; k <= n; ++k)
            if (!coeffs_[k].is_zero())
                acc += multiply_truncated(coeffs_[k], g.coeffs_[n - k], caps_);
        g.coeffs_[n] = -multiply_truncated(g0, acc, caps_);
    }
    return g;
}

LaurentPoly TruncSeries::to_poly() const {
    const auto v = as_var(main_);
    if (!v)
        throw Error(Errc::parse_error, "a u-series has no polynomial form");
    LaurentPoly out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out += coeffs_[k].times_monomial(Monomial::of(*v, static_cast<int>(k)));
    return out;
}

std::string TruncSeries::to_string() const {
    std::string out;
    const std::string_view u = main_var_name(main_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + coeffs_[k].to_string() + ")";
        if (k == 1)
            out += "*" + std::string(u);
        else if (k > 1)
            out += "*" + std::string(u) + "^" + std::to_string(k);
    }
    out += (out.empty() ? "O(" : " + O(") + std::string(u) + "^" + std::to_string(coeffs_.size()) + ")";
    return out;
}

// ---------------------------------------------------------------------------

TruncSeries pochhammer_series(const LaurentPoly &a, const Monomial &step, std::optional<int> factors, MainVar main,
                              int order, const Caps &caps) {
    TruncSeries result = TruncSeries::constant(1, main, order, caps);
    const TruncSeries u = TruncSeries::main_power(1, main, order, caps);
    LaurentPoly a_k = a.truncated(caps);
    // Without an explicit count, stop once a * step^k is truncated to zero.
    const int guard = caps.total_budget() + order + 2;
    for (int k = 0; factors ? k < *factors : true; ++k) {
        if (!factors && a_k.is_zero())
            break;
        if (!factors && k > guard)
            throw Error(Errc::not_invertible, "infinite product does not converge under the truncation");
        result = result * (TruncSeries::constant(1, main, order, caps) - u.scaled(a_k));
        a_k = a_k.times_monomial(step).truncated(caps);
    }
    return result;
}

namespace {

TruncSeries q_exp(const Monomial &base, MainVar main, int order, const Caps &caps, bool large) {
    std::vector<LaurentPoly> coeffs;
    LaurentPoly poch = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            poch = multiply_truncated(poch, LaurentPoly(1) - LaurentPoly::monomial(base.pow(n)), caps);
        LaurentPoly c = inverse_truncated(poch, caps);
        if (large)
            c = c.times_monomial(base.pow(n * (n - 1) / 2)).truncated(caps);
        coeffs.push_back(std::move(c));
    }
    return TruncSeries::from_coefficients(std::move(coeffs), main, order, caps);
}

} // namespace

TruncSeries q_exp_small(const Monomial &base, MainVar main, int order, const Caps &caps) {
    return q_exp(base, main, order, caps, false);
}

TruncSeries q_exp_large(const Monomial &base, MainVar main, int order, const Caps &caps) {
    return q_exp(base, main, order, caps, true);
}

} // namespace bperm
