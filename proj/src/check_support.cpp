#include "check_support.hpp"

#include <algorithm>

namespace bperm::detail {

CheckResult compare(const std::string &location, const LaurentPoly &expected, const LaurentPoly &actual) {
    const auto d = first_difference(expected, actual);
    if (!d)
        return std::nullopt;
    return Witness{location, format_monomial(d->mono), d->expected.str(), d->actual.str()};
}

CheckResult compare(const std::string &location, const BigInt &expected, const BigInt &actual) {
    if (expected == actual)
        return std::nullopt;
    return Witness{location, "1", expected.str(), actual.str()};
}

CheckResult compare(const std::string &prefix, const TruncSeries &expected, const TruncSeries &actual) {
    const int order = std::min(expected.order(), actual.order());
    for (int k = 0; k <= order; ++k) {
        const std::string where = prefix + std::string(main_var_name(expected.main_var())) + "^" + std::to_string(k);
        if (auto w = compare(where, expected[k], actual[k]))
            return w;
    }
    return std::nullopt;
}

Witness mismatch(const std::string &location, std::string expected, std::string actual) {
    return Witness{location, "", std::move(expected), std::move(actual)};
}

std::string at_n(int n) { return "n=" + std::to_string(n); }
std::string at_ns(int n, int s) { return "n=" + std::to_string(n) + ", s=" + std::to_string(s); }

Frame Frame::from(const CheckParams &p, bool with_t) {
    if (p.u_order < 1 || p.q_order < 1 || (with_t && p.t_order < 1))
        throw Error(Errc::out_of_range, "series orders must be at least 1");
    Caps caps;
    caps.with(Var::q, p.q_order - 1);
    if (with_t)
        caps.with(Var::t, p.t_order - 1);
    return Frame{p.u_order - 1, caps};
}

TruncSeries Frame::constant(const LaurentPoly &c) const { return TruncSeries::constant(c, MainVar::u, order, caps); }

TruncSeries Frame::geometric(const LaurentPoly &c) const {
    std::vector<LaurentPoly> coeffs;
    LaurentPoly power = 1;
    for (int k = 0; k <= order; ++k) {
        coeffs.push_back(power);
        power = multiply_truncated(power, c, caps);
    }
    return TruncSeries::from_coefficients(std::move(coeffs), MainVar::u, order, caps);
}

TruncSeries Frame::poch(const LaurentPoly &a, const Monomial &step, std::optional<int> count) const {
    return pochhammer_series(a, step, count, MainVar::u, order, caps);
}

LaurentPoly Frame::inverse(const LaurentPoly &p) const {
    if (!caps.any()) {
        if (p.term_count() == 1 && p.terms().front().mono.is_one())
            return p; // +-1
        throw Error(Errc::not_invertible, "an exact frame only inverts constants");
    }
    return inverse_truncated(p, caps);
}

TruncSeries Frame::quotient_series(const std::vector<LaurentPoly> &coeffs,
                                   const std::vector<LaurentPoly> &denominators) const {
    std::vector<LaurentPoly> out;
    for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= order; ++n)
        out.push_back(multiply_truncated(coeffs[n].truncated(caps), inverse(denominators[n]), caps));
    return TruncSeries::from_coefficients(std::move(out), MainVar::u, order, caps);
}

LaurentPoly P(const char *text) { return LaurentPoly::parse(text); }
Monomial qpow(int k) { return Monomial::of(Var::q, k); }
Monomial q2pow(int k) { return Monomial::of(Var::q, 2 * k); }

} // namespace bperm::detail
