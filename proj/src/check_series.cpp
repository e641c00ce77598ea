// Checkers for generating-function identities whose coefficients are
// infinite q-series, compared modulo u^u_order and q^q_order (and t^t_order).

#include "check_support.hpp"

#include <bperm/families.hpp>
#include <bperm/q_builders.hpp>

namespace bperm::detail {

namespace {

/// (1 - u/(1-q))^{-1} (u;q)_inf, shared by several identities.
TruncSeries derangement_factor(const Frame &f) {
    return f.geometric(f.inverse(P("1 - q"))) * f.poch(1, qpow(1), std::nullopt);
}

std::vector<LaurentPoly> enumerated(int count, Bundle b, SubsetClass cls = SubsetClass::B) {
    std::vector<LaurentPoly> out;
    for (int n = 0; n < count; ++n)
        out.push_back(enum_polynomial(n, b, cls));
    return out;
}

/// (-Zq;q)_n (q;q)_n for n < count.
std::vector<LaurentPoly> length_denominators(int count) {
    std::vector<LaurentPoly> out;
    for (int n = 0; n < count; ++n)
        out.push_back(q_pochhammer(P("-q*Z"), qpow(1), n) * q_factorial_pochhammer(qpow(1), n));
    return out;
}

std::vector<LaurentPoly> factorial_denominators(int count, const Monomial &base) {
    std::vector<LaurentPoly> out;
    for (int n = 0; n < count; ++n)
        out.push_back(q_factorial_pochhammer(base, n));
    return out;
}

std::vector<LaurentPoly> specialized(std::vector<LaurentPoly> v, Var var, long long value) {
    for (auto &p : v)
        p = p.specialize(var, value);
    return v;
}

} // namespace

CheckResult check_1_7(const CheckParams &p) {
    const Frame f = Frame::from(p, false);
    const int count = f.order + 1;
    const auto denoms = length_denominators(count);
    const auto lhs = f.quotient_series(enumerated(count, Bundle::PIX_L), denoms);
    // Y0^n (-q Y1 Z / Y0; q)_n = prod_{i<n} (Y0 + q^{i+1} Y1 Z)
    std::vector<LaurentPoly> a;
    LaurentPoly prod = 1;
    for (int n = 0; n < count; ++n) {
        a.push_back(prod);
        prod *= P("Y0") + P("Y1*Z").times_monomial(qpow(n + 1));
    }
    const auto rhs = derangement_factor(f) * f.quotient_series(a, denoms);
    return compare("", rhs, lhs);
}

CheckResult check_1_8(const CheckParams &p) {
    const Frame f = Frame::from(p, false);
    const int count = f.order + 1;
    const auto lhs = f.quotient_series(specialized(enumerated(count, Bundle::FLAG), Var::t, 1),
                                       factorial_denominators(count, q2pow(1)));
    const auto rhs = f.geometric(P("1 + q*Z") * f.inverse(P("1 - q^2"))) * f.poch(1, q2pow(1), std::nullopt) *
                     f.poch(P("Y0"), q2pow(1), std::nullopt).inverse() *
                     f.poch(P("-q*Y1*Z"), q2pow(1), std::nullopt) *
                     f.poch(P("-q*Z"), q2pow(1), std::nullopt).inverse();
    return compare("", rhs, lhs);
}

CheckResult check_1_9(const CheckParams &p) {
    const Frame f = Frame::from(p, true);
    const int count = f.order + 1;
    std::vector<LaurentPoly> coeffs, denoms;
    for (int n = 0; n < count; ++n) {
        coeffs.push_back(P("1 + t") * enum_polynomial(n, Bundle::FLAG));
        denoms.push_back(q_pochhammer(P("t^2"), q2pow(1), n + 1));
    }
    const auto lhs = f.quotient_series(coeffs, denoms);

    TruncSeries rhs = f.constant(0);
    for (int s = 0; s < p.t_order; ++s) {
        LaurentPoly weights;
        for (int i = 0; i <= s; ++i)
            weights += i % 2 == 1 ? P("Z").times_monomial(qpow(i)) : LaurentPoly::monomial(qpow(i));
        const int even = s / 2 + 1;
        const int odd = (s + 1) / 2;
        const auto term = f.geometric(weights) * f.poch(1, q2pow(1), even) * f.poch(P("Y0"), q2pow(1), even).inverse() *
                          f.poch(P("-q*Y1*Z"), q2pow(1), odd) * f.poch(P("-q*Z"), q2pow(1), odd).inverse();
        rhs += term.scaled(LaurentPoly::var(Var::t, s));
    }
    return compare("", rhs, lhs);
}

CheckResult check_3_3(const CheckParams &p) {
    const Frame f = Frame::from(p, false);
    const int count = f.order + 1;
    const auto lhs = f.quotient_series(enumerated(count, Bundle::MAJ, SubsetClass::D),
                                       factorial_denominators(count, qpow(1)));
    return compare("", derangement_factor(f), lhs);
}

CheckResult check_6_6(const CheckParams &p) {
    const Frame f = Frame::from(p, false);
    const int count = f.order + 1;
    std::vector<LaurentPoly> d;
    for (int n = 0; n < count; ++n)
        d.push_back(enum_polynomial(n, Bundle::FLAG, SubsetClass::DB).specialize(Var::t, 1).specialize(Var::Y1, 1));
    const auto lhs = f.quotient_series(d, factorial_denominators(count, q2pow(1)));
    const auto rhs = f.geometric(P("1 + q*Z") * f.inverse(P("1 - q^2"))) * f.poch(1, q2pow(1), std::nullopt);
    return compare("", rhs, lhs);
}

CheckResult check_6_12(const CheckParams &p) {
    const Frame f = Frame::from(p, false);
    const int count = f.order + 1;
    const auto denoms = length_denominators(count);
    const auto lhs = f.quotient_series(enumerated(count, Bundle::PIX_L, SubsetClass::KB), denoms);
    std::vector<LaurentPoly> a;
    for (int n = 0; n < count; ++n) {
        Monomial m = qpow(n * (n + 1) / 2);
        m[Var::Y1] = n;
        m[Var::Z] = n;
        a.push_back(LaurentPoly::monomial(m));
    }
    const auto rhs = derangement_factor(f) * f.quotient_series(a, denoms);
    return compare("", rhs, lhs);
}

CheckResult check_6_14(const CheckParams &p) {
    const Frame f = Frame::from(p, true);
    const int count = f.order + 1;
    const auto a = enumerated(count, Bundle::DES_MAJ_FIX);
    // A_n(t,q,Y0) is B_n(t^(1/2), q^(1/2), Y0, 0, 0), read in squared variables.
    for (int n = 0; n < count; ++n) {
        const auto b = enum_polynomial(n, Bundle::FLAG).specialize(Var::Z, 0).specialize(Var::Y1, 0);
        if (auto w = compare(at_n(n) + ", flag at Z=0", b.deflate(Var::t, 2).deflate(Var::q, 2), a[static_cast<std::size_t>(n)]))
            return w;
    }
    std::vector<LaurentPoly> denoms;
    for (int n = 0; n < count; ++n)
        denoms.push_back(q_pochhammer(P("t"), qpow(1), n + 1));
    const auto lhs = f.quotient_series(a, denoms);
    TruncSeries rhs = f.constant(0);
    for (int s = 0; s < p.t_order; ++s) {
        const auto term = f.geometric(q_integer(s + 1, qpow(1))) * f.poch(1, qpow(1), s + 1) *
                          f.poch(P("Y0"), qpow(1), s + 1).inverse();
        rhs += term.scaled(LaurentPoly::var(Var::t, s));
    }
    return compare("", rhs, lhs);
}

CheckResult check_6_15(const CheckParams &p) {
    const Frame f = Frame::from(p, false);
    const int count = f.order + 1;
    const auto lhs = f.quotient_series(specialized(enumerated(count, Bundle::DES_MAJ_FIX), Var::t, 1),
                                       factorial_denominators(count, qpow(1)));
    const auto rhs = derangement_factor(f) * f.poch(P("Y0"), qpow(1), std::nullopt).inverse();
    return compare("", rhs, lhs);
}

CheckResult check_6_17(const CheckParams &p) {
    const Frame f = Frame::from(p, false);
    const int count = f.order + 1;
    const auto sum = f.quotient_series(enumerated(count, Bundle::MAJ, SubsetClass::D),
                                       factorial_denominators(count, qpow(1)));
    const auto lhs = q_exp_small(qpow(1), MainVar::u, f.order, f.caps) * sum;
    return compare("", f.geometric(f.inverse(P("1 - q"))), lhs);
}

} // namespace bperm::detail
