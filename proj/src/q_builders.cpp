#include <bperm/q_builders.hpp>

#include <array>
#include <optional>

namespace bperm {

Var base_variable(const Monomial &base) {
    std::optional<Var> found;
    for (Var v : kAllVars) {
        if (base[v] == 0)
            continue;
        if (found || base[v] < 0)
            throw Error(Errc::inexact_division, "base " + format_monomial(base) +
                                                    " is not a positive power of one variable");
        found = v;
    }
    if (!found)
        throw Error(Errc::inexact_division, "base 1 is not a positive power of one variable");
    return *found;
}

LaurentPoly q_pochhammer(const LaurentPoly &a, const Monomial &step, int n) {
    LaurentPoly out = 1;
    LaurentPoly a_k = a;
    for (int k = 0; k < n; ++k) {
        out *= LaurentPoly(1) - a_k;
        a_k = a_k.times_monomial(step);
    }
    return out;
}

LaurentPoly q_factorial_pochhammer(const Monomial &base, int n) {
    return q_pochhammer(LaurentPoly::monomial(base), base, n);
}

LaurentPoly q_integer(int n, const Monomial &base) {
    std::vector<LaurentPoly::Term> terms;
    for (int k = 0; k < n; ++k)
        terms.push_back({base.pow(k), 1});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_factorial(int n, const Monomial &base) {
    LaurentPoly out = 1;
    for (int k = 1; k <= n; ++k)
        out *= q_integer(k, base);
    return out;
}

LaurentPoly gauss_multinomial(int n, std::span<const int> parts, const Monomial &base) {
    const Var v = base_variable(base);
    int sum = 0;
    for (int m : parts) {
        if (m < 0)
            throw Error(Errc::out_of_range, "negative part " + std::to_string(m));
        sum += m;
    }
    if (sum != n)
        throw Error(Errc::out_of_range, "parts sum to " + std::to_string(sum) + ", not " + std::to_string(n));
    LaurentPoly out = q_factorial_pochhammer(base, n);
    for (int m : parts)
        out = divide_exact(out, q_factorial_pochhammer(base, m), v);
    return out;
}

LaurentPoly gauss_binomial(int n, int k, const Monomial &base) {
    if (k < 0 || k > n)
        return {};
    const std::array<int, 2> parts{k, n - k};
    return gauss_multinomial(n, parts, base);
}

} // namespace bperm
