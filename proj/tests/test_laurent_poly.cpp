#include <doctest.h>

#include "oracles.hpp"

#include <bperm/laurent_poly.hpp>
#include <bperm/q_builders.hpp>

#include <random>

using namespace bperm;

namespace {

LaurentPoly L(std::string_view s) { return LaurentPoly::parse(s); }

const Monomial q1 = Monomial::of(Var::q);
const Monomial q2 = Monomial::of(Var::q, 2);

LaurentPoly random_poly(std::mt19937 &rng) {
    std::uniform_int_distribution<int> count(0, 5);
    std::uniform_int_distribution<int> exp(-1, 2);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<LaurentPoly::Term> terms;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m;
        for (Var v : kAllVars)
            m[v] = exp(rng);
        terms.push_back({m, coeff(rng)});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

Errc error_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error");
    return Errc::parse_error;
}

} // namespace

TEST_CASE("ring arithmetic examples") {
    CHECK(L("1 + q") * L("1 - q") == L("1 - q^2"));
    CHECK((L("q") - L("q")).is_zero());
    CHECK(L("2*q*Z").coefficient(Monomial{{0, 1, 0, 0, 1}}) == 2);
    CHECK(L("1 + q").pow(3) == L("1 + 3*q + 3*q^2 + q^3"));
    CHECK(L("q^-1") * L("q") == LaurentPoly(1));
    CHECK(-L("1 - Z") == L("Z - 1"));
}

TEST_CASE("canonical printing") {
    CHECK(LaurentPoly(0).to_string() == "0");
    CHECK(LaurentPoly(-3).to_string() == "-3");
    CHECK(L("-q").to_string() == "-q");
    CHECK(L("2*Y0*q^2 - Z^3*q^-1 + 1").to_string() == "1 + 2*q^2*Y0 - q^-1*Z^3");
    CHECK(L("Z + q + t + Y0 + Y1").to_string() == "t + q + Y0 + Y1 + Z");
    CHECK(L("q^2 + q*Z + Z^2").to_string() == "q^2 + q*Z + Z^2");
    // Huge coefficients survive.
    const auto big = L("123456789012345678901234567890*t^4");
    CHECK(big.to_string() == "123456789012345678901234567890*t^4");
}

TEST_CASE("parse/print round trip is exact on canonical strings") {
    std::mt19937 rng(20261016);
    for (int i = 0; i < 500; ++i) {
        const auto p = random_poly(rng);
        const auto s = p.to_string();
        REQUIRE(LaurentPoly::parse(s) == p);
        REQUIRE(LaurentPoly::parse(s).to_string() == s);
    }
}

TEST_CASE("parser errors") {
    for (const char *bad : {"", "q^", "1 +", "x", "q**2", "(1+q)", "2 q"})
        CHECK(error_of([&] { (void)L(bad); }) == Errc::parse_error);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == LaurentPoly());
        REQUIRE(a * LaurentPoly(1) == a);
    }
}

TEST_CASE("substitution and evaluation") {
    const auto p = L("q^2 + 3*q*Z");
    CHECK(p.substitute({{Var::q, {Monomial::of(Var::q, -1), 1}}}) == L("q^-2 + 3*q^-1*Z"));
    CHECK(p.substitute({{Var::q, {q2, 1}}}) == L("q^4 + 3*q^2*Z"));
    CHECK(p.substitute({{Var::Z, {Monomial::of(Var::Z, -1), 1}}}) == L("q^2 + 3*q*Z^-1"));
    CHECK(p.specialize(Var::Z, 0) == L("q^2"));
    CHECK(L("t*q + t^2").specialize(Var::t, 1) == L("q + 1"));
    // Simultaneous: q -> Z, Z -> q swaps.
    CHECK(p.substitute({{Var::q, {Monomial::of(Var::Z), 1}}, {Var::Z, {q1, 1}}}) == L("Z^2 + 3*q*Z"));
    CHECK(error_of([] { (void)L("Z^-1").specialize(Var::Z, 0); }) == Errc::not_invertible);
    CHECK(error_of([] { (void)L("Z^-1").specialize(Var::Z, 2); }) == Errc::inexact_division);

    CHECK(L("1 + 2*q + q^2*Z").evaluate({0, 1, 0, 0, 1}) == 4);
    CHECK(L("t*q - Y0*Y1").evaluate({2, 3, 4, 5, 0}) == -14);
    CHECK(L("q^-2 + 5").evaluate({0, -1, 0, 0, 0}) == 6);
    CHECK(error_of([] { (void)L("q^-1").evaluate({0, 2, 0, 0, 0}); }) == Errc::inexact_division);
}

TEST_CASE("deflation refuses fractional exponents") {
    CHECK(L("q^4 + q^2*t^2").deflate(Var::q, 2) == L("q^2 + q*t^2"));
    CHECK(error_of([] { (void)L("q^3").deflate(Var::q, 2); }) == Errc::half_integer_exponent);
}

TEST_CASE("exact division") {
    CHECK(divide_exact(L("1 - q^3"), L("1 - q"), Var::q) == L("1 + q + q^2"));
    CHECK(divide_exact(L("Z - q^2*Z"), L("1 + q"), Var::q) == L("Z - q*Z"));
    CHECK(divide_exact(L("q^-1 - q"), L("1 - q"), Var::q) == L("q^-1 + 1"));
    CHECK(error_of([] { (void)divide_exact(L("1 + q^2"), L("1 + q"), Var::q); }) == Errc::inexact_division);
    CHECK(error_of([] { (void)divide_exact(L("1"), L("2 + q*Z"), Var::q); }) == Errc::inexact_division);
    CHECK(error_of([] { (void)divide_exact(L("1 + q"), L("2*q + 2"), Var::q); }) == Errc::inexact_division);
}

TEST_CASE("q-Pochhammer symbols") {
    const auto one = LaurentPoly(1);
    CHECK(q_pochhammer(L("q*Z"), q1, 0) == one);
    CHECK(q_factorial_pochhammer(q1, 2) == L("1 - q") * L("1 - q^2"));
    CHECK(q_pochhammer(L("-Z*q"), q1, 2) == L("1 + Z*q") * L("1 + Z*q^2"));
}

TEST_CASE("Gaussian coefficients") {
    CHECK(gauss_binomial(3, 1, q1) == L("1 + q + q^2"));
    CHECK(gauss_binomial(5, 5, q1) == LaurentPoly(1));
    CHECK(gauss_binomial(4, 2, q1) == L("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(gauss_binomial(2, 1, q2) == L("1 + q^2"));
    const std::vector<int> parts{1, 1, 1};
    CHECK(gauss_multinomial(3, parts, q1) == L("1 + 2*q + 2*q^2 + q^3"));
    CHECK(error_of([] {
              const std::vector<int> bad{1, 1};
              (void)gauss_multinomial(3, bad, q1);
          }) == Errc::out_of_range);
}

TEST_CASE("Gaussian recurrence, n <= 10") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            REQUIRE(gauss_binomial(n, k, q1) ==
                    gauss_binomial(n - 1, k - 1, q1) + gauss_binomial(n - 1, k, q1).times_monomial(q1.pow(k)));
}

TEST_CASE("q -> 1 specialization of multinomials, n <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) {
                const std::vector<int> parts{a, b, n - a - b};
                const BigInt expected = oracle::factorial(n) / (oracle::factorial(a) * oracle::factorial(b) *
                                                                oracle::factorial(n - a - b));
                REQUIRE(gauss_multinomial(n, parts, q1).specialize(Var::q, 1) == LaurentPoly(expected));
            }
}

TEST_CASE("subset-sum law q^{N(N+1)/2} [n over N] = sum over N-subsets of q^{tot A}, n <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (int N = 0; N <= n; ++N)
            REQUIRE(gauss_binomial(n, N, q1).times_monomial(q1.pow(N * (N + 1) / 2)) ==
                    oracle::univariate(Var::q, oracle::subset_sums(n, N)));
}

TEST_CASE("(q;q)_n / (1-q)^n is the q-factorial, n <= 10") {
    for (int n = 0; n <= 10; ++n) {
        LaurentPoly p = q_factorial_pochhammer(q1, n);
        for (int i = 0; i < n; ++i)
            p = divide_exact(p, L("1 - q"), Var::q);
        REQUIRE(p == q_factorial(n, q1));
        REQUIRE(p.specialize(Var::q, 1) == LaurentPoly(oracle::factorial(n)));
    }
}

TEST_CASE("truncated products and inverses") {
    Caps caps;
    caps.with(Var::q, 4);
    CHECK(multiply_truncated(L("1 + q^3"), L("1 + q^3"), caps) == L("1 + 2*q^3"));
    CHECK(inverse_truncated(L("1 - q"), caps) == L("1 + q + q^2 + q^3 + q^4"));
    CHECK(inverse_truncated(L("-1 + q*Z"), caps) == L("-1 - q*Z - q^2*Z^2 - q^3*Z^3 - q^4*Z^4"));
    CHECK(error_of([&] { (void)inverse_truncated(L("2 - q"), caps); }) == Errc::not_invertible);
    CHECK(error_of([&] { (void)inverse_truncated(L("1 - Z"), caps); }) == Errc::not_invertible);
    CHECK(error_of([&] { (void)L("q^-1").truncated(caps); }) == Errc::truncation_violation);
    for (int n = 0; n <= 6; ++n) {
        const auto poch = q_factorial_pochhammer(q1, n);
        REQUIRE(multiply_truncated(poch, inverse_truncated(poch, caps), caps) == LaurentPoly(1));
    }
}

TEST_CASE("first_difference locates the canonical-first mismatch") {
    CHECK_FALSE(first_difference(L("1 + q"), L("q + 1")).has_value());
    const auto d = first_difference(L("1 + q + 2*q^2"), L("1 + 3*q^2 + q"));
    REQUIRE(d.has_value());
    CHECK(d->mono == q2);
    CHECK(d->expected == 2);
    CHECK(d->actual == 3);
}
