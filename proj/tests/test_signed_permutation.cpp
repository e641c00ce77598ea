#include <doctest.h>

#include "oracles.hpp"

#include <bperm/signed_permutation.hpp>

#include <set>

using namespace bperm;

namespace {

SignedPermutation W(std::vector<int> x) { return SignedPermutation::from_letters(std::move(x)); }

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("validate accepts signed permutations and the empty word") {
    CHECK(W({3, -2, 1}).order() == 3);
    CHECK(W({}).order() == 0);
    CHECK(W({}).empty());
}

TEST_CASE("validate names the offending index") {
    const auto code_and_index = [](std::vector<int> x) {
        try {
            (void)SignedPermutation::from_letters(std::move(x));
        } catch (const Error &e) {
            return std::pair{e.code(), e.index().value_or(0)};
        }
        FAIL("no error");
        return std::pair{Errc::parse_error, std::size_t{0}};
    };
    CHECK(code_and_index({1, 1}) == std::pair{Errc::repeated_absolute_value, std::size_t{2}});
    CHECK(code_and_index({2, -2}) == std::pair{Errc::repeated_absolute_value, std::size_t{2}});
    CHECK(code_and_index({1, 0}) == std::pair{Errc::zero_letter, std::size_t{2}});
    CHECK(code_and_index({3, 1}) == std::pair{Errc::out_of_range, std::size_t{1}});
    CHECK(code_and_index({1, -3, 3}) == std::pair{Errc::repeated_absolute_value, std::size_t{3}});
}

TEST_CASE("stat_profile on worked examples") {
    const auto p = stat_profile(W({3, -2, 8, 4, 5, -1, 9, -6, 7}));
    CHECK(p.fix_plus_set == std::vector<int>{4, 5});
    CHECK(p.fix_minus_set == std::vector<int>{-2});
    CHECK(p.neg == 3);
    CHECK(p.neg_set == std::vector<int>{-6, -2, -1});

    const auto id = stat_profile(SignedPermutation::identity(5));
    CHECK(id.inv == 0);
    CHECK(id.length == 0);
    CHECK(id.des == 0);
    CHECK(id.fdes == 0);
    CHECK(id.fmaj == 0);
    CHECK(id.fix_plus == 5);
    CHECK(id.neg == 0);

    const auto q = stat_profile(W({-4, -3, -2, 1, 5, 6, 8, 9, -10, -7}));
    CHECK(q.des == 1);
    CHECK(q.fdes == 3);
    CHECK(q.maj == 8);
    CHECK(q.neg == 5);
    CHECK(q.fmaj == 21);
}

TEST_CASE("is_desarrangement edge cases") {
    CHECK(is_desarrangement(std::vector<int>{}));
    for (int v : {1, -1, 5})
        CHECK_FALSE(is_desarrangement(std::vector<int>{v}));
    CHECK(is_desarrangement(std::vector<int>{8, 5, 4, 3, 6, 2, 7, 9, 1}));
    CHECK(is_desarrangement(std::vector<int>{2, 1}));
    CHECK(is_desarrangement(std::vector<int>{4, 3, 2, 1}));
    CHECK_FALSE(is_desarrangement(std::vector<int>{3, 2, 1}));
    CHECK_FALSE(is_desarrangement(std::vector<int>{1, 2}));
}

TEST_CASE("pixed factorization worked examples") {
    CHECK(pixed_factorization(W({-5, -2, -3, -4, 1})) == PixedFactorization{{-5, -2}, {}, {-3, -4, 1}});
    CHECK(pixed_factorization(W({-5, -3, -2, 1, 4})) == PixedFactorization{{-5, -3, -2}, {1, 4}, {}});
    CHECK(pixed_factorization(W({-5, -3, 1, 4, 2})) == PixedFactorization{{-5, -3}, {1}, {4, 2}});
}

TEST_CASE("statistics agree with brute-force oracles on B_n, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto &x : oracle::signed_permutations(n)) {
            const auto w = W(x);
            const auto p = stat_profile(w);
            REQUIRE(p.length == oracle::length(x));
            REQUIRE(p.inv == oracle::inv(x));
            REQUIRE(p.maj == oracle::maj(x));
            REQUIRE(p.neg == oracle::neg(x));
            REQUIRE(p.fix_plus == oracle::fix_plus(x));
            REQUIRE(p.fix_minus == oracle::fix_minus(x));
            REQUIRE(p.fdes == 2 * p.des + (n > 0 && x[0] < 0 ? 1 : 0));
            REQUIRE(p.fmaj == 2 * p.maj + p.neg);
            for (int v : p.fix_minus_set)
                REQUIRE(std::find(p.neg_set.begin(), p.neg_set.end(), v) != p.neg_set.end());
            for (int v : p.pix_minus_set)
                REQUIRE(std::find(p.neg_set.begin(), p.neg_set.end(), v) != p.neg_set.end());
        }
    }
}

TEST_CASE("pixed factorization agrees with the split-search oracle, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto &x : oracle::signed_permutations(n)) {
            const auto f = pixed_factorization(W(x));
            const auto o = oracle::pixed(x);
            REQUIRE(o.has_value());
            REQUIRE(f.w_minus == o->minus);
            REQUIRE(f.w_plus == o->plus);
            REQUIRE(f.w_d == o->d);
            std::vector<int> joined = f.w_minus;
            joined.insert(joined.end(), f.w_plus.begin(), f.w_plus.end());
            joined.insert(joined.end(), f.w_d.begin(), f.w_d.end());
            REQUIRE(joined == x);
        }
    }
}

TEST_CASE("desarrangement predicate agrees with the leftmost-trough oracle, n <= 7") {
    for (int n = 0; n <= 7; ++n)
        for (const auto &x : oracle::plain_permutations(n))
            REQUIRE(is_desarrangement(x) == oracle::desarrangement(x));
}

TEST_CASE("enumeration order, uniqueness and cardinalities") {
    CHECK(enumerate(1, SubsetClass::B) == std::vector{W({-1}), W({1})});
    CHECK(enumerate(3, SubsetClass::D) == std::vector{W({2, 3, 1}), W({3, 1, 2})});
    CHECK(enumerate(2, SubsetClass::KB).size() == 5);
    CHECK(enumerate(0, SubsetClass::B) == std::vector{W({})});

    for (int n = 0; n <= 6; ++n) {
        const auto all = enumerate(n, SubsetClass::B);
        CHECK(static_cast<long long>(all.size()) == (1LL << n) * oracle::factorial(n));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

        const auto d = enumerate(n, SubsetClass::D);
        const auto k = enumerate(n, SubsetClass::K);
        CHECK(static_cast<long long>(d.size()) == oracle::derangements(n));
        CHECK(k.size() == d.size());

        long long db = 0;
        long long kb = 0;
        for (const auto &x : oracle::signed_permutations(n)) {
            db += oracle::fix_plus(x) == 0;
            kb += oracle::pixed(x)->plus.empty();
        }
        CHECK(static_cast<long long>(enumerate(n, SubsetClass::DB).size()) == db);
        CHECK(static_cast<long long>(enumerate(n, SubsetClass::KB).size()) == kb);
    }
}

TEST_CASE("subset class tags round-trip") {
    for (auto c : {SubsetClass::B, SubsetClass::D, SubsetClass::K, SubsetClass::DB, SubsetClass::KB})
        CHECK(parse_subset_class(to_string(c)) == c);
    CHECK_THROWS_AS(parse_subset_class("X"), Error);
}

TEST_CASE("ligne of route") {
    const auto a = ligne_stats(W({1, 2, 3}));
    CHECK(a.ligne.empty());
    CHECK(a.imaj == 0);
    const auto b = ligne_stats(W({3, 1, 2}));
    CHECK(b.ligne == std::vector<int>{1});
    CHECK(inverse(W({3, 1, 2})) == W({2, 3, 1}));
    CHECK(b.iligne == std::vector<int>{2});
    CHECK(b.imaj == 2);
    const auto c = ligne_stats(W({2, 3, 1}));
    CHECK(c.ligne == std::vector<int>{2});
    CHECK(c.iligne == std::vector<int>{1});
    try {
        (void)ligne_stats(W({-1}));
        FAIL("expected NotPlain");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::not_plain);
    }
}

TEST_CASE("bar is an involution with the flag-major and fixed-point dualities") {
    CHECK(bar(W({1, 2})) == W({-1, -2}));
    CHECK(stat_profile(W({-1, -2})).fmaj == 4);
    CHECK(bar(W({-3, 1, -2})) == W({3, -1, 2}));
    CHECK(stat_profile(bar(W({3, -2, 8, 4, 5, -1, 9, -6, 7}))).fix_minus == 2);
    for (int n = 0; n <= 6; ++n) {
        for (const auto &x : oracle::signed_permutations(n)) {
            const auto w = W(x);
            const auto b = bar(w);
            REQUIRE(bar(b) == w);
            const auto p = stat_profile(w);
            const auto q = stat_profile(b);
            REQUIRE(p.fmaj + q.fmaj == n * n);
            REQUIRE(p.neg + q.neg == n);
            REQUIRE(p.fix_plus == q.fix_minus);
        }
    }
}

TEST_CASE("letter text encoding") {
    CHECK(format_letters(std::vector<int>{3, -2, 8}) == "3,-2,8");
    CHECK(parse_letters("3,-2,8") == std::vector<int>{3, -2, 8});
    CHECK(parse_letters(" 3 , -2 ") == std::vector<int>{3, -2});
    CHECK(parse_letters("").empty());
    CHECK(parse_signed_permutation("") == W({}));
    CHECK_THROWS_AS(parse_letters("1,,2"), Error);
    CHECK_THROWS_AS(parse_letters("1,x"), Error);
    CHECK(vec(parse_signed_permutation("3,-2,8,4,5,-1,9,-6,7").letters()) ==
          std::vector<int>{3, -2, 8, 4, 5, -1, 9, -6, 7});
}
