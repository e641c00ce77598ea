#include <doctest.h>

#include "oracles.hpp"

#include <bperm/weighted.hpp>

#include <set>

using namespace bperm;

namespace {

WeightedSignedPermutation P(std::vector<int> c, std::vector<int> w) { return validate_wsp(std::move(c), std::move(w)); }

const WeightedSignedPermutation &order13() {
    static const auto p = P({10, 10, 9, 7, 7, 7, 4, 4, 4, 3, 2, 2, 1}, {1, 2, -7, -6, -5, -4, 3, 8, 9, -10, 12, 13, -11});
    return p;
}

Errc error_of(std::vector<int> c, std::vector<int> w) {
    try {
        (void)validate_wsp(std::move(c), std::move(w));
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error");
    return Errc::parse_error;
}

} // namespace

TEST_CASE("validate_wsp") {
    CHECK(order13().order() == 13);
    CHECK(error_of({2, 2}, {2, 1}) == Errc::wsp3);
    CHECK(error_of({1}, {1}) == Errc::wsp4);
    CHECK(error_of({1, 2}, {-1, 2}) == Errc::wsp1);
    CHECK(error_of({0, 0}, {1, 1}) == Errc::wsp2);
    CHECK(error_of({0}, {1, 2}) == Errc::length_mismatch);
}

TEST_CASE("decomposition of the order-13 example") {
    const auto d = wsp_decompose(order13());
    CHECK(d.v_e == IntWord{{10, 10, 4, 4}});
    CHECK(d.v_o == IntWord{{7, 3}});
    CHECK(d.core == P({9, 7, 7, 4, 2, 2, 1}, {-4, -3, -2, 1, 6, 7, -5}));
    CHECK(wsp_recompose(d) == order13());
}

TEST_CASE("insertion reproduces each intermediate of the order-13 reconstruction") {
    const auto core = P({9, 7, 7, 4, 2, 2, 1}, {-4, -3, -2, 1, 6, 7, -5});
    const auto a = wsp_insert_fixed_columns(core, 10, 2);
    CHECK(a == P({10, 10, 9, 7, 7, 4, 2, 2, 1}, {1, 2, -6, -5, -4, 3, 8, 9, -7}));
    const auto b = wsp_insert_fixed_columns(a, 7, 1);
    CHECK(b == P({10, 10, 9, 7, 7, 7, 4, 2, 2, 1}, {1, 2, -7, -6, -5, -4, 3, 9, 10, -8}));
    const auto c = wsp_insert_fixed_columns(b, 4, 2);
    CHECK(c == P({10, 10, 9, 7, 7, 7, 4, 4, 4, 2, 2, 1}, {1, 2, -7, -6, -5, -4, 3, 8, 9, 11, 12, -10}));
    CHECK(wsp_insert_fixed_columns(c, 3, 1) == order13());
}

TEST_CASE("small decompositions") {
    const auto single = P({0}, {1});
    const auto d = wsp_decompose(single);
    CHECK(d.v_e == IntWord{{0}});
    CHECK(d.core.order() == 0);

    const auto der = P({3, 2}, {-2, 1});
    const auto dd = wsp_decompose(der);
    CHECK(dd.core == der);
    CHECK(dd.v_e.letters.empty());
    CHECK(dd.v_o.letters.empty());

    WspDecomposition zeros{WeightedSignedPermutation{}, IntWord{{0, 0}}, IntWord{}};
    CHECK(wsp_recompose(zeros) == P({0, 0}, {1, 2}));
}

TEST_CASE("recompose rejects inputs that are not decompositions") {
    WspDecomposition two_odd{WeightedSignedPermutation{}, IntWord{}, IntWord{{3, 3}}};
    CHECK_THROWS_AS(wsp_recompose(two_odd), Error);
    WspDecomposition fixed_core{P({0}, {1}), IntWord{}, IntWord{}};
    CHECK_THROWS_AS(wsp_recompose(fixed_core), Error);
}

TEST_CASE("decompose/recompose round trip and the column-count equalities, n, s <= 4") {
    for (int n = 0; n <= 4; ++n)
        for (int s = 0; s <= 4; ++s)
            for_each_wsp(n, s, false, [&](const WeightedSignedPermutation &p) {
                const auto d = wsp_decompose(p);
                REQUIRE(wsp_recompose(d) == p);
                const auto sp = stat_profile(p.w);
                const auto sc = stat_profile(d.core.w);
                REQUIRE(p.c.tot() == d.core.c.tot() + d.v_e.tot() + d.v_o.tot());
                REQUIRE(sp.neg == sc.neg + d.v_o.lambda());
                REQUIRE(sp.fix_plus == d.v_e.lambda());
                REQUIRE(sp.fix_minus == d.v_o.lambda());
                REQUIRE(sc.fix_plus + sc.fix_minus == 0);
                REQUIRE(d.i() + d.j() + d.k() == n);
            });
}

TEST_CASE("MacMahon transport examples") {
    const auto p = P({10, 9, 7, 4, 4, 2, 2, 1, 1}, {1, -4, -3, 2, 5, 6, 8, -9, -7});
    const IntWord d{{10, 4, 7, 9, 4, 2, 1, 2, 1}};
    CHECK(macmahon_to_word(p) == d);
    CHECK(macmahon_from_word(d, 10) == p);
    CHECK(macmahon_to_word(P({0, 0, 0}, {1, 2, 3})) == IntWord{{0, 0, 0}});
    CHECK(macmahon_from_word(IntWord{{0, 0, 0}}, 0) == P({0, 0, 0}, {1, 2, 3}));
    try {
        (void)macmahon_from_word(IntWord{{3}}, 2);
        FAIL("expected OutOfRange");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::out_of_range);
    }
}

TEST_CASE("MacMahon transport is a bijection WSP_n(s) <-> {0..s}^n, n, s <= 4") {
    for (int n = 0; n <= 4; ++n)
        for (int s = 0; s <= 4; ++s) {
            std::set<std::vector<int>> images;
            long long count = 0;
            for_each_wsp(n, s, false, [&](const WeightedSignedPermutation &p) {
                const auto d = macmahon_to_word(p);
                REQUIRE(macmahon_from_word(d, s) == p);
                REQUIRE(d.tot() == p.c.tot());
                REQUIRE(d.odd() == stat_profile(p.w).neg);
                images.insert(d.letters);
                ++count;
            });
            long long expected = 1;
            for (int i = 0; i < n; ++i)
                expected *= s + 1;
            REQUIRE(count == expected);
            REQUIRE(static_cast<long long>(images.size()) == expected);
        }
}

TEST_CASE("MacMahon inverse over all of {0..2}^3") {
    int cases = 0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                const IntWord d{{a, b, c}};
                CHECK(macmahon_to_word(macmahon_from_word(d, 2)) == d);
                ++cases;
            }
    CHECK(cases == 27);
}

TEST_CASE("fdes pairing worked example") {
    const auto p = P({9, 7, 7, 4, 4, 4, 2, 2, 1, 1}, {-4, -3, -2, 1, 5, 6, 8, 9, -10, -7});
    const auto pair = fdes_pairing(p, 9);
    CHECK(pair.b == IntWord{{3, 2, 2, 1, 1, 1, 0, 0, 0, 0}});
    CHECK(2 * pair.b.tot() + stat_profile(p.w).fmaj == p.c.tot());
    CHECK(p.c.tot() == 41);
    CHECK(fdes_pairing_inverse(pair.b, pair.w) == p);

    const auto id = P({0, 0, 0}, {1, 2, 3});
    CHECK(fdes_pairing(id, 0).b == IntWord{{0, 0, 0}});
    CHECK(fdes_pairing_inverse(IntWord{{0, 0, 0}}, id.w) == id);
    CHECK_THROWS_AS(fdes_pairing(p, 8), Error);
}

TEST_CASE("fdes pairing image is exactly {(b, w): 2 b_1 + fdes w <= s}, n <= 3, s <= 4") {
    for (int n = 0; n <= 3; ++n)
        for (int s = 0; s <= 4; ++s) {
            std::set<std::pair<std::vector<int>, std::vector<int>>> image;
            for_each_wsp(n, s, false, [&](const WeightedSignedPermutation &p) {
                const auto pair = fdes_pairing(p, s);
                REQUIRE(is_nonincreasing(pair.b.letters));
                const int b1 = n > 0 ? pair.b.letters[0] : 0;
                const auto sp = stat_profile(p.w);
                REQUIRE(2 * b1 + sp.fdes == p.max_weight());
                REQUIRE(2 * pair.b.tot() + sp.fmaj == p.c.tot());
                REQUIRE(fdes_pairing_inverse(pair.b, pair.w) == p);
                image.emplace(pair.b.letters, std::vector<int>(p.w.letters().begin(), p.w.letters().end()));
            });
            std::set<std::pair<std::vector<int>, std::vector<int>>> target;
            for (const auto &x : oracle::signed_permutations(n)) {
                const int fdes = 2 * [&] {
                    int d = 0;
                    for (std::size_t i = 1; i < x.size(); ++i)
                        d += x[i - 1] > x[i];
                    return d;
                }() + (n > 0 && x[0] < 0 ? 1 : 0);
                for (const auto &b : enumerate_words({WordFamilyTag::NIW, n, s}))
                    if (2 * (n > 0 ? b.letters[0] : 0) + fdes <= s)
                        target.emplace(b.letters, x);
            }
            REQUIRE(image == target);
        }
}

TEST_CASE("fdes pairing inverse round trip over all (b, w), n = 3, b_1 <= 2") {
    for (const auto &b : enumerate_words({WordFamilyTag::NIW, 3, 2}))
        for (const auto &w : enumerate(3, SubsetClass::B)) {
            const auto p = fdes_pairing_inverse(b, w);
            REQUIRE(fdes_pairing(p, p.max_weight()) == FdesPair{b, w});
        }
}

TEST_CASE("WSP enumeration") {
    CHECK(enumerate_wsp(1, 1, false) == std::vector{P({1}, {-1}), P({0}, {1})});
    CHECK(enumerate_wsp(2, 0, false) == std::vector{P({0, 0}, {1, 2})});
    CHECK(enumerate_wsp(3, 2, false).size() == 27);
    for (const auto &p : enumerate_wsp(3, 3, true)) {
        const auto sp = stat_profile(p.w);
        CHECK(sp.fix_plus + sp.fix_minus == 0);
    }
}

TEST_CASE("WSP text encoding") {
    const auto p = P({10, 9, 7}, {1, -3, -2});
    CHECK(format_wsp(p) == "c=10,9,7;w=1,-3,-2");
    CHECK(parse_wsp("c=10,9,7;w=1,-3,-2") == p);
    CHECK(parse_wsp("w=1,-3,-2; c=10,9,7") == p);
    CHECK_THROWS_AS(parse_wsp("c=1"), Error);
    CHECK_THROWS_AS(parse_wsp("c=0;w=1;x=2"), Error);
}
