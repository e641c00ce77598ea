#include <doctest.h>

#include "oracles.hpp"

#include <bperm/words.hpp>

using namespace bperm;

namespace {

std::vector<IntWord> words(std::initializer_list<std::vector<int>> list) {
    std::vector<IntWord> out;
    for (const auto &l : list)
        out.push_back(IntWord{l});
    return out;
}

/// Every word of length n over 0..s, filtered.
template <typename P>
long long brute_count(int n, int s, P keep) {
    long long count = 0;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    while (true) {
        count += keep(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == s)
            w[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++w[static_cast<std::size_t>(i)];
    }
    return count;
}

} // namespace

TEST_CASE("IntWord statistics") {
    const IntWord w{{4, 3, 3, 0}};
    CHECK(w.lambda() == 4);
    CHECK(w.tot() == 10);
    CHECK(w.odd() == 2);
    CHECK(IntWord{}.tot() == 0);
}

TEST_CASE("enumerate_words examples") {
    CHECK(enumerate_words({WordFamilyTag::NIW, 2, 1}) == words({{0, 0}, {1, 0}, {1, 1}}));
    CHECK(enumerate_words({WordFamilyTag::NIW_E, 1, 5}) == words({{0}, {2}, {4}}));
    CHECK(enumerate_words({WordFamilyTag::DW_O, 2, 5}) == words({{3, 1}, {5, 1}, {5, 3}}));
    CHECK(enumerate_words({WordFamilyTag::NIW, 0, 3}) == words({{}}));
    try {
        (void)enumerate_words({WordFamilyTag::NIW, 2, std::nullopt});
        FAIL("expected UnboundedFamily");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::unbounded_family);
    }
}

TEST_CASE("family cardinalities against stars-and-bars and brute force, n, s <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (int s = 0; s <= 6; ++s) {
            const auto niw = enumerate_words({WordFamilyTag::NIW, n, s});
            const auto niwe = enumerate_words({WordFamilyTag::NIW_E, n, s});
            const auto dwo = enumerate_words({WordFamilyTag::DW_O, n, s});
            CHECK(static_cast<long long>(niw.size()) == oracle::binomial(n + s, n));
            CHECK(static_cast<long long>(niwe.size()) == oracle::binomial(n + s / 2, n));
            CHECK(static_cast<long long>(dwo.size()) == oracle::binomial((s + 1) / 2, n));
            const auto nonincreasing = [](const std::vector<int> &w) {
                return std::is_sorted(w.rbegin(), w.rend());
            };
            CHECK(static_cast<long long>(niw.size()) == brute_count(n, s, nonincreasing));
            CHECK(static_cast<long long>(niwe.size()) == brute_count(n, s, [&](const std::vector<int> &w) {
                      return nonincreasing(w) &&
                             std::all_of(w.begin(), w.end(), [](int v) { return v % 2 == 0; });
                  }));
            CHECK(static_cast<long long>(dwo.size()) == brute_count(n, s, [](const std::vector<int> &w) {
                      for (std::size_t i = 0; i < w.size(); ++i)
                          if (w[i] % 2 == 0 || (i > 0 && w[i - 1] <= w[i]))
                              return false;
                      return true;
                  }));
            CHECK(std::is_sorted(niw.begin(), niw.end()));
            CHECK(std::is_sorted(dwo.begin(), dwo.end()));
        }
    }
}

TEST_CASE("tot_subset and inv_crossing") {
    CHECK(tot_subset(std::vector<int>{}) == 0);
    CHECK(tot_subset(std::vector<int>{1, 2, 3}) == 6);
    CHECK(inv_crossing(std::vector<int>{3}, std::vector<int>{1, 2}) == 2);
    CHECK(inv_crossing(std::vector<int>{}, std::vector<int>{1, 2}) == 0);
    CHECK(inv_crossing(std::vector<int>{2, 5}, std::vector<int>{1, 3}) == 3);
    CHECK(inv_crossing(std::vector<int>{-1, -3}, std::vector<int>{-2, -5}) == 3);
    // inv(B, C) = inv(-C, -B) on all pairs of disjoint subsets of [5].
    for (unsigned b = 0; b < 32; ++b)
        for (unsigned c = 0; c < 32; ++c) {
            if (b & c)
                continue;
            std::vector<int> B, C, nB, nC;
            for (int i = 0; i < 5; ++i) {
                if (b & (1U << i)) {
                    B.push_back(i + 1);
                    nB.push_back(-(i + 1));
                }
                if (c & (1U << i)) {
                    C.push_back(i + 1);
                    nC.push_back(-(i + 1));
                }
            }
            REQUIRE(inv_crossing(B, C) == inv_crossing(nC, nB));
        }
}

TEST_CASE("word text encoding") {
    CHECK(format_word(IntWord{{10, 4, 0}}) == "10,4,0");
    CHECK(parse_word("10,4,0") == IntWord{{10, 4, 0}});
    CHECK(parse_word("") == IntWord{});
    CHECK_THROWS_AS(parse_word("1,-1"), Error);
}
