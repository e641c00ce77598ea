// tests/oracles.hpp - brute-force reference computations used to derive and
// cross-check library results. Nothing here calls the code it checks.

#pragma once

#include <bperm/laurent_poly.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

/// All signed permutations of order n via next_permutation and sign masks;
/// order is irrelevant to callers.
inline std::vector<Word> signed_permutations(int n) {
    std::vector<Word> out;
    Word base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            Word w = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1U << i))
                    w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.push_back(w);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline std::vector<Word> plain_permutations(int n) {
    std::vector<Word> out;
    Word base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    do
        out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

/// Type-B length as the number of pairs i < j with x_i > x_j plus pairs
/// i <= j with x_i + x_j < 0.
inline int length(const Word &x) {
    int l = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j) {
            if (j > i && x[i] > x[j])
                ++l;
            if (x[i] + x[j] < 0)
                ++l;
        }
    return l;
}

/// Position (1-based) of the first i with x_i < x_{i+1}, where x_{n+1} is
/// +infinity; 0 for the empty word.
inline int leftmost_trough(const Word &x) {
    const auto at = [&](std::size_t i) {
        return i < x.size() ? static_cast<long long>(x[i]) : std::numeric_limits<long long>::max();
    };
    for (std::size_t i = 0; i < x.size(); ++i)
        if (at(i) < at(i + 1))
            return static_cast<int>(i) + 1;
    return 0;
}

inline bool desarrangement(const Word &x) { return x.empty() || leftmost_trough(x) % 2 == 0; }

struct Pixed {
    Word minus, plus, d;
};

/// Tries every split point pair and keeps the one with the longest valid
/// desarrangement suffix.
inline std::optional<Pixed> pixed(const Word &x) {
    const std::size_t n = x.size();
    std::optional<Pixed> best;
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = a; b <= n; ++b) {
            Word minus(x.begin(), x.begin() + static_cast<long>(a));
            Word plus(x.begin() + static_cast<long>(a), x.begin() + static_cast<long>(b));
            Word d(x.begin() + static_cast<long>(b), x.end());
            const bool ok_minus = std::all_of(minus.begin(), minus.end(), [](int v) { return v < 0; }) &&
                                  std::is_sorted(minus.begin(), minus.end());
            const bool ok_plus = std::all_of(plus.begin(), plus.end(), [](int v) { return v > 0; }) &&
                                 std::is_sorted(plus.begin(), plus.end());
            if (!ok_minus || !ok_plus || !desarrangement(d))
                continue;
            if (!best || d.size() > best->d.size())
                best = Pixed{minus, plus, d};
        }
    return best;
}

inline int fix_plus(const Word &x) {
    int c = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        c += x[i] == static_cast<int>(i) + 1;
    return c;
}

inline int fix_minus(const Word &x) {
    int c = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        c += x[i] == -(static_cast<int>(i) + 1);
    return c;
}

inline int neg(const Word &x) {
    return static_cast<int>(std::count_if(x.begin(), x.end(), [](int v) { return v < 0; }));
}

inline int maj(const Word &x) {
    int m = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i - 1] > x[i])
            m += static_cast<int>(i);
    return m;
}

inline int inv(const Word &x) {
    int c = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            c += x[i] > x[j];
    return c;
}

/// d_n by inclusion-exclusion: sum_k (-1)^k n!/k!.
inline long long derangements(int n) {
    long long total = 0;
    long long term = 1; // n!/k! for k = n down to 0
    for (int k = n; k >= 0; --k) {
        total += ((k % 2 == 0) ? 1 : -1) * term;
        term *= k == 0 ? 1 : k;
    }
    return total;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// q-coefficient list of sum over N-subsets A of [n] of q^{tot A}.
inline std::map<int, long long> subset_sums(int n, int N) {
    std::map<int, long long> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != N)
            continue;
        int tot = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i))
                tot += i + 1;
        ++out[tot];
    }
    return out;
}

/// Univariate polynomial in one variable from exponent -> coefficient.
inline bperm::LaurentPoly univariate(bperm::Var v, const std::map<int, long long> &coeffs) {
    std::vector<bperm::LaurentPoly::Term> terms;
    for (const auto &[e, c] : coeffs)
        terms.push_back({bperm::Monomial::of(v, e), c});
    return bperm::LaurentPoly::from_terms(std::move(terms));
}

/// Desarmenien's f from its cycle description: each cycle of y -> image(y)
/// rotated so its minimum is second, cycles by decreasing minima.
inline Word desarmenien(const std::map<int, int> &image) {
    std::vector<Word> cycles;
    std::map<int, bool> seen;
    for (const auto &[start, unused] : image) {
        if (seen[start])
            continue;
        Word cycle;
        for (int y = start; !seen[y]; y = image.at(y)) {
            seen[y] = true;
            cycle.push_back(y);
        }
        const auto min_at = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
        const auto shift = (min_at + static_cast<long>(cycle.size()) - 1) % static_cast<long>(cycle.size());
        std::rotate(cycle.begin(), cycle.begin() + shift, cycle.end());
        cycles.push_back(cycle);
    }
    std::sort(cycles.begin(), cycles.end(), [](const Word &a, const Word &b) { return a[1] > b[1]; });
    Word out;
    for (const auto &c : cycles)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

} // namespace oracle
