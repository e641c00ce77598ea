// include/bperm/weighted.hpp - weighted signed permutations (c over w) and
// the three bijections built on them: fixed-column decomposition, the
// MacMahon word transport, and the flag-descent pairing.

#pragma once

#include <bperm/signed_permutation.hpp>
#include <bperm/words.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bperm {

/// A pair (c, w): c nonincreasing, w a signed permutation of the same order,
/// c_k = c_{k+1} forces x_k < x_{k+1}, and x_k > 0 exactly when c_k is even.
struct WeightedSignedPermutation {
    IntWord c;
    SignedPermutation w;

    [[nodiscard]] int order() const noexcept { return w.order(); }
    [[nodiscard]] int max_weight() const noexcept { return c.letters.empty() ? 0 : c.letters.front(); }

    friend bool operator==(const WeightedSignedPermutation &, const WeightedSignedPermutation &) = default;
    friend auto operator<=>(const WeightedSignedPermutation &a, const WeightedSignedPermutation &b) {
        if (auto cmp = a.w <=> b.w; cmp != 0)
            return cmp;
        return a.c <=> b.c;
    }
};

/// Throws Error{length_mismatch | wsp1 | wsp2 | wsp3 | wsp4}; the index is
/// the 1-based column of the first violation.
WeightedSignedPermutation validate_wsp(IntWord c, SignedPermutation w);
WeightedSignedPermutation validate_wsp(std::vector<int> c, std::vector<int> w);

struct WspDecomposition {
    WeightedSignedPermutation core; // weighted signed derangement of order i
    IntWord v_e;                    // weights of positive fixed points, in NIW_j^e
    IntWord v_o;                    // weights of negative fixed points, in DW_k^o

    [[nodiscard]] int i() const noexcept { return core.order(); }
    [[nodiscard]] int j() const noexcept { return v_e.lambda(); }
    [[nodiscard]] int k() const noexcept { return v_o.lambda(); }

    friend bool operator==(const WspDecomposition &, const WspDecomposition &) = default;
};

/// Removes the fixed-point columns and standardizes what is left.
WspDecomposition wsp_decompose(const WeightedSignedPermutation &p);

/// Inserts `count` fixed-point columns of weight `weight` (positive fixed
/// points for an even weight, one negative fixed point for an odd weight)
/// into the block of columns of that weight. Throws Error{insertion_conflict}.
WeightedSignedPermutation wsp_insert_fixed_columns(const WeightedSignedPermutation &p, int weight, int count);

/// Inverse of wsp_decompose. Throws Error{insertion_conflict} on input that
/// is not the decomposition of any weighted signed permutation.
WeightedSignedPermutation wsp_recompose(const WspDecomposition &d);

/// d with d_{|x_k|} = c_k.
IntWord macmahon_to_word(const WeightedSignedPermutation &p);

/// Unique preimage of d; throws Error{out_of_range} if a letter exceeds s.
WeightedSignedPermutation macmahon_from_word(const IntWord &d, int s);

struct FdesPair {
    IntWord b;
    SignedPermutation w;

    friend bool operator==(const FdesPair &, const FdesPair &) = default;
};

/// b_k = (c_k - eps_k)/2 - z_k where z_k counts the descents of x_k ... x_n
/// and eps_k = 1 iff x_k < 0. Throws Error{negative_b_letter}, or
/// Error{out_of_range} if c_1 > s.
FdesPair fdes_pairing(const WeightedSignedPermutation &p, int s);

/// c_k = 2(b_k + z_k) + eps_k. Throws Error{wsp1} if b is not nonincreasing.
WeightedSignedPermutation fdes_pairing_inverse(const IntWord &b, const SignedPermutation &w);

/// Number of descents of x_k ... x_n, for k = 1..n.
std::vector<int> right_factor_descents(const SignedPermutation &w);

/// Visits WSP_n(s) (or WSD_n(s) with `derangements_only`), grouped by w in
/// lexicographic order.
template <typename F>
void for_each_wsp(int n, int s, bool derangements_only, F &&visit);

std::vector<WeightedSignedPermutation> enumerate_wsp(int n, int s, bool derangements_only);

// "c=10,9,7;w=1,-4,-3" and its parser.
std::string format_wsp(const WeightedSignedPermutation &p);
WeightedSignedPermutation parse_wsp(std::string_view text);

// ---------------------------------------------------------------------------

template <typename F>
void for_each_wsp(int n, int s, bool derangements_only, F &&visit) {
    if (n < 0 || s < 0)
        return;
    std::vector<int> c(static_cast<std::size_t>(n));
    for_each_signed_permutation(n, false, [&](const SignedPermutation &w) {
        const auto x = w.letters();
        if (derangements_only) {
            for (int i = 1; i <= n; ++i)
                if (x[static_cast<std::size_t>(i - 1)] == i || x[static_cast<std::size_t>(i - 1)] == -i)
                    return;
        }
        // Fill c right to left: c_k >= c_{k+1}, strictly when x_k > x_{k+1},
        // parity fixed by the sign of x_k.
        auto recurse = [&](auto &self, int k, int lower) -> void {
            if (k < 0) {
                visit(WeightedSignedPermutation{IntWord{c}, w});
                return;
            }
            const int parity = x[static_cast<std::size_t>(k)] < 0 ? 1 : 0;
            int start = lower + ((lower % 2 == parity) ? 0 : 1);
            for (int v = start; v <= s; v += 2) {
                c[static_cast<std::size_t>(k)] = v;
                const int next_lower =
                    (k > 0 && x[static_cast<std::size_t>(k - 1)] > x[static_cast<std::size_t>(k)]) ? v + 1 : v;
                self(self, k - 1, next_lower);
            }
        };
        recurse(recurse, n - 1, 0);
    });
}

} // namespace bperm
