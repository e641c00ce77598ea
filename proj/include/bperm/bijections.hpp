// include/bperm/bijections.hpp - Desarmenien's derangement-to-desarrangement
// map and the bijection phi of B_n sending (Fix-, Fix+, Neg) to
// (Pix-, Pix+, Neg).

#pragma once

#include <bperm/signed_permutation.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bperm {

/// A bijection of a finite set of nonzero integers onto itself, given as
/// two rows: image[i] is the image of domain[i].
struct LetterMap {
    std::vector<int> domain;
    std::vector<int> image;

    friend bool operator==(const LetterMap &, const LetterMap &) = default;
};

/// Throws Error{length_mismatch | repeated_absolute_value | out_of_range}
/// when the rows are not a permutation of one set, and Error{has_fixed_point}
/// (1-based column) when some letter maps to itself.
void validate_derangement(const LetterMap &tau);

/// Cycles with their minimum in second place, ordered by decreasing minima,
/// parentheses erased. The result is a desarrangement on the same letters.
std::vector<int> desarmenien_f(const LetterMap &tau);

/// Plain word on 1..n read as the map i -> word[i].
std::vector<int> desarmenien_f(std::span<const int> word);

/// Inverse of desarmenien_f. The last cycle starts just before the minimum
/// letter and runs to the end; peeling repeats on the prefix. The domain row
/// is sorted by absolute value. Throws Error{not_desarrangement}.
LetterMap desarmenien_f_inverse(std::span<const int> word);

/// The derangement part of w: y -> x_|y| over the letters y of w that are not
/// fixed points, keyed by position order.
LetterMap derangement_part(const SignedPermutation &w);

/// phi(w) = (increasing Fix- w)(increasing Fix+ w) f(tau).
SignedPermutation phi(const SignedPermutation &w);

/// Reads Pix-, Pix+ and f(tau) off the pixed factorization.
SignedPermutation phi_inverse(const SignedPermutation &v);

// "domain=-1,3;image=3,-1" or a plain word "2,1" on 1..n.
std::string format_letter_map(const LetterMap &tau);
LetterMap parse_letter_map(std::string_view text);

} // namespace bperm
