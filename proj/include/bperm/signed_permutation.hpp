// include/bperm/signed_permutation.hpp - signed permutations, their
// statistics, pixed factorization and enumeration of B_n subsets.

#pragma once

#include <bperm/error.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bperm {

/// A word x_1 ... x_n over {-n..-1, 1..n} whose absolute values form a
/// permutation of 1..n. The empty word is the unique element of order 0.
class SignedPermutation {
public:
    SignedPermutation() = default;

    /// Validates `letters`; throws Error{zero_letter | repeated_absolute_value
    /// | out_of_range} naming the 1-based index of the first bad letter.
    static SignedPermutation from_letters(std::vector<int> letters);

    static SignedPermutation identity(int n);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(letters_.size()); }
    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] std::span<const int> letters() const noexcept { return letters_; }

    /// 1-based access, x_i.
    [[nodiscard]] int at(int i) const { return letters_.at(static_cast<std::size_t>(i - 1)); }

    /// True when no letter is negative, i.e. the word lies in S_n.
    [[nodiscard]] bool is_plain() const noexcept;

    friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
    friend auto operator<=>(const SignedPermutation &a, const SignedPermutation &b) {
        return a.letters_ <=> b.letters_;
    }

private:
    struct trusted_tag {};
    SignedPermutation(std::vector<int> letters, trusted_tag) : letters_(std::move(letters)) {}

    std::vector<int> letters_;

    template <typename F>
    friend void for_each_signed_permutation(int, bool, F &&);
};

/// Throwing alias of SignedPermutation::from_letters.
inline SignedPermutation validate(std::vector<int> letters) {
    return SignedPermutation::from_letters(std::move(letters));
}

struct StatProfile {
    int neg = 0;
    std::vector<int> neg_set;
    int fix_plus = 0;
    int fix_minus = 0;
    std::vector<int> fix_plus_set;  // letters i with x_i = i
    std::vector<int> fix_minus_set; // letters -i with x_i = -i
    int inv = 0;
    int length = 0;
    int des = 0;
    int maj = 0;
    int fdes = 0;
    int fmaj = 0;
    int pix_plus = 0;
    int pix_minus = 0;
    std::vector<int> pix_plus_set;
    std::vector<int> pix_minus_set;

    friend bool operator==(const StatProfile &, const StatProfile &) = default;
};

StatProfile stat_profile(const SignedPermutation &w);

/// Leftmost trough at an even position; letters compared as integers, with
/// an implicit +infinity after the last letter. The empty word qualifies,
/// no one-letter word does.
bool is_desarrangement(std::span<const int> word) noexcept;

struct PixedFactorization {
    std::vector<int> w_minus;
    std::vector<int> w_plus;
    std::vector<int> w_d;

    friend bool operator==(const PixedFactorization &, const PixedFactorization &) = default;
};

/// w = w_minus . w_plus . w_d with w_d the longest desarrangement right
/// factor. Throws Error{malformed_prefix} if the residual prefix is not a
/// negative increasing run followed by a positive increasing run.
PixedFactorization pixed_factorization(const SignedPermutation &w);

enum class SubsetClass { B, D, K, DB, KB };

std::string_view to_string(SubsetClass cls) noexcept;
SubsetClass parse_subset_class(std::string_view tag);

bool belongs_to(const SignedPermutation &w, SubsetClass cls);

/// Visits every signed permutation of order n (only plain permutations when
/// `plain_only`) in lexicographic order of the letter sequence.
template <typename F>
void for_each_signed_permutation(int n, bool plain_only, F &&visit);

/// Visits the members of `cls` of order n, lexicographically.
template <typename F>
void for_each_in_class(int n, SubsetClass cls, F &&visit);

std::vector<SignedPermutation> enumerate(int n, SubsetClass cls);

struct LigneStats {
    std::vector<int> ligne;  // descent positions of sigma
    std::vector<int> iligne; // descent positions of sigma^{-1}
    int maj = 0;
    int imaj = 0;
};

/// Throws Error{not_plain} when a letter is negative.
LigneStats ligne_stats(const SignedPermutation &sigma);

/// Inverse of a plain permutation. Throws Error{not_plain}.
SignedPermutation inverse(const SignedPermutation &sigma);

/// Letterwise negation.
SignedPermutation bar(const SignedPermutation &w);

// Comma-separated signed decimal integers; the empty string is the empty word.
std::string format_letters(std::span<const int> letters);
std::vector<int> parse_letters(std::string_view text);
SignedPermutation parse_signed_permutation(std::string_view text);

// ---------------------------------------------------------------------------

template <typename F>
void for_each_signed_permutation(int n, bool plain_only, F &&visit) {
    if (n < 0)
        return;
    std::vector<int> letters(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    // Candidates in increasing integer order: -n..-1 then 1..n.
    std::vector<int> candidates;
    if (!plain_only)
        for (int v = -n; v <= -1; ++v)
            candidates.push_back(v);
    for (int v = 1; v <= n; ++v)
        candidates.push_back(v);

    SignedPermutation current(std::vector<int>(static_cast<std::size_t>(n)), SignedPermutation::trusted_tag{});
    auto recurse = [&](auto &self, std::size_t depth) -> void {
        if (depth == letters.size()) {
            current.letters_ = letters;
            visit(static_cast<const SignedPermutation &>(current));
            return;
        }
        for (int v : candidates) {
            int a = v < 0 ? -v : v;
            if (used[static_cast<std::size_t>(a)])
                continue;
            used[static_cast<std::size_t>(a)] = 1;
            letters[depth] = v;
            self(self, depth + 1);
            used[static_cast<std::size_t>(a)] = 0;
        }
    };
    recurse(recurse, 0);
}

template <typename F>
void for_each_in_class(int n, SubsetClass cls, F &&visit) {
    const bool plain = cls == SubsetClass::D || cls == SubsetClass::K;
    for_each_signed_permutation(n, plain, [&](const SignedPermutation &w) {
        if (cls == SubsetClass::B || belongs_to(w, cls))
            visit(w);
    });
}

} // namespace bperm
