// include/bperm/words.hpp - nonnegative integer words and the families
// NIW_n(s), NIW_n^e(s), DW_n^o(s).

#pragma once

#include <bperm/error.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bperm {

struct IntWord {
    std::vector<int> letters;

    [[nodiscard]] int lambda() const noexcept { return static_cast<int>(letters.size()); }
    [[nodiscard]] long long tot() const noexcept;
    [[nodiscard]] int odd() const noexcept;

    friend bool operator==(const IntWord &, const IntWord &) = default;
    friend auto operator<=>(const IntWord &, const IntWord &) = default;
};

enum class WordFamilyTag { NIW, NIW_E, DW_O };

struct WordFamily {
    WordFamilyTag tag = WordFamilyTag::NIW;
    int n = 0;
    std::optional<int> s; // nullopt is s = infinity, only meaningful for NIW
};

/// Members of the family in ascending lexicographic order.
/// Throws Error{unbounded_family} when s is infinite.
std::vector<IntWord> enumerate_words(const WordFamily &family);

bool is_nonincreasing(std::span<const int> letters) noexcept;

/// Sum of the elements of a finite set of integers.
long long tot_subset(std::span<const int> set) noexcept;

/// Number of pairs (i, j) with i in b, j in c and i > j.
int inv_crossing(std::span<const int> b, std::span<const int> c) noexcept;

std::string format_word(const IntWord &w);
IntWord parse_word(std::string_view text);

} // namespace bperm
