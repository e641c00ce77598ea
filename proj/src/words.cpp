#include <bperm/words.hpp>

#include <bperm/signed_permutation.hpp>

#include <algorithm>
#include <numeric>

namespace bperm {

long long IntWord::tot() const noexcept {
    return std::accumulate(letters.begin(), letters.end(), 0LL);
}

int IntWord::odd() const noexcept {
    return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](int c) { return c % 2 != 0; }));
}

std::vector<IntWord> enumerate_words(const WordFamily &family) {
    if (!family.s)
        throw Error(Errc::unbounded_family, "cannot enumerate a word family with unbounded letters");
    const int s = *family.s;
    const int n = family.n;
    std::vector<IntWord> out;
    if (n < 0 || s < 0)
        return out;

    const bool strict = family.tag == WordFamilyTag::DW_O;
    const auto admissible = [&](int letter) {
        switch (family.tag) {
        case WordFamilyTag::NIW: return true;
        case WordFamilyTag::NIW_E: return letter % 2 == 0;
        case WordFamilyTag::DW_O: return letter % 2 == 1;
        }
        return false;
    };

    std::vector<int> current(static_cast<std::size_t>(n));
    auto recurse = [&](auto &self, int depth, int bound) -> void {
        if (depth == n) {
            out.push_back(IntWord{current});
            return;
        }
        for (int letter = 0; letter <= bound; ++letter) {
            if (!admissible(letter))
                continue;
            current[static_cast<std::size_t>(depth)] = letter;
            self(self, depth + 1, strict ? letter - 1 : letter);
        }
    };
    recurse(recurse, 0, s);
    return out;
}

bool is_nonincreasing(std::span<const int> letters) noexcept {
    return std::is_sorted(letters.begin(), letters.end(), std::greater<>{});
}

long long tot_subset(std::span<const int> set) noexcept {
    return std::accumulate(set.begin(), set.end(), 0LL);
}

int inv_crossing(std::span<const int> b, std::span<const int> c) noexcept {
    int count = 0;
    for (int i : b)
        for (int j : c)
            if (i > j)
                ++count;
    return count;
}

std::string format_word(const IntWord &w) { return format_letters(w.letters); }

IntWord parse_word(std::string_view text) {
    IntWord w{parse_letters(text)};
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        if (w.letters[i] < 0)
            throw Error(Errc::parse_error, "negative letter at position " + std::to_string(i + 1), i + 1);
    return w;
}

} // namespace bperm
