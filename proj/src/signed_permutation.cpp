#include <bperm/signed_permutation.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace bperm {

SignedPermutation SignedPermutation::from_letters(std::vector<int> letters) {
    const auto n = static_cast<long long>(letters.size());
    std::vector<char> seen(letters.size() + 1, 0);
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const int x = letters[i];
        if (x == 0)
            throw Error(Errc::zero_letter, "letter at index " + std::to_string(i + 1) + " is zero", i + 1);
        const long long a = std::llabs(static_cast<long long>(x));
        if (a > n)
            throw Error(Errc::out_of_range,
                        "letter " + std::to_string(x) + " at index " + std::to_string(i + 1) + " exceeds order " +
                            std::to_string(n),
                        i + 1);
        if (seen[static_cast<std::size_t>(a)])
            throw Error(Errc::repeated_absolute_value,
                        "absolute value " + std::to_string(a) + " repeated at index " + std::to_string(i + 1), i + 1);
        seen[static_cast<std::size_t>(a)] = 1;
    }
    return SignedPermutation(std::move(letters), trusted_tag{});
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> letters(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i)
        letters[static_cast<std::size_t>(i)] = i + 1;
    return SignedPermutation(std::move(letters), trusted_tag{});
}

bool SignedPermutation::is_plain() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(), [](int x) { return x > 0; });
}

bool is_desarrangement(std::span<const int> word) noexcept {
    if (word.empty())
        return true;
    std::size_t run = 1;
    while (run < word.size() && word[run - 1] > word[run])
        ++run;
    return run % 2 == 0;
}

PixedFactorization pixed_factorization(const SignedPermutation &w) {
    const auto x = w.letters();
    const std::size_t n = x.size();
    std::size_t start = 0;
    while (start < n && !is_desarrangement(x.subspan(start)))
        ++start;

    PixedFactorization f;
    f.w_d.assign(x.begin() + static_cast<std::ptrdiff_t>(start), x.end());
    std::size_t i = 0;
    while (i < start && x[i] < 0) {
        if (i > 0 && x[i - 1] > x[i])
            throw Error(Errc::malformed_prefix, "negative prefix of " + format_letters(x) + " is not increasing", i + 1);
        f.w_minus.push_back(x[i++]);
    }
    while (i < start) {
        if (x[i] < 0 || (!f.w_plus.empty() && f.w_plus.back() > x[i]))
            throw Error(Errc::malformed_prefix, "positive prefix of " + format_letters(x) + " is not increasing", i + 1);
        f.w_plus.push_back(x[i++]);
    }
    return f;
}

StatProfile stat_profile(const SignedPermutation &w) {
    StatProfile p;
    const auto x = w.letters();
    const int n = w.order();
    int neg_abs_sum = 0;
    for (int i = 1; i <= n; ++i) {
        const int v = x[static_cast<std::size_t>(i - 1)];
        if (v < 0) {
            p.neg_set.push_back(v);
            neg_abs_sum -= v;
        }
        if (v == i)
            p.fix_plus_set.push_back(v);
        else if (v == -i)
            p.fix_minus_set.push_back(v);
    }
    std::sort(p.neg_set.begin(), p.neg_set.end());
    std::sort(p.fix_minus_set.begin(), p.fix_minus_set.end());
    p.neg = static_cast<int>(p.neg_set.size());
    p.fix_plus = static_cast<int>(p.fix_plus_set.size());
    p.fix_minus = static_cast<int>(p.fix_minus_set.size());

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(j)])
                ++p.inv;
    p.length = p.inv + neg_abs_sum;

    for (int i = 1; i < n; ++i) {
        if (x[static_cast<std::size_t>(i - 1)] > x[static_cast<std::size_t>(i)]) {
            ++p.des;
            p.maj += i;
        }
    }
    p.fdes = 2 * p.des + ((n > 0 && x[0] < 0) ? 1 : 0);
    p.fmaj = 2 * p.maj + p.neg;

    auto pf = pixed_factorization(w);
    p.pix_minus_set = pf.w_minus;
    p.pix_plus_set = pf.w_plus;
    p.pix_minus = static_cast<int>(pf.w_minus.size());
    p.pix_plus = static_cast<int>(pf.w_plus.size());
    return p;
}

std::string_view to_string(SubsetClass cls) noexcept {
    switch (cls) {
    case SubsetClass::B: return "B";
    case SubsetClass::D: return "D";
    case SubsetClass::K: return "K";
    case SubsetClass::DB: return "DB";
    case SubsetClass::KB: return "KB";
    }
    return "?";
}

SubsetClass parse_subset_class(std::string_view tag) {
    if (tag == "B")
        return SubsetClass::B;
    if (tag == "D")
        return SubsetClass::D;
    if (tag == "K")
        return SubsetClass::K;
    if (tag == "DB")
        return SubsetClass::DB;
    if (tag == "KB")
        return SubsetClass::KB;
    throw Error(Errc::parse_error, "unknown subset class '" + std::string(tag) + "'");
}

namespace {

bool has_positive_fixed_point(std::span<const int> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == static_cast<int>(i) + 1)
            return true;
    return false;
}

} // namespace

bool belongs_to(const SignedPermutation &w, SubsetClass cls) {
    switch (cls) {
    case SubsetClass::B: return true;
    case SubsetClass::D: return w.is_plain() && !has_positive_fixed_point(w.letters());
    case SubsetClass::K: return w.is_plain() && is_desarrangement(w.letters());
    case SubsetClass::DB: return !has_positive_fixed_point(w.letters());
    case SubsetClass::KB: return pixed_factorization(w).w_plus.empty();
    }
    return false;
}

std::vector<SignedPermutation> enumerate(int n, SubsetClass cls) {
    std::vector<SignedPermutation> out;
    for_each_in_class(n, cls, [&](const SignedPermutation &w) { out.push_back(w); });
    return out;
}

SignedPermutation inverse(const SignedPermutation &sigma) {
    if (!sigma.is_plain())
        throw Error(Errc::not_plain, "inverse requires a plain permutation, got " + format_letters(sigma.letters()));
    std::vector<int> inv(sigma.size());
    for (int i = 1; i <= sigma.order(); ++i)
        inv[static_cast<std::size_t>(sigma.at(i) - 1)] = i;
    return SignedPermutation::from_letters(std::move(inv));
}

LigneStats ligne_stats(const SignedPermutation &sigma) {
    if (!sigma.is_plain())
        throw Error(Errc::not_plain, "ligne of route requires a plain permutation, got " +
                                         format_letters(sigma.letters()));
    LigneStats s;
    const auto descents = [](std::span<const int> x, std::vector<int> &out, int &sum) {
        for (std::size_t i = 1; i < x.size(); ++i) {
            if (x[i - 1] > x[i]) {
                out.push_back(static_cast<int>(i));
                sum += static_cast<int>(i);
            }
        }
    };
    descents(sigma.letters(), s.ligne, s.maj);
    const auto inv = inverse(sigma);
    descents(inv.letters(), s.iligne, s.imaj);
    return s;
}

SignedPermutation bar(const SignedPermutation &w) {
    std::vector<int> letters(w.letters().begin(), w.letters().end());
    for (int &x : letters)
        x = -x;
    return SignedPermutation::from_letters(std::move(letters));
}

std::string format_letters(std::span<const int> letters) {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(letters[i]);
    }
    return out;
}

std::vector<int> parse_letters(std::string_view text) {
    std::vector<int> out;
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    std::size_t pos = 0;
    bool only_space = std::all_of(text.begin(), text.end(), is_space);
    if (only_space)
        return out;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!token.empty() && is_space(token.front()))
            token.remove_prefix(1);
        while (!token.empty() && is_space(token.back()))
            token.remove_suffix(1);
        std::string_view digits = token;
        if (!digits.empty() && digits.front() == '+')
            digits.remove_prefix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
            throw Error(Errc::parse_error, "bad token '" + std::string(token) + "' at position " +
                                               std::to_string(out.size() + 1), out.size() + 1);
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

SignedPermutation parse_signed_permutation(std::string_view text) {
    return SignedPermutation::from_letters(parse_letters(text));
}

} // namespace bperm
