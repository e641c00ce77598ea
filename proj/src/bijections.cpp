#include <bperm/bijections.hpp>

#include <bperm/record.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace bperm {

namespace {

bool abs_less(int a, int b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); }

} // namespace

void validate_derangement(const LetterMap &tau) {
    if (tau.domain.size() != tau.image.size())
        throw Error(Errc::length_mismatch, "domain has " + std::to_string(tau.domain.size()) +
                                               " letters but image has " + std::to_string(tau.image.size()));
    std::map<int, std::size_t> column;
    for (std::size_t i = 0; i < tau.domain.size(); ++i)
        if (!column.emplace(tau.domain[i], i).second)
            throw Error(Errc::repeated_absolute_value, "domain letter " + std::to_string(tau.domain[i]) + " repeated",
                        i + 1);
    std::vector<char> hit(tau.domain.size(), 0);
    for (std::size_t i = 0; i < tau.image.size(); ++i) {
        const auto it = column.find(tau.image[i]);
        if (it == column.end())
            throw Error(Errc::out_of_range, "image letter " + std::to_string(tau.image[i]) + " is not in the domain",
                        i + 1);
        if (hit[it->second]++)
            throw Error(Errc::repeated_absolute_value, "image letter " + std::to_string(tau.image[i]) + " repeated",
                        i + 1);
    }
    for (std::size_t i = 0; i < tau.domain.size(); ++i)
        if (tau.domain[i] == tau.image[i])
            throw Error(Errc::has_fixed_point, "letter " + std::to_string(tau.domain[i]) + " is fixed", i + 1);
}

std::vector<int> desarmenien_f(const LetterMap &tau) {
    validate_derangement(tau);
    std::map<int, int> next;
    for (std::size_t i = 0; i < tau.domain.size(); ++i)
        next.emplace(tau.domain[i], tau.image[i]);

    // Each cycle listed from its minimum, then rotated so the minimum is second.
    std::vector<std::vector<int>> cycles;
    std::map<int, char> seen;
    for (const auto &[start, _] : next) {
        if (seen[start])
            continue;
        std::vector<int> cycle;
        for (int y = start; !seen[y]; y = next.at(y)) {
            seen[y] = 1;
            cycle.push_back(y);
        }
        std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
        cycles.push_back(std::move(cycle));
    }
    // Cycles were discovered in increasing order of their minima.
    std::vector<int> out;
    out.reserve(tau.domain.size());
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
        out.insert(out.end(), it->begin(), it->end());
    return out;
}

std::vector<int> desarmenien_f(std::span<const int> word) {
    LetterMap tau;
    tau.image.assign(word.begin(), word.end());
    tau.domain.resize(word.size());
    std::iota(tau.domain.begin(), tau.domain.end(), 1);
    return desarmenien_f(tau);
}

LetterMap desarmenien_f_inverse(std::span<const int> word) {
    {
        std::vector<int> sorted(word.begin(), word.end());
        std::sort(sorted.begin(), sorted.end());
        if (const auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
            throw Error(Errc::repeated_absolute_value, "letter " + std::to_string(*it) + " repeated");
    }
    if (!is_desarrangement(word))
        throw Error(Errc::not_desarrangement, "leftmost trough of " + format_letters(word) + " is not at an even position");

    std::map<int, int> next;
    std::size_t end = word.size();
    while (end > 0) {
        const auto min_it = std::min_element(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(end));
        const auto min_pos = static_cast<std::size_t>(min_it - word.begin());
        if (min_pos == 0)
            throw Error(Errc::not_desarrangement, "minimum of a remaining prefix is its first letter");
        const std::size_t begin = min_pos - 1;
        for (std::size_t i = begin; i < end; ++i)
            next[word[i]] = word[i + 1 < end ? i + 1 : begin];
        end = begin;
    }

    LetterMap tau;
    tau.domain.assign(word.begin(), word.end());
    std::sort(tau.domain.begin(), tau.domain.end(), abs_less);
    for (int y : tau.domain)
        tau.image.push_back(next.at(y));
    return tau;
}

LetterMap derangement_part(const SignedPermutation &w) {
    const auto x = w.letters();
    // key[j] is the letter of w whose absolute value is j.
    std::vector<int> key(x.size() + 1, 0);
    for (int v : x)
        key[static_cast<std::size_t>(std::abs(v))] = v;
    LetterMap tau;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        if (std::abs(x[i]) == pos)
            continue;
        tau.domain.push_back(key[static_cast<std::size_t>(pos)]);
        tau.image.push_back(x[i]);
    }
    return tau;
}

SignedPermutation phi(const SignedPermutation &w) {
    const auto p = stat_profile(w);
    std::vector<int> out = p.fix_minus_set;
    std::sort(out.begin(), out.end());
    out.insert(out.end(), p.fix_plus_set.begin(), p.fix_plus_set.end());
    const auto tail = desarmenien_f(derangement_part(w));
    out.insert(out.end(), tail.begin(), tail.end());
    return SignedPermutation::from_letters(std::move(out));
}

SignedPermutation phi_inverse(const SignedPermutation &v) {
    const auto f = pixed_factorization(v);
    std::vector<int> x(v.size(), 0);
    for (int y : f.w_minus)
        x[static_cast<std::size_t>(-y - 1)] = y;
    for (int y : f.w_plus)
        x[static_cast<std::size_t>(y - 1)] = y;
    const LetterMap tau = desarmenien_f_inverse(f.w_d);
    for (std::size_t i = 0; i < tau.domain.size(); ++i)
        x[static_cast<std::size_t>(std::abs(tau.domain[i]) - 1)] = tau.image[i];
    return SignedPermutation::from_letters(std::move(x));
}

std::string format_letter_map(const LetterMap &tau) {
    return "domain=" + format_letters(tau.domain) + ";image=" + format_letters(tau.image);
}

LetterMap parse_letter_map(std::string_view text) {
    if (text.find('=') == text.npos) {
        LetterMap tau;
        tau.image = parse_letters(text);
        tau.domain.resize(tau.image.size());
        std::iota(tau.domain.begin(), tau.domain.end(), 1);
        return tau;
    }
    const Record r = parse_record(text);
    for (const auto &[key, value] : r)
        if (key != "domain" && key != "image")
            throw Error(Errc::parse_error, "unknown field '" + key + "'");
    return LetterMap{parse_letters(record_field(r, "domain")), parse_letters(record_field(r, "image"))};
}

} // namespace bperm
