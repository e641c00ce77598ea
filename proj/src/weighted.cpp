#include <bperm/weighted.hpp>

#include <bperm/record.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace bperm {

namespace {

int sign_of(int x) { return x < 0 ? -1 : 1; }

bool is_fixed(std::span<const int> x, std::size_t index) {
    const int pos = static_cast<int>(index) + 1;
    return x[index] == pos || x[index] == -pos;
}

} // namespace

WeightedSignedPermutation validate_wsp(IntWord c, SignedPermutation w) {
    const auto &cl = c.letters;
    const auto x = w.letters();
    if (cl.size() != x.size())
        throw Error(Errc::length_mismatch, "c has " + std::to_string(cl.size()) + " letters but w has " +
                                               std::to_string(x.size()));
    for (std::size_t k = 0; k < cl.size(); ++k) {
        if (cl[k] < 0 || (k > 0 && cl[k - 1] < cl[k]))
            throw Error(Errc::wsp1, "c is not a nonincreasing word of nonnegative integers at column " +
                                        std::to_string(k + 1), k + 1);
    }
    for (std::size_t k = 0; k + 1 < cl.size(); ++k) {
        if (cl[k] == cl[k + 1] && !(x[k] < x[k + 1]))
            throw Error(Errc::wsp3, "equal weights over a descent at column " + std::to_string(k + 1), k + 1);
    }
    for (std::size_t k = 0; k < cl.size(); ++k) {
        if ((cl[k] % 2 == 0) != (x[k] > 0))
            throw Error(Errc::wsp4, "weight parity disagrees with letter sign at column " + std::to_string(k + 1),
                        k + 1);
    }
    return WeightedSignedPermutation{std::move(c), std::move(w)};
}

WeightedSignedPermutation validate_wsp(std::vector<int> c, std::vector<int> w) {
    if (c.size() != w.size())
        throw Error(Errc::length_mismatch, "c has " + std::to_string(c.size()) + " letters but w has " +
                                               std::to_string(w.size()));
    SignedPermutation perm;
    try {
        perm = SignedPermutation::from_letters(std::move(w));
    } catch (const Error &e) {
        throw Error(Errc::wsp2, e.what(), e.index());
    }
    return validate_wsp(IntWord{std::move(c)}, std::move(perm));
}

WspDecomposition wsp_decompose(const WeightedSignedPermutation &p) {
    const auto x = p.w.letters();
    const auto &c = p.c.letters;
    WspDecomposition d;
    std::vector<int> kept_c;
    std::vector<int> kept_x;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] > 0 && is_fixed(x, k)) {
            d.v_e.letters.push_back(c[k]);
        } else if (x[k] < 0 && is_fixed(x, k)) {
            d.v_o.letters.push_back(c[k]);
        } else {
            kept_c.push_back(c[k]);
            kept_x.push_back(x[k]);
        }
    }
    // Standardize the remaining absolute values onto 1..i.
    std::vector<int> abs_values(kept_x.size());
    std::transform(kept_x.begin(), kept_x.end(), abs_values.begin(), [](int v) { return std::abs(v); });
    std::sort(abs_values.begin(), abs_values.end());
    for (int &v : kept_x) {
        const auto rank = std::lower_bound(abs_values.begin(), abs_values.end(), std::abs(v)) - abs_values.begin();
        v = sign_of(v) * static_cast<int>(rank + 1);
    }
    d.core = WeightedSignedPermutation{IntWord{std::move(kept_c)}, SignedPermutation::from_letters(std::move(kept_x))};
    return d;
}

namespace {

WeightedSignedPermutation insert_one_fixed_column(const WeightedSignedPermutation &p, int weight) {
    const auto &c = p.c.letters;
    const auto x = p.w.letters();
    const int m = p.order();
    const int sign = weight % 2 == 0 ? 1 : -1;
    // Block of equal weight occupies 1-based positions first..first+r-1.
    const int first = 1 + static_cast<int>(std::count_if(c.begin(), c.end(), [&](int v) { return v > weight; }));
    const int r = static_cast<int>(std::count(c.begin(), c.end(), weight));

    for (int slot = 0; slot <= r; ++slot) {
        const int pos = first + slot;
        std::vector<int> new_c(c.begin(), c.end());
        new_c.insert(new_c.begin() + (pos - 1), weight);
        std::vector<int> new_x;
        new_x.reserve(static_cast<std::size_t>(m) + 1);
        for (int v : x)
            new_x.push_back(std::abs(v) >= pos ? v + sign_of(v) : v);
        new_x.insert(new_x.begin() + (pos - 1), sign * pos);

        bool increasing = true;
        for (int k = first; k < first + r; ++k)
            if (!(new_x[static_cast<std::size_t>(k - 1)] < new_x[static_cast<std::size_t>(k)]))
                increasing = false;
        if (increasing)
            return WeightedSignedPermutation{IntWord{std::move(new_c)},
                                             SignedPermutation::from_letters(std::move(new_x))};
    }
    throw Error(Errc::insertion_conflict,
                "no position in the weight-" + std::to_string(weight) + " block keeps its letters increasing");
}

} // namespace

WeightedSignedPermutation wsp_insert_fixed_columns(const WeightedSignedPermutation &p, int weight, int count) {
    if (weight < 0)
        throw Error(Errc::insertion_conflict, "negative weight " + std::to_string(weight));
    if (weight % 2 == 1 && count > 1)
        throw Error(Errc::insertion_conflict, "odd weight " + std::to_string(weight) + " can carry one fixed point");
    WeightedSignedPermutation out = p;
    for (int i = 0; i < count; ++i)
        out = insert_one_fixed_column(out, weight);
    return out;
}

WeightedSignedPermutation wsp_recompose(const WspDecomposition &d) {
    for (std::size_t k = 0; k < d.core.w.size(); ++k)
        if (is_fixed(d.core.w.letters(), k))
            throw Error(Errc::insertion_conflict, "core has a fixed point at column " + std::to_string(k + 1), k + 1);
    if (!is_nonincreasing(d.v_e.letters) ||
        std::any_of(d.v_e.letters.begin(), d.v_e.letters.end(), [](int v) { return v < 0 || v % 2 != 0; }))
        throw Error(Errc::insertion_conflict, "v_e is not a nonincreasing word of even letters");
    for (std::size_t k = 0; k < d.v_o.letters.size(); ++k) {
        const int v = d.v_o.letters[k];
        if (v < 0 || v % 2 != 1 || (k > 0 && d.v_o.letters[k - 1] <= v))
            throw Error(Errc::insertion_conflict, "v_o is not a strictly decreasing word of odd letters");
    }

    // b_1^{h_1} ... b_m^{h_m}, b_1 > ... > b_m, inserted from the heaviest block down.
    std::map<int, int, std::greater<>> multiplicity;
    for (int v : d.v_e.letters)
        ++multiplicity[v];
    for (int v : d.v_o.letters)
        ++multiplicity[v];

    WeightedSignedPermutation out = d.core;
    for (const auto &[weight, count] : multiplicity)
        out = wsp_insert_fixed_columns(out, weight, count);

    if (wsp_decompose(out) != d)
        throw Error(Errc::insertion_conflict, "inserted columns do not decompose back to the input");
    return out;
}

IntWord macmahon_to_word(const WeightedSignedPermutation &p) {
    IntWord d{std::vector<int>(p.w.size())};
    const auto x = p.w.letters();
    for (std::size_t k = 0; k < x.size(); ++k)
        d.letters[static_cast<std::size_t>(std::abs(x[k]) - 1)] = p.c.letters[k];
    return d;
}

WeightedSignedPermutation macmahon_from_word(const IntWord &d, int s) {
    const int n = d.lambda();
    struct Column {
        int weight;
        int letter;
    };
    std::vector<Column> columns;
    columns.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const int v = d.letters[static_cast<std::size_t>(j - 1)];
        if (v < 0 || v > s)
            throw Error(Errc::out_of_range, "letter " + std::to_string(v) + " at position " + std::to_string(j) +
                                                " outside 0.." + std::to_string(s),
                        static_cast<std::size_t>(j));
        columns.push_back({v, v % 2 == 0 ? j : -j});
    }
    // Heaviest first; equal weights in increasing letter order.
    std::sort(columns.begin(), columns.end(), [](const Column &a, const Column &b) {
        return a.weight != b.weight ? a.weight > b.weight : a.letter < b.letter;
    });
    std::vector<int> c;
    std::vector<int> x;
    for (const auto &col : columns) {
        c.push_back(col.weight);
        x.push_back(col.letter);
    }
    return WeightedSignedPermutation{IntWord{std::move(c)}, SignedPermutation::from_letters(std::move(x))};
}

std::vector<int> right_factor_descents(const SignedPermutation &w) {
    const auto x = w.letters();
    std::vector<int> z(x.size(), 0);
    int count = 0;
    for (std::size_t k = x.size(); k-- > 0;) {
        if (k + 1 < x.size() && x[k] > x[k + 1])
            ++count;
        z[k] = count;
    }
    return z;
}

FdesPair fdes_pairing(const WeightedSignedPermutation &p, int s) {
    if (p.order() > 0 && p.max_weight() > s)
        throw Error(Errc::out_of_range, "c_1 = " + std::to_string(p.max_weight()) + " exceeds s = " +
                                            std::to_string(s), 1);
    const auto x = p.w.letters();
    const auto z = right_factor_descents(p.w);
    FdesPair out{IntWord{std::vector<int>(x.size())}, p.w};
    for (std::size_t k = 0; k < x.size(); ++k) {
        const int eps = x[k] < 0 ? 1 : 0;
        const int a = (p.c.letters[k] - eps) / 2;
        const int b = a - z[k];
        if (b < 0)
            throw Error(Errc::negative_b_letter, "b_" + std::to_string(k + 1) + " = " + std::to_string(b), k + 1);
        out.b.letters[k] = b;
    }
    return out;
}

WeightedSignedPermutation fdes_pairing_inverse(const IntWord &b, const SignedPermutation &w) {
    if (b.letters.size() != w.size())
        throw Error(Errc::length_mismatch, "b and w differ in length");
    for (std::size_t k = 0; k < b.letters.size(); ++k)
        if (b.letters[k] < 0 || (k > 0 && b.letters[k - 1] < b.letters[k]))
            throw Error(Errc::wsp1, "b is not a nonincreasing word of nonnegative integers at column " +
                                        std::to_string(k + 1), k + 1);
    const auto x = w.letters();
    const auto z = right_factor_descents(w);
    std::vector<int> c(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        c[k] = 2 * (b.letters[k] + z[k]) + (x[k] < 0 ? 1 : 0);
    return validate_wsp(IntWord{std::move(c)}, w);
}

std::vector<WeightedSignedPermutation> enumerate_wsp(int n, int s, bool derangements_only) {
    std::vector<WeightedSignedPermutation> out;
    for_each_wsp(n, s, derangements_only, [&](const WeightedSignedPermutation &p) { out.push_back(p); });
    return out;
}

std::string format_wsp(const WeightedSignedPermutation &p) {
    return "c=" + format_letters(p.c.letters) + ";w=" + format_letters(p.w.letters());
}

WeightedSignedPermutation parse_wsp(std::string_view text) {
    const Record r = parse_record(text);
    for (const auto &[key, value] : r)
        if (key != "c" && key != "w")
            throw Error(Errc::parse_error, "unknown field '" + key + "'");
    return validate_wsp(parse_letters(record_field(r, "c")), parse_letters(record_field(r, "w")));
}

} // namespace bperm
