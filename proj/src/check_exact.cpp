// Checkers whose two sides are exact polynomials, integers or bijections.

#include "check_support.hpp"

#include <bperm/bijections.hpp>
#include <bperm/families.hpp>
#include <bperm/q_builders.hpp>
#include <bperm/weighted.hpp>
#include <bperm/words.hpp>

#include <map>
#include <set>
#include <unordered_map>

namespace bperm::detail {

namespace {

long long signed_count(int n) {
    long long c = 1;
    for (int i = 1; i <= n; ++i)
        c *= 2LL * i;
    return c;
}

long long wsp_count(int n, int s) {
    long long c = 1;
    for (int i = 0; i < n; ++i)
        c *= s + 1;
    return c;
}

/// D_n^B(q,Z): fmaj and neg over signed derangements.
LaurentPoly signed_derangement_poly(int n) {
    return enum_polynomial(n, Bundle::FLAG, SubsetClass::DB).specialize(Var::t, 1).specialize(Var::Y1, 1);
}

/// sum over WSP_n(s) of q^tot c Z^neg w, with Y0^fix+ Y1^fix- when `fixed`.
LaurentPoly wsp_poly(int n, int s, bool fixed) {
    require_budget(wsp_count(n, s), "WSP_" + std::to_string(n) + "(" + std::to_string(s) + ")");
    std::unordered_map<Monomial, long long, MonomialHash> acc;
    for_each_wsp(n, s, false, [&](const WeightedSignedPermutation &p) {
        const auto sp = stat_profile(p.w);
        Monomial m;
        m[Var::q] = static_cast<int>(p.c.tot());
        m[Var::Z] = sp.neg;
        if (fixed) {
            m[Var::Y0] = sp.fix_plus;
            m[Var::Y1] = sp.fix_minus;
        }
        ++acc[m];
    });
    std::vector<LaurentPoly::Term> terms;
    for (const auto &[m, c] : acc)
        terms.push_back({m, c});
    return LaurentPoly::from_terms(std::move(terms));
}

/// sum_{i=0}^{s} q^i Z^[i odd]
LaurentPoly letter_weight_sum(int s) {
    LaurentPoly sum;
    for (int i = 0; i <= s; ++i) {
        Monomial m = qpow(i);
        m[Var::Z] = i % 2;
        sum += LaurentPoly::monomial(m);
    }
    return sum;
}

LaurentPoly words_poly(WordFamilyTag tag, int n, int s) {
    LaurentPoly sum;
    for (const auto &w : enumerate_words({tag, n, s}))
        sum += LaurentPoly::monomial(qpow(static_cast<int>(w.tot())));
    return sum;
}

std::string set_text(const std::vector<int> &v) { return "{" + format_letters(v) + "}"; }

} // namespace

CheckResult check_1_2(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), b_exponential_form(n), enum_polynomial(n, Bundle::FIX)))
            return w;
    return std::nullopt;
}

CheckResult check_thm1_1(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        const auto closed = b_four_index_sum(n);
        if (auto w = compare(at_n(n) + ", fix", closed, enum_polynomial(n, Bundle::FIX)))
            return w;
        if (auto w = compare(at_n(n) + ", pix", closed, enum_polynomial(n, Bundle::PIX)))
            return w;
    }
    return std::nullopt;
}

CheckResult check_2_1(const CheckParams &p) {
    const auto d = derangement_numbers(p.n_max);
    for (int n = 0; n <= p.n_max; ++n) {
        if (auto w = compare(at_n(n) + ", alternating sum", d[static_cast<std::size_t>(n)],
                             derangement_number_alternating(n)))
            return w;
        // Enumeration only where it fits the budget; the two integer forms cover the rest.
        long long plain = 1;
        for (int i = 2; i <= n; ++i)
            plain *= i;
        if (plain > element_budget())
            continue;
        long long count = 0;
        for_each_in_class(n, SubsetClass::D, [&](const SignedPermutation &) { ++count; });
        if (auto w = compare(at_n(n) + ", |D_n|", d[static_cast<std::size_t>(n)], BigInt(count)))
            return w;
    }
    return std::nullopt;
}

CheckResult check_2_2(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), b_four_index_sum(n), enum_polynomial(n, Bundle::FIX)))
            return w;
    return std::nullopt;
}

CheckResult check_2_4(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        require_budget(signed_count(n), "phi on B_" + std::to_string(n));
        std::set<SignedPermutation> image;
        CheckResult failure;
        for_each_signed_permutation(n, false, [&](const SignedPermutation &w) {
            if (failure)
                return;
            const auto v = phi(w);
            const auto a = stat_profile(w);
            const auto b = stat_profile(v);
            const std::string where = at_n(n) + ", w=" + format_letters(w.letters());
            if (a.fix_minus_set != b.pix_minus_set)
                failure = mismatch(where + ", Pix-", set_text(a.fix_minus_set), set_text(b.pix_minus_set));
            else if (a.fix_plus_set != b.pix_plus_set)
                failure = mismatch(where + ", Pix+", set_text(a.fix_plus_set), set_text(b.pix_plus_set));
            else if (a.neg_set != b.neg_set)
                failure = mismatch(where + ", Neg", set_text(a.neg_set), set_text(b.neg_set));
            else if (const auto back = phi_inverse(v); back != w)
                failure = mismatch(where + ", phi_inverse", format_letters(w.letters()), format_letters(back.letters()));
            image.insert(v);
        });
        if (failure)
            return failure;
        if (auto w = compare(at_n(n) + ", |image|", BigInt(signed_count(n)), BigInt(image.size())))
            return w;
    }
    return std::nullopt;
}

CheckResult check_3_2(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), enum_polynomial(n, Bundle::MAJ, SubsetClass::D),
                             enum_polynomial(n, Bundle::INV, SubsetClass::K)))
            return w;
    return std::nullopt;
}

CheckResult check_3_5(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        const auto closed = length_four_index_sum(n);
        if (auto w = compare(at_n(n), closed, enum_polynomial(n, Bundle::PIX_L)))
            return w;
        if (auto w = compare(at_n(n) + ", q=1", b_four_index_sum(n), closed.specialize(Var::q, 1)))
            return w;
    }
    return std::nullopt;
}

CheckResult check_4_1(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        for (int s = 0; s <= p.s_max; ++s) {
            require_budget(wsp_count(n, s), "WSP_" + std::to_string(n) + "(" + std::to_string(s) + ")");
            CheckResult failure;
            long long members = 0;
            for_each_wsp(n, s, false, [&](const WeightedSignedPermutation &x) {
                if (failure)
                    return;
                ++members;
                const std::string where = at_ns(n, s) + ", " + format_wsp(x);
                const auto d = wsp_decompose(x);
                const auto sx = stat_profile(x.w);
                const auto sc = stat_profile(d.core.w);
                const auto in_family = [&](const IntWord &v, WordFamilyTag tag) {
                    const auto family = enumerate_words({tag, v.lambda(), s});
                    return std::find(family.begin(), family.end(), v) != family.end();
                };
                if (sc.fix_plus + sc.fix_minus != 0 || d.core.max_weight() > s)
                    failure = mismatch(where + ", core", "weighted signed derangement", format_wsp(d.core));
                else if (!in_family(d.v_e, WordFamilyTag::NIW_E))
                    failure = mismatch(where + ", v_e", "word in NIW^e", format_word(d.v_e));
                else if (!in_family(d.v_o, WordFamilyTag::DW_O))
                    failure = mismatch(where + ", v_o", "word in DW^o", format_word(d.v_o));
                else if (x.c.tot() != d.core.c.tot() + d.v_e.tot() + d.v_o.tot())
                    failure = mismatch(where + ", tot", std::to_string(x.c.tot()),
                                       std::to_string(d.core.c.tot() + d.v_e.tot() + d.v_o.tot()));
                else if (sx.neg != sc.neg + d.v_o.lambda())
                    failure = mismatch(where + ", neg", std::to_string(sx.neg), std::to_string(sc.neg + d.v_o.lambda()));
                else if (sx.fix_plus != d.v_e.lambda() || sx.fix_minus != d.v_o.lambda())
                    failure = mismatch(where + ", fix", std::to_string(sx.fix_plus) + "," + std::to_string(sx.fix_minus),
                                       std::to_string(d.v_e.lambda()) + "," + std::to_string(d.v_o.lambda()));
                else if (const auto back = wsp_recompose(d); back != x)
                    failure = mismatch(where + ", recompose", format_wsp(x), format_wsp(back));
            });
            if (failure)
                return failure;
            // Counting the target side: sequences (i, j, k, core, v_e, v_o).
            long long tuples = 0;
            for (int i = 0; i <= n; ++i) {
                long long cores = 0;
                for_each_wsp(i, s, true, [&](const WeightedSignedPermutation &) { ++cores; });
                for (int j = 0; i + j <= n; ++j)
                    tuples += cores * static_cast<long long>(enumerate_words({WordFamilyTag::NIW_E, j, s}).size()) *
                              static_cast<long long>(enumerate_words({WordFamilyTag::DW_O, n - i - j, s}).size());
            }
            if (auto w = compare(at_ns(n, s) + ", sequences", BigInt(members), BigInt(tuples)))
                return w;
        }
    return std::nullopt;
}

CheckResult check_5_1(const CheckParams &p) {
    for (int s = 0; s <= p.s_max; ++s) {
        const Frame f = Frame::exact(p.n_max);
        const auto rhs = f.poch(1, q2pow(1), s / 2 + 1).inverse();
        for (int n = 0; n <= p.n_max; ++n)
            if (auto w = compare(at_ns(n, s), rhs[n], words_poly(WordFamilyTag::NIW_E, n, s)))
                return w;
    }
    return std::nullopt;
}

CheckResult check_5_2(const CheckParams &p) {
    for (int s = 0; s <= p.s_max; ++s) {
        const Frame f = Frame::exact(p.n_max);
        const auto rhs = f.poch(P("-q"), q2pow(1), (s + 1) / 2);
        for (int n = 0; n <= p.n_max; ++n)
            if (auto w = compare(at_ns(n, s), rhs[n], words_poly(WordFamilyTag::DW_O, n, s)))
                return w;
    }
    return std::nullopt;
}

CheckResult check_5_3(const CheckParams &p) {
    const Frame f = Frame::exact(p.n_max);
    for (int s = 0; s <= p.s_max; ++s) {
        std::vector<LaurentPoly> with_fixed, without;
        for (int n = 0; n <= p.n_max; ++n) {
            with_fixed.push_back(wsp_poly(n, s, true));
            without.push_back(wsp_poly(n, s, false));
        }
        const int even = s / 2 + 1;
        const int odd = (s + 1) / 2;
        const auto lhs = TruncSeries::from_coefficients(with_fixed, MainVar::u, f.order);
        const auto rhs = f.poch(1, q2pow(1), even) * f.poch(P("Y0"), q2pow(1), even).inverse() *
                         f.poch(P("-q*Y1*Z"), q2pow(1), odd) * f.poch(P("-q*Z"), q2pow(1), odd).inverse() *
                         TruncSeries::from_coefficients(without, MainVar::u, f.order);
        if (auto w = compare("s=" + std::to_string(s) + ", ", rhs, lhs))
            return w;
    }
    return std::nullopt;
}

CheckResult check_5_6(const CheckParams &p) {
    const Frame f = Frame::exact(p.n_max);
    for (int s = 0; s <= p.s_max; ++s) {
        std::vector<LaurentPoly> coeffs;
        for (int n = 0; n <= p.n_max; ++n)
            coeffs.push_back(wsp_poly(n, s, false));
        const auto lhs = TruncSeries::from_coefficients(coeffs, MainVar::u, f.order);
        if (auto w = compare("s=" + std::to_string(s) + ", ", f.geometric(letter_weight_sum(s)), lhs))
            return w;
    }
    return std::nullopt;
}

CheckResult check_5_7(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        for (int s = 0; s <= p.s_max; ++s)
            if (auto w = compare(at_ns(n, s), letter_weight_sum(s).pow(static_cast<unsigned>(n)), wsp_poly(n, s, false)))
                return w;
    return std::nullopt;
}

CheckResult check_5_8(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        const auto flag = enum_polynomial(n, Bundle::FLAG);
        const auto denom = q_pochhammer(P("t^2"), q2pow(1), n + 1);
        const auto lhs = TruncSeries::from_poly((P("1 + t") * flag), MainVar::t, p.s_max) *
                         TruncSeries::from_poly(denom, MainVar::t, p.s_max).inverse();
        for (int s = 0; s <= p.s_max; ++s)
            if (auto w = compare(at_ns(n, s), wsp_poly(n, s, true), lhs[s]))
                return w;
    }
    return std::nullopt;
}

CheckResult check_6_2_3(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        require_budget(signed_count(n), "B_" + std::to_string(n));
        CheckResult failure;
        for_each_signed_permutation(n, false, [&](const SignedPermutation &w) {
            if (failure)
                return;
            const auto a = stat_profile(w);
            const auto b = stat_profile(bar(w));
            const std::string where = at_n(n) + ", w=" + format_letters(w.letters());
            if (a.fmaj + b.fmaj != n * n)
                failure = mismatch(where + ", fmaj", std::to_string(n * n), std::to_string(a.fmaj + b.fmaj));
            else if (a.neg + b.neg != n)
                failure = mismatch(where + ", neg", std::to_string(n), std::to_string(a.neg + b.neg));
            else if (a.fix_plus != b.fix_minus)
                failure = mismatch(where + ", fix+", std::to_string(a.fix_plus), std::to_string(b.fix_minus));
            else if (a.fix_minus != b.fix_plus)
                failure = mismatch(where + ", fix-", std::to_string(a.fix_minus), std::to_string(b.fix_plus));
        });
        if (failure)
            return failure;
    }
    return std::nullopt;
}

CheckResult check_6_5(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        const auto b = enum_polynomial(n, Bundle::FLAG).specialize(Var::t, 1);
        const auto dual = b.substitute({{Var::q, {Monomial::of(Var::q, -1), 1}},
                                        {Var::Y0, {Monomial::of(Var::Y1), 1}},
                                        {Var::Y1, {Monomial::of(Var::Y0), 1}},
                                        {Var::Z, {Monomial::of(Var::Z, -1), 1}}});
        Monomial prefactor = qpow(n * n);
        prefactor[Var::Z] = n;
        if (auto w = compare(at_n(n), b, dual.times_monomial(prefactor)))
            return w;
    }
    return std::nullopt;
}

CheckResult check_6_7(const CheckParams &p) {
    std::vector<LaurentPoly> d;
    const auto one_plus_qz = P("1 + q*Z");
    for (int n = 0; n <= p.n_max; ++n) {
        d.push_back(signed_derangement_poly(n));
        LaurentPoly rhs;
        for (int k = 0; k <= n; ++k)
            rhs += gauss_binomial(n, k, q2pow(1)) * d[static_cast<std::size_t>(k)];
        const auto lhs = q_factorial(n, q2pow(1)) * one_plus_qz.pow(static_cast<unsigned>(n));
        if (auto w = compare(at_n(n), lhs, rhs))
            return w;
    }
    return std::nullopt;
}

CheckResult check_6_8(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), signed_derangement_closed_form(n), signed_derangement_poly(n)))
            return w;
    return std::nullopt;
}

CheckResult check_6_9(const CheckParams &p) {
    LaurentPoly prev = signed_derangement_poly(0);
    if (auto w = compare(at_n(0), LaurentPoly(1), prev))
        return w;
    for (int n = 0; n + 1 <= p.n_max; ++n) {
        const auto next = signed_derangement_poly(n + 1);
        const auto rhs = P("1 + q*Z") * q_integer(n + 1, q2pow(1)) * prev +
                         LaurentPoly::monomial(qpow(n * (n + 1)), n % 2 == 0 ? -1 : 1);
        if (auto w = compare(at_n(n + 1), rhs, next))
            return w;
        prev = next;
    }
    return std::nullopt;
}

CheckResult check_6_10(const CheckParams &p) {
    std::vector<LaurentPoly> d;
    for (int n = 0; n <= p.n_max; ++n)
        d.push_back(signed_derangement_poly(n));
    if (auto w = compare(at_n(0), LaurentPoly(1), d[0]))
        return w;
    if (p.n_max >= 1)
        if (auto w = compare(at_n(1), P("q*Z"), d[1]))
            return w;
    for (int n = 1; n + 1 <= p.n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const auto rhs = (q_integer(n, q2pow(1)) + P("q*Z") * q_integer(n + 1, q2pow(1))) * d[un] +
                         P("1 + q*Z") * q_integer(n, q2pow(1)).times_monomial(qpow(2 * n)) * d[un - 1];
        if (auto w = compare(at_n(n + 1), rhs, d[un + 1]))
            return w;
    }
    return std::nullopt;
}

CheckResult check_6_16(const CheckParams &p) {
    std::vector<LaurentPoly> d;
    for (int n = 0; n <= p.n_max; ++n) {
        d.push_back(enum_polynomial(n, Bundle::MAJ, SubsetClass::D));
        LaurentPoly rhs;
        for (int k = 0; k <= n; ++k)
            rhs += gauss_binomial(n, k, qpow(1)) * d[static_cast<std::size_t>(k)];
        if (auto w = compare(at_n(n), q_factorial(n, qpow(1)), rhs))
            return w;
    }
    return std::nullopt;
}

CheckResult check_6_18(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), derangement_maj_closed_form(n), enum_polynomial(n, Bundle::MAJ, SubsetClass::D)))
            return w;
    return std::nullopt;
}

CheckResult check_6_19(const CheckParams &p) {
    const auto d = derangement_numbers(p.n_max);
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), d[static_cast<std::size_t>(n)], derangement_number_positive(n)))
            return w;
    return std::nullopt;
}

CheckResult check_6_22(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), enum_polynomial(n, Bundle::DES_MAJ_FIX).specialize(Var::t, 1),
                             enum_polynomial(n, Bundle::INV_PIX)))
            return w;
    return std::nullopt;
}

CheckResult check_6_24(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), enum_polynomial(n, Bundle::DES_MAJ_FIX).specialize(Var::t, 1),
                             enum_polynomial(n, Bundle::IMAJ_PIX)))
            return w;
    return std::nullopt;
}

CheckResult check_6_25(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        const auto k = enum_polynomial(n, Bundle::INV, SubsetClass::K);
        if (auto w = compare(at_n(n) + ", invA_n(q,0)", enum_polynomial(n, Bundle::INV_PIX).specialize(Var::Y0, 0), k))
            return w;
        if (auto w = compare(at_n(n) + ", A_n(q,0)",
                             enum_polynomial(n, Bundle::DES_MAJ_FIX).specialize(Var::t, 1).specialize(Var::Y0, 0), k))
            return w;
        if (auto w = compare(at_n(n) + ", D_n(q)", enum_polynomial(n, Bundle::MAJ, SubsetClass::D), k))
            return w;
    }
    return std::nullopt;
}

CheckResult check_6_26(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n)
        if (auto w = compare(at_n(n), enum_polynomial(n, Bundle::INV, SubsetClass::K),
                             enum_polynomial(n, Bundle::IMAJ, SubsetClass::K)))
            return w;
    return std::nullopt;
}

CheckResult check_6_27(const CheckParams &p) {
    for (int n = 0; n <= p.n_max; ++n) {
        long long plain = 1;
        for (int i = 2; i <= n; ++i)
            plain *= i;
        require_budget(plain, "S_" + std::to_string(n));
        std::map<std::vector<int>, long long> by_ligne, by_iligne;
        for_each_in_class(n, SubsetClass::D,
                          [&](const SignedPermutation &w) { ++by_ligne[ligne_stats(w).ligne]; });
        for_each_in_class(n, SubsetClass::K,
                          [&](const SignedPermutation &w) { ++by_iligne[ligne_stats(w).iligne]; });
        const int positions = n > 0 ? n - 1 : 0;
        for (unsigned mask = 0; mask < (1U << positions); ++mask) {
            std::vector<int> e;
            for (int i = 0; i < positions; ++i)
                if (mask & (1U << i))
                    e.push_back(i + 1);
            const auto count = [&](const std::map<std::vector<int>, long long> &m) {
                const auto it = m.find(e);
                return it == m.end() ? 0LL : it->second;
            };
            if (auto w = compare(at_n(n) + ", E=" + set_text(e), BigInt(count(by_ligne)), BigInt(count(by_iligne))))
                return w;
        }
    }
    return std::nullopt;
}

} // namespace bperm::detail
