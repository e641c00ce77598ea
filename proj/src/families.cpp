#include <bperm/families.hpp>

#include <bperm/q_builders.hpp>

#include <cstdlib>
#include <string>
#include <unordered_map>

namespace bperm {

std::string_view to_string(Bundle b) noexcept {
    switch (b) {
    case Bundle::FIX: return "FIX";
    case Bundle::PIX: return "PIX";
    case Bundle::PIX_L: return "PIX_L";
    case Bundle::FLAG: return "FLAG";
    case Bundle::DES_MAJ_FIX: return "DES_MAJ_FIX";
    case Bundle::INV_PIX: return "INV_PIX";
    case Bundle::IMAJ_PIX: return "IMAJ_PIX";
    case Bundle::MAJ: return "MAJ";
    case Bundle::INV: return "INV";
    case Bundle::IMAJ: return "IMAJ";
    }
    return "?";
}

bool is_plain_bundle(Bundle b) noexcept {
    switch (b) {
    case Bundle::FIX:
    case Bundle::PIX:
    case Bundle::PIX_L:
    case Bundle::FLAG: return false;
    default: return true;
    }
}

int nmax_cap() {
    if (const char *env = std::getenv("BPERM_NMAX_CAP")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 12)
            return static_cast<int>(v);
    }
    return 7;
}

long long element_budget() {
    const int cap = nmax_cap();
    long long b = 1;
    for (int i = 1; i <= cap; ++i)
        b *= 2LL * i;
    return b;
}

void require_budget(long long elements, std::string_view what) {
    if (elements > element_budget())
        throw Error(Errc::cap_exceeded, std::string(what) + " needs " + std::to_string(elements) +
                                            " elements, over the budget of " + std::to_string(element_budget()) +
                                            " (BPERM_NMAX_CAP=" + std::to_string(nmax_cap()) + ")");
}

namespace {

long long class_size_bound(int n, bool plain) {
    long long size = 1;
    for (int i = 1; i <= n; ++i) {
        size *= plain ? i : 2LL * i;
        if (size > (1LL << 50))
            return size;
    }
    return size;
}

Monomial bundle_monomial(const SignedPermutation &w, Bundle b) {
    Monomial m;
    if (b == Bundle::IMAJ_PIX || b == Bundle::IMAJ) {
        m[Var::q] = ligne_stats(w).imaj;
        if (b == Bundle::IMAJ_PIX)
            m[Var::Y0] = stat_profile(w).pix_plus;
        return m;
    }
    const StatProfile p = stat_profile(w);
    switch (b) {
    case Bundle::FIX:
        m[Var::Y0] = p.fix_plus;
        m[Var::Y1] = p.fix_minus;
        m[Var::Z] = p.neg;
        break;
    case Bundle::PIX_L: m[Var::q] = p.length; [[fallthrough]];
    case Bundle::PIX:
        m[Var::Y0] = p.pix_plus;
        m[Var::Y1] = p.pix_minus;
        m[Var::Z] = p.neg;
        break;
    case Bundle::FLAG:
        m[Var::t] = p.fdes;
        m[Var::q] = p.fmaj;
        m[Var::Y0] = p.fix_plus;
        m[Var::Y1] = p.fix_minus;
        m[Var::Z] = p.neg;
        break;
    case Bundle::DES_MAJ_FIX:
        m[Var::t] = p.des;
        m[Var::q] = p.maj;
        m[Var::Y0] = p.fix_plus;
        break;
    case Bundle::INV_PIX:
        m[Var::q] = p.inv;
        m[Var::Y0] = p.pix_plus;
        break;
    case Bundle::MAJ: m[Var::q] = p.maj; break;
    case Bundle::INV: m[Var::q] = p.inv; break;
    default: break;
    }
    return m;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

LaurentPoly power(const LaurentPoly &p, int k) { return p.pow(static_cast<unsigned>(k)); }

int choose2(int n) { return n * (n - 1) / 2; }

} // namespace

LaurentPoly enum_polynomial(int n, Bundle bundle, SubsetClass cls) {
    if (n < 0)
        throw Error(Errc::out_of_range, "negative order " + std::to_string(n));
    const bool plain = is_plain_bundle(bundle) || cls == SubsetClass::D || cls == SubsetClass::K;
    require_budget(class_size_bound(n, plain), "enumerating " + std::string(to_string(bundle)) + " over " +
                                                   std::string(to_string(cls)) + "_" + std::to_string(n));
    std::unordered_map<Monomial, long long, MonomialHash> acc;
    for_each_signed_permutation(n, plain, [&](const SignedPermutation &w) {
        if (cls != SubsetClass::B && !belongs_to(w, cls))
            return;
        ++acc[bundle_monomial(w, bundle)];
    });
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (const auto &[m, c] : acc)
        terms.push_back({m, c});
    return LaurentPoly::from_terms(std::move(terms));
}

std::vector<BigInt> derangement_numbers(int n_max) {
    std::vector<BigInt> d;
    for (int n = 0; n <= n_max; ++n)
        d.push_back(n == 0 ? BigInt(1) : n * d.back() + (n % 2 == 0 ? 1 : -1));
    return d;
}

BigInt derangement_number_alternating(int n) {
    BigInt sum = 0;
    BigInt term = 1; // n!/k! for k = n down to 0
    for (int k = n; k >= 0; --k) {
        sum += k % 2 == 0 ? term : BigInt(-term);
        term *= k;
    }
    return sum;
}

BigInt derangement_number_positive(int n) {
    BigInt sum = n % 2 == 0 ? 1 : 0;
    for (int k = 1; 2 * k <= n - 1; ++k) {
        BigInt term = 2 * k;
        for (int i = 0; i < n - 2 * k - 1; ++i)
            term *= 2 * k + 2 + i;
        sum += term;
    }
    return sum;
}

LaurentPoly b_exponential_form(int n) {
    const LaurentPoly one_plus_z = LaurentPoly(1) + LaurentPoly::var(Var::Z);
    const LaurentPoly x = LaurentPoly::var(Var::Y0) + LaurentPoly::var(Var::Y1) * LaurentPoly::var(Var::Z) - one_plus_z;
    LaurentPoly sum;
    const BigInt nf = factorial(n);
    for (int m = 0; m <= n; ++m)
        sum += LaurentPoly(nf / factorial(m)) * power(one_plus_z, n - m) * power(x, m);
    return sum;
}

LaurentPoly b_four_index_sum(int n) {
    const auto d = derangement_numbers(n);
    const BigInt nf = factorial(n);
    LaurentPoly sum;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (int k = 0; i + j + k <= n; ++k) {
                const int l = n - i - j - k;
                const BigInt coeff = nf / (factorial(i) * factorial(j) * factorial(k) * factorial(l)) *
                                     d[static_cast<std::size_t>(k + l)];
                Monomial m;
                m[Var::Y0] = i;
                m[Var::Y1] = j;
                m[Var::Z] = j + k;
                sum += LaurentPoly::monomial(m, coeff);
            }
    return sum;
}

LaurentPoly length_four_index_sum(int n) {
    const Monomial q = Monomial::of(Var::q);
    std::vector<LaurentPoly> dq;
    for (int m = 0; m <= n; ++m)
        dq.push_back(derangement_maj_closed_form(m));
    LaurentPoly sum;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (int k = 0; i + j + k <= n; ++k) {
                const int l = n - i - j - k;
                const std::vector<int> parts{i, j, k, l};
                Monomial m;
                m[Var::q] = choose2(j + k + 1) + i * k;
                m[Var::Y0] = i;
                m[Var::Y1] = j;
                m[Var::Z] = j + k;
                sum += gauss_multinomial(n, parts, q) * dq[static_cast<std::size_t>(k + l)].times_monomial(m);
            }
    return sum;
}

LaurentPoly derangement_maj_closed_form(int n) {
    const Monomial q = Monomial::of(Var::q);
    LaurentPoly sum = n % 2 == 0 ? LaurentPoly::monomial(q.pow(choose2(n))) : LaurentPoly();
    for (int k = 1; 2 * k <= n - 1; ++k) {
        // (q^{2k+2};q)_{n-2k-1} / (1-q)^{n-2k-1} is a product of q-integers.
        LaurentPoly term = q_integer(2 * k, q).times_monomial(q.pow(choose2(2 * k)));
        for (int i = 0; i < n - 2 * k - 1; ++i)
            term *= q_integer(2 * k + 2 + i, q);
        sum += term;
    }
    return sum;
}

LaurentPoly signed_derangement_closed_form(int n) {
    const Monomial q2 = Monomial::of(Var::q, 2);
    const LaurentPoly one_plus_qz = LaurentPoly(1) + LaurentPoly::monomial(Monomial{{0, 1, 0, 0, 1}});
    LaurentPoly sum;
    for (int k = 0; k <= n; ++k)
        sum += gauss_binomial(n, k, q2).times_monomial(Monomial::of(Var::q, k * (k - 1)), k % 2 == 0 ? 1 : -1) *
               q_factorial(n - k, q2) * power(one_plus_qz, n - k);
    return sum;
}

LaurentPoly closed_form(std::string_view id, int n) {
    if (n < 0)
        throw Error(Errc::out_of_range, "negative order " + std::to_string(n));
    if (id == "1.2")
        return b_exponential_form(n);
    if (id == "2.2")
        return b_four_index_sum(n);
    if (id == "3.5")
        return length_four_index_sum(n);
    if (id == "6.8")
        return signed_derangement_closed_form(n);
    if (id == "6.18")
        return derangement_maj_closed_form(n);
    throw Error(Errc::unknown_identity, "no polynomial closed form registered under '" + std::string(id) + "'");
}

} // namespace bperm
