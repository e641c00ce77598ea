#include <bperm/laurent_poly.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <unordered_map>

namespace bperm {

namespace {

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

bool term_less(const LaurentPoly::Term &a, const LaurentPoly::Term &b) { return canonical_less(a.mono, b.mono); }

BigInt ipow(const BigInt &base, unsigned e) {
    BigInt r = 1;
    BigInt b = base;
    while (e != 0) {
        if (e & 1U)
            r *= b;
        e >>= 1U;
        if (e != 0)
            b *= b;
    }
    return r;
}

} // namespace

std::string_view var_name(Var v) noexcept {
    switch (v) {
    case Var::t: return "t";
    case Var::q: return "q";
    case Var::Y0: return "Y0";
    case Var::Y1: return "Y1";
    case Var::Z: return "Z";
    }
    return "?";
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

int Monomial::abs_degree() const noexcept {
    int d = 0;
    for (int e : exps)
        d += std::abs(e);
    return d;
}

Monomial Monomial::pow(int k) const noexcept {
    Monomial m = *this;
    for (int &e : m.exps)
        e *= k;
    return m;
}

bool canonical_less(const Monomial &a, const Monomial &b) noexcept {
    const int da = a.abs_degree();
    const int db = b.abs_degree();
    if (da != db)
        return da < db;
    return a.exps > b.exps;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept {
    std::size_t h = 0;
    for (int e : m.exps)
        h = h * 1000003U ^ static_cast<std::size_t>(static_cast<unsigned>(e) + 0x9e3779b9U);
    return h;
}

std::string format_monomial(const Monomial &m) {
    std::string out;
    for (Var v : kAllVars) {
        const int e = m[v];
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += var_name(v);
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

bool Caps::any() const noexcept {
    return std::any_of(max.begin(), max.end(), [](const auto &b) { return b.has_value(); });
}

bool Caps::admits(const Monomial &m) const {
    for (Var v : kAllVars) {
        const auto bound = of(v);
        if (!bound)
            continue;
        if (m[v] < 0)
            throw Error(Errc::truncation_violation,
                        "negative exponent of truncated variable " + std::string(var_name(v)));
        if (m[v] > *bound)
            return false;
    }
    return true;
}

int Caps::capped_degree(const Monomial &m) const noexcept {
    int d = 0;
    for (Var v : kAllVars)
        if (of(v))
            d += m[v];
    return d;
}

int Caps::total_budget() const noexcept {
    int d = 0;
    for (const auto &b : max)
        if (b)
            d += *b;
    return d;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0)
        terms_.push_back({Monomial::one(), BigInt(c)});
}

LaurentPoly::LaurentPoly(const BigInt &c) {
    if (c != 0)
        terms_.push_back({Monomial::one(), c});
}

LaurentPoly LaurentPoly::monomial(const Monomial &m, const BigInt &c) {
    LaurentPoly p;
    if (c != 0)
        p.terms_.push_back({m, c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::unordered_map<Monomial, BigInt, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto &t : terms)
        acc[t.mono] += t.coeff;
    LaurentPoly p;
    p.terms_.reserve(acc.size());
    for (auto &[m, c] : acc)
        if (c != 0)
            p.terms_.push_back({m, std::move(c)});
    std::sort(p.terms_.begin(), p.terms_.end(), term_less);
    return p;
}

BigInt LaurentPoly::coefficient(const Monomial &m) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                     [](const Term &t, const Monomial &key) { return canonical_less(t.mono, key); });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return 0;
}

std::optional<int> LaurentPoly::min_exponent(Var v) const noexcept {
    std::optional<int> r;
    for (const auto &t : terms_)
        if (!r || t.mono[v] < *r)
            r = t.mono[v];
    return r;
}

std::optional<int> LaurentPoly::max_exponent(Var v) const noexcept {
    std::optional<int> r;
    for (const auto &t : terms_)
        if (!r || t.mono[v] > *r)
            r = t.mono[v];
    return r;
}

bool LaurentPoly::is_univariate_in(Var v) const noexcept {
    for (const auto &t : terms_)
        for (Var w : kAllVars)
            if (w != v && t.mono[w] != 0)
                return false;
    return true;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    if (o.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && canonical_less(a->mono, b->mono))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || canonical_less(b->mono, a->mono)) {
            merged.push_back(*b++);
        } else {
            BigInt c = a->coeff + b->coeff;
            if (c != 0)
                merged.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) { return *this += -o; }

LaurentPoly operator-(LaurentPoly a) {
    for (auto &t : a.terms_)
        t.coeff = -t.coeff;
    return a;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) { return multiply_truncated(a, b, Caps::none()); }

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = 1;
    LaurentPoly b = *this;
    while (k != 0) {
        if (k & 1U)
            r *= b;
        k >>= 1U;
        if (k != 0)
            b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial &m, const BigInt &c) const {
    if (c == 0)
        return {};
    LaurentPoly r = *this;
    for (auto &t : r.terms_) {
        t.mono *= m;
        t.coeff *= c;
    }
    // Shifting by a monomial can reorder degrees, so resort.
    std::sort(r.terms_.begin(), r.terms_.end(), term_less);
    return r;
}

LaurentPoly LaurentPoly::truncated(const Caps &caps) const {
    LaurentPoly r;
    for (const auto &t : terms_)
        if (caps.admits(t.mono))
            r.terms_.push_back(t);
    return r;
}

LaurentPoly LaurentPoly::substitute(std::initializer_list<std::pair<Var, Term>> images) const {
    return substitute(std::span<const std::pair<Var, Term>>(images.begin(), images.size()));
}

LaurentPoly LaurentPoly::substitute(std::span<const std::pair<Var, Term>> images) const {
    std::array<const Term *, kVarCount> image{};
    for (const auto &[v, t] : images)
        image[idx(v)] = &t;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        Monomial m;
        BigInt c = t.coeff;
        for (Var v : kAllVars) {
            const int e = t.mono[v];
            const Term *img = image[idx(v)];
            if (img == nullptr) {
                m[v] += e;
                continue;
            }
            if (e == 0)
                continue;
            if (e < 0) {
                if (img->coeff == 0)
                    throw Error(Errc::not_invertible, "negative power of " + std::string(var_name(v)) + " sent to 0");
                if (img->coeff != 1 && img->coeff != -1)
                    throw Error(Errc::inexact_division, "negative power of " + std::string(var_name(v)) +
                                                            " sent to a non-unit coefficient");
            }
            c *= ipow(img->coeff, static_cast<unsigned>(std::abs(e)));
            m *= img->mono.pow(e);
        }
        if (c != 0)
            out.push_back({m, std::move(c)});
    }
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::specialize(Var v, long long value) const {
    return substitute({{v, Term{Monomial::one(), BigInt(value)}}});
}

LaurentPoly LaurentPoly::deflate(Var v, int factor) const {
    if (factor <= 0)
        throw Error(Errc::half_integer_exponent, "deflation factor must be positive");
    std::vector<Term> out = terms_;
    for (auto &t : out) {
        if (t.mono[v] % factor != 0)
            throw Error(Errc::half_integer_exponent, std::string(var_name(v)) + "^" + std::to_string(t.mono[v]) +
                                                         " is not a power of " + std::string(var_name(v)) + "^" +
                                                         std::to_string(factor));
        t.mono[v] /= factor;
    }
    return from_terms(std::move(out));
}

BigInt LaurentPoly::evaluate(const std::array<long long, kVarCount> &point) const {
    BigInt sum = 0;
    for (const auto &t : terms_) {
        BigInt term = t.coeff;
        for (Var v : kAllVars) {
            const int e = t.mono[v];
            if (e == 0)
                continue;
            const long long x = point[idx(v)];
            if (e < 0 && x == 0)
                throw Error(Errc::not_invertible, "negative power of " + std::string(var_name(v)) + " at 0");
            if (e < 0 && x != 1 && x != -1)
                throw Error(Errc::inexact_division, "negative power of " + std::string(var_name(v)) + " at " +
                                                        std::to_string(x));
            term *= ipow(BigInt(x), static_cast<unsigned>(std::abs(e)));
        }
        sum += term;
    }
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &t : terms_) {
        const bool negative = t.coeff < 0;
        const BigInt mag = negative ? BigInt(-t.coeff) : t.coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.mono.is_one()) {
            out += mag.str();
        } else {
            if (mag != 1)
                out += mag.str() + "*";
            out += format_monomial(t.mono);
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    LaurentPoly parse() {
        std::vector<LaurentPoly::Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip_ws();
        }
        while (true) {
            auto t = term();
            if (negative)
                t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip_ws();
            if (at_end())
                break;
            const char op = get();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            negative = op == '-';
            skip_ws();
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

private:
    LaurentPoly::Term term() {
        LaurentPoly::Term t{Monomial::one(), 1};
        while (true) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.coeff *= integer();
            } else {
                const Var v = variable();
                int e = 1;
                skip_ws();
                if (peek() == '^') {
                    get();
                    skip_ws();
                    bool neg = false;
                    if (peek() == '-') {
                        neg = true;
                        get();
                    }
                    const BigInt mag = integer();
                    if (mag > 1000000)
                        fail("exponent too large");
                    e = (neg ? -1 : 1) * mag.convert_to<int>();
                }
                t.mono[v] += e;
            }
            skip_ws();
            if (peek() != '*')
                return t;
            get();
        }
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    Var variable() {
        for (Var v : kAllVars) {
            const auto name = var_name(v);
            if (s_.substr(pos_, name.size()) == name) {
                pos_ += name.size();
                return v;
            }
        }
        fail("expected a variable or integer");
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw Error(Errc::parse_error, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------

LaurentPoly multiply_truncated(const LaurentPoly &a, const LaurentPoly &b, const Caps &caps) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::unordered_map<Monomial, BigInt, MonomialHash> acc;
    acc.reserve(a.term_count() * b.term_count());
    const bool capped = caps.any();
    for (const auto &x : a.terms())
        for (const auto &y : b.terms()) {
            const Monomial m = x.mono * y.mono;
            if (capped && !caps.admits(m))
                continue;
            acc[m] += x.coeff * y.coeff;
        }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto &[m, c] : acc)
        terms.push_back({m, std::move(c)});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly inverse_truncated(const LaurentPoly &f, const Caps &caps) {
    const LaurentPoly g = f.truncated(caps);
    const BigInt c0 = g.constant_term();
    if (c0 != 1 && c0 != -1)
        throw Error(Errc::not_invertible, "constant term " + c0.str() + " is not a unit");
    // f = c0 (1 - X) with every term of X of positive capped degree.
    LaurentPoly x = LaurentPoly(c0) - g;
    if (c0 == -1)
        x = -x;
    for (const auto &t : x.terms())
        if (caps.capped_degree(t.mono) <= 0)
            throw Error(Errc::not_invertible, "term " + format_monomial(t.mono) + " has no positive degree in the "
                                              "truncated variables");
    LaurentPoly inv = 1;
    for (int k = 0; k < caps.total_budget(); ++k)
        inv = LaurentPoly(1) + multiply_truncated(x, inv, caps);
    return c0 == 1 ? inv : -inv;
}

LaurentPoly divide_exact(const LaurentPoly &num, const LaurentPoly &den, Var v) {
    if (den.is_zero())
        throw Error(Errc::inexact_division, "division by zero");
    if (!den.is_univariate_in(v) || *den.min_exponent(v) < 0)
        throw Error(Errc::inexact_division, "divisor must be a polynomial in " + std::string(var_name(v)) + " alone");
    if (num.is_zero())
        return {};
    const int top = *den.max_exponent(v);
    const int bottom = *den.min_exponent(v);
    const BigInt lead = den.coefficient(Monomial::of(v, top));
    if (lead != 1 && lead != -1)
        throw Error(Errc::inexact_division, "divisor leading coefficient " + lead.str() + " is not a unit");
    const int floor_exp = *num.min_exponent(v) - bottom;

    LaurentPoly rem = num;
    std::vector<LaurentPoly::Term> quotient;
    while (!rem.is_zero()) {
        const int m = *rem.max_exponent(v);
        if (m - top < floor_exp)
            throw Error(Errc::inexact_division, "nonzero remainder " + rem.to_string());
        std::vector<LaurentPoly::Term> step;
        for (const auto &t : rem.terms())
            if (t.mono[v] == m) {
                Monomial qm = t.mono;
                qm[v] -= top;
                step.push_back({qm, t.coeff * lead});
            }
        const LaurentPoly s = LaurentPoly::from_terms(step);
        rem -= s * den;
        quotient.insert(quotient.end(), step.begin(), step.end());
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

std::optional<TermDifference> first_difference(const LaurentPoly &expected, const LaurentPoly &actual) {
    const LaurentPoly diff = actual - expected;
    if (diff.is_zero())
        return std::nullopt;
    const Monomial &m = diff.terms().front().mono;
    return TermDifference{m, expected.coefficient(m), actual.coefficient(m)};
}

} // namespace bperm
