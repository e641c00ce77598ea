#include <bperm/identities.hpp>

#include "check_support.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>

namespace bperm {

std::string_view param_name(Param p) noexcept {
    switch (p) {
    case Param::n_max: return "n_max";
    case Param::u_order: return "u_order";
    case Param::t_order: return "t_order";
    case Param::q_order: return "q_order";
    case Param::s_max: return "s_max";
    }
    return "?";
}

namespace {

using detail::Checker;
using P = Param;

struct Entry {
    IdentityInfo info;
    Checker check;
};

const std::vector<Entry> &registry() {
    static const std::vector<Entry> entries{
        {{"1.2", "B_n(Y0,Y1,Z) from its exponential generating function equals fix/neg enumeration", {{P::n_max, 6}}},
         detail::check_1_2},
        {{"thm1.1", "(fix+, fix-, neg) and (pix+, pix-, neg) both give the four-index sum", {{P::n_max, 6}}},
         detail::check_thm1_1},
        {{"1.7", "factorial generating function of the length/pix polynomials",
          {{P::u_order, 5}, {P::q_order, 12}}},
         detail::check_1_7},
        {{"1.8", "factorial generating function of the fmaj/fix polynomials",
          {{P::u_order, 4}, {P::q_order, 12}}},
         detail::check_1_8},
        {{"1.9", "graded generating function of the fdes/fmaj/fix polynomials",
          {{P::u_order, 4}, {P::t_order, 8}, {P::q_order, 12}}},
         detail::check_1_9},
        {{"2.1", "derangement numbers: recurrence, alternating sum and enumeration", {{P::n_max, 9}}},
         detail::check_2_1},
        {{"2.2", "four-index multinomial sum equals fix/neg enumeration", {{P::n_max, 6}}}, detail::check_2_2},
        {{"2.4", "phi is a bijection sending (Fix-, Fix+, Neg) to (Pix-, Pix+, Neg)", {{P::n_max, 5}}},
         detail::check_2_4},
        {{"3.2", "inv over desarrangements equals maj over derangements", {{P::n_max, 6}}}, detail::check_3_2},
        {{"3.3", "factorial generating function of D_n(q)", {{P::u_order, 5}, {P::q_order, 12}}},
         detail::check_3_3},
        {{"3.5", "q-multinomial four-index sum equals length/pix enumeration", {{P::n_max, 6}}},
         detail::check_3_5},
        {{"4.1", "fixed-column decomposition of weighted signed permutations", {{P::n_max, 4}, {P::s_max, 4}}},
         detail::check_4_1},
        {{"5.1", "even nonincreasing words against 1/(u;q^2)", {{P::n_max, 6}, {P::s_max, 6}}},
         detail::check_5_1},
        {{"5.2", "odd decreasing words against (-uq;q^2)", {{P::n_max, 6}, {P::s_max, 6}}}, detail::check_5_2},
        {{"5.3", "fixed points of weighted signed permutations factor out of the generating function",
          {{P::n_max, 4}, {P::s_max, 4}}},
         detail::check_5_3},
        {{"5.6", "weighted signed permutations: generating function in u", {{P::n_max, 4}, {P::s_max, 5}}},
         detail::check_5_6},
        {{"5.7", "weighted signed permutations: (sum q^i Z^[i odd])^n", {{P::n_max, 4}, {P::s_max, 5}}},
         detail::check_5_7},
        {{"5.8", "t-expansion of the flag polynomial against weighted signed permutations",
          {{P::n_max, 4}, {P::s_max, 6}}},
         detail::check_5_8},
        {{"6.2-3", "negation swaps fix+ and fix-, complements neg and fmaj", {{P::n_max, 6}}},
         detail::check_6_2_3},
        {{"6.5", "B_n(q,Y0,Y1,Z) = q^(n^2) Z^n B_n(1/q,Y1,Y0,1/Z)", {{P::n_max, 5}}}, detail::check_6_5},
        {{"6.6", "factorial generating function of signed derangements", {{P::u_order, 5}, {P::q_order, 12}}},
         detail::check_6_6},
        {{"6.7", "q^2-binomial convolution of signed derangement polynomials", {{P::n_max, 5}}},
         detail::check_6_7},
        {{"6.8", "alternating closed form of signed derangement polynomials", {{P::n_max, 5}}},
         detail::check_6_8},
        {{"6.9", "first-order recurrence of signed derangement polynomials", {{P::n_max, 5}}},
         detail::check_6_9},
        {{"6.10", "second-order recurrence of signed derangement polynomials", {{P::n_max, 5}}},
         detail::check_6_10},
        {{"6.12", "generating function of signed desarrangements by length",
          {{P::u_order, 5}, {P::q_order, 12}}},
         detail::check_6_12},
        {{"6.14", "graded generating function of des/maj/fix on S_n",
          {{P::u_order, 5}, {P::t_order, 8}, {P::q_order, 12}}},
         detail::check_6_14},
        {{"6.15", "factorial generating function of maj/fix on S_n", {{P::u_order, 5}, {P::q_order, 12}}},
         detail::check_6_15},
        {{"6.16", "q-binomial convolution of D_n(q)", {{P::n_max, 6}}}, detail::check_6_16},
        {{"6.17", "e_q(u) times the generating function of D_n(q)", {{P::u_order, 5}, {P::q_order, 12}}},
         detail::check_6_17},
        {{"6.18", "positive closed form of D_n(q)", {{P::n_max, 8}}}, detail::check_6_18},
        {{"6.19", "positive closed form of d_n", {{P::n_max, 9}}}, detail::check_6_19},
        {{"6.22", "(maj, fix) and (inv, pix) are equidistributed on S_n", {{P::n_max, 6}}}, detail::check_6_22},
        {{"6.24", "(imaj, pix) and (maj, fix) are equidistributed on S_n", {{P::n_max, 6}}}, detail::check_6_24},
        {{"6.25", "K_n(q) = invA_n(q,0) = A_n(q,0) = D_n(q)", {{P::n_max, 6}}}, detail::check_6_25},
        {{"6.26", "inv and imaj are equidistributed on desarrangements", {{P::n_max, 6}}}, detail::check_6_26},
        {{"6.27", "derangements by descent set match desarrangements by inverse descent set", {{P::n_max, 6}}},
         detail::check_6_27},
    };
    return entries;
}

const Entry &entry(std::string_view id) {
    const auto &r = registry();
    const auto it = std::find_if(r.begin(), r.end(), [&](const Entry &e) { return e.info.id == id; });
    if (it == r.end())
        throw Error(Errc::unknown_identity, "no identity registered as '" + std::string(id) + "'");
    return *it;
}

std::optional<int> override_of(const VerifyParams &v, Param p) {
    switch (p) {
    case Param::n_max: return v.n_max;
    case Param::u_order: return v.u_order;
    case Param::t_order: return v.t_order;
    case Param::q_order: return v.q_order;
    case Param::s_max: return v.s_max;
    }
    return std::nullopt;
}

void assign(detail::CheckParams &c, Param p, int value) {
    switch (p) {
    case Param::n_max: c.n_max = value; break;
    case Param::u_order: c.u_order = value; break;
    case Param::t_order: c.t_order = value; break;
    case Param::q_order: c.q_order = value; break;
    case Param::s_max: c.s_max = value; break;
    }
}

} // namespace

std::span<const IdentityInfo> identity_registry() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto &e : registry())
            out.push_back(e.info);
        return out;
    }();
    return infos;
}

const IdentityInfo &identity_info(std::string_view id) { return entry(id).info; }

std::vector<std::string> identity_ids() {
    std::vector<std::string> out;
    for (const auto &e : registry())
        out.emplace_back(e.info.id);
    return out;
}

VerifyReport verify(std::string_view id, const VerifyParams &params) {
    const Entry &e = entry(id);
    VerifyReport report;
    report.identity = std::string(e.info.id);
    detail::CheckParams cp;
    for (const auto &[p, def] : e.info.defaults) {
        const int value = override_of(params, p).value_or(def);
        if (value < 0)
            throw Error(Errc::out_of_range, std::string(param_name(p)) + " must be nonnegative");
        assign(cp, p, value);
        report.params.emplace_back(p, value);
    }
    const auto start = std::chrono::steady_clock::now();
    report.witness = e.check(cp);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.pass = !report.witness.has_value();
    return report;
}

std::vector<VerifyReport> verify_all(const VerifyParams &params) {
    std::vector<std::future<VerifyReport>> jobs;
    for (const auto &e : registry())
        jobs.push_back(std::async(std::launch::async, [&params, id = e.info.id] {
            try {
                return verify(id, params);
            } catch (const Error &err) {
                VerifyReport r;
                r.identity = std::string(id);
                r.witness = Witness{"error", "", "", err.what()};
                return r;
            }
        }));
    std::vector<VerifyReport> out;
    for (auto &j : jobs)
        out.push_back(j.get());
    return out;
}

std::string to_json(const VerifyReport &report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto &[p, v] : report.params)
        params[std::string(param_name(p))] = v;
    j["params"] = params;
    j["status"] = report.pass ? "pass" : "fail";
    if (report.witness)
        j["witness"] = {{"location", report.witness->location},
                        {"monomial", report.witness->monomial},
                        {"expected", report.witness->expected},
                        {"actual", report.witness->actual}};
    j["elapsed_ms"] = std::round(report.elapsed_ms * 1000) / 1000;
    return j.dump();
}

} // namespace bperm
