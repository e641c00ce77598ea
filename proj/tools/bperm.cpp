// bperm - statistics, enumeration, bijections and identity checks for
// signed permutations.
//
// Exit status: 0 success (every report passes), 1 a report failed,
// 2 bad usage or input.

#include <bperm/bijections.hpp>
#include <bperm/families.hpp>
#include <bperm/identities.hpp>
#include <bperm/record.hpp>
#include <bperm/signed_permutation.hpp>
#include <bperm/weighted.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <map>
#include <string>

using namespace bperm;
using json = nlohmann::ordered_json;

namespace {

std::string set_text(const std::vector<int> &v) { return format_letters(v); }

std::string word_or_e(const std::vector<int> &v) { return v.empty() ? "e" : format_letters(v); }

int run_stats(const std::string &word, bool as_json) {
    const auto w = parse_signed_permutation(word);
    const auto p = stat_profile(w);
    const auto f = pixed_factorization(w);
    const std::vector<std::pair<std::string, json>> fields{
        {"word", format_letters(w.letters())},
        {"n", w.order()},
        {"neg", p.neg},
        {"Neg", set_text(p.neg_set)},
        {"fix+", p.fix_plus},
        {"Fix+", set_text(p.fix_plus_set)},
        {"fix-", p.fix_minus},
        {"Fix-", set_text(p.fix_minus_set)},
        {"inv", p.inv},
        {"length", p.length},
        {"des", p.des},
        {"maj", p.maj},
        {"fdes", p.fdes},
        {"fmaj", p.fmaj},
        {"pix+", p.pix_plus},
        {"Pix+", set_text(p.pix_plus_set)},
        {"pix-", p.pix_minus},
        {"Pix-", set_text(p.pix_minus_set)},
        {"pixed", word_or_e(f.w_minus) + " | " + word_or_e(f.w_plus) + " | " + word_or_e(f.w_d)},
    };
    if (as_json) {
        json j;
        for (const auto &[k, v] : fields)
            j[k] = v;
        j["pixed"] = {{"w-", format_letters(f.w_minus)}, {"w+", format_letters(f.w_plus)}, {"wd", format_letters(f.w_d)}};
        std::cout << j.dump() << '\n';
    } else {
        for (const auto &[k, v] : fields)
            std::cout << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    return 0;
}

int run_enumerate(const std::string &cls_tag, int n, bool count_only) {
    const SubsetClass cls = parse_subset_class(cls_tag);
    const bool plain = cls == SubsetClass::D || cls == SubsetClass::K;
    long long size = 1;
    for (int i = 1; i <= n; ++i)
        size *= plain ? i : 2LL * i;
    require_budget(size, "enumerating " + cls_tag + "_" + std::to_string(n));
    long long count = 0;
    for_each_in_class(n, cls, [&](const SignedPermutation &w) {
        ++count;
        if (!count_only)
            std::cout << format_letters(w.letters()) << '\n';
    });
    if (count_only)
        std::cout << count << '\n';
    return 0;
}

std::string profile_sets(const StatProfile &p, bool pix) {
    return pix ? "Pix-=" + set_text(p.pix_minus_set) + ";Pix+=" + set_text(p.pix_plus_set) + ";Neg=" + set_text(p.neg_set)
               : "Fix-=" + set_text(p.fix_minus_set) + ";Fix+=" + set_text(p.fix_plus_set) + ";Neg=" + set_text(p.neg_set);
}

int run_bijection(const std::string &name, const std::string &input) {
    if (name == "phi" || name == "phi-inv") {
        const auto w = parse_signed_permutation(input);
        const bool forward = name == "phi";
        const auto v = forward ? phi(w) : phi_inverse(w);
        std::cout << format_letters(v.letters()) << '\n';
        const auto &src = forward ? w : v;
        const auto &dst = forward ? v : w;
        std::cout << "source " << profile_sets(stat_profile(src), false) << '\n';
        std::cout << "image  " << profile_sets(stat_profile(dst), true) << '\n';
        return 0;
    }
    if (name == "desarmenien") {
        const auto tau = parse_letter_map(input);
        const auto v = desarmenien_f(tau);
        std::cout << format_letters(v) << '\n';
        std::cout << "desarrangement=" << (is_desarrangement(v) ? "yes" : "no") << '\n';
        return 0;
    }
    if (name == "macmahon") {
        const auto p = parse_wsp(input);
        const auto d = macmahon_to_word(p);
        std::cout << format_word(d) << '\n';
        std::cout << "tot c=" << p.c.tot() << ";tot d=" << d.tot() << '\n';
        std::cout << "neg w=" << stat_profile(p.w).neg << ";odd d=" << d.odd() << '\n';
        return 0;
    }
    if (name == "macmahon-inv") {
        const Record r = parse_record(input);
        const auto d = parse_word(record_field(r, "d"));
        int s = 0;
        if (const auto it = r.find("s"); it != r.end())
            s = std::stoi(it->second);
        else
            for (int x : d.letters)
                s = std::max(s, x);
        const auto p = macmahon_from_word(d, s);
        std::cout << format_wsp(p) << '\n';
        std::cout << "tot c=" << p.c.tot() << ";tot d=" << d.tot() << '\n';
        std::cout << "neg w=" << stat_profile(p.w).neg << ";odd d=" << d.odd() << '\n';
        return 0;
    }
    if (name == "wsp-decompose") {
        const auto p = parse_wsp(input);
        const auto d = wsp_decompose(p);
        std::cout << format_wsp(d.core) << ";v_e=" << format_word(d.v_e) << ";v_o=" << format_word(d.v_o) << '\n';
        const auto sp = stat_profile(p.w);
        const auto sc = stat_profile(d.core.w);
        std::cout << "tot c=" << p.c.tot() << ";tot c'+tot v_e+tot v_o=" << d.core.c.tot() + d.v_e.tot() + d.v_o.tot()
                  << '\n';
        std::cout << "neg w=" << sp.neg << ";neg w'+len v_o=" << sc.neg + d.v_o.lambda() << '\n';
        std::cout << "fix+ w=" << sp.fix_plus << ";len v_e=" << d.v_e.lambda() << '\n';
        std::cout << "fix- w=" << sp.fix_minus << ";len v_o=" << d.v_o.lambda() << '\n';
        return 0;
    }
    if (name == "wsp-recompose") {
        const Record r = parse_record(input);
        for (const auto &[key, value] : r)
            if (key != "c" && key != "w" && key != "v_e" && key != "v_o")
                throw Error(Errc::parse_error, "unknown field '" + key + "'");
        const auto field = [&](const char *key) {
            const auto it = r.find(key);
            return it == r.end() ? std::string() : it->second;
        };
        WspDecomposition d{validate_wsp(parse_letters(field("c")), parse_letters(field("w"))), parse_word(field("v_e")),
                           parse_word(field("v_o"))};
        std::cout << format_wsp(wsp_recompose(d)) << '\n';
        return 0;
    }
    if (name == "fdes-pair") {
        Record r = parse_record(input);
        int s = -1;
        if (const auto it = r.find("s"); it != r.end()) {
            s = std::stoi(it->second);
            r.erase(it);
        }
        const auto p = validate_wsp(parse_letters(record_field(r, "c")), parse_letters(record_field(r, "w")));
        if (r.size() != 2)
            throw Error(Errc::parse_error, "expected fields c, w and optional s");
        const auto pair = fdes_pairing(p, s < 0 ? p.max_weight() : s);
        const auto sp = stat_profile(p.w);
        std::cout << "b=" << format_word(pair.b) << ";w=" << format_letters(pair.w.letters()) << '\n';
        const int b1 = pair.b.letters.empty() ? 0 : pair.b.letters.front();
        std::cout << "2*b1+fdes=" << 2 * b1 + sp.fdes << ";c1=" << p.max_weight() << '\n';
        std::cout << "2*tot b+fmaj=" << 2 * pair.b.tot() + sp.fmaj << ";tot c=" << p.c.tot() << '\n';
        return 0;
    }
    throw Error(Errc::parse_error, "unknown bijection '" + name + "'");
}

int run_verify(const std::string &id, bool all, const VerifyParams &params) {
    std::vector<VerifyReport> reports;
    if (all)
        reports = verify_all(params);
    else
        reports.push_back(verify(id, params));
    bool ok = true;
    for (const auto &r : reports) {
        std::cout << to_json(r) << '\n';
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

struct FamilyRow {
    LaurentPoly poly;
    std::optional<LaurentPoly> at_z1;
};

FamilyRow family_row(const std::string &family, int n) {
    if (family == "DnB") {
        const auto p = enum_polynomial(n, Bundle::FLAG, SubsetClass::DB).specialize(Var::t, 1).specialize(Var::Y1, 1);
        return {p, p.specialize(Var::Z, 1)};
    }
    if (family == "Dn")
        return {enum_polynomial(n, Bundle::MAJ, SubsetClass::D), std::nullopt};
    if (family == "Kn")
        return {enum_polynomial(n, Bundle::INV, SubsetClass::K), std::nullopt};
    if (family == "An")
        return {enum_polynomial(n, Bundle::DES_MAJ_FIX).specialize(Var::t, 1), std::nullopt};
    if (family == "Bn")
        return {enum_polynomial(n, Bundle::FLAG), std::nullopt};
    throw Error(Errc::parse_error, "unknown family '" + family + "'");
}

json terms_json(const LaurentPoly &p) {
    json terms = json::array();
    for (const auto &t : p.terms())
        terms.push_back({{"exps", t.mono.exps}, {"coeff", t.coeff.str()}});
    return terms;
}

int run_table(const std::string &family, int n_max, const std::string &format) {
    std::vector<FamilyRow> rows;
    for (int n = 0; n <= n_max; ++n)
        rows.push_back(family_row(family, n));
    const bool z1 = family == "DnB";
    if (format == "csv") {
        std::cout << "n,polynomial" << (z1 ? ",at_Z_1" : "") << '\n';
        for (int n = 0; n <= n_max; ++n) {
            const auto &r = rows[static_cast<std::size_t>(n)];
            std::cout << n << ',' << r.poly.to_string();
            if (r.at_z1)
                std::cout << ',' << r.at_z1->to_string();
            std::cout << '\n';
        }
        return 0;
    }
    json j;
    j["family"] = family;
    j["vars"] = {"t", "q", "Y0", "Y1", "Z"};
    j["rows"] = json::array();
    for (int n = 0; n <= n_max; ++n) {
        const auto &r = rows[static_cast<std::size_t>(n)];
        json row{{"n", n}, {"polynomial", r.poly.to_string()}, {"terms", terms_json(r.poly)}};
        if (r.at_z1)
            row["at_Z_1"] = r.at_z1->to_string();
        j["rows"].push_back(row);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Signed permutation statistics and identity checks"};
    app.require_subcommand(1);

    std::string word;
    bool stats_json = false;
    auto *stats = app.add_subcommand("stats", "Print the statistics and pixed factorization of a signed permutation");
    stats->add_option("--word", word, "Comma-separated letters, e.g. 3,-2,1 (empty for e)")->required();
    stats->add_flag("--json", stats_json, "Emit one JSON object");

    std::string cls = "B";
    int n = 0;
    bool count_only = false;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "List a subset of B_n in lexicographic order");
    enumerate_cmd->add_option("--class", cls, "B, D, K, DB or KB")
        ->check(CLI::IsMember({"B", "D", "K", "DB", "KB"}));
    enumerate_cmd->add_option("--n", n, "Order")->required()->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_flag("--count", count_only, "Print only the number of elements");

    std::string bij_name, bij_input;
    auto *bijection = app.add_subcommand("bijection", "Apply one of the bijections");
    bijection->add_option("--name", bij_name, "Bijection")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "desarmenien", "macmahon", "macmahon-inv", "wsp-decompose",
                               "wsp-recompose", "fdes-pair"}));
    bijection->add_option("--input", bij_input, "Input record")->required();

    std::string identity;
    bool all = false;
    VerifyParams vp;
    auto *verify_cmd = app.add_subcommand("verify", "Check identities; one JSON report per line");
    auto *id_opt = verify_cmd->add_option("--identity", identity, "Identity tag");
    auto *all_opt = verify_cmd->add_flag("--all", all, "Run the whole registry");
    id_opt->excludes(all_opt);
    verify_cmd->add_option("--n-max", vp.n_max, "Largest order enumerated")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--u-order", vp.u_order, "Compare modulo u^k")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--t-order", vp.t_order, "Compare modulo t^k")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--q-order", vp.q_order, "Compare modulo q^k")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--s-max", vp.s_max, "Largest weight bound")->check(CLI::NonNegativeNumber);
    bool list = false;
    verify_cmd->add_flag("--list", list, "Print the registered identity tags");

    std::string family, format = "csv";
    int table_n = 0;
    auto *table = app.add_subcommand("table", "Emit a polynomial family, one row per n");
    table->add_option("--family", family, "DnB, Dn, Kn, An or Bn")
        ->required()
        ->check(CLI::IsMember({"DnB", "Dn", "Kn", "An", "Bn"}));
    table->add_option("--n-max", table_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*stats)
            return run_stats(word, stats_json);
        if (*enumerate_cmd)
            return run_enumerate(cls, n, count_only);
        if (*bijection)
            return run_bijection(bij_name, bij_input);
        if (*verify_cmd) {
            if (list) {
                for (const auto &info : identity_registry())
                    std::cout << info.id << '\t' << info.summary << '\n';
                return 0;
            }
            if (!all && identity.empty()) {
                std::cerr << "verify: give --identity ID or --all\n";
                return 2;
            }
            return run_verify(identity, all, vp);
        }
        if (*table)
            return run_table(family, table_n, format);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
