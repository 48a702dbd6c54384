// Command-line frontend: characters, classification, the boundedness gate,
// weight enumerations and the verification suites, with JSON/CSV output.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kchar/emit.hpp"
#include "kchar/gate.hpp"
#include "kchar/sl2sl2.hpp"
#include "kchar/sl3_principal.hpp"
#include "kchar/sl3_root.hpp"
#include "kchar/sp4_principal.hpp"
#include "kchar/sp4_root.hpp"
#include "kchar/verify.hpp"

using namespace kchar;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rat_or_fail(const std::string& s, const std::string& flag) {
    auto r = parse_rational(s);
    if (!r) throw UsageError("cannot parse " + flag + "='" + s + "' as a rational");
    return *r;
}

long long doubled_half_integer(const Rational& r, const std::string& flag) {
    Rational twice = r * 2;
    if (!is_integer(twice) || is_integer(r))
        throw UsageError(flag + "=" + to_string(r) + " must be a half-odd integer (p/2)");
    return to_long(twice);
}

std::pair<Family, int> parse_algebra(const std::string& name) {
    auto numeric_suffix = [&](size_t at) {
        int n = 0;
        try {
            n = std::stoi(name.substr(at));
        } catch (const std::exception&) {
            throw UsageError("cannot parse algebra name '" + name + "'");
        }
        return n;
    };
    if (name == "g2") return {Family::G2, 2};
    if (name == "f4") return {Family::F4, 4};
    if (name == "e6") return {Family::E6, 6};
    if (name == "e7") return {Family::E7, 7};
    if (name == "e8") return {Family::E8, 8};
    if (name.rfind("sl", 0) == 0) {
        int n = numeric_suffix(2);
        if (n < 2) throw UsageError("sl(n) needs n >= 2");
        return {Family::A, n - 1};
    }
    if (name.rfind("sp", 0) == 0) {
        int n = numeric_suffix(2);
        if (n < 2 || n % 2) throw UsageError("sp(n) needs even n >= 2");
        if (n == 2) return {Family::A, 1};
        return {Family::C, n / 2};
    }
    if (name.rfind("so", 0) == 0) {
        int n = numeric_suffix(2);
        if (n == 3) return {Family::A, 1};
        if (n == 5) return {Family::B, 2};
        if (n == 6) return {Family::D, 3};
        if (n >= 7 && n % 2 == 1) return {Family::B, n / 2};
        if (n >= 8 && n % 2 == 0) return {Family::D, n / 2};
        throw UsageError("so(n) needs n = 3 or n >= 5 (so(4) is not simple)");
    }
    throw UsageError("unknown algebra '" + name + "'");
}

std::vector<std::pair<Family, int>> parse_algebra_list(const std::string& csv) {
    std::vector<std::pair<Family, int>> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty()) out.push_back(parse_algebra(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw UsageError("empty algebra list");
    return out;
}

SubalgebraDescriptor parse_subalgebra(const std::string& desc) {
    SubalgebraDescriptor k;
    k.embedding_tag = desc;
    size_t pos = 0;
    while (pos <= desc.size()) {
        size_t plus = desc.find('+', pos);
        std::string tok = desc.substr(pos, plus == std::string::npos ? plus : plus - pos);
        if (tok.empty()) throw UsageError("bad subalgebra descriptor '" + desc + "'");
        if (tok == "gl2") {
            k.summands.push_back({Family::A, 1});
            k.central_dim += 1;
        } else if (tok[0] == 't') {
            try {
                k.central_dim += std::stoi(tok.substr(1));
            } catch (const std::exception&) {
                throw UsageError("bad torus token '" + tok + "'");
            }
        } else {
            k.summands.push_back(parse_algebra(tok));
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return k;
}

std::string weight_str(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (w[i] != 1) s += to_string(w[i]) + "*";
        s += "w" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

void print_character(const json& module_desc, const RationalChar& closed, long long order,
                     const std::string& format) {
    json payload = emit::character_payload(module_desc, closed, order);
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << emit::character_csv(closed.expand(order));
    } else {
        std::cout << emit::character_text(payload);
    }
}

// ---- char -----------------------------------------------------------------

struct CharArgs {
    std::string case_name;
    std::string a, b, u, family = "I+", sign = "+";
    long long n = 0;
    int s = 0;
    bool dual = false;
    long long order = 128;
    std::string format = "json";
};

int run_char(const CharArgs& args) {
    json module;
    RationalChar closed;
    if (args.case_name == "sl2sl2") {
        if (args.n < 0) throw UsageError("--n must be >= 0");
        module["case"] = "sl2sl2";
        module["n"] = args.n;
        if (!args.a.empty()) {
            Rational a = parse_rat_or_fail(args.a, "--a");
            if (!sl2sl2::is_valid({a, args.n}))
                throw UsageError("invalid central character: need a outside Z_{<0}, and "
                                 "a <= n for integral a");
            module["a"] = to_string(a);
        }
        closed = sl2sl2::character(args.n);
    } else if (args.case_name == "sl3-root") {
        if (args.sign != "+" && args.sign != "-") throw UsageError("--sign must be + or -");
        sl3_root::Params p{args.sign == "+" ? +1 : -1, 0, parse_rat_or_fail(args.b, "--b")};
        if (!args.a.empty()) {
            Rational a = parse_rat_or_fail(args.a, "--a");
            if (!is_integer(a) || a < 0) throw UsageError("--a must be an integer >= 0");
            p.a = to_long(a);
        }
        if (!sl3_root::is_valid(p))
            throw UsageError("finite-dimensional parameters: need b (resp. -a-b) outside Z_{>=0}");
        module = {{"case", "sl3-root"}, {"sign", args.sign}, {"a", p.a}, {"b", to_string(p.b)}};
        closed = sl3_root::character(p);
    } else if (args.case_name == "sl3-principal") {
        sl3_principal::Fam fam;
        if (args.family == "I+") fam = sl3_principal::Fam::IPlus;
        else if (args.family == "I-") fam = sl3_principal::Fam::IMinus;
        else if (args.family == "J") fam = sl3_principal::Fam::J;
        else if (args.family == "I+tau") fam = sl3_principal::Fam::IPlusTau;
        else if (args.family == "I-tau") fam = sl3_principal::Fam::IMinusTau;
        else throw UsageError("--family must be one of I+, I-, J, I+tau, I-tau");
        sl3_principal::Id id{fam, parse_rat_or_fail(args.u, "--u"), args.n};
        if (!sl3_principal::is_valid(id))
            throw UsageError("invalid id: u must avoid {-1,0,...,n-1}; J needs u in 1/2+Z; "
                             "tau families need u = -2");
        module = {{"case", "sl3-principal"},
                  {"family", args.family},
                  {"u", to_string(id.u)},
                  {"n", id.n}};
        closed = sl3_principal::character(id);
    } else if (args.case_name == "sp4-root") {
        sp4_root::Params p;
        p.a2 = doubled_half_integer(parse_rat_or_fail(args.a, "--a"), "--a");
        p.b2 = doubled_half_integer(parse_rat_or_fail(args.b, "--b"), "--b");
        p.dual = args.dual;
        if (!sp4_root::is_valid(p)) throw UsageError("need a > |b| with a, b in 1/2 + Z");
        module = {{"case", "sp4-root"},
                  {"a", to_string(from_doubled(p.a2))},
                  {"b", to_string(from_doubled(p.b2))},
                  {"dual", p.dual}};
        closed = sp4_root::character(p);
    } else if (args.case_name == "sp4-principal") {
        sp4_principal::Id id;
        id.a2 = doubled_half_integer(parse_rat_or_fail(args.a, "--a"), "--a");
        id.b2 = doubled_half_integer(parse_rat_or_fail(args.b, "--b"), "--b");
        id.s = args.s;
        if (!sp4_principal::is_valid(id))
            throw UsageError("need a > |b| with a, b in 1/2 + Z and s in {0,1}");
        module = {{"case", "sp4-principal"},
                  {"a", to_string(from_doubled(id.a2))},
                  {"b", to_string(from_doubled(id.b2))},
                  {"s", id.s}};
        closed = pi_project(sp4_principal::psi_closed(id));
    } else {
        throw UsageError("--case must be one of sl2sl2, sl3-root, sl3-principal, sp4-root, "
                         "sp4-principal");
    }
    print_character(module, closed, args.order, args.format);
    return kExitOk;
}

// ---- classify ---------------------------------------------------------------

int run_classify(const std::string& case_name, const std::string& a_str,
                 const std::string& b_str, const std::string& u_str, long long n,
                 const std::string& format) {
    json out = json::array();
    if (case_name == "sl2sl2") {
        Rational a = parse_rat_or_fail(a_str, "--a");
        if (!sl2sl2::is_valid({a, n}))
            throw UsageError("no infinite-dimensional module: need a outside Z_{<0} and "
                             "a - n <= 0 for integral a");
        out.push_back({{"case", "sl2sl2"},
                       {"module", "W"},
                       {"a", to_string(a)},
                       {"a-n", to_string(a - n)},
                       {"n", n}});
    } else if (case_name == "sl3-principal") {
        Rational u = parse_rat_or_fail(u_str, "--u");
        std::vector<sl3_principal::Id> ids;
        try {
            ids = sl3_principal::classify_chi(u, n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        for (const auto& id : ids)
            out.push_back({{"case", "sl3-principal"},
                           {"family", sl3_principal::fam_name(id.fam)},
                           {"u", to_string(id.u)},
                           {"n", id.n},
                           {"valid", sl3_principal::is_valid(id)}});
    } else if (case_name == "sp4-root") {
        long long a2 = doubled_half_integer(parse_rat_or_fail(a_str, "--a"), "--a");
        long long b2 = doubled_half_integer(parse_rat_or_fail(b_str, "--b"), "--b");
        if (!sp4_root::is_valid({a2, b2}))
            throw UsageError("central character admits no bounded module: need a > |b|, "
                             "a, b in 1/2 + Z");
        out.push_back({{"case", "sp4-root"},
                       {"module", "L"},
                       {"a", to_string(from_doubled(a2))},
                       {"b", to_string(from_doubled(b2))}});
        out.push_back({{"case", "sp4-root"},
                       {"module", "L'"},
                       {"a", to_string(from_doubled(-a2))},
                       {"b", to_string(from_doubled(-b2))}});
    } else if (case_name == "sp4-principal") {
        long long a2 = doubled_half_integer(parse_rat_or_fail(a_str, "--a"), "--a");
        long long b2 = doubled_half_integer(parse_rat_or_fail(b_str, "--b"), "--b");
        if (!sp4_principal::is_valid({a2, b2, 0}))
            throw UsageError("central character admits no bounded module: need a > |b|, "
                             "a, b in 1/2 + Z");
        for (long long bb : {std::llabs(b2), -std::llabs(b2)})
            for (int s = 0; s <= 1; ++s)
                out.push_back({{"case", "sp4-principal"},
                               {"a", to_string(from_doubled(a2))},
                               {"b", to_string(from_doubled(bb))},
                               {"s", s}});
    } else {
        throw UsageError("--case must be one of sl2sl2, sl3-principal, sp4-root, sp4-principal");
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& m : out) std::cout << m.dump() << "\n";
    }
    return kExitOk;
}

// ---- gate / enumerate / mfree / verify ---------------------------------------

int run_gate(const std::string& g_csv, const std::string& k_desc, bool strict,
             const std::string& rank2_algebra, const std::string& format) {
    if (!rank2_algebra.empty()) {
        auto verdict = rank2_is_bounded(rank2_algebra, k_desc);
        if (!verdict) throw UsageError("unknown rank-2 algebra '" + rank2_algebra + "'");
        if (format == "json")
            std::cout << json{{"algebra", rank2_algebra},
                              {"subalgebra", k_desc},
                              {"bounded", *verdict}}
                             .dump(2)
                      << "\n";
        else
            std::cout << (*verdict ? "bounded" : "not bounded") << "\n";
        return kExitOk;
    }
    if (g_csv.empty()) throw UsageError("need --g (or --rank2)");
    auto g = parse_algebra_list(g_csv);
    auto k = parse_subalgebra(k_desc);
    bool ok = necessary_condition(g, k, strict);
    long long rg;
    if (strict) {
        rg = 0;
        for (const auto& [f, r] : g) rg += r_g(f, r);
    } else {
        rg = r_g(g.front().first, g.front().second);
        for (const auto& [f, r] : g) rg = std::min(rg, r_g(f, r));
    }
    if (format == "json") {
        std::cout << json{{"g", g_csv},
                          {"k", k_desc},
                          {"strict", strict},
                          {"r_g", rg},
                          {"b_k", to_string(k.borel_dim())},
                          {"pass", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << (ok ? "PASS" : "FAIL") << " (" << rg << (ok ? " <= " : " > ")
                  << to_string(k.borel_dim()) << ")\n";
    }
    return kExitOk;
}

int run_enumerate(const std::string& algebra, const std::string& bound_str, bool thA, bool le52,
                  const std::string& format) {
    auto [fam, rank] = parse_algebra(algebra);
    auto d = RootDatum::build(fam, rank);
    std::vector<Weight> weights;
    if (thA) {
        weights = thA_candidates(d);
        if (le52) weights = le52_filter(d, weights);
    } else {
        if (bound_str.empty()) throw UsageError("need --dim-at-most or --thA");
        Rational c = parse_rat_or_fail(bound_str, "--dim-at-most");
        if (!is_integer(c) || c < 1) throw UsageError("--dim-at-most must be a positive integer");
        weights = d.enumerate_dominant_dim_at_most(numerator(c));
    }
    json out = json::array();
    for (const auto& w : weights) {
        json coords = json::array();
        for (const auto& c : w) coords.push_back(to_string(c));
        out.push_back(
            {{"weight", weight_str(w)}, {"coords", coords}, {"dim", d.weyl_dim(w).str()}});
    }
    if (format == "json")
        std::cout << out.dump(2) << "\n";
    else
        for (const auto& row : out)
            std::cout << row.at("weight").get<std::string>() << " dim "
                      << row.at("dim").get<std::string>() << "\n";
    return kExitOk;
}

int run_mfree(const std::string& case_name, const std::string& max_a, const std::string& format) {
    if (case_name != "sp4-principal")
        throw UsageError("mfree scan is implemented for --case sp4-principal");
    Rational bound = parse_rat_or_fail(max_a, "--max-a");
    long long a2max = to_long(bound * 2);
    auto ids = sp4_principal::multiplicity_free_scan(a2max);
    json out = json::array();
    for (const auto& id : ids)
        out.push_back({{"a", to_string(from_doubled(id.a2))},
                       {"b", to_string(from_doubled(id.b2))},
                       {"s", id.s}});
    if (format == "json")
        std::cout << out.dump(2) << "\n";
    else
        for (const auto& row : out)
            std::cout << "M^" << row.at("s").get<int>() << "_{" << row.at("a").get<std::string>()
                      << "," << row.at("b").get<std::string>() << "}\n";
    return kExitOk;
}

int run_verify(const std::string& suite, bool list, const std::string& format) {
    if (list) {
        for (const auto& name : verify::suite_names()) std::cout << name << "\n";
        return kExitOk;
    }
    std::vector<verify::SuiteReport> reports;
    if (suite.empty()) {
        reports = verify::run_all();
    } else {
        try {
            reports.push_back(verify::run_suite(suite));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    bool all_pass = true;
    json out = json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass();
        if (format == "json") {
            json failures = json::array();
            for (const auto& f : r.failures)
                failures.push_back(
                    {{"where", f.where}, {"expected", f.expected}, {"actual", f.actual}});
            out.push_back({{"suite", r.name},
                           {"checked", r.checked},
                           {"pass", r.pass()},
                           {"failures", failures}});
        } else {
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " (" << r.checked
                      << " checks)";
            if (!r.pass())
                std::cout << " first failure: " << r.failures.front().where << " expected "
                          << r.failures.front().expected << " got " << r.failures.front().actual;
            std::cout << "\n";
        }
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sl(2)-branching characters of bounded modules in rank 2"};
    app.require_subcommand(1);

    CharArgs char_args;
    auto* cmd_char = app.add_subcommand("char", "emit a character in closed and expanded form");
    cmd_char->add_option("--case", char_args.case_name)->required();
    cmd_char->add_option("--a", char_args.a);
    cmd_char->add_option("--b", char_args.b);
    cmd_char->add_option("--u", char_args.u);
    cmd_char->add_option("--n", char_args.n);
    cmd_char->add_option("--s", char_args.s);
    cmd_char->add_option("--sign", char_args.sign);
    cmd_char->add_option("--family", char_args.family);
    cmd_char->add_flag("--dual", char_args.dual);
    cmd_char->add_option("--order", char_args.order);
    cmd_char->add_option("--format", char_args.format);

    std::string cl_case, cl_a, cl_b, cl_u, cl_format = "json";
    long long cl_n = 0;
    auto* cmd_classify = app.add_subcommand("classify", "modules attached to a central character");
    cmd_classify->add_option("--case", cl_case)->required();
    cmd_classify->add_option("--a", cl_a);
    cmd_classify->add_option("--b", cl_b);
    cmd_classify->add_option("--u", cl_u);
    cmd_classify->add_option("--n", cl_n);
    cmd_classify->add_option("--format", cl_format);

    std::string gate_g, gate_k, gate_rank2, gate_format = "text";
    bool gate_strict = false;
    auto* cmd_gate = app.add_subcommand("gate", "boundedness necessary condition r_g <= b_k");
    cmd_gate->add_option("--g", gate_g);
    cmd_gate->add_option("--k", gate_k)->required();
    cmd_gate->add_flag("--strict", gate_strict);
    cmd_gate->add_option("--rank2", gate_rank2);
    cmd_gate->add_option("--format", gate_format);

    std::string en_algebra, en_bound, en_format = "json";
    bool en_thA = false, en_le52 = false;
    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "dominant weights under a dimension bound");
    cmd_enumerate->add_option("--algebra", en_algebra)->required();
    cmd_enumerate->add_option("--dim-at-most", en_bound);
    cmd_enumerate->add_flag("--thA", en_thA);
    cmd_enumerate->add_flag("--le52", en_le52);
    cmd_enumerate->add_option("--format", en_format);

    std::string mf_case, mf_max_a, mf_format = "json";
    auto* cmd_mfree = app.add_subcommand("mfree", "multiplicity-free census");
    cmd_mfree->add_option("--case", mf_case)->required();
    cmd_mfree->add_option("--max-a", mf_max_a)->required();
    cmd_mfree->add_option("--format", mf_format);

    std::string vf_suite, vf_format = "text";
    bool vf_list = false;
    auto* cmd_verify = app.add_subcommand("verify", "run the cross-check suites");
    cmd_verify->add_option("--suite", vf_suite);
    cmd_verify->add_flag("--list", vf_list);
    cmd_verify->add_option("--format", vf_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_char->parsed()) return run_char(char_args);
        if (cmd_classify->parsed()) return run_classify(cl_case, cl_a, cl_b, cl_u, cl_n, cl_format);
        if (cmd_gate->parsed()) return run_gate(gate_g, gate_k, gate_strict, gate_rank2, gate_format);
        if (cmd_enumerate->parsed())
            return run_enumerate(en_algebra, en_bound, en_thA, en_le52, en_format);
        if (cmd_mfree->parsed()) return run_mfree(mf_case, mf_max_a, mf_format);
        if (cmd_verify->parsed()) return run_verify(vf_suite, vf_list, vf_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
