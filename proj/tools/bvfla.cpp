// Command-line surface: law checks, BVF classification, theorem
// verification, enumeration, counterexample search, and fixture generation.
//
// Exit codes: 0 success (laws: left invertive; verify: all applicable hold),
// 1 the checked property fails, 2 I/O / parse / usage error, 3 enumeration
// budget exhausted, 4 search found no hit.

#include "bvfla/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace bvfla;

int threads_from_env() {
    const char* v = std::getenv("BVFLA_THREADS");
    if (!v || !*v) return 1;
    char* end = nullptr;
    long t = std::strtol(v, &end, 10);
    if (*end != '\0' || t < 1 || t > 256)
        throw std::invalid_argument("BVFLA_THREADS must be an integer in [1, 256]");
    return static_cast<int>(t);
}

std::string degree_text(const Rational& r, bool decimal) {
    if (!decimal) return r.str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", r.approx());
    return std::string("~") + buf;  // '~' marks the value as approximate
}

std::string tuple_text(const Magma& m, const std::vector<int>& elements) {
    std::string s = "(";
    for (size_t i = 0; i < elements.size(); ++i) {
        if (i) s += ",";
        s += m.name(elements[i]);
    }
    return s + ")";
}

nlohmann::json law_witness_json(const Magma& m, const LawReport& lr) {
    if (lr.holds) return nullptr;
    nlohmann::json names = nlohmann::json::array();
    for (int e : lr.witness) names.push_back(m.name(e));
    return nlohmann::json{{"tuple", lr.witness}, {"tuple_names", names},
                          {"lhs", lr.lhs},       {"lhs_name", m.name(lr.lhs)},
                          {"rhs", lr.rhs},       {"rhs_name", m.name(lr.rhs)}};
}

std::string degree_witness_text(const Magma& m, const DegreeWitness& w, bool decimal) {
    std::string s = "at " + tuple_text(m, w.elements) + " -> " + m.name(w.product) + ":";
    if (w.pos_violated())
        s += " pos " + degree_text(w.pos_have, decimal) + " < " + degree_text(w.pos_need, decimal);
    if (w.neg_violated()) {
        if (w.pos_violated()) s += ";";
        s += " neg " + degree_text(w.neg_have, decimal) + " > " + degree_text(w.neg_need, decimal);
    }
    return s;
}

int cmd_laws(const std::string& table_path, bool json_out, bool decimal) {
    (void)decimal;
    Magma m = Magma::parse_file(table_path);
    const Law basic[] = {Law::left_invertive, Law::medial, Law::paramedial, Law::associative,
                         Law::commutative};
    std::vector<LawReport> reports;
    for (Law law : basic) reports.push_back(check_law(m, law));
    const bool li = reports.front().holds;
    const auto e = find_left_identity(m);
    std::optional<LawReport> l1;
    if (li && e) l1 = check_lemma_l1(m);
    const char* l1_na = "requires left invertivity and a left identity";

    if (json_out) {
        nlohmann::json laws = nlohmann::json::array();
        for (const auto& lr : reports)
            laws.push_back(nlohmann::json{{"law", std::string(law_name(lr.law))},
                                          {"holds", lr.holds},
                                          {"witness", law_witness_json(m, lr)}});
        if (l1)
            laws.push_back(nlohmann::json{{"law", "lemma_l1"},
                                          {"holds", l1->holds},
                                          {"witness", law_witness_json(m, *l1)}});
        else
            laws.push_back(nlohmann::json{
                {"law", "lemma_l1"}, {"holds", nullptr}, {"witness", nullptr}, {"note", l1_na}});
        nlohmann::json out{{"order", m.order()},
                           {"magma_hash", m.hash()},
                           {"left_invertive", li},
                           {"laws", laws},
                           {"left_identity",
                            e ? nlohmann::json{{"index", *e}, {"name", m.name(*e)}}
                              : nlohmann::json(nullptr)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "order " << m.order() << "  hash " << m.hash() << "\n";
        auto line = [&](std::string_view name, const LawReport& lr) {
            std::cout << name << std::string(name.size() < 15 ? 15 - name.size() : 1, ' ');
            if (lr.holds) {
                std::cout << "holds\n";
            } else {
                std::cout << "fails  at " << tuple_text(m, lr.witness) << ": lhs "
                          << m.name(lr.lhs) << ", rhs " << m.name(lr.rhs) << "\n";
            }
        };
        for (const auto& lr : reports) line(law_name(lr.law), lr);
        if (l1)
            line("lemma_l1", *l1);
        else
            std::cout << "lemma_l1       n/a    " << l1_na << "\n";
        std::cout << "left identity: " << (e ? m.name(*e) : std::string("none")) << "\n";
    }
    return li ? 0 : 1;
}

int cmd_classify(const std::string& table_path, const std::string& bvf_path, bool gamma,
                 bool json_out, bool decimal) {
    Magma m = Magma::parse_file(table_path);
    BvfSubset b = gamma ? BvfSubset::gamma(m.order()) : BvfSubset::load_file(bvf_path);
    if (b.order() != m.order())
        throw std::invalid_argument("subset order " + std::to_string(b.order()) +
                                    " does not match table order " + std::to_string(m.order()));
    Classification c = classify(m, b);

    if (json_out) {
        nlohmann::json out{{"order", m.order()},
                           {"magma_hash", m.hash()},
                           {"subset", b.to_json()},
                           {"classification", classification_to_json(c, m)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "order " << m.order() << "  hash " << m.hash() << "\n";
        if (decimal) std::cout << "degrees prefixed '~' are approximate decimals\n";
        for (IdealClass cls : kAllIdealClasses) {
            std::string_view name = ideal_class_name(cls);
            const Verdict& v = c.get(cls);
            std::cout << name << std::string(name.size() < 16 ? 16 - name.size() : 1, ' ');
            if (v.holds)
                std::cout << "holds\n";
            else
                std::cout << "fails  " << degree_witness_text(m, *v.witness, decimal) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& table_path, const std::vector<std::string>& bvf_paths,
               std::uint64_t seed, int samples, int quantization, bool json_out) {
    Magma m = Magma::parse_file(table_path);
    std::vector<BvfSubset> fixtures;
    for (const auto& p : bvf_paths) {
        fixtures.push_back(BvfSubset::load_file(p));
        if (fixtures.back().order() != m.order())
            throw std::invalid_argument(p + ": subset order does not match table order");
    }
    SuiteOptions opt;
    opt.seed = seed;
    opt.samples = samples;
    opt.quantization = quantization;
    auto reports = run_all(m, fixtures, opt);
    bool ok = all_applicable_hold(reports);

    if (json_out) {
        nlohmann::json out{{"order", m.order()},
                           {"magma_hash", m.hash()},
                           {"all_applicable_hold", ok},
                           {"reports", reports_to_json(reports)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "order " << m.order() << "  hash " << m.hash() << "  family "
                  << fixtures.size() + static_cast<size_t>(samples) << " subsets\n";
        std::cout << reports_to_text(reports);
        std::cout << (ok ? "all applicable theorems hold\n" : "FAILURES present\n");
    }
    return ok ? 0 : 1;
}

int cmd_enumerate(int order, bool iso, bool left_identity, long long budget,
                  const std::string& out_path) {
    EnumerationTask task;
    task.order = order;
    task.up_to_isomorphism = iso;
    task.require_left_identity = left_identity;
    task.budget = budget;
    task.threads = threads_from_env();
    EnumerationResult r = enumerate_magmas(task);
    if (out_path.empty()) {
        write_census(std::cout, r, task);
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open " + out_path + " for writing");
        write_census(os, r, task);
    }
    return r.budget_exhausted ? 3 : 0;
}

int cmd_search(const SearchSpec& spec, bool json_out, bool decimal) {
    SearchResult r = search(spec);
    if (json_out) {
        nlohmann::json out{{"target", spec.target},
                           {"trials", r.trials},
                           {"enum_budget_exhausted", r.enum_budget_exhausted},
                           {"hit", nullptr}};
        if (r.hit) {
            const SearchHit& h = *r.hit;
            out["hit"] = nlohmann::json{
                {"trial", h.trial},
                {"magma", nlohmann::json{{"order", h.magma.order()},
                                         {"hash", h.magma.hash()},
                                         {"table", h.magma.table()},
                                         {"rows", table_line(h.magma)}}},
                {"subset", h.subset.to_json()},
                {"classification", classification_to_json(h.classification, h.magma)}};
        }
        std::cout << out.dump(2) << "\n";
    } else if (r.hit) {
        const SearchHit& h = *r.hit;
        std::cout << "hit at trial " << h.trial << " (target " << spec.target << ")\n";
        std::cout << h.magma.format();
        std::cout << "pos:";
        for (int i = 0; i < h.subset.order(); ++i)
            std::cout << ' ' << degree_text(h.subset.pos(i), decimal);
        std::cout << "\nneg:";
        for (int i = 0; i < h.subset.order(); ++i)
            std::cout << ' ' << degree_text(h.subset.neg(i), decimal);
        std::cout << "\n";
        for (IdealClass cls : kAllIdealClasses)
            std::cout << ideal_class_name(cls) << ": "
                      << (h.classification.holds(cls) ? "holds" : "fails") << "\n";
    } else {
        std::cout << "none (" << r.trials << " trials)\n";
    }
    return r.hit ? 0 : 4;
}

void write_text_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + p.string() + " for writing");
    os << content;
    if (!os) throw std::runtime_error("failed writing " + p.string());
}

// The two worked four-element instances used across the docs and tests; this
// writer is the single source of truth for the golden files under fixtures/.
int cmd_fixtures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::path dir(out_dir);
    fs::create_directories(dir);

    Magma m31(4, {1, 3, 2, 0, 0, 1, 2, 3, 2, 2, 2, 2, 3, 0, 2, 1}, {"a", "b", "c", "d"});
    BvfSubset b31({Rational(1, 5), Rational(1, 5), Rational(7, 10), Rational(1, 5)},
                  {Rational(-1, 2), Rational(-1, 2), Rational(-4, 5), Rational(-1, 2)});
    Magma m32(4, {2, 2, 2, 3, 3, 3, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3}, {"a", "b", "c", "d"});
    BvfSubset b32({Rational(1, 2), Rational(3, 10), Rational(1, 10), Rational(4, 5)},
                  {Rational(-7, 10), Rational(-2, 5), Rational(-1, 5), Rational(-9, 10)});

    const std::pair<const char*, std::string> files[] = {
        {"example31.tbl", m31.format()},
        {"example31.bvf.json", b31.to_json().dump(2) + "\n"},
        {"example32.tbl", m32.format()},
        {"example32.bvf.json", b32.to_json().dump(2) + "\n"},
    };
    for (const auto& [name, content] : files) {
        fs::path p = dir / name;
        write_text_file(p, content);
        std::cout << p.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for finite left-invertive magmas and bipolar-valued fuzzy subsets"};
    app.fallthrough();
    app.require_subcommand(1);

    bool json_out = false;
    bool decimal = false;
    auto* json_flag = app.add_flag("--json", json_out, "emit JSON instead of text");
    auto* dec_flag =
        app.add_flag("--decimal", decimal, "show degrees as approximate decimals (text only)");
    json_flag->excludes(dec_flag);

    std::string laws_table;
    auto* laws = app.add_subcommand("laws", "check the structural laws of a Cayley table");
    laws->add_option("table", laws_table, "table file")->required();

    std::string cls_table, cls_bvf;
    bool cls_gamma = false;
    auto* cls = app.add_subcommand("classify", "classify a BVF subset against a table");
    cls->add_option("table", cls_table, "table file")->required();
    auto* cls_bvf_opt = cls->add_option("bvf", cls_bvf, "BVF subset JSON file");
    auto* cls_gamma_flag =
        cls->add_flag("--gamma", cls_gamma, "use the whole-carrier subset instead of a file");
    cls_bvf_opt->excludes(cls_gamma_flag);

    std::string ver_table;
    std::vector<std::string> ver_bvfs;
    std::uint64_t ver_seed = 1;
    int ver_samples = 200;
    int ver_q = 10;
    auto* ver = app.add_subcommand("verify", "run the theorem suite on a table");
    ver->add_option("table", ver_table, "table file")->required();
    ver->add_option("--bvf", ver_bvfs, "BVF subset JSON fixture (repeatable)");
    ver->add_option("--seed", ver_seed, "seed for the random subset family");
    ver->add_option("--samples", ver_samples, "random subsets in the family")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--q", ver_q, "degree quantization denominator")->check(CLI::PositiveNumber);

    int enum_order = 2;
    bool enum_iso = false, enum_li = false;
    long long enum_budget = 10'000'000;
    std::string enum_out;
    auto* enu = app.add_subcommand("enumerate", "enumerate left-invertive tables of one order");
    enu->add_option("--order", enum_order, "carrier size")->required();
    enu->add_flag("--iso", enum_iso, "collapse isomorphic tables to canonical forms");
    enu->add_flag("--left-identity", enum_li, "keep only tables with a left identity");
    enu->add_option("--budget", enum_budget, "cell-assignment budget")
        ->check(CLI::PositiveNumber);
    enu->add_option("--out", enum_out, "write the census to a file instead of stdout");

    SearchSpec spec;
    auto* sea = app.add_subcommand("search", "search for a subset matching a class pattern");
    sea->add_option("--target", spec.target,
                    "boolean pattern over class names, e.g. \"interior&!two_sided\"")
        ->required();
    sea->add_option("--orders", spec.orders, "carrier sizes to sweep");
    sea->add_option("--q", spec.quantization, "degree quantization denominator")
        ->check(CLI::PositiveNumber);
    sea->add_option("--seed", spec.seed, "seed for the subset streams");
    sea->add_option("--max-trials", spec.max_trials, "total classification budget")
        ->check(CLI::PositiveNumber);
    sea->add_flag("--iso,!--no-iso", spec.up_to_isomorphism,
                  "sweep canonical forms only (default) or all labeled tables");
    sea->add_option("--budget", spec.enum_budget, "cell-assignment budget for enumeration")
        ->check(CLI::PositiveNumber);

    std::string fix_out = "fixtures";
    auto* fix = app.add_subcommand("fixtures", "write the worked example tables and subsets");
    fix->add_option("--out", fix_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (laws->parsed()) return cmd_laws(laws_table, json_out, decimal);
        if (cls->parsed()) {
            if (!cls_gamma && cls_bvf.empty())
                throw std::invalid_argument("classify needs a BVF file or --gamma");
            return cmd_classify(cls_table, cls_bvf, cls_gamma, json_out, decimal);
        }
        if (ver->parsed())
            return cmd_verify(ver_table, ver_bvfs, ver_seed, ver_samples, ver_q, json_out);
        if (enu->parsed())
            return cmd_enumerate(enum_order, enum_iso, enum_li, enum_budget, enum_out);
        if (sea->parsed()) {
            spec.threads = threads_from_env();
            return cmd_search(spec, json_out, decimal);
        }
        if (fix->parsed()) return cmd_fixtures(fix_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
