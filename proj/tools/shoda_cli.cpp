// Command-line front end: group construction, the Shoda-pair searches,
// idempotent computation, oracle verification and the benchmark harness.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shoda/group_spec.hpp"
#include "shoda/oracle.hpp"
#include "shoda/search.hpp"

using json = nlohmann::ordered_json;
using namespace shoda;

namespace {

std::vector<std::string> generator_strings(const FiniteGroup& G, const Subgroup& H) {
    std::vector<std::string> out;
    for (uint32_t o : H.canonical_generators()) out.push_back(to_cycle_string(G.element(o)));
    return out;
}

json group_json(const FiniteGroup& G, const std::string& spec) {
    json j;
    j["spec"] = spec;
    j["order"] = G.order();
    j["degree"] = G.degree();
    json gens = json::array();
    for (const Perm& g : G.generators()) gens.push_back(to_cycle_string(g));
    j["generators"] = gens;
    return j;
}

json subgroup_json(const FiniteGroup& G, const Subgroup& H) {
    json j;
    j["order"] = H.order();
    j["generators"] = generator_strings(G, H);
    return j;
}

json pair_json(const FiniteGroup& G, const ShodaPair& p) {
    json j;
    j["kind"] = to_string(p.kind);
    j["dim"] = p.dim;
    j["H"] = subgroup_json(G, p.H);
    j["K"] = subgroup_json(G, p.K);
    return j;
}

// Serialization of an algebra element: (cycle notation, numerator,
// denominator) triples sorted by element ordinal.
json idempotent_json(const FiniteGroup& G, const AlgebraElement& e) {
    json terms = json::array();
    for (const auto& [ord, c] : e.coeffs())
        terms.push_back(json::array(
            {to_cycle_string(G.element(ord)), numerator_string(c), denominator_string(c)}));
    return terms;
}

// Timing is deliberately left out: the JSON output is byte-stable across runs.
json stats_json(const SearchStats& s) {
    json j;
    j["normal_subgroups_visited"] = s.normal_subgroups_visited;
    j["lemma1_fast_path"] = s.lemma1_fast_path;
    j["lemma3_pruned"] = s.lemma3_pruned;
    j["lattice_computations"] = s.lattice_computations;
    j["subgroups_enumerated"] = s.subgroups_enumerated;
    j["classes_scanned"] = s.classes_scanned;
    return j;
}

std::string terms_text(const FiniteGroup& G, const AlgebraElement& e) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [ord, c] : e.coeffs()) {
        if (!first) out << " + ";
        out << to_string(c) << "*" << to_cycle_string(G.element(ord));
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

void print_pairs_text(std::ostream& out, const FiniteGroup& G, const SearchReport& rep) {
    out << "pairs (" << rep.pairs.size() << "):\n";
    std::size_t idx = 1;
    for (const ShodaPair& p : rep.pairs) {
        out << "  " << std::setw(2) << idx++ << "  " << std::setw(16) << std::left
            << to_string(p.kind) << std::right << "  dim " << std::setw(3) << p.dim << "  H=[";
        auto hs = generator_strings(G, p.H);
        for (std::size_t i = 0; i < hs.size(); ++i) out << (i ? ", " : "") << hs[i];
        out << "] (order " << p.H.order() << ")  K=[";
        auto ks = generator_strings(G, p.K);
        for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? ", " : "") << ks[i];
        out << "] (order " << p.K.order() << ")\n";
    }
    out << "sum_dim " << rep.sum_dim << " / " << G.order() << "   complete "
        << (rep.complete ? "yes" : "no") << "   verdict " << to_string(rep.verdict) << "\n";
    const SearchStats& s = rep.stats;
    out << "stats: normals_visited=" << s.normal_subgroups_visited
        << " lemma1_fast_path=" << s.lemma1_fast_path << " lemma3_pruned=" << s.lemma3_pruned
        << " lattice_computations=" << s.lattice_computations
        << " subgroups_enumerated=" << s.subgroups_enumerated
        << " classes_scanned=" << s.classes_scanned << "\n";
}

struct CommandContext {
    std::string group_spec;
    std::string format = "text";
    std::size_t max_order = Limits{}.max_order;
    std::size_t oracle_cap = Limits{}.oracle_max_order;

    Limits limits() const {
        Limits l;
        l.max_order = max_order;
        l.oracle_max_order = oracle_cap;
        return l;
    }
    SearchOptions options() const {
        SearchOptions o;
        o.limits = limits();
        return o;
    }
};

void add_common(CLI::App* cmd, CommandContext& ctx, bool with_format = true) {
    cmd->add_option("group", ctx.group_spec,
                    "group spec (e.g. dihedral:8, symmetric:4, perm:4:(0 1 2 3),(0 2), "
                    "or a group file)")
        ->required();
    if (with_format)
        cmd->add_option("--format", ctx.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-order", ctx.max_order, "element enumeration cap");
    cmd->add_option("--oracle-cap", ctx.oracle_cap, "exact-rank oracle cap");
}

int run_search(const CommandContext& ctx, const std::string& command) {
    FiniteGroup G = parse_group(ctx.group_spec, ctx.limits());
    SearchReport rep = command == "essp" ? ext_strong_shoda_pairs(G, ctx.options())
                                         : strong_shoda_pairs(G, ctx.options());
    if (ctx.format == "json") {
        json j;
        j["command"] = command;
        j["group"] = group_json(G, ctx.group_spec);
        json pairs = json::array();
        for (const ShodaPair& p : rep.pairs) pairs.push_back(pair_json(G, p));
        j["pairs"] = pairs;
        j["sum_dim"] = rep.sum_dim;
        j["complete"] = rep.complete;
        j["verdict"] = to_string(rep.verdict);
        j["stats"] = stats_json(rep.stats);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group " << ctx.group_spec << ": order " << G.order() << ", degree "
                  << G.degree() << "\n";
        print_pairs_text(std::cout, G, rep);
    }
    return 0;
}

int run_pcis(const CommandContext& ctx, const std::string& method) {
    FiniteGroup G = parse_group(ctx.group_spec, ctx.limits());
    SearchOptions opts = ctx.options();
    opts.collect_idempotents = true;
    SearchReport rep =
        method == "essp" ? ext_strong_shoda_pairs(G, opts) : strong_shoda_pairs(G, opts);
    bool sums_to_one = sum_is_one(rep.idempotents);
    if (ctx.format == "json") {
        json j;
        j["command"] = "pcis";
        j["method"] = method;
        j["group"] = group_json(G, ctx.group_spec);
        json ids = json::array();
        for (std::size_t i = 0; i < rep.idempotents.size(); ++i) {
            json entry;
            entry["pair_index"] = i;
            entry["dim"] = rep.pairs[i].dim;
            entry["terms"] = idempotent_json(G, rep.idempotents[i].element());
            ids.push_back(entry);
        }
        j["idempotents"] = ids;
        j["count"] = rep.idempotents.size();
        j["sum_is_one"] = sums_to_one;
        j["verdict"] = to_string(rep.verdict);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group " << ctx.group_spec << ": order " << G.order() << "\n";
        std::cout << "primitive central idempotents by " << method << " ("
                  << rep.idempotents.size() << "):\n";
        for (std::size_t i = 0; i < rep.idempotents.size(); ++i)
            std::cout << "  e" << i + 1 << " (dim " << rep.pairs[i].dim
                      << ") = " << terms_text(G, rep.idempotents[i].element()) << "\n";
        std::cout << "sum_is_one " << (sums_to_one ? "yes" : "no") << "   verdict "
                  << to_string(rep.verdict) << "\n";
    }
    return 0;
}

int run_is_normally_monomial(const CommandContext& ctx) {
    FiniteGroup G = parse_group(ctx.group_spec, ctx.limits());
    SearchReport rep = ext_strong_shoda_pairs(G, ctx.options());
    bool nm = rep.sum_dim == G.order();
    if (ctx.format == "json") {
        json j;
        j["command"] = "is-normally-monomial";
        j["group"] = group_json(G, ctx.group_spec);
        j["normally_monomial"] = nm;
        j["sum_dim"] = rep.sum_dim;
        j["order"] = G.order();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (nm ? "true" : "false") << " (sum_dim " << rep.sum_dim << " / "
                  << G.order() << ")\n";
    }
    return 0;
}

int run_verify(const CommandContext& ctx) {
    FiniteGroup G = parse_group(ctx.group_spec, ctx.limits());
    SearchOptions opts = ctx.options();
    opts.collect_idempotents = true;
    SearchReport rep = ext_strong_shoda_pairs(G, opts);

    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks;

    VerifyReport vr = verify_pci_set(G, rep.idempotents, rep.complete, ctx.limits());
    checks.push_back({"idempotent_laws_and_orthogonality", vr.ok(),
                      vr.ok() ? "all " + std::to_string(vr.checked) + " elements pass"
                              : vr.failures.front()});
    if (vr.dims_checked)
        checks.push_back({"rank_sum_within_order", vr.dim_sum <= G.order(),
                          "sum of exact ranks = " + std::to_string(vr.dim_sum)});

    bool dims_agree = true;
    if (G.order() <= ctx.oracle_cap) {
        for (std::size_t i = 0; i < rep.pairs.size(); ++i)
            if (dim_direct(G, rep.idempotents[i].element(), ctx.limits()) != rep.pairs[i].dim)
                dims_agree = false;
        checks.push_back({"dim_formula_matches_exact_rank", dims_agree, ""});
    }

    // linear components must be among the collected idempotents
    bool linear_ok = true;
    auto collected = rep.idempotents;
    for (const Idempotent& lin : linear_pci_set(G))
        if (std::find(collected.begin(), collected.end(), lin) == collected.end())
            linear_ok = false;
    checks.push_back({"linear_components_found", linear_ok, ""});

    checks.push_back({"completeness_dichotomy", sum_is_one(rep.idempotents) == rep.complete,
                      rep.complete ? "sum_dim = |G|" : "sum_dim < |G|"});
    if (rep.complete)
        checks.push_back({"rational_class_count", rep.pairs.size() == rational_class_count(G),
                          std::to_string(rep.pairs.size()) + " pairs"});

    bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    if (ctx.format == "json") {
        json j;
        j["command"] = "verify";
        j["group"] = group_json(G, ctx.group_spec);
        json cj = json::array();
        for (const Check& c : checks) {
            json e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            if (!c.detail.empty()) e["detail"] = c.detail;
            cj.push_back(e);
        }
        j["checks"] = cj;
        j["passed"] = all;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Check& c : checks)
            std::cout << "check " << std::setw(36) << std::left << c.name << std::right << "  "
                      << (c.passed ? "pass" : "FAIL")
                      << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        std::cout << "overall: " << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

struct BenchRow {
    std::string variant;
    SearchReport rep;
    bool matches_baseline = true;
};

int run_bench(const CommandContext& ctx, bool no_lemma1, bool no_lemma3, bool direct_ssp,
              const std::string& format) {
    FiniteGroup G = parse_group(ctx.group_spec, ctx.limits());
    SearchOptions base = ctx.options();
    base.collect_idempotents = true;

    bool any_flag = no_lemma1 || no_lemma3 || direct_ssp;
    std::vector<BenchRow> rows;
    rows.push_back({"essp-first", strong_shoda_pairs(G, base)});
    if (!any_flag || no_lemma1) {
        SearchOptions o = base;
        o.use_lemma1 = false;
        rows.push_back({"no-lemma1", strong_shoda_pairs(G, o)});
    }
    if (!any_flag || no_lemma3) {
        SearchOptions o = base;
        o.use_lemma3 = false;
        rows.push_back({"no-lemma3", strong_shoda_pairs(G, o)});
    }
    if (!any_flag || direct_ssp)
        rows.push_back({"direct-ssp", direct_strong_shoda_pairs(G, base)});

    auto sorted_set = [](const std::vector<Idempotent>& es) {
        std::vector<AlgebraElement> v;
        for (const Idempotent& e : es) v.push_back(e.element());
        std::sort(v.begin(), v.end(), [](const AlgebraElement& a, const AlgebraElement& b) {
            return compare(a, b) < 0;
        });
        return v;
    };
    auto baseline_set = sorted_set(rows.front().rep.idempotents);
    for (BenchRow& r : rows) r.matches_baseline = sorted_set(r.rep.idempotents) == baseline_set;

    const char* cols =
        "variant,wall_ms,pairs,sum_dim,complete,normals_visited,lemma1_fast_path,"
        "lemma3_pruned,lattice_computations,subgroups_enumerated,classes_scanned,"
        "idempotent_set_matches_baseline";
    if (format == "csv") {
        std::cout << cols << "\n";
        for (const BenchRow& r : rows) {
            const SearchStats& s = r.rep.stats;
            std::cout << r.variant << "," << std::fixed << std::setprecision(3) << s.wall_ms
                      << "," << r.rep.pairs.size() << "," << r.rep.sum_dim << ","
                      << (r.rep.complete ? 1 : 0) << "," << s.normal_subgroups_visited << ","
                      << s.lemma1_fast_path << "," << s.lemma3_pruned << ","
                      << s.lattice_computations << "," << s.subgroups_enumerated << ","
                      << s.classes_scanned << "," << (r.matches_baseline ? 1 : 0) << "\n";
        }
    } else {
        std::cout << "bench " << ctx.group_spec << " (order " << G.order() << ")\n";
        std::cout << std::left << std::setw(12) << "variant" << std::right << std::setw(10)
                  << "wall_ms" << std::setw(7) << "pairs" << std::setw(9) << "sum_dim"
                  << std::setw(10) << "complete" << std::setw(9) << "normals" << std::setw(8)
                  << "lemma1" << std::setw(8) << "lemma3" << std::setw(9) << "lattice"
                  << std::setw(11) << "subgroups" << std::setw(9) << "classes" << std::setw(10)
                  << "same_set" << "\n";
        for (const BenchRow& r : rows) {
            const SearchStats& s = r.rep.stats;
            std::cout << std::left << std::setw(12) << r.variant << std::right << std::setw(10)
                      << std::fixed << std::setprecision(3) << s.wall_ms << std::setw(7)
                      << r.rep.pairs.size() << std::setw(9) << r.rep.sum_dim << std::setw(10)
                      << (r.rep.complete ? "yes" : "no") << std::setw(9)
                      << s.normal_subgroups_visited << std::setw(8) << s.lemma1_fast_path
                      << std::setw(8) << s.lemma3_pruned << std::setw(9)
                      << s.lattice_computations << std::setw(11) << s.subgroups_enumerated
                      << std::setw(9) << s.classes_scanned << std::setw(10)
                      << (r.matches_baseline ? "yes" : "NO") << "\n";
        }
    }
    bool all_match = std::all_of(rows.begin(), rows.end(),
                                 [](const BenchRow& r) { return r.matches_baseline; });
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "shoda: extremely strong and strong Shoda pairs, and the primitive central\n"
        "idempotents of the rational group algebra they realize"};
    app.require_subcommand(1);

    CommandContext essp_ctx, ssp_ctx, pcis_ctx, nm_ctx, verify_ctx, bench_ctx;
    std::string pcis_method = "essp";
    std::string bench_format = "table";
    bool no_lemma1 = false, no_lemma3 = false, direct_ssp = false;

    add_common(app.add_subcommand("essp", "extremely strong Shoda pairs"), essp_ctx);
    add_common(app.add_subcommand("ssp", "strong Shoda pairs"), ssp_ctx);

    CLI::App* pcis = app.add_subcommand("pcis", "primitive central idempotents");
    add_common(pcis, pcis_ctx);
    pcis->add_option("--method", pcis_method, "which pair search to use")
        ->check(CLI::IsMember({"essp", "ssp"}));

    add_common(app.add_subcommand("is-normally-monomial",
                                  "decide normal monomiality via the dimension ledger"),
               nm_ctx);
    add_common(app.add_subcommand("verify", "brute-force oracle checks of the search output"),
               verify_ctx);

    CLI::App* bench = app.add_subcommand(
        "bench", "compare the essp-first search against a direct lattice scan");
    add_common(bench, bench_ctx, /*with_format=*/false);
    bench->add_flag("--no-lemma1", no_lemma1, "include the lemma-1-disabled variant");
    bench->add_flag("--no-lemma3", no_lemma3, "include the lemma-3-disabled variant");
    bench->add_flag("--direct-ssp", direct_ssp, "include the direct full-lattice search");
    bench->add_option("--format", bench_format, "output format")
        ->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("essp")) return run_search(essp_ctx, "essp");
        if (app.got_subcommand("ssp")) return run_search(ssp_ctx, "ssp");
        if (app.got_subcommand("pcis")) return run_pcis(pcis_ctx, pcis_method);
        if (app.got_subcommand("is-normally-monomial"))
            return run_is_normally_monomial(nm_ctx);
        if (app.got_subcommand("verify")) return run_verify(verify_ctx);
        if (app.got_subcommand("bench"))
            return run_bench(bench_ctx, no_lemma1, no_lemma3, direct_ssp, bench_format);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        std::cerr << "computation limit: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
