// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The corpus is every builtin family up to order 48 (the cyclic
// groups up to 30 included) plus a fixed sample of direct products.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <vector>

#include "shoda/group_spec.hpp"
#include "shoda/oracle.hpp"
#include "shoda/search.hpp"
#include "support/corpus.hpp"
#include "support/special_groups.hpp"

using namespace shoda;
using Clock = std::chrono::steady_clock;

namespace {

struct CorpusEntry {
    std::string spec;
    std::unique_ptr<FiniteGroup> group;
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> corpus;
    for (const std::string& spec : testing::corpus_specs())
        corpus.push_back({spec, std::make_unique<FiniteGroup>(parse_group(spec))});
    return corpus;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<AlgebraElement> sorted_set(const std::vector<Idempotent>& es) {
    std::vector<AlgebraElement> v;
    for (const Idempotent& e : es) v.push_back(e.element());
    std::sort(v.begin(), v.end(),
              [](const AlgebraElement& a, const AlgebraElement& b) { return compare(a, b) < 0; });
    return v;
}

bool subset_of(const std::vector<AlgebraElement>& small, const std::vector<AlgebraElement>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end(),
                         [](const AlgebraElement& a, const AlgebraElement& b) {
                             return compare(a, b) < 0;
                         });
}

struct Criterion {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

std::vector<std::string> report_law_violations(const FiniteGroup&, const SearchReport& rep,
                                               const std::string& tag) {
    std::vector<std::string> bad;
    const auto& es = rep.idempotents;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!es[i].element().is_idempotent()) bad.push_back(tag + ": e*e != e");
        if (!is_central(es[i].element())) bad.push_back(tag + ": not central");
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!are_orthogonal(es[i].element(), es[j].element()))
                bad.push_back(tag + ": not orthogonal");
    }
    return bad;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    auto corpus = build_corpus();
    SearchOptions collect;
    collect.collect_idempotents = true;

    // 1. Idempotent law suite over both searches, exact, under 60 s.
    {
        auto t0 = Clock::now();
        std::vector<std::string> violations;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            SearchReport essp = ext_strong_shoda_pairs(G, collect);
            SearchReport ssp = strong_shoda_pairs(G, collect);
            for (auto& v : report_law_violations(G, essp, entry.spec + " essp"))
                violations.push_back(v);
            for (auto& v : report_law_violations(G, ssp, entry.spec + " ssp"))
                violations.push_back(v);
        }
        double secs = seconds_since(t0);
        bool ok = violations.empty() && secs < 60.0;
        std::ostringstream d;
        d << corpus.size() << " groups, " << violations.size() << " violations";
        if (secs >= 60.0) d << ", over the 60 s budget";
        if (!violations.empty()) d << "; first: " << violations.front();
        results.push_back({1, "idempotent laws (e*e=e, centrality, orthogonality)", ok, d.str(),
                           secs});
    }

    // 2. dim_formula agrees with exact Gaussian-elimination ranks.
    {
        auto t0 = Clock::now();
        std::size_t pairs_checked = 0, mismatches = 0;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            if (G.order() > 200) continue;
            for (const SearchReport& rep :
                 {ext_strong_shoda_pairs(G, collect), strong_shoda_pairs(G, collect)}) {
                for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
                    ++pairs_checked;
                    if (dim_direct(G, rep.idempotents[i].element()) != rep.pairs[i].dim)
                        ++mismatches;
                }
            }
        }
        std::ostringstream d;
        d << pairs_checked << " pairs checked, " << mismatches << " mismatches";
        results.push_back({2, "dimension formula = exact rank oracle", mismatches == 0, d.str(),
                           seconds_since(t0)});
    }

    // 3. Sum of idempotents = 1  <=>  dimension ledger = |G|  <=>  normally monomial.
    {
        auto t0 = Clock::now();
        std::size_t failures = 0;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            SearchReport rep = ext_strong_shoda_pairs(G, collect);
            bool ledger = rep.sum_dim == G.order();
            if (rep.complete != ledger) ++failures;
            if (sum_is_one(rep.idempotents) != ledger) ++failures;
            if (is_normally_monomial(G) != ledger) ++failures;
        }
        std::ostringstream d;
        d << corpus.size() << " groups, " << failures << " equivalence failures";
        results.push_back(
            {3, "completeness dichotomy", failures == 0, d.str(), seconds_since(t0)});
    }

    // 4. Berman-Witt: pair count = rational class count on normally monomial groups.
    {
        auto t0 = Clock::now();
        std::size_t checked = 0, failures = 0;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            SearchReport rep = ext_strong_shoda_pairs(G);
            if (!rep.complete) continue;
            ++checked;
            if (rep.pairs.size() != rational_class_count(G)) ++failures;
        }
        std::ostringstream d;
        d << checked << " normally monomial groups, " << failures << " count mismatches";
        results.push_back({4, "Berman-Witt pair count", failures == 0, d.str(),
                           seconds_since(t0)});
    }

    // 5. Known decompositions, exact dims certified by the rank oracle.
    {
        auto t0 = Clock::now();
        std::vector<std::string> problems;
        auto check_dims = [&](const std::string& name, const FiniteGroup& G,
                              const SearchReport& rep, std::multiset<std::size_t> expect) {
            std::multiset<std::size_t> got;
            for (const ShodaPair& p : rep.pairs) got.insert(p.dim);
            if (got != expect) {
                problems.push_back(name + ": unexpected dims");
                return;
            }
            for (const ShodaPair& p : rep.pairs)
                if (dim_direct(G, e_of(G, p.H, p.K).element()) != p.dim)
                    problems.push_back(name + ": oracle disagrees");
        };
        {
            FiniteGroup q8 = dicyclic_group(8);
            check_dims("Q8", q8, ext_strong_shoda_pairs(q8), {1, 1, 1, 1, 4});
            FiniteGroup d8 = dihedral_group(8);
            check_dims("D8", d8, ext_strong_shoda_pairs(d8), {1, 1, 1, 1, 4});
            FiniteGroup c4 = cyclic_group(4);
            check_dims("C4", c4, ext_strong_shoda_pairs(c4), {1, 1, 2});
            FiniteGroup s3 = symmetric_group(3);
            check_dims("S3", s3, ext_strong_shoda_pairs(s3), {1, 1, 4});
        }
        {
            FiniteGroup s4 = symmetric_group(4);
            SearchReport essp = ext_strong_shoda_pairs(s4);
            if (essp.sum_dim != 6 || essp.complete)
                problems.push_back("S4 essp should stop at sum 6");
            check_dims("S4 essp", s4, essp, {1, 1, 4});
            SearchReport ssp = strong_shoda_pairs(s4);
            if (!ssp.complete || ssp.sum_dim != 24)
                problems.push_back("S4 ssp should complete at 24");
            check_dims("S4 ssp", s4, ssp, {1, 1, 4, 9, 9});
            std::size_t nines = 0;
            for (const ShodaPair& p : ssp.pairs)
                if (p.kind == PairKind::strong && p.dim == 9) ++nines;
            if (nines != 2) problems.push_back("S4 ssp should add two dim-9 components");
        }
        {
            FiniteGroup sl = testing::sl23();
            SearchReport rep = strong_shoda_pairs(sl);
            if (rep.sum_dim >= 24) problems.push_back("SL(2,3) ssp sum should stay below 24");
            if (rep.verdict != Verdict::neither_or_unknown)
                problems.push_back("SL(2,3) verdict should be neither_or_unknown");
        }
        std::ostringstream d;
        d << (problems.empty() ? "Q8, D8, C4, S3, S4, SL(2,3) all as expected"
                               : problems.front());
        results.push_back({5, "known decompositions", problems.empty(), d.str(),
                           seconds_since(t0)});
    }

    // 6. The order-375 extraspecial extension is not normally monomial; all
    //    smaller odd-order corpus groups are. Under 5 minutes.
    {
        auto t0 = Clock::now();
        std::vector<std::string> problems;
        FiniteGroup G375 = testing::heisenberg5_by_c3();
        if (G375.order() != 375) problems.push_back("order != 375");
        if (center(G375).order() != 5) problems.push_back("|Z(G)| != 5");
        if (problems.empty() && is_normally_monomial(G375))
            problems.push_back("order-375 group wrongly normally monomial");
        std::size_t odd_checked = 0;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            if (G.order() % 2 == 0 || G.order() >= 375) continue;
            ++odd_checked;
            if (!is_normally_monomial(G))
                problems.push_back(entry.spec + " wrongly not normally monomial");
        }
        double secs = seconds_since(t0);
        bool ok = problems.empty() && secs < 300.0;
        std::ostringstream d;
        if (problems.empty())
            d << "order 375, centre 5, not normally monomial; " << odd_checked
              << " smaller odd-order groups all normally monomial";
        else
            d << problems.front();
        if (secs >= 300.0) d << "; over the 5 min budget";
        results.push_back({6, "order-375 datum and odd-order consistency", ok, d.str(), secs});
    }

    // 7. The A_N tie-break does not change the realized idempotent set.
    {
        auto t0 = Clock::now();
        std::size_t failures = 0;
        SearchOptions reversed = collect;
        reversed.reverse_a_tiebreak = true;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            if (sorted_set(ext_strong_shoda_pairs(G, collect).idempotents) !=
                sorted_set(ext_strong_shoda_pairs(G, reversed).idempotents))
                ++failures;
        }
        std::ostringstream d;
        d << corpus.size() << " groups, " << failures << " set differences";
        results.push_back({7, "A_N tie-break invariance", failures == 0, d.str(),
                           seconds_since(t0)});
    }

    // 8. Pruning soundness and the structural performance claim: identical
    //    idempotent sets with the lemmas disabled and under the direct scan;
    //    the essp-first search never builds the lattice on normally monomial
    //    groups, the direct scan always does.
    {
        auto t0 = Clock::now();
        std::vector<std::string> problems;
        SearchOptions no1 = collect, no3 = collect;
        no1.use_lemma1 = false;
        no3.use_lemma3 = false;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            SearchReport base = strong_shoda_pairs(G, collect);
            auto base_set = sorted_set(base.idempotents);
            if (sorted_set(strong_shoda_pairs(G, no1).idempotents) != base_set)
                problems.push_back(entry.spec + ": lemma-1 ablation changed the set");
            if (sorted_set(strong_shoda_pairs(G, no3).idempotents) != base_set)
                problems.push_back(entry.spec + ": lemma-3 ablation changed the set");
            SearchReport direct = direct_strong_shoda_pairs(G, collect);
            if (sorted_set(direct.idempotents) != base_set)
                problems.push_back(entry.spec + ": direct scan changed the set");
            bool nm = base.verdict == Verdict::normally_monomial;
            if (nm && base.stats.lattice_computations != 0)
                problems.push_back(entry.spec + ": essp-first built the lattice");
            if (direct.stats.lattice_computations == 0)
                problems.push_back(entry.spec + ": direct scan skipped the lattice");
        }
        std::ostringstream d;
        d << corpus.size() << " groups";
        if (!problems.empty()) d << "; first: " << problems.front();
        results.push_back({8, "pruning soundness and lattice counters", problems.empty(),
                           d.str(), seconds_since(t0)});
    }

    // 9. Extremely strong idempotents are a subset of the strong ones.
    {
        auto t0 = Clock::now();
        std::size_t failures = 0;
        for (const CorpusEntry& entry : corpus) {
            const FiniteGroup& G = *entry.group;
            if (!subset_of(sorted_set(ext_strong_shoda_pairs(G, collect).idempotents),
                           sorted_set(strong_shoda_pairs(G, collect).idempotents)))
                ++failures;
        }
        std::ostringstream d;
        d << corpus.size() << " groups, " << failures << " subset violations";
        results.push_back({9, "essp idempotents subset of ssp idempotents", failures == 0,
                           d.str(), seconds_since(t0)});
    }

    int failed = 0;
    for (const Criterion& c : results) {
        if (!c.passed) ++failed;
        std::ostringstream secs;
        secs.setf(std::ios::fixed);
        secs.precision(1);
        secs << c.seconds;
        std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << " — " << c.detail << " (" << secs.str() << " s)\n";
    }
    std::cout << (failed == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failed) + " criteria FAILED")
              << "\n";
    return failed;
}
