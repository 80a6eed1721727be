#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shoda/algebra.hpp"
#include "shoda/quotient.hpp"

namespace shoda {

enum class PairKind { extremely_strong, strong };

// A strong Shoda pair (H, K): K normal in H, H normal in N_G(K), H/K cyclic
// and maximal abelian in N_G(K)/K, and the distinct conjugates of
// epsilon(H, K) mutually orthogonal. Extremely strong means H is normal in G.
struct ShodaPair {
    Subgroup H;
    Subgroup K;
    PairKind kind;
    std::size_t dim;  // rational dimension of the realized simple component
};

enum class Verdict { normally_monomial, strongly_monomial_only, neither_or_unknown };

std::string to_string(Verdict v);
std::string to_string(PairKind k);

struct SearchStats {
    std::size_t normal_subgroups_visited = 0;
    std::size_t lemma1_fast_path = 0;   // S_N settled by an abelian/cyclic shortcut
    std::size_t lemma3_pruned = 0;      // N skipped because centre(G/N) is not cyclic
    std::size_t lattice_computations = 0;
    std::size_t subgroups_enumerated = 0;  // lattice size, when computed
    std::size_t classes_scanned = 0;       // subgroup classes visited in phase 2
    double wall_ms = 0.0;
};

struct SearchOptions {
    bool use_lemma1 = true;          // abelian-quotient / cyclic-A_N shortcuts
    bool use_lemma3 = true;          // cyclic-centre filter
    bool collect_idempotents = false;
    bool reverse_a_tiebreak = false;  // tie-break order for the A_N choice
    Limits limits{};
};

struct SearchReport {
    std::vector<ShodaPair> pairs;
    std::size_t sum_dim = 0;
    bool complete = false;  // sum_dim == |G|
    Verdict verdict = Verdict::neither_or_unknown;
    std::vector<Idempotent> idempotents;  // filled when collect_idempotents is set
    SearchStats stats;
};

// Full three-condition test; independent of the search paths.
bool is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// The pairs contributed by one normal subgroup N: fix A_N, collect the
// class representatives D with core_G(D) = N, A_N/D cyclic and maximal
// abelian in N_G(D)/D. Fast paths per the options.
std::vector<ShodaPair> compute_S_N(const FiniteGroup& G, const Subgroup& N,
                                   const SearchOptions& opts = {});

// A complete irredundant set of extremely strong Shoda pairs, visiting the
// normal subgroups in decreasing order and stopping as soon as the dimension
// ledger reaches |G|. Never touches the subgroup lattice.
SearchReport ext_strong_shoda_pairs(const FiniteGroup& G, const SearchOptions& opts = {});

// A complete irredundant set of strong Shoda pairs: the extremely strong
// pairs first, then (only when those do not exhaust Q[G]) a search over
// conjugacy classes of non-normal subgroups, deduplicating by idempotent
// equality. One full pass over the classes; if the ledger still falls short
// the verdict is neither_or_unknown.
SearchReport strong_shoda_pairs(const FiniteGroup& G, const SearchOptions& opts = {});

// Baseline for the benchmark: scans every conjugacy class of subgroups
// directly, with no extremely-strong phase and no pruning lemmas.
SearchReport direct_strong_shoda_pairs(const FiniteGroup& G, const SearchOptions& opts = {});

// Primitive central idempotents realized by the pairs of either search.
std::vector<Idempotent> pcis_by_essp(const FiniteGroup& G, const SearchOptions& opts = {});
std::vector<Idempotent> pcis_by_ssp(const FiniteGroup& G, const SearchOptions& opts = {});

// True iff the extremely strong pairs exhaust Q[G] (sum of dims = |G|).
bool is_normally_monomial(const FiniteGroup& G, const SearchOptions& opts = {});

// True iff the strong pairs exhaust Q[G].
bool is_strongly_monomial(const FiniteGroup& G, const SearchOptions& opts = {});

}  // namespace shoda
