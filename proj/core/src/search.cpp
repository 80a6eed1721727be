#include "shoda/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace shoda {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool is_normal_in(const Subgroup& H, const Subgroup& ambient) {
    const FiniteGroup& G = H.parent();
    for (uint32_t n : ambient.witnesses())
        for (uint32_t h : H.witnesses())
            if (!H.contains(G.conjugate(n, h))) return false;
    return true;
}

std::vector<AlgebraElement> conjugates_over_transversal(const FiniteGroup& G, const Subgroup& N,
                                                        const AlgebraElement& eps) {
    std::vector<AlgebraElement> conjs;
    std::vector<bool> covered(G.order(), false);
    for (uint32_t g = 0; g < G.order(); ++g) {
        if (covered[g]) continue;
        for (uint32_t n : N.ordinals()) covered[G.mult(g, n)] = true;
        AlgebraElement c = conjugate(eps, g);
        if (std::find(conjs.begin(), conjs.end(), c) == conjs.end())
            conjs.push_back(std::move(c));
    }
    return conjs;
}

bool pairwise_orthogonal(const std::vector<AlgebraElement>& es) {
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            if (!are_orthogonal(es[i], es[j])) return false;
    return true;
}

bool quotient_centre_is_cyclic(const Subgroup& whole, const Subgroup& N) {
    Quotient Q(whole, N);
    return Q.image_is_cyclic(Q.center());
}

// Normal subgroups D of A with A/D cyclic. Such D contain the derived
// subgroup of A, so they correspond to subgroups of the abelian quotient
// A/A'; those are enumerated by join closure of cyclic subgroups.
std::vector<Subgroup> cyclic_quotient_normals(const Subgroup& A) {
    const FiniteGroup& G = A.parent();
    Subgroup derived = commutator_subgroup_of(A);
    Quotient Q(A, derived);

    auto qclosure = [&](const std::vector<uint32_t>& gens) {
        std::vector<bool> in(Q.order(), false);
        std::vector<uint32_t> mem{0};
        in[0] = true;
        for (size_t qi = 0; qi < mem.size(); ++qi)
            for (uint32_t g : gens) {
                uint32_t z = Q.mult(mem[qi], g);
                if (!in[z]) {
                    in[z] = true;
                    mem.push_back(z);
                }
            }
        std::sort(mem.begin(), mem.end());
        return mem;
    };

    std::set<std::vector<uint32_t>> seen;
    std::vector<std::vector<uint32_t>> qsubs;
    std::vector<std::vector<uint32_t>> qgens;
    qsubs.push_back({0});
    qgens.push_back({});
    seen.insert(qsubs.front());
    for (size_t i = 0; i < qsubs.size(); ++i) {
        const auto sub = qsubs[i];
        const auto gens = qgens[i];
        for (uint32_t c = 1; c < Q.order(); ++c) {
            if (std::binary_search(sub.begin(), sub.end(), c)) continue;
            auto g2 = gens;
            g2.push_back(c);
            auto joined = qclosure(g2);
            if (seen.insert(joined).second) {
                qsubs.push_back(std::move(joined));
                qgens.push_back(std::move(g2));
            }
        }
    }

    std::vector<Subgroup> result;
    for (const auto& sub : qsubs) {
        std::vector<bool> in_sub(Q.order(), false);
        for (uint32_t c : sub) in_sub[c] = true;
        std::vector<uint32_t> ords;
        for (uint32_t a : A.ordinals())
            if (in_sub[Q.coset_of(a)]) ords.push_back(a);
        Subgroup D(G, std::move(ords));
        if (Quotient(A, D).is_cyclic()) result.push_back(std::move(D));
    }
    std::sort(result.begin(), result.end(), Subgroup::canonical_less);
    return result;
}

// Visit the conjugacy-class representatives of {D in NA : core_G(D) = N}
// that pass the maximal-abelian test; stop early when emit returns false.
template <typename Emit>
void for_each_s_n_pair(const FiniteGroup& G, const Subgroup& A, const Subgroup& N,
                       const std::vector<Subgroup>& NA, Emit emit) {
    std::set<std::vector<uint32_t>> used;
    for (const Subgroup& D : NA) {
        if (used.count(D.ordinals())) continue;
        if (!(core(G, D) == N)) continue;
        std::vector<Subgroup> orbit = subgroup_conjugates(G, D);
        for (const Subgroup& m : orbit) used.insert(m.ordinals());
        const Subgroup& T = orbit.front();
        Subgroup NgT = normalizer(G, T);
        Quotient QT(NgT, T);
        if (!is_maximal_abelian_in(QT, QT.image_of(A))) continue;
        if (!emit(T)) return;
    }
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::normally_monomial: return "normally_monomial";
        case Verdict::strongly_monomial_only: return "strongly_monomial_only";
        default: return "neither_or_unknown";
    }
}

std::string to_string(PairKind k) {
    return k == PairKind::extremely_strong ? "extremely_strong" : "strong";
}

bool is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (!H.contains(K)) return false;
    Subgroup N = normalizer(G, K);
    if (!N.contains(H)) return false;     // K normal in H
    if (!is_normal_in(H, N)) return false;  // H normal in N_G(K)
    Quotient Q(N, K);
    auto img = Q.image_of(H);
    if (!Q.image_is_cyclic(img)) return false;
    if (!is_maximal_abelian_in(Q, img)) return false;
    return pairwise_orthogonal(conjugates_over_transversal(G, N, epsilon(H, K)));
}

std::vector<ShodaPair> compute_S_N(const FiniteGroup& G, const Subgroup& N,
                                   const SearchOptions& opts) {
    Subgroup whole = Subgroup::whole(G);
    if (N.is_whole())
        return {ShodaPair{whole, whole, PairKind::extremely_strong, dim_formula(G, whole, whole)}};

    if (opts.use_lemma1 && N.contains(commutator_subgroup(G))) {
        if (Quotient(whole, N).is_cyclic())
            return {ShodaPair{whole, N, PairKind::extremely_strong, dim_formula(G, whole, N)}};
        return {};
    }
    if (opts.use_lemma3 && !quotient_centre_is_cyclic(whole, N)) return {};

    Subgroup A = max_abelian_normal_above(G, N, opts.reverse_a_tiebreak);
    if (A == N) return {};
    Quotient Q(whole, N);
    auto img_a = Q.image_of(A);
    if (opts.use_lemma1 && Q.image_is_cyclic(img_a)) {
        if (is_maximal_abelian_in(Q, img_a))
            return {ShodaPair{A, N, PairKind::extremely_strong, dim_formula(G, A, N)}};
        return {};
    }
    std::vector<ShodaPair> pairs;
    std::vector<Subgroup> NA = cyclic_quotient_normals(A);
    for_each_s_n_pair(G, A, N, NA, [&](const Subgroup& T) {
        pairs.push_back(ShodaPair{A, T, PairKind::extremely_strong, dim_formula(G, A, T)});
        return true;
    });
    return pairs;
}

SearchReport ext_strong_shoda_pairs(const FiniteGroup& G, const SearchOptions& opts) {
    const auto t0 = Clock::now();
    SearchReport rep;
    const std::size_t order = G.order();
    Subgroup whole = Subgroup::whole(G);
    std::vector<Subgroup> normals = normal_subgroups_decreasing(G);

    auto add_pair = [&](const Subgroup& H, const Subgroup& K) {
        std::size_t d = dim_formula(G, H, K);
        rep.pairs.push_back(ShodaPair{H, K, PairKind::extremely_strong, d});
        rep.sum_dim += d;
        if (opts.collect_idempotents) rep.idempotents.push_back(e_of(G, H, K));
    };
    auto done = [&] { return rep.sum_dim == order; };

    add_pair(whole, whole);

    // Abelian-quotient shortcut first; everything else is deferred.
    Subgroup derived = commutator_subgroup(G);
    std::vector<Subgroup> deferred;
    if (!done()) {
        for (const Subgroup& N : normals) {
            if (N.is_whole()) continue;
            ++rep.stats.normal_subgroups_visited;
            if (opts.use_lemma1 && N.contains(derived)) {
                ++rep.stats.lemma1_fast_path;
                if (Quotient(whole, N).is_cyclic()) {
                    add_pair(whole, N);
                    if (done()) break;
                }
            } else {
                deferred.push_back(N);
            }
        }
    }

    // Cyclic-centre filter.
    std::vector<Subgroup> survivors;
    if (!done()) {
        for (const Subgroup& N : deferred) {
            if (opts.use_lemma3 && !quotient_centre_is_cyclic(whole, N)) {
                ++rep.stats.lemma3_pruned;
                continue;
            }
            survivors.push_back(N);
        }
    }

    // Fix A_N; cyclic A_N/N is settled immediately, the rest is grouped by A
    // so the cyclic-quotient list of each A is computed only once.
    struct Deferred {
        Subgroup A;
        Subgroup N;
    };
    std::vector<Deferred> list0;
    if (!done()) {
        for (const Subgroup& N : survivors) {
            Subgroup A = max_abelian_normal_above(G, N, normals, opts.reverse_a_tiebreak);
            if (A == N) continue;
            Quotient Q(whole, N);
            auto img_a = Q.image_of(A);
            if (opts.use_lemma1 && Q.image_is_cyclic(img_a)) {
                ++rep.stats.lemma1_fast_path;
                if (is_maximal_abelian_in(Q, img_a)) {
                    add_pair(A, N);
                    if (done()) break;
                }
            } else {
                list0.push_back(Deferred{A, std::move(N)});
            }
        }
    }
    while (!list0.empty() && !done()) {
        const Subgroup A = list0.front().A;
        std::vector<Subgroup> NA = cyclic_quotient_normals(A);
        std::vector<Deferred> batch, rest;
        for (Deferred& d : list0)
            (d.A == A ? batch : rest).push_back(std::move(d));
        list0 = std::move(rest);
        for (const Deferred& d : batch) {
            if (done()) break;
            for_each_s_n_pair(G, A, d.N, NA, [&](const Subgroup& T) {
                add_pair(A, T);
                return !done();
            });
        }
    }

    rep.complete = done();
    rep.verdict = rep.complete ? Verdict::normally_monomial : Verdict::neither_or_unknown;
    rep.stats.wall_ms = ms_since(t0);
    return rep;
}

namespace {

// Shared phase-2 machinery for strong_shoda_pairs and the direct baseline.
// Scans the given subgroup classes; for each representative K searches the
// subgroups H with K <= H <= N_G(K) (smallest first) and keeps every pair
// that realizes a primitive central idempotent not seen before.
void scan_classes_for_pairs(const FiniteGroup& G, const std::vector<SubgroupClass>& classes,
                            const std::vector<Subgroup>& all_subs, const SearchOptions& opts,
                            bool exclude_normal_H, SearchReport& rep,
                            std::vector<AlgebraElement>& pcis) {
    const std::size_t order = G.order();
    Subgroup whole = Subgroup::whole(G);

    std::vector<const SubgroupClass*> order_of_visit;
    for (const SubgroupClass& c : classes) order_of_visit.push_back(&c);
    std::sort(order_of_visit.begin(), order_of_visit.end(),
              [](const SubgroupClass* a, const SubgroupClass* b) {
                  if (a->representative.order() != b->representative.order())
                      return a->representative.order() > b->representative.order();
                  return a->representative.ordinals() < b->representative.ordinals();
              });

    for (const SubgroupClass* cls : order_of_visit) {
        if (rep.sum_dim == order) break;
        ++rep.stats.classes_scanned;
        const Subgroup& K = cls->representative;
        if (opts.use_lemma3) {
            Subgroup N0 = core(G, K);
            if (!quotient_centre_is_cyclic(whole, N0)) {
                ++rep.stats.lemma3_pruned;
                continue;
            }
        }
        Subgroup N = normalizer(G, K);
        Quotient Q(N, K);
        for (const Subgroup& H : all_subs) {
            if (rep.sum_dim == order) break;
            if (H.order() < K.order()) continue;
            if (!H.contains(K) || !N.contains(H)) continue;
            bool h_normal = H.is_normal();
            if (exclude_normal_H && h_normal) continue;
            if (!is_normal_in(H, N)) continue;
            auto img = Q.image_of(H);
            if (!Q.image_is_cyclic(img)) continue;
            if (!is_maximal_abelian_in(Q, img)) continue;
            auto conjs = conjugates_over_transversal(G, N, epsilon(H, K));
            if (!pairwise_orthogonal(conjs)) continue;
            AlgebraElement e = AlgebraElement::zero(G);
            for (const AlgebraElement& c : conjs) e = e + c;
            if (std::find(pcis.begin(), pcis.end(), e) != pcis.end()) continue;
            pcis.push_back(e);
            std::size_t d = dim_formula(G, H, K);
            rep.pairs.push_back(ShodaPair{
                H, K, h_normal ? PairKind::extremely_strong : PairKind::strong, d});
            rep.sum_dim += d;
            if (opts.collect_idempotents)
                rep.idempotents.emplace_back(std::move(e), "e(G,H,K)", std::make_pair(H, K));
        }
    }
}

}  // namespace

SearchReport strong_shoda_pairs(const FiniteGroup& G, const SearchOptions& opts) {
    const auto t0 = Clock::now();
    SearchOptions essp_opts = opts;
    essp_opts.collect_idempotents = false;
    SearchReport rep = ext_strong_shoda_pairs(G, essp_opts);

    if (rep.complete) {
        // Normally monomial: the extremely strong pairs already realize every
        // primitive central idempotent; the lattice is never touched.
        if (opts.collect_idempotents)
            for (const ShodaPair& p : rep.pairs) rep.idempotents.push_back(e_of(G, p.H, p.K));
        rep.verdict = Verdict::normally_monomial;
        rep.stats.wall_ms = ms_since(t0);
        return rep;
    }

    std::vector<AlgebraElement> pcis;
    for (const ShodaPair& p : rep.pairs) {
        Idempotent e = e_of(G, p.H, p.K);
        if (opts.collect_idempotents) rep.idempotents.push_back(e);
        pcis.push_back(e.element());
    }

    std::vector<SubgroupClass> classes = conjugacy_classes_of_subgroups(G, opts.limits);
    rep.stats.lattice_computations += 1;
    std::vector<Subgroup> all_subs;
    for (const SubgroupClass& c : classes)
        all_subs.insert(all_subs.end(), c.members.begin(), c.members.end());
    rep.stats.subgroups_enumerated += all_subs.size();
    std::sort(all_subs.begin(), all_subs.end(), Subgroup::canonical_less);

    std::vector<SubgroupClass> non_normal;
    for (SubgroupClass& c : classes)
        if (!c.representative.is_normal()) non_normal.push_back(std::move(c));

    scan_classes_for_pairs(G, non_normal, all_subs, opts, /*exclude_normal_H=*/true, rep, pcis);

    rep.complete = rep.sum_dim == G.order();
    rep.verdict = rep.complete ? Verdict::strongly_monomial_only : Verdict::neither_or_unknown;
    rep.stats.wall_ms = ms_since(t0);
    return rep;
}

SearchReport direct_strong_shoda_pairs(const FiniteGroup& G, const SearchOptions& opts) {
    const auto t0 = Clock::now();
    SearchReport rep;
    SearchOptions scan_opts = opts;
    scan_opts.use_lemma3 = false;  // the baseline has no pruning lemmas

    std::vector<SubgroupClass> classes = conjugacy_classes_of_subgroups(G, opts.limits);
    rep.stats.lattice_computations += 1;
    std::vector<Subgroup> all_subs;
    for (const SubgroupClass& c : classes)
        all_subs.insert(all_subs.end(), c.members.begin(), c.members.end());
    rep.stats.subgroups_enumerated += all_subs.size();
    std::sort(all_subs.begin(), all_subs.end(), Subgroup::canonical_less);

    std::vector<AlgebraElement> pcis;
    scan_classes_for_pairs(G, classes, all_subs, scan_opts, /*exclude_normal_H=*/false, rep,
                           pcis);

    rep.complete = rep.sum_dim == G.order();
    if (!rep.complete) {
        rep.verdict = Verdict::neither_or_unknown;
    } else {
        bool all_essp = std::all_of(rep.pairs.begin(), rep.pairs.end(), [](const ShodaPair& p) {
            return p.kind == PairKind::extremely_strong;
        });
        rep.verdict = all_essp ? Verdict::normally_monomial : Verdict::strongly_monomial_only;
    }
    rep.stats.wall_ms = ms_since(t0);
    return rep;
}

std::vector<Idempotent> pcis_by_essp(const FiniteGroup& G, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.collect_idempotents = true;
    return ext_strong_shoda_pairs(G, o).idempotents;
}

std::vector<Idempotent> pcis_by_ssp(const FiniteGroup& G, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.collect_idempotents = true;
    return strong_shoda_pairs(G, o).idempotents;
}

bool is_normally_monomial(const FiniteGroup& G, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.collect_idempotents = false;
    return ext_strong_shoda_pairs(G, o).sum_dim == G.order();
}

bool is_strongly_monomial(const FiniteGroup& G, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.collect_idempotents = false;
    return strong_shoda_pairs(G, o).sum_dim == G.order();
}

}  // namespace shoda
