#include "shoda/oracle.hpp"

#include <algorithm>

#include "shoda/quotient.hpp"
#include "shoda/search.hpp"

namespace shoda {

std::vector<Idempotent> linear_pci_set(const FiniteGroup& G) {
    Subgroup whole = Subgroup::whole(G);
    std::vector<Idempotent> out;
    out.emplace_back(hat(whole), "hat(G)", std::make_pair(whole, whole));
    Subgroup derived = commutator_subgroup(G);
    for (const Subgroup& N : normal_subgroups(G)) {
        if (N.is_whole() || !N.contains(derived)) continue;
        if (!Quotient(whole, N).is_cyclic()) continue;
        Idempotent e(epsilon(whole, N), "epsilon(G,N)", std::make_pair(whole, N));
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    return out;
}

VerifyReport verify_pci_set(const FiniteGroup& G, const std::vector<Idempotent>& es,
                            bool claimed_complete, const Limits& limits) {
    VerifyReport rep;
    rep.checked = es.size();
    for (std::size_t i = 0; i < es.size(); ++i) {
        const AlgebraElement& e = es[i].element();
        if (!e.is_idempotent())
            rep.failures.push_back("element " + std::to_string(i) + " is not idempotent");
        if (!is_central(e))
            rep.failures.push_back("element " + std::to_string(i) + " is not central");
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!are_orthogonal(e, es[j].element()))
                rep.failures.push_back("elements " + std::to_string(i) + " and " +
                                       std::to_string(j) + " are not orthogonal");
    }
    if (G.order() <= limits.oracle_max_order) {
        rep.dims_checked = true;
        for (const Idempotent& e : es) rep.dim_sum += dim_direct(G, e.element(), limits);
        if (rep.dim_sum > G.order())
            rep.failures.push_back("component dimensions sum to " + std::to_string(rep.dim_sum) +
                                   " > |G| = " + std::to_string(G.order()));
    }
    rep.sum_equals_one = sum_is_one(es);
    if (rep.sum_equals_one != claimed_complete)
        rep.failures.push_back(std::string("sum of idempotents ") +
                               (rep.sum_equals_one ? "equals" : "differs from") +
                               " one, but the set was claimed " +
                               (claimed_complete ? "complete" : "incomplete"));
    return rep;
}

bool count_consistency(const FiniteGroup& G) {
    return ext_strong_shoda_pairs(G).pairs.size() == rational_class_count(G);
}

}  // namespace shoda
