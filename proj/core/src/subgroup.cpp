#include "shoda/subgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace shoda {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> closure(const FiniteGroup& G, const std::vector<uint32_t>& gens) {
    std::vector<bool> in(G.order(), false);
    std::vector<uint32_t> members{0};
    in[0] = true;
    for (size_t qi = 0; qi < members.size(); ++qi)
        for (uint32_t g : gens) {
            uint32_t z = G.mult(members[qi], g);
            if (!in[z]) {
                in[z] = true;
                members.push_back(z);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<uint32_t> dedup_gens(std::vector<uint32_t> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (!gens.empty() && gens.front() == 0) gens.erase(gens.begin());
    return gens;
}

}  // namespace

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<uint32_t> ordinals,
                   std::vector<uint32_t> witnesses)
    : parent_(&parent), ordinals_(std::move(ordinals)), witnesses_(std::move(witnesses)) {
    mask_.assign(parent.order(), false);
    for (uint32_t o : ordinals_) mask_[o] = true;
    if (ordinals_.empty() || ordinals_[0] != 0)
        throw std::invalid_argument("subgroup must contain the identity");
    if (witnesses_.empty() && order() > 1) witnesses_ = canonical_generators();
}

Subgroup Subgroup::trivial(const FiniteGroup& G) { return Subgroup(G, {0}, {}); }

Subgroup Subgroup::whole(const FiniteGroup& G) {
    std::vector<uint32_t> all(G.order());
    for (uint32_t i = 0; i < G.order(); ++i) all[i] = i;
    return Subgroup(G, std::move(all), G.generator_ordinals());
}

Subgroup Subgroup::generated(const FiniteGroup& G, const std::vector<uint32_t>& gen_ordinals) {
    return Subgroup(G, closure(G, gen_ordinals), dedup_gens(gen_ordinals));
}

Subgroup Subgroup::generated_perms(const FiniteGroup& G, const std::vector<Perm>& gens) {
    std::vector<uint32_t> ords;
    ords.reserve(gens.size());
    for (const Perm& p : gens) ords.push_back(G.index_of(p));
    return generated(G, ords);
}

bool Subgroup::contains(const Subgroup& other) const {
    if (other.order() > order()) return false;
    for (uint32_t o : other.ordinals_)
        if (!mask_[o]) return false;
    return true;
}

Subgroup Subgroup::conjugated_by(uint32_t g) const {
    std::vector<uint32_t> ords;
    ords.reserve(order());
    for (uint32_t o : ordinals_) ords.push_back(parent_->conjugate(g, o));
    std::sort(ords.begin(), ords.end());
    std::vector<uint32_t> wits;
    wits.reserve(witnesses_.size());
    for (uint32_t w : witnesses_) wits.push_back(parent_->conjugate(g, w));
    return Subgroup(*parent_, std::move(ords), std::move(wits));
}

bool Subgroup::is_normal() const {
    for (uint32_t g : parent_->generator_ordinals())
        for (uint32_t w : witnesses_)
            if (!mask_[parent_->conjugate(g, w)]) return false;
    return true;
}

bool Subgroup::is_abelian() const {
    for (uint32_t a : witnesses_)
        for (uint32_t b : witnesses_)
            if (parent_->mult(a, b) != parent_->mult(b, a)) return false;
    return true;
}

bool Subgroup::is_cyclic() const {
    for (uint32_t o : ordinals_)
        if (parent_->element_order(o) == order()) return true;
    return false;
}

std::vector<uint32_t> Subgroup::canonical_generators() const {
    std::vector<uint32_t> gens;
    std::vector<bool> have(parent_->order(), false);
    have[0] = true;
    size_t have_count = 1;
    for (uint32_t o : ordinals_) {
        if (have[o]) continue;
        gens.push_back(o);
        // grow the generated set in place
        std::vector<uint32_t> members;
        for (uint32_t m = 0; m < parent_->order(); ++m)
            if (have[m]) members.push_back(m);
        for (size_t qi = 0; qi < members.size(); ++qi)
            for (uint32_t g : gens) {
                uint32_t z = parent_->mult(members[qi], g);
                if (!have[z]) {
                    have[z] = true;
                    ++have_count;
                    members.push_back(z);
                }
            }
        if (have_count == order()) break;
    }
    return gens;
}

bool Subgroup::canonical_less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.ordinals_ < b.ordinals_;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
    std::vector<uint32_t> ords;
    for (uint32_t o : a.ordinals())
        if (b.contains(o)) ords.push_back(o);
    return Subgroup(a.parent(), std::move(ords));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    std::vector<uint32_t> gens = a.witnesses();
    gens.insert(gens.end(), b.witnesses().begin(), b.witnesses().end());
    return Subgroup::generated(a.parent(), gens);
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
    std::vector<uint32_t> ords;
    for (uint32_t g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (uint32_t w : H.witnesses())
            if (!H.contains(G.conjugate(g, w))) {
                ok = false;
                break;
            }
        if (ok) ords.push_back(g);
    }
    return Subgroup(G, std::move(ords));
}

Subgroup core(const FiniteGroup& G, const Subgroup& K) {
    std::vector<uint32_t> ords;
    for (uint32_t k : K.ordinals()) {
        bool ok = true;
        for (uint32_t g = 0; g < G.order() && ok; ++g)
            if (!K.contains(G.conjugate(g, k))) ok = false;
        if (ok) ords.push_back(k);
    }
    return Subgroup(G, std::move(ords));
}

Subgroup center(const FiniteGroup& G) {
    std::vector<uint32_t> ords;
    for (uint32_t x = 0; x < G.order(); ++x) {
        bool ok = true;
        for (uint32_t g : G.generator_ordinals())
            if (G.mult(x, g) != G.mult(g, x)) {
                ok = false;
                break;
            }
        if (ok) ords.push_back(x);
    }
    return Subgroup(G, std::move(ords));
}

namespace {

Subgroup commutators_closure(const FiniteGroup& G, const std::vector<uint32_t>& members) {
    std::vector<uint32_t> gens;
    std::set<uint32_t> seen;
    for (uint32_t a : members)
        for (uint32_t b : members) {
            uint32_t c = G.mult(G.mult(G.inverse(a), G.inverse(b)), G.mult(a, b));
            if (c != 0 && seen.insert(c).second) gens.push_back(c);
        }
    return Subgroup::generated(G, gens);
}

}  // namespace

Subgroup commutator_subgroup(const FiniteGroup& G) {
    std::vector<uint32_t> all(G.order());
    for (uint32_t i = 0; i < G.order(); ++i) all[i] = i;
    return commutators_closure(G, all);
}

Subgroup commutator_subgroup_of(const Subgroup& H) {
    return commutators_closure(H.parent(), H.ordinals());
}

bool is_solvable(const FiniteGroup& G) {
    Subgroup d = commutator_subgroup(G);
    while (true) {
        if (d.is_trivial()) return true;
        Subgroup next = commutator_subgroup_of(d);
        if (next.order() == d.order()) return false;
        d = next;
    }
}

Subgroup normal_closure_in(const Subgroup& H, const std::vector<uint32_t>& seed_ordinals) {
    std::vector<uint32_t> gens = seed_ordinals;
    Subgroup S = Subgroup::generated(H.parent(), gens);
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint32_t s : S.ordinals()) {
            for (uint32_t w : H.witnesses()) {
                uint32_t c = H.parent().conjugate(w, s);
                if (!S.contains(c)) {
                    gens.push_back(c);
                    changed = true;
                }
            }
        }
        if (changed) S = Subgroup::generated(H.parent(), gens);
    }
    return S;
}

std::vector<Subgroup> subgroup_conjugates(const FiniteGroup& G, const Subgroup& H) {
    std::vector<Subgroup> orbit{H};
    std::set<std::vector<uint32_t>> seen{H.ordinals()};
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
        for (uint32_t g : G.generator_ordinals()) {
            Subgroup c = orbit[qi].conjugated_by(g);
            if (seen.insert(c.ordinals()).second) orbit.push_back(std::move(c));
        }
    }
    std::sort(orbit.begin(), orbit.end(), Subgroup::canonical_less);
    return orbit;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, const Limits& limits) {
    std::set<std::vector<uint32_t>> seen;
    std::vector<Subgroup> subs;
    auto add = [&](Subgroup s) -> bool {
        if (!seen.insert(s.ordinals()).second) return false;
        if (subs.size() >= limits.max_subgroups)
            throw SizeLimitError("subgroup lattice exceeds cap of " +
                                 std::to_string(limits.max_subgroups));
        subs.push_back(std::move(s));
        return true;
    };
    add(Subgroup::trivial(G));

    if (is_solvable(G)) {
        // Cyclic extension: a subgroup V covers U when U is normal in V with
        // prime cyclic quotient, and every subgroup of a solvable group sits
        // at the top of such a chain.
        for (size_t i = 0; i < subs.size(); ++i) {
            const Subgroup U = subs[i];
            Subgroup N = normalizer(G, U);
            for (uint32_t n : N.ordinals()) {
                if (U.contains(n)) continue;
                uint32_t x = n, k = 1;
                while (!U.contains(x)) {
                    x = G.mult(x, n);
                    ++k;
                }
                if (!is_prime(k)) continue;
                std::vector<uint32_t> gens = U.witnesses();
                gens.push_back(n);
                add(Subgroup::generated(G, gens));
            }
        }
    } else {
        // Join closure over cyclic subgroups; reaches perfect subgroups that
        // cyclic extension cannot.
        std::vector<uint32_t> cyclic_gens;
        {
            std::set<std::vector<uint32_t>> cyc_seen;
            for (uint32_t x = 1; x < G.order(); ++x) {
                Subgroup c = Subgroup::generated(G, {x});
                if (cyc_seen.insert(c.ordinals()).second) {
                    cyclic_gens.push_back(x);
                    add(std::move(c));
                }
            }
        }
        for (size_t i = 0; i < subs.size(); ++i) {
            const Subgroup U = subs[i];
            for (uint32_t x : cyclic_gens) {
                if (U.contains(x)) continue;
                std::vector<uint32_t> gens = U.witnesses();
                gens.push_back(x);
                add(Subgroup::generated(G, gens));
            }
        }
    }
    std::sort(subs.begin(), subs.end(), Subgroup::canonical_less);
    return subs;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& G,
                                                          const Limits& limits) {
    std::vector<Subgroup> subs = all_subgroups(G, limits);
    std::set<std::vector<uint32_t>> assigned;
    std::vector<SubgroupClass> classes;
    for (const Subgroup& s : subs) {
        if (assigned.count(s.ordinals())) continue;
        std::vector<Subgroup> orbit = subgroup_conjugates(G, s);
        for (const Subgroup& m : orbit) assigned.insert(m.ordinals());
        classes.push_back(SubgroupClass{orbit.front(), orbit});
    }
    return classes;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G) {
    auto classes = G.conjugacy_classes();
    std::vector<Subgroup> class_closures;
    std::set<std::vector<uint32_t>> closure_seen;
    for (const auto& cls : classes) {
        if (cls.size() == 1 && cls[0] == 0) continue;
        Subgroup c = Subgroup::generated(G, cls);
        if (closure_seen.insert(c.ordinals()).second) class_closures.push_back(std::move(c));
    }
    // Every normal subgroup is the join of the class closures it contains.
    std::vector<Subgroup> normals{Subgroup::trivial(G)};
    std::set<std::vector<uint32_t>> seen{normals.front().ordinals()};
    for (size_t i = 0; i < normals.size(); ++i) {
        const Subgroup U = normals[i];
        for (const Subgroup& C : class_closures) {
            if (U.contains(C)) continue;
            Subgroup V = join(U, C);
            if (seen.insert(V.ordinals()).second) normals.push_back(std::move(V));
        }
    }
    std::sort(normals.begin(), normals.end(), Subgroup::canonical_less);
    return normals;
}

std::vector<Subgroup> normal_subgroups_decreasing(const FiniteGroup& G) {
    std::vector<Subgroup> normals = normal_subgroups(G);
    std::sort(normals.begin(), normals.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() > b.order();
        return a.ordinals() < b.ordinals();
    });
    return normals;
}

std::vector<Subgroup> minimal_normals_above(const Subgroup& H, const Subgroup& K) {
    if (!H.contains(K)) throw std::invalid_argument("K must be contained in H");
    for (uint32_t w : H.witnesses())
        for (uint32_t k : K.witnesses())
            if (!K.contains(H.parent().conjugate(w, k)))
                throw std::invalid_argument("K must be normal in H");

    std::vector<Subgroup> cands;
    std::set<std::vector<uint32_t>> seen;
    for (uint32_t h : H.ordinals()) {
        if (K.contains(h)) continue;
        std::vector<uint32_t> gens = K.witnesses();
        gens.push_back(h);
        Subgroup L = normal_closure_in(H, gens);
        if (seen.insert(L.ordinals()).second) cands.push_back(std::move(L));
    }
    std::vector<Subgroup> minimal;
    for (const Subgroup& L : cands) {
        bool is_min = true;
        for (const Subgroup& M : cands)
            if (!(M == L) && L.contains(M)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(L);
    }
    std::sort(minimal.begin(), minimal.end(), Subgroup::canonical_less);
    return minimal;
}

namespace {

bool abelian_over(const FiniteGroup& G, const Subgroup& A, const Subgroup& N) {
    // A/N abelian iff all witness commutators land in N (N is normal in G).
    for (uint32_t a : A.witnesses())
        for (uint32_t b : A.witnesses()) {
            uint32_t c = G.mult(G.mult(G.inverse(a), G.inverse(b)), G.mult(a, b));
            if (!N.contains(c)) return false;
        }
    return true;
}

}  // namespace

Subgroup max_abelian_normal_above(const FiniteGroup& G, const Subgroup& N,
                                  const std::vector<Subgroup>& normals, bool reverse_tiebreak) {
    const Subgroup* best = nullptr;
    for (const Subgroup& A : normals) {
        if (!A.contains(N) || !abelian_over(G, A, N)) continue;
        if (!best || A.order() > best->order()) {
            best = &A;
        } else if (A.order() == best->order()) {
            bool less = Subgroup::canonical_less(A, *best);
            if (reverse_tiebreak ? !less : less) best = &A;
        }
    }
    // N itself always qualifies, so best is never null.
    return *best;
}

Subgroup max_abelian_normal_above(const FiniteGroup& G, const Subgroup& N,
                                  bool reverse_tiebreak) {
    return max_abelian_normal_above(G, N, normal_subgroups(G), reverse_tiebreak);
}

}  // namespace shoda
