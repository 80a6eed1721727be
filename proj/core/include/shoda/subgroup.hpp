#pragma once

#include <cstdint>
#include <vector>

#include "shoda/group.hpp"

namespace shoda {

// A subgroup of a FiniteGroup, stored as a sorted list of element ordinals
// plus a membership mask. The sorted ordinal list is the canonical
// serialization; the canonical subgroup order compares by size, then
// lexicographically on those lists.
class Subgroup {
public:
    // `ordinals` must already be a subgroup (closed, containing 0). The
    // witnesses are a generating set; when omitted they are recovered
    // greedily so every Subgroup can be regenerated from them.
    Subgroup(const FiniteGroup& parent, std::vector<uint32_t> ordinals,
             std::vector<uint32_t> witnesses = {});

    static Subgroup trivial(const FiniteGroup& G);
    static Subgroup whole(const FiniteGroup& G);
    static Subgroup generated(const FiniteGroup& G, const std::vector<uint32_t>& gen_ordinals);
    static Subgroup generated_perms(const FiniteGroup& G, const std::vector<Perm>& gens);

    const FiniteGroup& parent() const { return *parent_; }
    std::size_t order() const { return ordinals_.size(); }
    std::size_t index() const { return parent_->order() / order(); }
    const std::vector<uint32_t>& ordinals() const { return ordinals_; }
    const std::vector<uint32_t>& witnesses() const { return witnesses_; }
    bool contains(uint32_t ordinal) const { return mask_[ordinal]; }
    bool contains(const Subgroup& other) const;
    bool is_trivial() const { return order() == 1; }
    bool is_whole() const { return order() == parent_->order(); }

    bool operator==(const Subgroup& o) const {
        return parent_ == o.parent_ && ordinals_ == o.ordinals_;
    }

    Subgroup conjugated_by(uint32_t g) const;
    bool is_normal() const;  // in the parent group
    bool is_abelian() const;
    bool is_cyclic() const;  // maximal element order equals the order

    // Minimal generating set found greedily over ascending ordinals;
    // deterministic, used for serialization.
    std::vector<uint32_t> canonical_generators() const;

    static bool canonical_less(const Subgroup& a, const Subgroup& b);

private:
    const FiniteGroup* parent_;
    std::vector<uint32_t> ordinals_;  // sorted ascending
    std::vector<bool> mask_;
    std::vector<uint32_t> witnesses_;
};

Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup core(const FiniteGroup& G, const Subgroup& K);
Subgroup center(const FiniteGroup& G);
Subgroup commutator_subgroup(const FiniteGroup& G);
Subgroup commutator_subgroup_of(const Subgroup& H);
bool is_solvable(const FiniteGroup& G);

// Smallest subgroup of H that is normal in H and contains the seeds.
Subgroup normal_closure_in(const Subgroup& H, const std::vector<uint32_t>& seed_ordinals);

// Orbit of H under conjugation by G, sorted canonically.
std::vector<Subgroup> subgroup_conjugates(const FiniteGroup& G, const Subgroup& H);

// Every subgroup of G exactly once, sorted canonically. Solvable groups are
// handled by cyclic extension (adjoining elements of prime order in the
// normalizer); non-solvable groups fall back to closing the set of cyclic
// subgroups under joins, which also reaches perfect subgroups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, const Limits& limits = {});

struct SubgroupClass {
    Subgroup representative;  // canonically least member
    std::vector<Subgroup> members;
};

// Partition of all_subgroups(G) under conjugation, ordered by representative.
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& G,
                                                          const Limits& limits = {});

// All normal subgroups, computed as joins of conjugacy-class closures (the
// full subgroup lattice is never touched). Sorted canonically.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G);

// Sorted by decreasing order, ties broken canonically: G first, trivial last.
std::vector<Subgroup> normal_subgroups_decreasing(const FiniteGroup& G);

// All L normal in H with K < L and nothing normal strictly between.
// Requires K normal in H.
std::vector<Subgroup> minimal_normals_above(const Subgroup& H, const Subgroup& K);

// A normal subgroup A of G containing N with A/N abelian of maximal order;
// ties broken by the canonical order (reversed when asked). Requires N
// normal in G.
Subgroup max_abelian_normal_above(const FiniteGroup& G, const Subgroup& N,
                                  bool reverse_tiebreak = false);
Subgroup max_abelian_normal_above(const FiniteGroup& G, const Subgroup& N,
                                  const std::vector<Subgroup>& normals, bool reverse_tiebreak);

}  // namespace shoda
