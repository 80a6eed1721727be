#pragma once

#include <string>
#include <vector>

#include "shoda/group.hpp"

namespace shoda {

// Deterministic permutation realizations of the builtin families.
FiniteGroup cyclic_group(uint32_t n, const Limits& limits = {});
FiniteGroup dihedral_group(uint32_t order, const Limits& limits = {});    // order 2n
FiniteGroup dicyclic_group(uint32_t order, const Limits& limits = {});    // order 4n
FiniteGroup symmetric_group(uint32_t n, const Limits& limits = {});
FiniteGroup alternating_group(uint32_t n, const Limits& limits = {});
FiniteGroup elementary_abelian_group(uint32_t p, uint32_t k, const Limits& limits = {});
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, const Limits& limits = {});

// Parses a group spec:
//   cyclic:N | dihedral:N | dicyclic:N | symmetric:N | alternating:N
//   elementary_abelian:P^K
//   direct_product(SPEC,SPEC,...)
//   perm:DEGREE:GEN,GEN,...          (cycle notation, 0-based points)
//   @FILE or a path to an existing file
// Throws ParseError on malformed input and SizeLimitError past the caps.
FiniteGroup parse_group(const std::string& spec, const Limits& limits = {});

// Group file: first line "degree: n", then one generator per line in cycle
// notation. Blank lines and lines starting with '#' are ignored.
FiniteGroup group_from_file(const std::string& path, const Limits& limits = {});

}  // namespace shoda
