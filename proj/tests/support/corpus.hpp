#pragma once

// The standing test corpus: all builtin families up to order 48 (which
// covers the cyclic groups up to order 30 and beyond) plus a fixed sample of
// direct products.

#include <string>
#include <vector>

namespace shoda::testing {

inline std::vector<std::string> corpus_specs() {
    std::vector<std::string> specs;
    for (int n = 1; n <= 48; ++n) specs.push_back("cyclic:" + std::to_string(n));
    for (int n = 2; n <= 48; n += 2) specs.push_back("dihedral:" + std::to_string(n));
    for (int n = 8; n <= 48; n += 4) specs.push_back("dicyclic:" + std::to_string(n));
    for (int n = 1; n <= 4; ++n) specs.push_back("symmetric:" + std::to_string(n));
    for (int n = 1; n <= 4; ++n) specs.push_back("alternating:" + std::to_string(n));
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        int pk = p;
        for (int k = 1; pk <= 48; ++k, pk *= p)
            specs.push_back("elementary_abelian:" + std::to_string(p) + "^" + std::to_string(k));
    }
    for (const char* s : {
             "direct_product(cyclic:2,cyclic:4)",
             "direct_product(cyclic:2,cyclic:6)",
             "direct_product(symmetric:3,cyclic:2)",
             "direct_product(dihedral:8,cyclic:2)",
             "direct_product(dicyclic:8,cyclic:3)",
             "direct_product(alternating:4,cyclic:2)",
             "direct_product(symmetric:3,cyclic:4)",
             "direct_product(symmetric:3,symmetric:3)",
             "direct_product(cyclic:3,cyclic:9)",
         })
        specs.push_back(s);
    return specs;
}

}  // namespace shoda::testing
