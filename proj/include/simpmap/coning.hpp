#pragma once

#include <vector>

#include "simpmap/complex.hpp"

namespace simpmap {

// Verification-side machinery for elementary collapses: the production
// collapse path never builds the augmented complex, these exist to
// cross-check it.

struct coning_result {
    simplicial_complex khat;     // K together with u * closure(star v)
    std::vector<simplex> added;  // sorted; the cone simplices absent from K
};

// khat = K plus {s + u : s in closure(star v)}; dimension cap grows by one
coning_result cone_complex(const simplicial_complex& K, vertex_id u, vertex_id v);

// the simplicial image {f(s) : s in K} as a complex
simplicial_complex image_complex(const simplicial_complex& K, const vertex_map& f);

// f and g must be simplicial K1 -> K2 (checked); true iff the union
// f(s) + g(s) is a simplex of K2 for every s in K1
bool is_contiguous(const simplicial_complex& K1, const simplicial_complex& K2,
                   const vertex_map& f, const vertex_map& g);

}  // namespace simpmap
