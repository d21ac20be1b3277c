#pragma once

#include <string>
#include <vector>

#include "simpmap/annotation.hpp"
#include "simpmap/complex.hpp"
#include "simpmap/diagram.hpp"
#include "simpmap/filtration.hpp"

namespace simpmap {

// Independent ground truth based on plain Z2 boundary-matrix arithmetic.
// Deliberately shares nothing with the annotation machinery beyond the
// complex store.

// betti_p = (#p-simplices - rank d_p) - rank d_{p+1}, entries 0..max_dim
std::vector<int> betti_numbers(const simplicial_complex& K, int max_dim);
std::vector<int> betti_numbers(const simplicial_complex& K);  // up to top_dim

// standard left-to-right column reduction; throws not_inclusion_only
persistence_diagram reduce_persistence(const filtration& f);

// cycles whose classes form a basis of H_p (unpaired reduced columns)
std::vector<std::vector<simplex>> cycle_basis(const simplicial_complex& K, int p);

// Validity audit of an annotation state against this oracle: per dimension,
// the active element count must equal the Betti number and the matrix of
// cycle-basis annotations must have full Z2 rank.
struct audit_report {
    bool ok = true;
    std::string detail;  // first failure, empty when ok
};
audit_report audit_annotations(const simplicial_complex& K, const annotation_matrix& ann);

}  // namespace simpmap
