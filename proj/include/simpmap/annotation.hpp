#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "simpmap/complex.hpp"
#include "simpmap/simplex.hpp"

namespace simpmap {

// Elements are identified by a serial number that is unique per dimension
// for the lifetime of a run; retired serials are never reused, so serial
// order within a dimension coincides with age.
using element_id = int;

struct timestamp {
    double grade = 0.0;
    std::uint64_t seq = 0;
    bool operator==(const timestamp&) const = default;
};

// Sparse Z2 vector: the sorted list of element ids with a set bit.
using zvector = std::vector<element_id>;

void zadd(zvector& a, const zvector& b);  // symmetric difference
bool zget(const zvector& a, element_id e);

// Per-dimension annotation matrices. Each p-simplex carries a sparse Z2 row
// over the active elements of dimension p; each active element is stamped
// with its birth time. Columns are never materialized: every update is
// row-driven.
class annotation_matrix {
public:
    int dim_count() const { return static_cast<int>(dims_.size()); }
    int element_count(int p) const;
    const std::map<element_id, timestamp>& elements(int p) const;
    timestamp element_birth(int p, element_id e) const;

    bool has_row(const simplex& s) const;
    const zvector& row(const simplex& s) const;  // unknown_simplex
    std::size_t row_count(int p) const;

    void add_row(const simplex& s);    // fresh zero row
    void erase_row(const simplex& s);
    void move_row(const simplex& from, const simplex& to);
    void add_to_row(const simplex& s, const zvector& w);

    // componentwise mod-2 sum over a chain of equal-dimension simplices
    zvector chain_annotation(int p, const std::vector<simplex>& chain) const;

    // Appends one element to dimension p: the marked simplex gets a lone
    // trailing 1 (its previous entries are cleared), every other row is
    // unchanged. Returns the new element.
    element_id add_element(int p, const simplex& marked, timestamp t);

    // Zeroes the cycle annotation w by adding it to every row of dimension p
    // whose entry at the youngest element of w is set, then retires that
    // element. Returns the element and its birth stamp.
    struct kill_result {
        element_id element;
        timestamp born;
    };
    kill_result kill_element(int p, const zvector& w);  // zero_vector

    // Adds the row of sigma to every codimension-1 coface of tau (sigma
    // included, so its own row becomes zero).
    void transfer(const simplicial_complex& K, const simplex& sigma, const simplex& tau);
    // raw row update behind transfer; XOR of w into all cofacets of tau
    void add_to_cofacets(const simplicial_complex& K, const simplex& tau, const zvector& w);

    // every nonzero entry of every row references an active element
    bool rows_reference_active() const;

    // one line per simplex: vertices, then element:bit pairs
    void dump(std::ostream& os) const;

private:
    struct dim_data {
        std::map<element_id, timestamp> active;
        std::unordered_map<simplex, zvector, simplex_hash> rows;
        element_id next_serial = 0;
    };

    std::vector<dim_data> dims_;

    dim_data& at(int p);
    const dim_data& at(int p) const;
};

}  // namespace simpmap
