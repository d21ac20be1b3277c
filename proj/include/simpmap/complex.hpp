#pragma once

#include <unordered_map>
#include <vector>

#include "simpmap/simplex.hpp"

namespace simpmap {

// Closed-under-faces simplex store with an incrementally maintained
// codimension-1 coface index. Simplices live in per-dimension hash maps;
// the value of each entry is the sorted list of its codim-1 cofaces.
class simplicial_complex {
public:
    explicit simplicial_complex(int max_dim = 3);

    int max_dim() const { return max_dim_; }
    int top_dim() const;
    std::size_t size() const;
    std::size_t size(int p) const;
    bool empty() const { return size() == 0; }

    bool contains(const simplex& s) const;
    bool has_vertex(vertex_id v) const { return contains(simplex{v}); }

    // errors: missing_face if a proper face is absent, duplicate_simplex if
    // already present, invalid_parameter above the dimension cap
    void insert(const simplex& s);
    // removal requires that no coface remains (keeps the store face-closed)
    void remove(const simplex& s);

    const std::vector<simplex>& cofacets(const simplex& s) const;

    std::vector<simplex> simplices(int p) const;      // sorted
    std::vector<simplex> all_simplices() const;       // sorted, dimension first
    std::vector<vertex_id> vertex_ids() const;        // sorted

    // st X: all simplices having some member of X as a face
    std::vector<simplex> star(const std::vector<simplex>& seeds) const;
    // smallest subcomplex containing X
    simplicial_complex closure(const std::vector<simplex>& seeds) const;
    // closure(star X) minus star(closure X)
    std::vector<simplex> link(const std::vector<simplex>& seeds) const;

    // missing = simplices whose insertion makes (u,v) satisfy the link
    // condition, in non-decreasing dimension, lexicographic within one
    // dimension. Every member contains both u and v.
    struct link_condition_result {
        bool satisfied = false;
        std::vector<simplex> missing;
    };
    link_condition_result link_condition(vertex_id u, vertex_id v) const;

    // Substitutes `to` for `from` in every simplex containing `from`.
    // Precondition: no simplex contains both. Simplices whose image already
    // exists are merged (deduplicated). Records are returned in ascending
    // dimension order.
    struct rename_record {
        simplex from;
        simplex to;
        bool merged = false;
    };
    std::vector<rename_record> rename_vertex(vertex_id from, vertex_id to);

    bool operator==(const simplicial_complex& other) const;
    bool subcomplex_of(const simplicial_complex& other) const;

    // integrity checks used by tests: exhaustive face-subset scan and a full
    // rebuild of the coface index
    bool check_face_closure() const;
    bool check_cofacet_index() const;

    template <class F>
    void for_each(F&& f) const {
        for (const auto& level : dims_)
            for (const auto& [s, cof] : level) f(s);
    }

private:
    using level_map = std::unordered_map<simplex, std::vector<simplex>, simplex_hash>;

    int max_dim_;
    std::vector<level_map> dims_;

    const level_map& level(int p) const;
    level_map& level(int p);
};

}  // namespace simpmap
