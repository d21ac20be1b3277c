#pragma once

#include <vector>

#include "simpmap/simplex.hpp"

namespace simpmap {

// One graded elementary step: insert a single simplex, or collapse the
// vertex pair (u,v) onto u.
struct elementary_op {
    enum class op_kind { insert, collapse };

    op_kind kind = op_kind::insert;
    simplex sigma;            // insert only
    vertex_id u = -1, v = -1; // collapse only
    double grade = 0.0;

    static elementary_op make_insert(simplex s, double grade) {
        elementary_op op;
        op.kind = op_kind::insert;
        op.sigma = std::move(s);
        op.grade = grade;
        return op;
    }
    static elementary_op make_collapse(vertex_id u, vertex_id v, double grade) {
        elementary_op op;
        op.kind = op_kind::collapse;
        op.u = u;
        op.v = v;
        op.grade = grade;
        return op;
    }

    bool is_insert() const { return kind == op_kind::insert; }
    bool is_collapse() const { return kind == op_kind::collapse; }
};

struct filtration {
    std::vector<elementary_op> ops;

    void validate() const;          // non-decreasing grades, u != v
    bool inclusion_only() const;
    bool has_collapse() const { return !inclusion_only(); }
    int max_insert_dim() const;
};

}  // namespace simpmap
