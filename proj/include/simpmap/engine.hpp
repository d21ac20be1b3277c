#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "simpmap/annotation.hpp"
#include "simpmap/complex.hpp"
#include "simpmap/diagram.hpp"
#include "simpmap/filtration.hpp"

namespace simpmap {

struct engine_event {
    enum class kind { birth, death };
    kind what = kind::birth;
    int dim = 0;
    timestamp at;     // when the event happened
    timestamp birth;  // deaths only: stamp of the killed element
};

struct pair_record {
    int dim = 0;
    timestamp birth;
    timestamp death;  // ignored when essential
    bool essential = false;
};

// Per-collapse diagnostics, collected when record_collapse_audits is on.
struct collapse_audit {
    std::size_t op_index = 0;
    vertex_id u = -1, v = -1;
    double grade = 0.0;
    std::vector<simplex> repairs;  // inserted to satisfy the link condition
    std::vector<std::pair<simplex, zvector>> vanishing_pre;  // rows before transfer
    std::size_t mirror_pairs = 0;
    bool vanishing_rows_zero = false;
    bool mirror_rows_equal = false;
};

struct engine_options {
    bool lenient = false;                 // auto-insert missing faces at the same grade
    bool record_collapse_audits = false;
};

// Replays graded elementary operations while maintaining the annotation
// matrices, and emits persistence pairs.
class engine {
public:
    explicit engine(int max_dim_cap, engine_options opts = {});

    std::vector<engine_event> apply(const elementary_op& op);
    std::vector<engine_event> insert_simplex(const simplex& s, double grade);
    std::vector<engine_event> collapse(vertex_id u, vertex_id v, double grade);

    const simplicial_complex& complex() const { return complex_; }
    const annotation_matrix& annotations() const { return ann_; }
    annotation_matrix& mutable_annotations() { return ann_; }  // tests / negative controls

    const std::vector<pair_record>& finished_pairs() const { return finished_; }
    std::vector<pair_record> all_pairs() const;  // finished plus open essentials
    persistence_diagram diagram() const;         // grade view, zero pairs kept

    const std::vector<collapse_audit>& collapse_audits() const { return audits_; }
    std::size_t ops_applied() const { return ops_applied_; }

private:
    simplicial_complex complex_;
    annotation_matrix ann_;
    engine_options opts_;
    std::uint64_t next_seq_ = 0;
    double last_grade_ = 0.0;
    bool any_op_ = false;
    std::size_t ops_applied_ = 0;
    std::vector<pair_record> finished_;
    std::set<vertex_id> retired_;
    std::vector<collapse_audit> audits_;

    timestamp stamp(double grade);
    void check_grade(double grade);
    engine_event do_insert(const simplex& s, double grade);
    void ensure_faces(const simplex& s, double grade, std::vector<engine_event>& events);
};

// convenience: replay a whole filtration (dimension cap derived from the ops)
persistence_diagram run(const filtration& f, engine_options opts = {});

// Decomposes the simplicial map induced by vmap into elementary collapses
// followed by elementary inclusions, all at the given grade. vmap must be
// identity on injectively mapped vertices and fix each collapse target.
std::vector<elementary_op> decompose_map(const simplicial_complex& K,
                                         const std::map<vertex_id, vertex_id>& vmap,
                                         const simplicial_complex& Kprime, double grade);

}  // namespace simpmap
