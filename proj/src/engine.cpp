#include "simpmap/engine.hpp"

#include <algorithm>
#include <sstream>

namespace simpmap {

void filtration::validate() const {
    double last = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto& op = ops[i];
        if (!first && op.grade < last)
            throw invalid_parameter("op " + std::to_string(i) + ": grades must be non-decreasing");
        last = op.grade;
        first = false;
        if (op.is_collapse() && op.u == op.v)
            throw same_vertex("op " + std::to_string(i) + ": collapse needs two distinct vertices");
        if (op.is_insert() && !op.sigma.valid())
            throw invalid_parameter("op " + std::to_string(i) + ": empty simplex");
    }
}

bool filtration::inclusion_only() const {
    for (const auto& op : ops)
        if (op.is_collapse()) return false;
    return true;
}

int filtration::max_insert_dim() const {
    int m = 0;
    for (const auto& op : ops)
        if (op.is_insert()) m = std::max(m, op.sigma.dim());
    return m;
}

engine::engine(int max_dim_cap, engine_options opts)
    : complex_(max_dim_cap), opts_(opts) {}

timestamp engine::stamp(double grade) { return {grade, next_seq_++}; }

void engine::check_grade(double grade) {
    if (any_op_ && grade < last_grade_)
        throw invalid_parameter("grades must be non-decreasing");
    any_op_ = true;
    last_grade_ = grade;
}

std::vector<engine_event> engine::apply(const elementary_op& op) {
    auto events = op.is_insert() ? insert_simplex(op.sigma, op.grade)
                                 : collapse(op.u, op.v, op.grade);
    return events;
}

std::vector<engine_event> engine::insert_simplex(const simplex& s, double grade) {
    check_grade(grade);
    std::vector<engine_event> events;
    if (opts_.lenient) ensure_faces(s, grade, events);
    events.push_back(do_insert(s, grade));
    ++ops_applied_;
    return events;
}

void engine::ensure_faces(const simplex& s, double grade, std::vector<engine_event>& events) {
    for (const auto& f : s.facets()) {
        if (complex_.contains(f)) continue;
        ensure_faces(f, grade, events);
        events.push_back(do_insert(f, grade));
    }
}

engine_event engine::do_insert(const simplex& s, double grade) {
    if (s.dim() == 0 && retired_.count(s[0]))
        throw retired_vertex("vertex " + std::to_string(s[0]) + " was collapsed away");
    const int p = s.dim();
    complex_.insert(s);
    ann_.add_row(s);
    const timestamp now = stamp(grade);

    zvector w;
    if (p > 0) w = ann_.chain_annotation(p - 1, s.facets());

    if (w.empty()) {
        ann_.add_element(p, s, now);
        return {engine_event::kind::birth, p, now, {}};
    }
    const auto killed = ann_.kill_element(p - 1, w);
    finished_.push_back({p - 1, killed.born, now, false});
    return {engine_event::kind::death, p - 1, now, killed.born};
}

std::vector<engine_event> engine::collapse(vertex_id u, vertex_id v, double grade) {
    check_grade(grade);
    if (u == v) throw same_vertex("collapse needs two distinct vertices");
    if (!complex_.has_vertex(u))
        throw dead_vertex("vertex " + std::to_string(u) + " is not alive");
    if (!complex_.has_vertex(v))
        throw dead_vertex("vertex " + std::to_string(v) + " is not alive");

    collapse_audit audit;
    audit.op_index = ops_applied_;
    audit.u = u;
    audit.v = v;
    audit.grade = grade;

    // (1) elementary inclusions so that (u,v) satisfies the link condition
    const auto lc = complex_.link_condition(u, v);
    std::vector<engine_event> events;
    for (const auto& s : lc.missing) events.push_back(do_insert(s, grade));
    audit.repairs = lc.missing;

    // (2) annotation transfer for every vanishing simplex; the transfers do
    // not interact, so any order works
    const simplex edge{u, v};
    const auto vanishing = complex_.star({edge});
    if (opts_.record_collapse_audits)
        for (const auto& s : vanishing) audit.vanishing_pre.emplace_back(s, ann_.row(s));
    for (const auto& s : vanishing) ann_.transfer(complex_, s, s.without_vertex(v));

    if (opts_.record_collapse_audits) {
        audit.vanishing_rows_zero = true;
        for (const auto& s : vanishing)
            audit.vanishing_rows_zero = audit.vanishing_rows_zero && ann_.row(s).empty();
        audit.mirror_rows_equal = true;
        for (const auto& s : complex_.star({simplex{v}})) {
            if (s.contains(u)) continue;
            const simplex partner = s.without_vertex(v).with_vertex(u);
            if (!complex_.contains(partner)) continue;
            ++audit.mirror_pairs;
            audit.mirror_rows_equal =
                audit.mirror_rows_equal && (ann_.row(s) == ann_.row(partner));
        }
    }

    // (3) delete the vanishing simplices, then pull v onto u; annotations of
    // the surviving simplices ride along unchanged, no time stamp moves
    for (auto it = vanishing.rbegin(); it != vanishing.rend(); ++it) {
        complex_.remove(*it);
        ann_.erase_row(*it);
    }
    for (const auto& rec : complex_.rename_vertex(v, u)) {
        if (rec.merged) ann_.erase_row(rec.from);
        else ann_.move_row(rec.from, rec.to);
    }
    retired_.insert(v);

    if (opts_.record_collapse_audits) audits_.push_back(std::move(audit));
    ++ops_applied_;
    return events;
}

std::vector<pair_record> engine::all_pairs() const {
    std::vector<pair_record> out = finished_;
    for (int p = 0; p < ann_.dim_count(); ++p)
        for (const auto& [e, t] : ann_.elements(p)) out.push_back({p, t, {}, true});
    return out;
}

persistence_diagram engine::diagram() const {
    persistence_diagram d;
    for (const auto& r : all_pairs())
        d.add(r.dim, r.birth.grade, r.essential ? infinite_death : r.death.grade);
    d.sort();
    return d;
}

persistence_diagram run(const filtration& f, engine_options opts) {
    f.validate();
    const int cap = f.max_insert_dim() + (f.has_collapse() ? 1 : 0);
    engine e(cap, opts);
    for (const auto& op : f.ops) e.apply(op);
    return e.diagram();
}

std::vector<elementary_op> decompose_map(const simplicial_complex& K,
                                         const std::map<vertex_id, vertex_id>& vmap,
                                         const simplicial_complex& Kprime, double grade) {
    vertex_map f(vmap.begin(), vmap.end());

    // group sources by target and check the renaming convention
    std::map<vertex_id, std::vector<vertex_id>> classes;
    for (vertex_id x : K.vertex_ids()) classes[map_vertex(f, x)].push_back(x);
    for (const auto& [target, sources] : classes) {
        if (!Kprime.has_vertex(target))
            throw not_simplicial("target vertex " + std::to_string(target) +
                                 " is not in the codomain");
        if (sources.size() == 1 && sources.front() != target)
            throw not_simplicial("vertex map must be identity where injective");
        if (sources.size() > 1 &&
            !std::binary_search(sources.begin(), sources.end(), target))
            throw not_simplicial("collapse target " + std::to_string(target) +
                                 " must be one of its own sources");
    }
    K.for_each([&](const simplex& s) {
        if (!Kprime.contains(map_simplex(f, s))) {
            std::ostringstream os;
            os << "image of " << s << " is not a simplex of the codomain";
            throw not_simplicial(os.str());
        }
    });

    std::vector<elementary_op> ops;
    for (const auto& [target, sources] : classes)
        for (vertex_id x : sources)
            if (x != target) ops.push_back(elementary_op::make_collapse(target, x, grade));

    const simplicial_complex image = [&] {
        simplex_set images;
        K.for_each([&](const simplex& s) { images.insert(map_simplex(f, s)); });
        simplicial_complex out(Kprime.max_dim());
        for (const auto& s : images) out.insert(s);
        return out;
    }();
    for (const auto& s : Kprime.all_simplices())
        if (!image.contains(s)) ops.push_back(elementary_op::make_insert(s, grade));
    return ops;
}

}  // namespace simpmap
