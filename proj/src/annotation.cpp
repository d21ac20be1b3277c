#include "simpmap/annotation.hpp"

#include <algorithm>
#include <sstream>

namespace simpmap {

void zadd(zvector& a, const zvector& b) {
    zvector out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a = std::move(out);
}

bool zget(const zvector& a, element_id e) {
    return std::binary_search(a.begin(), a.end(), e);
}

annotation_matrix::dim_data& annotation_matrix::at(int p) {
    if (p < 0) throw invalid_parameter("negative dimension");
    if (p >= static_cast<int>(dims_.size())) dims_.resize(static_cast<std::size_t>(p) + 1);
    return dims_[static_cast<std::size_t>(p)];
}

const annotation_matrix::dim_data& annotation_matrix::at(int p) const {
    static const dim_data empty;
    if (p < 0 || p >= static_cast<int>(dims_.size())) return empty;
    return dims_[static_cast<std::size_t>(p)];
}

int annotation_matrix::element_count(int p) const {
    return static_cast<int>(at(p).active.size());
}

const std::map<element_id, timestamp>& annotation_matrix::elements(int p) const {
    return at(p).active;
}

timestamp annotation_matrix::element_birth(int p, element_id e) const {
    auto& active = at(p).active;
    auto it = active.find(e);
    if (it == active.end()) throw invalid_parameter("element is not active");
    return it->second;
}

bool annotation_matrix::has_row(const simplex& s) const {
    return at(s.dim()).rows.count(s) > 0;
}

const zvector& annotation_matrix::row(const simplex& s) const {
    auto& rows = at(s.dim()).rows;
    auto it = rows.find(s);
    if (it == rows.end()) {
        std::ostringstream os;
        os << "no annotation row for " << s;
        throw unknown_simplex(os.str());
    }
    return it->second;
}

std::size_t annotation_matrix::row_count(int p) const { return at(p).rows.size(); }

void annotation_matrix::add_row(const simplex& s) {
    auto [it, inserted] = at(s.dim()).rows.try_emplace(s);
    if (!inserted) throw duplicate_simplex("annotation row already exists");
}

void annotation_matrix::erase_row(const simplex& s) {
    if (at(s.dim()).rows.erase(s) == 0) throw unknown_simplex("no row to erase");
}

void annotation_matrix::move_row(const simplex& from, const simplex& to) {
    auto& rows = at(from.dim()).rows;
    auto node = rows.extract(from);
    if (node.empty()) throw unknown_simplex("no row to move");
    node.key() = to;
    if (!at(to.dim()).rows.insert(std::move(node)).inserted)
        throw duplicate_simplex("target row already exists");
}

void annotation_matrix::add_to_row(const simplex& s, const zvector& w) {
    auto& rows = at(s.dim()).rows;
    auto it = rows.find(s);
    if (it == rows.end()) throw unknown_simplex("no row to update");
    zadd(it->second, w);
}

zvector annotation_matrix::chain_annotation(int p, const std::vector<simplex>& chain) const {
    zvector acc;
    for (const auto& s : chain) {
        if (s.dim() != p) throw invalid_parameter("chain mixes dimensions");
        zadd(acc, row(s));
    }
    return acc;
}

element_id annotation_matrix::add_element(int p, const simplex& marked, timestamp t) {
    auto& d = at(p);
    auto it = d.rows.find(marked);
    if (it == d.rows.end()) throw unknown_simplex("marked simplex has no row");
    const element_id e = d.next_serial++;
    d.active.emplace(e, t);
    it->second = {e};
    return e;
}

annotation_matrix::kill_result annotation_matrix::kill_element(int p, const zvector& w) {
    if (w.empty()) throw zero_vector("cannot kill with a zero annotation vector");
    auto& d = at(p);

    // youngest = latest birth; serials are never reused, so the maximal
    // sequence number and the maximal serial coincide
    element_id victim = w.front();
    timestamp born = d.active.at(victim);
    for (element_id e : w) {
        const timestamp t = d.active.at(e);
        if (t.seq > born.seq) {
            victim = e;
            born = t;
        }
    }

    for (auto& [s, r] : d.rows)
        if (zget(r, victim)) zadd(r, w);
    d.active.erase(victim);
    return {victim, born};
}

void annotation_matrix::transfer(const simplicial_complex& K, const simplex& sigma,
                                 const simplex& tau) {
    if (tau.dim() + 1 != sigma.dim() || !sigma.has_face(tau))
        throw not_a_face("transfer target is not a codimension-1 face");
    const zvector w = row(sigma);
    add_to_cofacets(K, tau, w);
}

void annotation_matrix::add_to_cofacets(const simplicial_complex& K, const simplex& tau,
                                        const zvector& w) {
    if (w.empty()) return;
    for (const auto& c : K.cofacets(tau)) add_to_row(c, w);
}

bool annotation_matrix::rows_reference_active() const {
    for (const auto& d : dims_)
        for (const auto& [s, r] : d.rows)
            for (element_id e : r)
                if (!d.active.count(e)) return false;
    return true;
}

void annotation_matrix::dump(std::ostream& os) const {
    for (const auto& d : dims_) {
        std::vector<simplex> keys;
        keys.reserve(d.rows.size());
        for (const auto& [s, r] : d.rows) keys.push_back(s);
        std::sort(keys.begin(), keys.end());
        for (const auto& s : keys) {
            bool first = true;
            for (vertex_id v : s) {
                if (!first) os << ' ';
                os << v;
                first = false;
            }
            os << " :";
            for (element_id e : d.rows.at(s)) os << ' ' << e << ":1";
            os << '\n';
        }
    }
}

}  // namespace simpmap
