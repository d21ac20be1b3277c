#include "simpmap/complex.hpp"

#include <algorithm>
#include <sstream>

namespace simpmap {

namespace {

std::string describe(const simplex& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

}  // namespace

simplicial_complex::simplicial_complex(int max_dim) : max_dim_(max_dim) {
    if (max_dim < 0) throw invalid_parameter("max_dim must be nonnegative");
    dims_.resize(static_cast<std::size_t>(max_dim) + 1);
}

const simplicial_complex::level_map& simplicial_complex::level(int p) const {
    static const level_map empty;
    if (p < 0 || p >= static_cast<int>(dims_.size())) return empty;
    return dims_[static_cast<std::size_t>(p)];
}

simplicial_complex::level_map& simplicial_complex::level(int p) {
    return dims_[static_cast<std::size_t>(p)];
}

int simplicial_complex::top_dim() const {
    for (int p = static_cast<int>(dims_.size()) - 1; p >= 0; --p)
        if (!dims_[static_cast<std::size_t>(p)].empty()) return p;
    return -1;
}

std::size_t simplicial_complex::size() const {
    std::size_t n = 0;
    for (const auto& level : dims_) n += level.size();
    return n;
}

std::size_t simplicial_complex::size(int p) const { return level(p).size(); }

bool simplicial_complex::contains(const simplex& s) const {
    return level(s.dim()).count(s) > 0;
}

void simplicial_complex::insert(const simplex& s) {
    if (!s.valid()) throw invalid_parameter("cannot insert the empty simplex");
    if (s[0] < 0) throw invalid_parameter("vertex ids are nonnegative");
    if (s.dim() > max_dim_)
        throw invalid_parameter("simplex " + describe(s) + " exceeds the dimension cap " +
                                std::to_string(max_dim_));
    if (contains(s)) throw duplicate_simplex("simplex " + describe(s) + " already present");
    const auto fs = s.facets();
    for (const auto& f : fs)
        if (!contains(f)) throw missing_face("face " + describe(f) + " of " + describe(s) + " is absent");
    level(s.dim()).emplace(s, std::vector<simplex>{});
    for (const auto& f : fs) {
        auto& cof = level(f.dim()).at(f);
        cof.insert(std::lower_bound(cof.begin(), cof.end(), s), s);
    }
}

void simplicial_complex::remove(const simplex& s) {
    auto it = level(s.dim()).find(s);
    if (it == level(s.dim()).end())
        throw not_in_complex("simplex " + describe(s) + " is not in the complex");
    if (!it->second.empty())
        throw invalid_parameter("simplex " + describe(s) + " still has cofaces");
    level(s.dim()).erase(it);
    for (const auto& f : s.facets()) {
        auto& cof = level(f.dim()).at(f);
        auto pos = std::lower_bound(cof.begin(), cof.end(), s);
        if (pos != cof.end() && *pos == s) cof.erase(pos);
    }
}

const std::vector<simplex>& simplicial_complex::cofacets(const simplex& s) const {
    auto it = level(s.dim()).find(s);
    if (it == level(s.dim()).end())
        throw not_in_complex("simplex " + describe(s) + " is not in the complex");
    return it->second;
}

std::vector<simplex> simplicial_complex::simplices(int p) const {
    std::vector<simplex> out;
    out.reserve(level(p).size());
    for (const auto& [s, cof] : level(p)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<simplex> simplicial_complex::all_simplices() const {
    std::vector<simplex> out;
    out.reserve(size());
    for (const auto& level : dims_)
        for (const auto& [s, cof] : level) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<vertex_id> simplicial_complex::vertex_ids() const {
    std::vector<vertex_id> out;
    out.reserve(level(0).size());
    for (const auto& [s, cof] : level(0)) out.push_back(s[0]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<simplex> simplicial_complex::star(const std::vector<simplex>& seeds) const {
    simplex_set visited;
    std::vector<simplex> stack;
    for (const auto& s : seeds) {
        if (!contains(s)) throw not_in_complex("star seed " + describe(s) + " is not in the complex");
        if (visited.insert(s).second) stack.push_back(s);
    }
    std::vector<simplex> out;
    while (!stack.empty()) {
        simplex s = std::move(stack.back());
        stack.pop_back();
        out.push_back(s);
        for (const auto& c : cofacets(s))
            if (visited.insert(c).second) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

simplicial_complex simplicial_complex::closure(const std::vector<simplex>& seeds) const {
    simplex_set closed;
    for (const auto& s : seeds) {
        if (!contains(s)) throw not_in_complex("closure seed " + describe(s) + " is not in the complex");
        for (auto& f : s.faces()) closed.insert(std::move(f));
    }
    simplicial_complex out(max_dim_);
    for (const auto& s : closed) out.insert(s);  // simplex_set iterates faces first
    return out;
}

std::vector<simplex> simplicial_complex::link(const std::vector<simplex>& seeds) const {
    // closure(star X) \ star(closure X); the survivors are exactly the faces
    // of star simplices avoiding every vertex of X
    const auto st = star(seeds);
    simplex_set closed_star;
    for (const auto& s : st)
        for (auto& f : s.faces()) closed_star.insert(std::move(f));

    std::vector<vertex_id> seed_verts;
    for (const auto& s : seeds)
        for (vertex_id v : s) seed_verts.push_back(v);
    std::sort(seed_verts.begin(), seed_verts.end());
    seed_verts.erase(std::unique(seed_verts.begin(), seed_verts.end()), seed_verts.end());

    std::vector<simplex> out;
    for (const auto& s : closed_star) {
        bool touches = false;
        for (vertex_id v : seed_verts)
            if (s.contains(v)) { touches = true; break; }
        if (!touches) out.push_back(s);
    }
    return out;  // simplex_set order is already (dim, lex)
}

simplicial_complex::link_condition_result simplicial_complex::link_condition(
    vertex_id u, vertex_id v) const {
    if (!has_vertex(u) || !has_vertex(v))
        throw not_in_complex("link condition endpoints must be vertices of the complex");
    if (u == v) throw invalid_parameter("link condition needs two distinct vertices");

    link_condition_result res;
    const simplex edge{u, v};
    if (!contains(edge)) res.missing.push_back(edge);

    const auto lk_u = link({simplex{u}});
    const auto lk_v = link({simplex{v}});
    simplex_set lk_uv;
    if (contains(edge))
        for (auto& s : link({edge})) lk_uv.insert(std::move(s));

    simplex_set lk_v_set(lk_v.begin(), lk_v.end());
    for (const auto& t : lk_u) {
        if (!lk_v_set.count(t) || lk_uv.count(t)) continue;
        res.missing.push_back(t.with_vertex(u).with_vertex(v));
    }
    std::sort(res.missing.begin(), res.missing.end());
    res.satisfied = res.missing.empty();
    return res;
}

std::vector<simplicial_complex::rename_record> simplicial_complex::rename_vertex(
    vertex_id from, vertex_id to) {
    if (!has_vertex(from) || !has_vertex(to))
        throw not_in_complex("rename endpoints must be vertices of the complex");
    auto affected = star({simplex{from}});
    for (const auto& s : affected)
        if (s.contains(to))
            throw invalid_parameter("rename would shrink simplex " + describe(s));

    // drop the originals top-down, reinsert images bottom-up
    for (auto it = affected.rbegin(); it != affected.rend(); ++it) remove(*it);

    std::vector<rename_record> records;
    records.reserve(affected.size());
    for (const auto& s : affected) {
        simplex img = s.without_vertex(from).with_vertex(to);
        rename_record rec{s, img, contains(img)};
        if (!rec.merged) insert(img);
        records.push_back(std::move(rec));
    }
    return records;
}

bool simplicial_complex::operator==(const simplicial_complex& other) const {
    if (size() != other.size()) return false;
    return subcomplex_of(other);
}

bool simplicial_complex::subcomplex_of(const simplicial_complex& other) const {
    bool ok = true;
    for_each([&](const simplex& s) { ok = ok && other.contains(s); });
    return ok;
}

bool simplicial_complex::check_face_closure() const {
    bool ok = true;
    for_each([&](const simplex& s) {
        for (const auto& f : s.faces()) ok = ok && contains(f);
    });
    return ok;
}

bool simplicial_complex::check_cofacet_index() const {
    std::unordered_map<simplex, std::vector<simplex>, simplex_hash> rebuilt;
    for_each([&](const simplex& s) {
        rebuilt.try_emplace(s);
        for (const auto& f : s.facets()) rebuilt[f].push_back(s);
    });
    bool ok = true;
    for_each([&](const simplex& s) {
        auto expect = rebuilt[s];
        std::sort(expect.begin(), expect.end());
        ok = ok && (cofacets(s) == expect);
    });
    return ok;
}

}  // namespace simpmap
