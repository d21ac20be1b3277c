#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <set>
#include <unordered_map>
#include <vector>

#include "simpmap/errors.hpp"

namespace simpmap {

using vertex_id = int;

// A simplex is a nonempty set of vertices kept in strictly ascending order.
// Ordering is dimension-first, then lexicographic on the vertex sequence.
class simplex {
public:
    simplex() = default;
    simplex(std::initializer_list<vertex_id> vs) : simplex(std::vector<vertex_id>(vs)) {}
    explicit simplex(std::vector<vertex_id> vs) : verts_(std::move(vs)) {
        std::sort(verts_.begin(), verts_.end());
        if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
            throw invalid_parameter("simplex has a repeated vertex");
    }

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t card() const { return verts_.size(); }
    bool valid() const { return !verts_.empty(); }

    const std::vector<vertex_id>& vertices() const { return verts_; }
    vertex_id operator[](std::size_t i) const { return verts_[i]; }

    bool contains(vertex_id v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }
    // other is a (not necessarily proper) face of this
    bool has_face(const simplex& other) const {
        return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end());
    }

    // codimension-1 faces; empty for a vertex
    std::vector<simplex> facets() const {
        std::vector<simplex> out;
        if (dim() == 0) return out;
        out.reserve(verts_.size());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            simplex f;
            f.verts_.reserve(verts_.size() - 1);
            for (std::size_t j = 0; j < verts_.size(); ++j)
                if (j != i) f.verts_.push_back(verts_[j]);
            out.push_back(std::move(f));
        }
        return out;
    }

    // all nonempty subsets, including the simplex itself
    std::vector<simplex> faces() const {
        std::vector<simplex> out;
        const std::size_t n = verts_.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            simplex f;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j)) f.verts_.push_back(verts_[j]);
            out.push_back(std::move(f));
        }
        return out;
    }

    simplex with_vertex(vertex_id v) const {
        if (contains(v)) return *this;
        simplex s = *this;
        s.verts_.insert(std::lower_bound(s.verts_.begin(), s.verts_.end(), v), v);
        return s;
    }
    simplex without_vertex(vertex_id v) const {
        simplex s = *this;
        auto it = std::lower_bound(s.verts_.begin(), s.verts_.end(), v);
        if (it != s.verts_.end() && *it == v) s.verts_.erase(it);
        return s;
    }

    auto begin() const { return verts_.begin(); }
    auto end() const { return verts_.end(); }

    bool operator==(const simplex&) const = default;
    std::strong_ordering operator<=>(const simplex& o) const {
        if (auto c = verts_.size() <=> o.verts_.size(); c != 0) return c;
        return verts_ <=> o.verts_;
    }

    friend std::ostream& operator<<(std::ostream& os, const simplex& s) {
        os << '{';
        for (std::size_t i = 0; i < s.verts_.size(); ++i) {
            if (i) os << ',';
            os << s.verts_[i];
        }
        return os << '}';
    }

private:
    std::vector<vertex_id> verts_;
};

struct simplex_hash {
    std::size_t operator()(const simplex& s) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (vertex_id v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using simplex_set = std::set<simplex>;

// Vertex maps are extensional; a missing key means identity.
using vertex_map = std::unordered_map<vertex_id, vertex_id>;

inline vertex_id map_vertex(const vertex_map& f, vertex_id v) {
    auto it = f.find(v);
    return it == f.end() ? v : it->second;
}

inline simplex map_simplex(const vertex_map& f, const simplex& s) {
    std::vector<vertex_id> img;
    img.reserve(s.card());
    for (vertex_id v : s) img.push_back(map_vertex(f, v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return simplex(std::move(img));
}

}  // namespace simpmap
