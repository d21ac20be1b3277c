#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "simpmap/complex.hpp"
#include "simpmap/engine.hpp"
#include "simpmap/filtration.hpp"

namespace testsupport {

using namespace simpmap;

// builds a complex from generators, inserting every face first
inline simplicial_complex make_complex(const std::vector<simplex>& generators, int max_dim = 3) {
    simplex_set closed;
    for (const auto& s : generators)
        for (auto& f : s.faces()) closed.insert(std::move(f));
    int top = 0;
    for (const auto& s : closed) top = std::max(top, s.dim());
    simplicial_complex K(std::max(max_dim, top));
    for (const auto& s : closed) K.insert(s);
    return K;
}

// Random inclusion-only filtration: vertices plus higher simplices whose
// faces are already present. Some grades repeat on purpose.
inline filtration random_inclusion_filtration(std::mt19937& rng, int target_size,
                                              int n_vertices, int max_dim) {
    filtration f;
    simplicial_complex K(max_dim);
    std::uniform_int_distribution<int> vert(0, n_vertices - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double grade = 1.0;
    int next_vertex = 0;

    auto push = [&](const simplex& s) {
        if (unit(rng) < 0.7) grade += 1.0;
        K.insert(s);
        f.ops.push_back(elementary_op::make_insert(s, grade));
    };

    int attempts = 0;
    while (static_cast<int>(K.size()) < target_size && attempts < target_size * 60) {
        ++attempts;
        if (next_vertex < n_vertices && (K.size(0) < 2 || unit(rng) < 0.22)) {
            push(simplex{next_vertex++});
            continue;
        }
        const int d = 1 + static_cast<int>(unit(rng) * max_dim);
        if (next_vertex < d + 1) continue;
        std::set<vertex_id> pick;
        while (static_cast<int>(pick.size()) < d + 1) pick.insert(vert(rng) % next_vertex);
        simplex cand(std::vector<vertex_id>(pick.begin(), pick.end()));
        if (K.contains(cand)) continue;
        bool ok = true;
        for (const auto& face : cand.facets())
            if (!K.contains(face)) { ok = false; break; }
        if (ok) push(cand);
    }
    return f;
}

// Random mixed filtration interleaving collapses between insertions.
inline filtration random_mixed_filtration(std::mt19937& rng, int n_ops, int n_vertices,
                                          int max_dim, double collapse_rate = 0.15) {
    filtration f;
    engine eng(max_dim + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double grade = 1.0;
    int next_vertex = 0;

    auto live = [&]() { return eng.complex().vertex_ids(); };

    int attempts = 0;
    while (static_cast<int>(f.ops.size()) < n_ops && attempts < n_ops * 80) {
        ++attempts;
        const auto verts = live();
        if (unit(rng) < 0.7) grade += 1.0;

        if (static_cast<int>(verts.size()) >= 4 && unit(rng) < collapse_rate) {
            std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
            std::size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            auto op = elementary_op::make_collapse(verts[a], verts[b], grade);
            eng.apply(op);
            f.ops.push_back(op);
            continue;
        }
        if (next_vertex < n_vertices && (verts.size() < 2 || unit(rng) < 0.3)) {
            auto op = elementary_op::make_insert(simplex{next_vertex++}, grade);
            eng.apply(op);
            f.ops.push_back(op);
            continue;
        }
        const int d = 1 + static_cast<int>(unit(rng) * std::min(max_dim,
                                                                static_cast<int>(verts.size()) - 1));
        if (static_cast<int>(verts.size()) < d + 1 || d < 1) continue;
        std::set<vertex_id> pick;
        std::uniform_int_distribution<std::size_t> vi(0, verts.size() - 1);
        while (static_cast<int>(pick.size()) < d + 1) pick.insert(verts[vi(rng)]);
        simplex cand(std::vector<vertex_id>(pick.begin(), pick.end()));
        if (eng.complex().contains(cand)) continue;
        bool ok = true;
        for (const auto& face : cand.facets())
            if (!eng.complex().contains(face)) { ok = false; break; }
        if (!ok) continue;
        auto op = elementary_op::make_insert(cand, grade);
        eng.apply(op);
        f.ops.push_back(op);
    }
    return f;
}

// inclusion-only filtration that rebuilds a given complex at one grade
inline filtration complex_as_filtration(const simplicial_complex& K, double grade = 1.0) {
    filtration f;
    for (const auto& s : K.all_simplices())
        f.ops.push_back(elementary_op::make_insert(s, grade));
    return f;
}

}  // namespace testsupport
