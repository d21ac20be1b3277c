#include "simpmap/tda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "simpmap/coning.hpp"

namespace simpmap {

double point_cloud::dist(int i, int j) const {
    const auto& a = points[static_cast<std::size_t>(i)];
    const auto& b = points[static_cast<std::size_t>(j)];
    double sq = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

std::vector<int> point_cloud::all_indices() const {
    std::vector<int> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
}

double point_cloud::diameter() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            m = std::max(m, dist(static_cast<int>(i), static_cast<int>(j)));
    return m;
}

double point_cloud::min_pairwise_distance() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            m = std::min(m, dist(static_cast<int>(i), static_cast<int>(j)));
    return m;
}

index_set delta_net(const point_cloud& cloud, const index_set& V, double delta) {
    if (V.empty()) throw invalid_parameter("delta net needs a nonempty index set");
    if (delta < 0.0) throw invalid_parameter("delta must be nonnegative");

    index_set net{V.front()};  // lowest index seeds the net
    std::vector<double> to_net(V.size());
    for (std::size_t i = 0; i < V.size(); ++i) to_net[i] = cloud.dist(V[i], net[0]);

    while (net.size() < V.size()) {
        std::size_t far = 0;
        for (std::size_t i = 1; i < V.size(); ++i)
            if (to_net[i] > to_net[far]) far = i;
        if (to_net[far] <= delta) break;
        const int chosen = V[far];
        net.push_back(chosen);
        for (std::size_t i = 0; i < V.size(); ++i)
            to_net[i] = std::min(to_net[i], cloud.dist(V[i], chosen));
    }
    std::sort(net.begin(), net.end());
    return net;
}

net_hierarchy build_net_hierarchy(const point_cloud& cloud, double alpha, double eps, int m) {
    if (alpha <= 0.0) throw invalid_parameter("alpha must be positive");
    if (eps < 0.0 || eps > 1.0) throw invalid_parameter("eps must lie in [0,1]");
    if (m < 0) throw invalid_parameter("the number of scale steps must be nonnegative");

    net_hierarchy h;
    h.levels.push_back(cloud.all_indices());
    for (int k = 0; k < m; ++k) {
        const double delta = 0.5 * alpha * eps * eps * std::pow(1.0 + eps, k - 1);
        const auto& prev = h.levels.back();
        index_set next = delta > 0.0 ? delta_net(cloud, prev, delta) : prev;
        h.deltas.push_back(delta);

        std::unordered_map<int, int> step;
        for (int v : prev) {
            int best = next.front();
            double best_d = cloud.dist(v, best);
            for (int w : next) {
                const double d = cloud.dist(v, w);
                if (d < best_d) {  // ties keep the lowest index
                    best = w;
                    best_d = d;
                }
            }
            step.emplace(v, best);
        }
        std::unordered_map<int, int> comp;
        if (h.composed.empty()) {
            comp = step;
        } else {
            for (const auto& [v, w] : h.composed.back()) comp.emplace(v, step.at(w));
        }
        h.step_maps.push_back(std::move(step));
        h.composed.push_back(std::move(comp));
        h.levels.push_back(std::move(next));
    }
    return h;
}

namespace {

struct neighbor_graph {
    std::vector<int> verts;                       // the index set
    std::vector<std::vector<int>> adj;            // positions into verts, ascending
    const point_cloud* cloud = nullptr;

    neighbor_graph(const point_cloud& c, const index_set& V, double r) : verts(V), cloud(&c) {
        adj.resize(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (c.dist(verts[i], verts[j]) <= r) {
                    adj[i].push_back(static_cast<int>(j));
                    adj[j].push_back(static_cast<int>(i));
                }
    }
};

// enumerate cliques of the neighborhood graph, carrying the diameter
template <class Visit>
void expand_cliques(const neighbor_graph& g, std::vector<int>& clique,
                    const std::vector<int>& cands, double diam, int max_card, Visit&& visit) {
    visit(clique, diam);
    if (static_cast<int>(clique.size()) == max_card) return;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
        const int w = cands[ci];
        double d = diam;
        for (int x : clique)
            d = std::max(d, g.cloud->dist(g.verts[static_cast<std::size_t>(x)],
                                          g.verts[static_cast<std::size_t>(w)]));
        std::vector<int> next;
        for (std::size_t cj = ci + 1; cj < cands.size(); ++cj) {
            const int y = cands[cj];
            if (std::binary_search(g.adj[static_cast<std::size_t>(w)].begin(),
                                   g.adj[static_cast<std::size_t>(w)].end(), y))
                next.push_back(y);
        }
        clique.push_back(w);
        expand_cliques(g, clique, next, d, max_card, visit);
        clique.pop_back();
    }
}

template <class Visit>
void for_each_clique(const point_cloud& cloud, const index_set& V, double r, int max_card,
                     Visit&& visit) {
    neighbor_graph g(cloud, V, r);
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
        std::vector<int> clique{static_cast<int>(i)};
        std::vector<int> cands;
        for (int j : g.adj[i])
            if (j > static_cast<int>(i)) cands.push_back(j);
        expand_cliques(g, clique, cands, 0.0, max_card, [&](const std::vector<int>& q, double d) {
            std::vector<vertex_id> vs;
            vs.reserve(q.size());
            for (int pos : q) vs.push_back(g.verts[static_cast<std::size_t>(pos)]);
            visit(simplex(std::move(vs)), d);
        });
    }
}

}  // namespace

std::vector<std::pair<simplex, double>> rips_simplices(const point_cloud& cloud,
                                                       const index_set& V, double r,
                                                       int max_dim) {
    if (r < 0.0) throw invalid_parameter("rips scale must be nonnegative");
    std::vector<std::pair<simplex, double>> out;
    for_each_clique(cloud, V, r, max_dim + 1,
                    [&](simplex s, double d) { out.emplace_back(std::move(s), d); });
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

simplicial_complex rips(const point_cloud& cloud, const index_set& V, double r, int max_dim) {
    simplicial_complex K(max_dim);
    for (const auto& [s, d] : rips_simplices(cloud, V, r, max_dim)) K.insert(s);
    return K;
}

filtration exact_rips_filtration(const point_cloud& cloud, double alpha, double eps, int m,
                                 int max_dim) {
    if (alpha <= 0.0) throw invalid_parameter("alpha must be positive");
    if (eps < 0.0 || eps > 1.0) throw invalid_parameter("eps must lie in [0,1]");
    if (m < 0) throw invalid_parameter("the number of scale steps must be nonnegative");

    std::vector<double> scales;
    for (int k = 0; k <= m; ++k) scales.push_back(alpha * std::pow(1.0 + eps, k));

    auto entries = rips_simplices(cloud, cloud.all_indices(), scales.back(), max_dim);
    // grade each simplex at the first scheduled scale covering its diameter
    std::vector<std::pair<int, simplex>> graded;
    graded.reserve(entries.size());
    for (auto& [s, diam] : entries) {
        const auto it = std::lower_bound(scales.begin(), scales.end(), diam);
        if (it == scales.end()) continue;
        graded.emplace_back(static_cast<int>(it - scales.begin()), std::move(s));
    }
    std::sort(graded.begin(), graded.end());

    filtration f;
    f.ops.reserve(graded.size());
    for (auto& [k, s] : graded)
        f.ops.push_back(elementary_op::make_insert(std::move(s), scales[static_cast<std::size_t>(k)]));
    return f;
}

sparse_rips_result sparse_rips_filtration(const point_cloud& cloud, double alpha, double eps,
                                          int m, int max_dim) {
    sparse_rips_result res;
    res.nets = build_net_hierarchy(cloud, alpha, eps, m);
    for (int k = 0; k <= m; ++k) res.scales.push_back(alpha * std::pow(1.0 + eps, k));

    simplicial_complex current = rips(cloud, res.nets.levels[0], res.scales[0], max_dim);
    for (const auto& s : current.all_simplices())
        res.filt.ops.push_back(elementary_op::make_insert(s, res.scales[0]));
    res.stage_end.push_back(res.filt.ops.size());

    for (int k = 0; k < m; ++k) {
        const double grade = res.scales[static_cast<std::size_t>(k) + 1];
        const auto& vk = res.nets.levels[static_cast<std::size_t>(k)];
        const auto& vk1 = res.nets.levels[static_cast<std::size_t>(k) + 1];
        const auto& pi = res.nets.step_maps[static_cast<std::size_t>(k)];

        vertex_map contraction;
        for (int w : vk)
            if (!std::binary_search(vk1.begin(), vk1.end(), w)) {
                contraction.emplace(w, pi.at(w));
                res.filt.ops.push_back(elementary_op::make_collapse(pi.at(w), w, grade));
            }

        // every stage edge must map within the next scale
        for (const auto& e : current.simplices(1)) {
            const double d = cloud.dist(map_vertex(contraction, e[0]),
                                        map_vertex(contraction, e[1]));
            if (d > grade)
                throw std::logic_error("net contraction moved an edge beyond the next scale");
        }

        const simplicial_complex image = image_complex(current, contraction);
        simplicial_complex target = rips(cloud, vk1, grade, max_dim);
        if (!image.subcomplex_of(target))
            throw std::logic_error("collapsed stage complex escapes the target Rips complex");

        for (const auto& s : target.all_simplices())
            if (!image.contains(s)) res.filt.ops.push_back(elementary_op::make_insert(s, grade));
        res.stage_end.push_back(res.filt.ops.size());
        current = std::move(target);
    }
    return res;
}

simplicial_complex gic(const point_cloud& cloud, double r, const index_set& vprime,
                       const std::unordered_map<int, int>& nu, int max_dim) {
    for (int v : cloud.all_indices()) {
        auto it = nu.find(v);
        if (it == nu.end())
            throw invalid_parameter("subsampling map must be total on the cloud");
        if (!std::binary_search(vprime.begin(), vprime.end(), it->second))
            throw invalid_parameter("subsampling map must land in the subsample");
    }
    simplex_set simplices;
    for_each_clique(cloud, cloud.all_indices(), r, max_dim + 1,
                    [&](const simplex& q, double) {
                        std::vector<vertex_id> img;
                        img.reserve(q.card());
                        for (vertex_id v : q) img.push_back(nu.at(v));
                        std::sort(img.begin(), img.end());
                        if (std::adjacent_find(img.begin(), img.end()) != img.end()) return;
                        simplices.insert(simplex(std::move(img)));
                    });
    simplicial_complex out(max_dim);
    for (const auto& s : simplices) out.insert(s);
    return out;
}

gic_result gic_filtration(const point_cloud& cloud, double alpha, double eps, int m,
                          int max_dim) {
    gic_result res;
    res.nets = build_net_hierarchy(cloud, alpha, eps, m);
    if (m == 0) return res;
    for (int k = 0; k < m; ++k) res.scales.push_back(alpha * std::pow(1.0 + eps, k));

    simplicial_complex current =
        gic(cloud, res.scales[0], res.nets.levels[1], res.nets.composed[0], max_dim);
    for (const auto& s : current.all_simplices())
        res.filt.ops.push_back(elementary_op::make_insert(s, res.scales[0]));
    res.stage_end.push_back(res.filt.ops.size());

    for (int k = 1; k < m; ++k) {
        const double grade = res.scales[static_cast<std::size_t>(k)];
        const auto& vk = res.nets.levels[static_cast<std::size_t>(k)];
        const auto& vk1 = res.nets.levels[static_cast<std::size_t>(k) + 1];
        const auto& pi = res.nets.step_maps[static_cast<std::size_t>(k)];

        vertex_map contraction;
        for (int w : vk)
            if (!std::binary_search(vk1.begin(), vk1.end(), w)) {
                contraction.emplace(w, pi.at(w));
                res.filt.ops.push_back(elementary_op::make_collapse(pi.at(w), w, grade));
            }

        const simplicial_complex image = image_complex(current, contraction);
        simplicial_complex target =
            gic(cloud, grade, vk1, res.nets.composed[static_cast<std::size_t>(k)], max_dim);
        if (!image.subcomplex_of(target))
            throw std::logic_error("collapsed stage complex escapes the target induced complex");

        for (const auto& s : target.all_simplices())
            if (!image.contains(s)) res.filt.ops.push_back(elementary_op::make_insert(s, grade));
        res.stage_end.push_back(res.filt.ops.size());
        current = std::move(target);
    }
    return res;
}

}  // namespace simpmap
