#pragma once

#include <unordered_map>
#include <vector>

#include "simpmap/complex.hpp"
#include "simpmap/filtration.hpp"

namespace simpmap {

struct point_cloud {
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
    int ambient_dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
    double dist(int i, int j) const;
    std::vector<int> all_indices() const;
    double diameter() const;
    double min_pairwise_distance() const;
};

using index_set = std::vector<int>;  // ascending point indices

// Greedy farthest-point net seeded at the lowest index: coverage radius at
// most delta, pairwise separation strictly above delta.
index_set delta_net(const point_cloud& cloud, const index_set& V, double delta);

// V_0 over V_1 over ... over V_m with V_{k+1} a delta_{k+1}-net of V_k for
// delta_{k+1} = (alpha eps^2 / 2)(1+eps)^(k-1); step maps send each point to
// its nearest net point (ties to the lowest index).
struct net_hierarchy {
    std::vector<index_set> levels;
    std::vector<double> deltas;                             // deltas[k] = delta_{k+1}
    std::vector<std::unordered_map<int, int>> step_maps;    // V_k -> V_{k+1}
    std::vector<std::unordered_map<int, int>> composed;     // V_0 -> V_{k+1}
};
net_hierarchy build_net_hierarchy(const point_cloud& cloud, double alpha, double eps, int m);

// clique complex of the r-neighborhood graph, truncated at max_dim
simplicial_complex rips(const point_cloud& cloud, const index_set& V, double r, int max_dim);

// the same simplices together with their smallest appearance scale
std::vector<std::pair<simplex, double>> rips_simplices(const point_cloud& cloud,
                                                       const index_set& V, double r,
                                                       int max_dim);

// inclusion-only filtration over scales alpha (1+eps)^k, k = 0..m; each
// simplex graded at the first scale where it appears
filtration exact_rips_filtration(const point_cloud& cloud, double alpha, double eps, int m,
                                 int max_dim);

// Collapse-and-insert realization of the net-sparsified Rips sequence. Stage
// k+1 collapses V_k onto V_{k+1} and tops the complex up to the Rips complex
// of V_{k+1} at the next scale; all of its ops share that scale as grade.
struct sparse_rips_result {
    filtration filt;
    net_hierarchy nets;
    std::vector<double> scales;          // scales[k] = alpha (1+eps)^k, k = 0..m
    std::vector<std::size_t> stage_end;  // ops completed after each stage
};
sparse_rips_result sparse_rips_filtration(const point_cloud& cloud, double alpha, double eps,
                                          int m, int max_dim);

// Graph induced complex on the subsample V' over the 1-skeleton of
// Rips^r(cloud): a simplex is any injective nu-image of a clique.
simplicial_complex gic(const point_cloud& cloud, double r, const index_set& vprime,
                       const std::unordered_map<int, int>& nu, int max_dim);

// Collapse-and-insert realization of the graph-induced-complex sequence;
// stage k holds the GIC of V_{k+1} at scale alpha (1+eps)^k.
struct gic_result {
    filtration filt;
    net_hierarchy nets;
    std::vector<double> scales;          // scales[k] = alpha (1+eps)^k, k = 0..m-1
    std::vector<std::size_t> stage_end;
};
gic_result gic_filtration(const point_cloud& cloud, double alpha, double eps, int m,
                          int max_dim);

}  // namespace simpmap
