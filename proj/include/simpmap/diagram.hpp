#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <map>
#include <vector>

namespace simpmap {

constexpr double infinite_death = std::numeric_limits<double>::infinity();

struct persistence_pair {
    int dim = 0;
    double birth = 0.0;
    double death = infinite_death;

    bool essential() const { return std::isinf(death); }
    double persistence() const { return death - birth; }
    auto operator<=>(const persistence_pair&) const = default;
};

struct persistence_diagram {
    std::vector<persistence_pair> pairs;

    void add(int dim, double birth, double death) { pairs.push_back({dim, birth, death}); }
    void sort();
    int max_dim() const;
    persistence_diagram restricted(int max_dim) const;  // pairs with dim <= max_dim
    std::size_t count(int dim) const;

    // multiset equality
    bool same_pairs(const persistence_diagram& other) const;
};

// pairs with death == birth removed
persistence_diagram drop_zero_pairs(const persistence_diagram& d);

// natural log of births and finite deaths; throws nonpositive_coordinate
persistence_diagram log_scale(const persistence_diagram& d);

// Bottleneck distance per dimension: finite pairs match finite pairs
// (L-infinity cost) or the diagonal (half persistence); essential pairs match
// essential pairs only, at |birth difference| cost. A dimension whose
// essential counts differ yields +infinity. Zero-persistence pairs are
// removed first. Exact value via threshold search over candidate costs with
// bipartite matching feasibility.
double bottleneck_distance(const persistence_diagram& a, const persistence_diagram& b, int dim);

// per-dimension values over all dimensions present in either diagram
std::map<int, double> bottleneck_by_dim(const persistence_diagram& a,
                                        const persistence_diagram& b);

// max over dimensions
double bottleneck(const persistence_diagram& a, const persistence_diagram& b);

}  // namespace simpmap
