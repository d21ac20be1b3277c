#include "simpmap/diagram.hpp"

#include <algorithm>
#include <set>

#include "simpmap/errors.hpp"

namespace simpmap {

void persistence_diagram::sort() {
    std::sort(pairs.begin(), pairs.end());
}

int persistence_diagram::max_dim() const {
    int m = -1;
    for (const auto& p : pairs) m = std::max(m, p.dim);
    return m;
}

persistence_diagram persistence_diagram::restricted(int max_dim) const {
    persistence_diagram out;
    for (const auto& p : pairs)
        if (p.dim <= max_dim) out.pairs.push_back(p);
    return out;
}

std::size_t persistence_diagram::count(int dim) const {
    std::size_t n = 0;
    for (const auto& p : pairs)
        if (p.dim == dim) ++n;
    return n;
}

bool persistence_diagram::same_pairs(const persistence_diagram& other) const {
    if (pairs.size() != other.pairs.size()) return false;
    auto a = pairs, b = other.pairs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

persistence_diagram drop_zero_pairs(const persistence_diagram& d) {
    persistence_diagram out;
    for (const auto& p : d.pairs)
        if (p.essential() || p.death != p.birth) out.pairs.push_back(p);
    return out;
}

persistence_diagram log_scale(const persistence_diagram& d) {
    persistence_diagram out;
    out.pairs.reserve(d.pairs.size());
    for (const auto& p : d.pairs) {
        if (p.birth <= 0.0 || (!p.essential() && p.death <= 0.0))
            throw nonpositive_coordinate("log scale needs strictly positive coordinates");
        out.pairs.push_back({p.dim, std::log(p.birth),
                             p.essential() ? infinite_death : std::log(p.death)});
    }
    return out;
}

namespace {

struct finite_point {
    double birth, death;
    double diag_cost() const { return (death - birth) / 2.0; }
};

double linf(const finite_point& a, const finite_point& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Perfect-matching feasibility at threshold t on the augmented bipartite
// graph: left = A-points plus one diagonal slot per B-point, right =
// B-points plus one diagonal slot per A-point. Diagonal slots pair freely
// with each other.
class feasibility {
public:
    feasibility(const std::vector<finite_point>& a, const std::vector<finite_point>& b)
        : a_(a), b_(b), n1_(a.size()), n2_(b.size()) {}

    bool feasible(double t) const {
        const std::size_t n = n1_ + n2_;
        std::vector<int> match_left(n, -1), match_right(n, -1);
        std::vector<char> seen(n, 0);

        std::size_t matched = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            if (augment(i, t, seen, match_left, match_right)) ++matched;
        }
        return matched == n;
    }

private:
    bool edge(std::size_t l, std::size_t r, double t) const {
        const bool l_real = l < n1_, r_real = r < n2_;
        if (l_real && r_real) return linf(a_[l], b_[r]) <= t;
        if (l_real && !r_real)  // a-point to its own diagonal slot
            return (r - n2_) == l && a_[l].diag_cost() <= t;
        if (!l_real && r_real)  // diagonal slot of a b-point
            return (l - n1_) == r && b_[r].diag_cost() <= t;
        return true;  // diagonal with diagonal
    }

    bool augment(std::size_t l, double t, std::vector<char>& seen,
                 std::vector<int>& match_left, std::vector<int>& match_right) const {
        for (std::size_t r = 0; r < n1_ + n2_; ++r) {
            if (seen[r] || !edge(l, r, t)) continue;
            seen[r] = 1;
            if (match_right[r] < 0 ||
                augment(static_cast<std::size_t>(match_right[r]), t, seen, match_left,
                        match_right)) {
                match_left[l] = static_cast<int>(r);
                match_right[r] = static_cast<int>(l);
                return true;
            }
        }
        return false;
    }

    const std::vector<finite_point>& a_;
    const std::vector<finite_point>& b_;
    std::size_t n1_, n2_;
};

}  // namespace

double bottleneck_distance(const persistence_diagram& da, const persistence_diagram& db,
                           int dim) {
    std::vector<finite_point> fa, fb;
    std::vector<double> ea, eb;
    for (const auto& p : drop_zero_pairs(da).pairs) {
        if (p.dim != dim) continue;
        if (p.essential()) ea.push_back(p.birth);
        else fa.push_back({p.birth, p.death});
    }
    for (const auto& p : drop_zero_pairs(db).pairs) {
        if (p.dim != dim) continue;
        if (p.essential()) eb.push_back(p.birth);
        else fb.push_back({p.birth, p.death});
    }

    if (ea.size() != eb.size()) return infinite_death;

    // min-max matching of essential births on the line is the sorted one
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    double essential_cost = 0.0;
    for (std::size_t i = 0; i < ea.size(); ++i)
        essential_cost = std::max(essential_cost, std::abs(ea[i] - eb[i]));

    if (fa.empty() && fb.empty()) return essential_cost;

    std::set<double> candidates{0.0};
    for (const auto& pa : fa) {
        candidates.insert(pa.diag_cost());
        for (const auto& pb : fb) candidates.insert(linf(pa, pb));
    }
    for (const auto& pb : fb) candidates.insert(pb.diag_cost());

    feasibility feas(fa, fb);
    std::vector<double> cand(candidates.begin(), candidates.end());
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {  // smallest feasible candidate
        const std::size_t mid = (lo + hi) / 2;
        if (feas.feasible(cand[mid])) hi = mid;
        else lo = mid + 1;
    }
    return std::max(essential_cost, cand[lo]);
}

std::map<int, double> bottleneck_by_dim(const persistence_diagram& a,
                                        const persistence_diagram& b) {
    std::set<int> dims;
    for (const auto& p : drop_zero_pairs(a).pairs) dims.insert(p.dim);
    for (const auto& p : drop_zero_pairs(b).pairs) dims.insert(p.dim);
    std::map<int, double> out;
    for (int d : dims) out[d] = bottleneck_distance(a, b, d);
    return out;
}

double bottleneck(const persistence_diagram& a, const persistence_diagram& b) {
    double m = 0.0;
    for (const auto& [d, v] : bottleneck_by_dim(a, b)) m = std::max(m, v);
    return m;
}

}  // namespace simpmap
