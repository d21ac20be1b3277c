#include "simpmap/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "simpmap/gf2.hpp"

namespace simpmap {

namespace {

// rank of the boundary operator from dimension p to p-1
std::size_t boundary_rank(const simplicial_complex& K, int p) {
    if (p <= 0 || K.size(p) == 0) return 0;
    const auto rows = K.simplices(p);
    const auto cols = K.simplices(p - 1);
    std::unordered_map<simplex, std::size_t, simplex_hash> col_index;
    for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);

    gf2_matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& f : rows[i].facets()) m.set(i, col_index.at(f));
    return m.rank();
}

struct reduction_state {
    // columns in filtration order; each a sorted list of facet positions
    std::vector<std::vector<int>> cols;
    std::vector<std::vector<int>> chains;  // accumulated chain per column
    std::vector<int> dims;
    std::vector<double> grades;
    std::unordered_map<int, int> pivot_owner;  // pivot row -> column
    std::vector<char> is_positive;
    std::vector<char> paired;

    void reduce_column(int j) {
        auto& col = cols[static_cast<std::size_t>(j)];
        auto& chain = chains[static_cast<std::size_t>(j)];
        while (!col.empty()) {
            const int pivot = col.back();
            auto it = pivot_owner.find(pivot);
            if (it == pivot_owner.end()) break;
            xor_sorted(col, cols[static_cast<std::size_t>(it->second)]);
            xor_sorted(chain, chains[static_cast<std::size_t>(it->second)]);
        }
        if (col.empty()) {
            is_positive[static_cast<std::size_t>(j)] = 1;
        } else {
            const int pivot = col.back();
            pivot_owner.emplace(pivot, j);
            paired[static_cast<std::size_t>(pivot)] = 1;
        }
    }

    static void xor_sorted(std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        out.reserve(a.size() + b.size());
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(out));
        a = std::move(out);
    }
};

reduction_state reduce_complex(const std::vector<simplex>& order,
                               const std::vector<double>& grades) {
    reduction_state st;
    const std::size_t n = order.size();
    st.cols.resize(n);
    st.chains.resize(n);
    st.dims.resize(n);
    st.grades = grades;
    st.is_positive.assign(n, 0);
    st.paired.assign(n, 0);

    std::unordered_map<simplex, int, simplex_hash> position;
    for (std::size_t j = 0; j < n; ++j) {
        const simplex& s = order[j];
        st.dims[j] = s.dim();
        for (const auto& f : s.facets()) {
            auto it = position.find(f);
            if (it == position.end())
                throw missing_face("filtration is not face-ordered");
            st.cols[j].push_back(it->second);
        }
        std::sort(st.cols[j].begin(), st.cols[j].end());
        st.chains[j] = {static_cast<int>(j)};
        if (!position.emplace(s, static_cast<int>(j)).second)
            throw duplicate_simplex("simplex inserted twice");
        st.reduce_column(static_cast<int>(j));
    }
    return st;
}

}  // namespace

std::vector<int> betti_numbers(const simplicial_complex& K, int max_dim) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(max_dim) + 1);
    std::size_t rank_up = 0;
    for (int p = 0; p <= max_dim; ++p) {
        const std::size_t np = K.size(p);
        const std::size_t rank_down = (p == 0) ? 0 : rank_up;
        rank_up = boundary_rank(K, p + 1);
        out.push_back(static_cast<int>(np - rank_down - rank_up));
    }
    return out;
}

std::vector<int> betti_numbers(const simplicial_complex& K) {
    return betti_numbers(K, std::max(K.top_dim(), 0));
}

persistence_diagram reduce_persistence(const filtration& f) {
    std::vector<simplex> order;
    std::vector<double> grades;
    order.reserve(f.ops.size());
    for (const auto& op : f.ops) {
        if (!op.is_insert())
            throw not_inclusion_only("reduction oracle handles insertions only");
        order.push_back(op.sigma);
        grades.push_back(op.grade);
    }
    auto st = reduce_complex(order, grades);

    persistence_diagram d;
    const std::size_t n = order.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (st.is_positive[j]) continue;
        const int birth_pos = st.cols[j].back();
        d.add(st.dims[j] - 1, grades[static_cast<std::size_t>(birth_pos)], grades[j]);
    }
    for (std::size_t j = 0; j < n; ++j)
        if (st.is_positive[j] && !st.paired[j]) d.add(st.dims[j], grades[j], infinite_death);
    d.sort();
    return d;
}

std::vector<std::vector<simplex>> cycle_basis(const simplicial_complex& K, int p) {
    const auto order = K.all_simplices();
    std::vector<double> grades(order.size(), 0.0);
    auto st = reduce_complex(order, grades);

    std::vector<std::vector<simplex>> basis;
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (!st.is_positive[j] || st.paired[j] || st.dims[j] != p) continue;
        std::vector<simplex> cycle;
        cycle.reserve(st.chains[j].size());
        for (int pos : st.chains[j]) cycle.push_back(order[static_cast<std::size_t>(pos)]);
        std::sort(cycle.begin(), cycle.end());
        basis.push_back(std::move(cycle));
    }
    return basis;
}

audit_report audit_annotations(const simplicial_complex& K, const annotation_matrix& ann) {
    audit_report rep;
    auto fail = [&rep](const std::string& why) {
        rep.ok = false;
        if (rep.detail.empty()) rep.detail = why;
    };

    if (!ann.rows_reference_active()) {
        fail("a row references a retired element");
        return rep;
    }

    const int top = std::max(K.top_dim(), 0);
    const auto betti = betti_numbers(K, top);
    for (int p = 0; p <= top; ++p) {
        if (ann.row_count(p) != K.size(p)) {
            fail("dimension " + std::to_string(p) + ": row count differs from simplex count");
            return rep;
        }
        const int g = ann.element_count(p);
        if (g != betti[static_cast<std::size_t>(p)]) {
            std::ostringstream os;
            os << "dimension " << p << ": " << g << " active elements vs Betti "
               << betti[static_cast<std::size_t>(p)];
            fail(os.str());
            return rep;
        }
        if (g == 0) continue;

        const auto cycles = cycle_basis(K, p);
        if (static_cast<int>(cycles.size()) != g) {
            fail("dimension " + std::to_string(p) + ": cycle basis size mismatch");
            return rep;
        }
        std::vector<element_id> active;
        active.reserve(static_cast<std::size_t>(g));
        for (const auto& [e, t] : ann.elements(p)) active.push_back(e);

        gf2_matrix m(cycles.size(), active.size());
        for (std::size_t j = 0; j < cycles.size(); ++j) {
            const zvector a = ann.chain_annotation(p, cycles[j]);
            for (std::size_t i = 0; i < active.size(); ++i)
                if (zget(a, active[i])) m.set(j, i);
        }
        if (m.rank() != static_cast<std::size_t>(g)) {
            fail("dimension " + std::to_string(p) + ": cycle annotation matrix is rank deficient");
            return rep;
        }
    }
    return rep;
}

}  // namespace simpmap
