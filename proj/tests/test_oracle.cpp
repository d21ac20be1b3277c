#include <doctest.h>

#include <map>
#include <random>

#include "simpmap/gf2.hpp"
#include "simpmap/oracle.hpp"
#include "support.hpp"

using namespace simpmap;
using testsupport::make_complex;

TEST_CASE("betti numbers of the basic shapes") {
    auto hollow = make_complex({simplex{0, 1}, simplex{1, 2}, simplex{0, 2}});
    CHECK(betti_numbers(hollow) == std::vector<int>{1, 1});

    auto closed = make_complex({simplex{0, 1, 2}});
    CHECK(betti_numbers(closed) == std::vector<int>{1, 0, 0});

    // boundary of a tetrahedron: a 2-sphere
    auto sphere = make_complex(
        {simplex{0, 1, 2}, simplex{0, 1, 3}, simplex{0, 2, 3}, simplex{1, 2, 3}});
    CHECK(betti_numbers(sphere) == std::vector<int>{1, 0, 1});
}

TEST_CASE("reduction pairs a circle filled by a triangle") {
    filtration f;
    double g = 1.0;
    for (const auto& s : {simplex{0}, simplex{1}, simplex{2}})
        f.ops.push_back(elementary_op::make_insert(s, g++));
    for (const auto& s : {simplex{0, 1}, simplex{1, 2}, simplex{0, 2}})
        f.ops.push_back(elementary_op::make_insert(s, g++));
    f.ops.push_back(elementary_op::make_insert(simplex{0, 1, 2}, g));

    persistence_diagram want;
    want.add(0, 1, infinite_death);
    want.add(0, 2, 4);
    want.add(0, 3, 5);
    want.add(1, 6, 7);
    CHECK(reduce_persistence(f).same_pairs(want));
}

TEST_CASE("reduction handles the trivial filtrations") {
    filtration single;
    single.ops.push_back(elementary_op::make_insert(simplex{0}, 2.5));
    persistence_diagram d1 = reduce_persistence(single);
    REQUIRE(d1.pairs.size() == 1);
    CHECK(d1.pairs[0] == persistence_pair{0, 2.5, infinite_death});

    filtration two_then_edge;
    two_then_edge.ops.push_back(elementary_op::make_insert(simplex{0}, 1));
    two_then_edge.ops.push_back(elementary_op::make_insert(simplex{1}, 2));
    two_then_edge.ops.push_back(elementary_op::make_insert(simplex{0, 1}, 3));
    persistence_diagram want;
    want.add(0, 1, infinite_death);
    want.add(0, 2, 3);
    CHECK(reduce_persistence(two_then_edge).same_pairs(want));

    filtration with_collapse;
    with_collapse.ops.push_back(elementary_op::make_collapse(0, 1, 1));
    CHECK_THROWS_AS(reduce_persistence(with_collapse), not_inclusion_only);
}

TEST_CASE("cycle basis of the basic shapes") {
    auto hollow = make_complex({simplex{0, 1}, simplex{1, 2}, simplex{0, 2}});
    auto basis = cycle_basis(hollow, 1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<simplex>{simplex{0, 1}, simplex{0, 2}, simplex{1, 2}});

    auto closed = make_complex({simplex{0, 1, 2}});
    CHECK(cycle_basis(closed, 1).empty());
}

TEST_CASE("wedge of two hollow triangles gives two independent cycles") {
    auto wedge = make_complex({simplex{0, 1}, simplex{1, 2}, simplex{0, 2}, simplex{2, 3},
                               simplex{3, 4}, simplex{2, 4}});
    CHECK(betti_numbers(wedge) == std::vector<int>{1, 2});
    auto basis = cycle_basis(wedge, 1);
    REQUIRE(basis.size() == 2);

    // independence in Z_1/B_1 by rank arithmetic over the edge space
    const auto edges = wedge.simplices(1);
    auto col_of = [&](const simplex& e) {
        return static_cast<std::size_t>(
            std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    gf2_matrix m(basis.size(), edges.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& e : basis[j]) m.set(j, col_of(e));
        // each basis element must be a cycle
        std::map<simplex, int> count;
        for (const auto& e : basis[j])
            for (const auto& f : e.facets()) count[f] ^= 1;
        for (const auto& [v, parity] : count) CHECK(parity == 0);
    }
    CHECK(m.rank() == 2);
}

TEST_CASE("essential pair count matches the final betti numbers") {
    std::mt19937 rng(321);
    for (int round = 0; round < 10; ++round) {
        auto filt = testsupport::random_inclusion_filtration(rng, 120, 10, 3);
        simplicial_complex K(3);
        for (const auto& op : filt.ops) K.insert(op.sigma);
        const auto betti = betti_numbers(K, 3);
        const auto diag = reduce_persistence(filt);

        std::vector<int> essentials(4, 0);
        for (const auto& p : diag.pairs)
            if (p.essential()) ++essentials[static_cast<std::size_t>(p.dim)];
        for (int p = 0; p <= 3; ++p)
            CHECK(essentials[static_cast<std::size_t>(p)] == betti[static_cast<std::size_t>(p)]);
    }
}

TEST_CASE("cycle basis has full rank modulo boundaries on random complexes") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 6; ++round) {
        auto filt = testsupport::random_inclusion_filtration(rng, 100, 9, 3);
        simplicial_complex K(3);
        for (const auto& op : filt.ops) K.insert(op.sigma);
        const auto betti = betti_numbers(K, 3);
        for (int p = 0; p <= 2; ++p) {
            const auto basis = cycle_basis(K, p);
            CHECK(static_cast<int>(basis.size()) == betti[static_cast<std::size_t>(p)]);

            // rank of [cycles ; boundaries] minus rank of boundaries == g_p
            const auto cols_list = K.simplices(p);
            auto col_of = [&](const simplex& e) {
                return static_cast<std::size_t>(
                    std::lower_bound(cols_list.begin(), cols_list.end(), e) - cols_list.begin());
            };
            const auto above = K.simplices(p + 1);
            gf2_matrix bd(above.size() + basis.size(), cols_list.size());
            for (std::size_t i = 0; i < above.size(); ++i)
                for (const auto& f : above[i].facets()) bd.set(i, col_of(f));
            gf2_matrix both = bd;
            for (std::size_t j = 0; j < basis.size(); ++j)
                for (const auto& e : basis[j]) both.set(above.size() + j, col_of(e));
            CHECK(both.rank() - bd.rank() == basis.size());
        }
    }
}
