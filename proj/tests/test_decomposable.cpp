#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdthresh/decomposable.hpp"
#include "pdthresh/errors.hpp"
#include "pdthresh/thresholding.hpp"
#include "test_support.hpp"

using namespace pdthresh;

namespace {

// Oracle verdict with the same indeterminate band the analyzers use, driven
// by a dense eigensolver instead of Schur recursions.
OverallVerdict oracle_verdict(const SymmetricMatrix& m) {
    double lam = support::oracle_min_eigenvalue(m);
    if (std::abs(lam) <= 1e-8 * std::max(1.0, m.max_abs())) return OverallVerdict::Indeterminate;
    return lam > 0.0 ? OverallVerdict::PD : OverallVerdict::NotPD;
}

bool any_indeterminate(const ConditionReport& rep) {
    for (const auto& it : rep.items) {
        if (it.indeterminate) return true;
    }
    return rep.overall == OverallVerdict::Indeterminate;
}

SymmetricMatrix pattern_instance(const UndirectedGraph& g, std::mt19937_64& rng, bool repaired) {
    return repaired ? support::random_pattern_pd(g, rng) : support::random_pattern_matrix(g, rng);
}

}  // namespace

TEST_CASE("two-block decomposition: worked example") {
    // A = {1}, B = {3}, C = {2} (1-based) on a path matrix
    SymmetricMatrix m{{4.0, 3.0, 0.0}, {3.0, 4.0, 3.0}, {0.0, 3.0, 4.0}};
    Decomposition d;
    d.part_a = {0};
    d.part_b = {2};
    d.separator_c = {1};
    ConditionReport rep = decomposition_condition(m, d);
    REQUIRE(rep.items.size() == 3);
    CHECK(rep.items[0].value == doctest::Approx(4.0));
    CHECK(rep.items[1].value == doctest::Approx(4.0));
    CHECK(rep.items[2].value == doctest::Approx(-0.5));  // 7/4 + 7/4 - 4
    CHECK(rep.items[2].label == "coupling");
    CHECK(!rep.items[2].passed);
    CHECK(rep.overall == OverallVerdict::NotPD);

    SymmetricMatrix ok{{4.0, 1.0, 0.0}, {1.0, 4.0, 1.0}, {0.0, 1.0, 4.0}};
    CHECK(decomposition_condition(ok, d).overall == OverallVerdict::PD);
}

TEST_CASE("two-block decomposition matches the determinant factorization") {
    auto rng = support::make_rng(81);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 8;
        SymmetricMatrix m = (trial % 2 == 0) ? support::random_pd(n, rng)
                                             : support::random_symmetric(n, rng);
        // random split: C gets 1..n-2 vertices, A and B nonempty
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::uniform_int_distribution<int> cut_a(1, n - 2);
        const int na = cut_a(rng);
        std::uniform_int_distribution<int> cut_b(1, n - 1 - na);
        const int nb = cut_b(rng);
        Decomposition d;
        d.part_a.assign(all.begin(), all.begin() + na);
        d.part_b.assign(all.begin() + na, all.begin() + na + nb);
        d.separator_c.assign(all.begin() + na + nb, all.end());

        // zero the A x B block so the decomposition is valid
        for (int u : d.part_a) {
            for (int v : d.part_b) m.set(u, v, 0.0);
        }
        ConditionReport rep = decomposition_condition(m, d);
        if (any_indeterminate(rep)) continue;
        OverallVerdict expect = oracle_verdict(m);
        if (expect == OverallVerdict::Indeterminate) continue;
        CHECK(rep.overall == expect);
    }
}

TEST_CASE("decomposition input validation") {
    SymmetricMatrix m{{4.0, 3.0, 0.0}, {3.0, 4.0, 3.0}, {0.0, 3.0, 4.0}};
    Decomposition bad;
    bad.part_a = {0, 1};
    bad.part_b = {2};
    bad.separator_c = {};
    // A x B block (entry (1,2)) is nonzero
    CHECK_THROWS_AS(decomposition_condition(m, bad), Error);

    Decomposition overlap;
    overlap.part_a = {0, 1};
    overlap.part_b = {1, 2};
    CHECK_THROWS_AS(decomposition_condition(m, overlap), Error);

    Decomposition missing;
    missing.part_a = {0};
    missing.part_b = {2};
    CHECK_THROWS_AS(decomposition_condition(m, missing), Error);  // vertex 1 unassigned

    Decomposition empty_a;
    empty_a.part_a = {};
    empty_a.part_b = {0, 1, 2};
    CHECK_THROWS_AS(decomposition_condition(m, empty_a), Error);

    // empty separator = block diagonal: fine, and the coupling item disappears
    SymmetricMatrix diag{{4.0, 0.0, 0.0}, {0.0, 4.0, 3.0}, {0.0, 3.0, 4.0}};
    Decomposition blockd;
    blockd.part_a = {0};
    blockd.part_b = {1, 2};
    ConditionReport rep = decomposition_condition(diag, blockd);
    CHECK(rep.overall == OverallVerdict::PD);
    CHECK(rep.items.size() == 2);
}

TEST_CASE("chordal conditions: worked example on two glued triangles") {
    UndirectedGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    auto rng = support::make_rng(82);
    SymmetricMatrix m = support::random_pattern_pd(g, rng);
    ConditionReport rep = chordal_conditions(m, g);
    REQUIRE(rep.items.size() == 1);  // two cliques -> one separator condition
    CHECK(rep.items[0].is_matrix);
    CHECK(rep.overall == OverallVerdict::PD);

    // a single clique has no separator conditions at all
    SymmetricMatrix pd = support::random_pattern_pd(UndirectedGraph::complete(4), rng);
    ConditionReport single = chordal_conditions(pd, UndirectedGraph::complete(4));
    CHECK(single.items.empty());
    REQUIRE(!single.notes.empty());
    CHECK(single.notes[0].find("single clique") != std::string::npos);
    CHECK(single.overall == OverallVerdict::PD);
}

TEST_CASE("chordal conditions agree with the eigen oracle on pattern instances") {
    auto rng = support::make_rng(83);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + trial % 8;
        UndirectedGraph g = support::random_connected_chordal(n, rng);
        SymmetricMatrix m = pattern_instance(g, rng, trial % 2 == 0);
        ConditionReport rep = chordal_conditions(m, g);
        if (any_indeterminate(rep)) continue;
        OverallVerdict expect = oracle_verdict(m);
        if (expect == OverallVerdict::Indeterminate) continue;
        CHECK(rep.overall == expect);
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("chordal conditions input validation") {
    auto rng = support::make_rng(84);
    UndirectedGraph c4 = UndirectedGraph::cycle(4);
    SymmetricMatrix m = support::random_pattern_pd(c4, rng);
    CHECK_THROWS_AS(chordal_conditions(m, c4), Error);  // not chordal

    UndirectedGraph p3 = UndirectedGraph::path(3);
    SymmetricMatrix off = support::random_pattern_pd(UndirectedGraph::complete(3), rng);
    CHECK_THROWS_AS(chordal_conditions(off, p3), Error);  // entries off the pattern

    UndirectedGraph disco(4);
    disco.add_edge(0, 1);
    SymmetricMatrix dm = support::random_pattern_pd(disco, rng);
    CHECK_THROWS_AS(chordal_conditions(dm, disco), Error);  // disconnected

    SymmetricMatrix negd = support::random_pattern_pd(p3, rng);
    negd.set(1, 1, -1.0);
    ConditionReport rep = chordal_conditions(negd, p3);
    CHECK(rep.overall == OverallVerdict::NotPD);  // diagonal failure short-circuits
}

TEST_CASE("tree edge order is BFS with ascending children") {
    UndirectedGraph star(3);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    TreeEdgeOrder o = tree_edge_order(star, 0);
    CHECK(o.root == 0);
    CHECK(o.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    UndirectedGraph path = UndirectedGraph::path(4);
    TreeEdgeOrder mid = tree_edge_order(path, 2);
    CHECK(mid.edges == std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {1, 0}});

    CHECK_THROWS_AS(tree_edge_order(UndirectedGraph::cycle(4), 0), Error);
    CHECK_THROWS_AS(tree_edge_order(path, 9), Error);
}

TEST_CASE("tree conditions: the star worked example") {
    UndirectedGraph star(3);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    SymmetricMatrix m{{4.0, 3.0, 3.0}, {3.0, 4.0, 0.0}, {3.0, 0.0, 4.0}};
    ConditionReport rep = tree_conditions(m, star, 0);
    REQUIRE(rep.items.size() == 1);
    CHECK(rep.items[0].value == doctest::Approx(-0.5));  // 7/4 + 7/4 - 4
    CHECK(rep.overall == OverallVerdict::NotPD);

    SymmetricMatrix mild{{4.0, 1.0, 1.0}, {1.0, 4.0, 0.0}, {1.0, 0.0, 4.0}};
    CHECK(tree_conditions(mild, star, 0).overall == OverallVerdict::PD);
}

TEST_CASE("tree conditions: verdict is root-invariant and matches the oracle") {
    auto rng = support::make_rng(85);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 10;
        UndirectedGraph t = support::random_tree(n, rng);
        SymmetricMatrix m = pattern_instance(t, rng, trial % 2 == 0);

        ConditionReport r0 = tree_conditions(m, t, 0);
        if (any_indeterminate(r0)) continue;
        OverallVerdict expect = oracle_verdict(m);
        if (expect == OverallVerdict::Indeterminate) continue;
        CHECK(r0.overall == expect);
        ++checked;

        std::uniform_int_distribution<int> pick(0, n - 1);
        ConditionReport r1 = tree_conditions(m, t, pick(rng));
        if (!any_indeterminate(r1)) CHECK(r1.overall == expect);
    }
    CHECK(checked > 200);
}

TEST_CASE("tree conditions input validation") {
    auto rng = support::make_rng(86);
    UndirectedGraph p2 = UndirectedGraph::path(2);
    SymmetricMatrix small = support::random_pattern_pd(p2, rng);
    CHECK_THROWS_AS(tree_conditions(small, p2, 0), Error);  // n < 3

    UndirectedGraph c4 = UndirectedGraph::cycle(4);
    SymmetricMatrix cm = support::random_pattern_pd(c4, rng);
    CHECK_THROWS_AS(tree_conditions(cm, c4, 0), Error);  // not a tree

    UndirectedGraph p4 = UndirectedGraph::path(4);
    SymmetricMatrix off = support::random_pattern_pd(UndirectedGraph::complete(4), rng);
    CHECK_THROWS_AS(tree_conditions(off, p4, 0), Error);  // off-pattern entries
}

TEST_CASE("path sigma: worked values and the Schur link") {
    SymmetricMatrix t{{2.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 2.0}};
    CHECK(path_sigma(t, 3).value == doctest::Approx(2.0));
    CHECK(path_sigma(t, 2).value == doctest::Approx(1.5));
    CHECK(path_sigma(t, 1).value == doctest::Approx(4.0 / 3.0));

    SymmetricMatrix t4{{2.0, 1.0, 0.0, 0.0},
                       {1.0, 2.0, 1.0, 0.0},
                       {0.0, 1.0, 2.0, 1.0},
                       {0.0, 0.0, 1.0, 2.0}};
    CHECK(path_sigma(t4, 1).value == doctest::Approx(1.25));

    auto rng = support::make_rng(87);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 13;
        SymmetricMatrix m = support::random_pattern_pd(UndirectedGraph::path(n), rng);
        SigmaValue s = path_sigma(m, 1);
        REQUIRE(!s.indeterminate);
        double ref = schur_complement(m, {0}).at(0, 0);
        CHECK(std::abs(s.value - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    }

    CHECK_THROWS_AS(path_sigma(t, 0), Error);
    CHECK_THROWS_AS(path_sigma(t, 4), Error);
    SymmetricMatrix not_tri{{2.0, 1.0, 0.5}, {1.0, 2.0, 1.0}, {0.5, 1.0, 2.0}};
    CHECK_THROWS_AS(path_sigma(not_tri, 1), Error);
    SymmetricMatrix neg_diag{{2.0, 1.0, 0.0}, {1.0, -2.0, 1.0}, {0.0, 1.0, 2.0}};
    CHECK_THROWS_AS(path_sigma(neg_diag, 1), Error);
}

TEST_CASE("path conditions refute and certify correctly") {
    SymmetricMatrix bad{{1.0, 0.9, 0.0}, {0.9, 1.0, 0.9}, {0.0, 0.9, 1.0}};
    ConditionReport rep = path_conditions(bad);
    REQUIRE(rep.items.size() == 1);
    // sigma(1) = 1 - 0.81/(1 - 0.81) ~ -3.263
    CHECK(rep.items[0].value == doctest::Approx(1.0 - 0.81 / 0.19).epsilon(1e-9));
    CHECK(rep.overall == OverallVerdict::NotPD);

    auto rng = support::make_rng(88);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 13;
        UndirectedGraph p = UndirectedGraph::path(n);
        SymmetricMatrix m = pattern_instance(p, rng, trial % 2 == 0);
        if (m.at(0, 0) <= 0.0) continue;  // analyzer requires a positive diagonal
        bool diag_ok = true;
        for (int i = 0; i < n; ++i) {
            if (m.at(i, i) <= 0.0) diag_ok = false;
        }
        if (!diag_ok) continue;
        ConditionReport r = path_conditions(m);
        if (any_indeterminate(r)) continue;
        OverallVerdict expect = oracle_verdict(m);
        if (expect == OverallVerdict::Indeterminate) continue;
        CHECK(r.overall == expect);
        ++checked;

        // a path analysis and a tree analysis of the same instance agree
        ConditionReport tr = tree_conditions(m, p, 0);
        if (!any_indeterminate(tr)) CHECK(tr.overall == r.overall);
    }
    CHECK(checked > 200);
}

TEST_CASE("an exactly-zero pivot cascades into an indeterminate report") {
    SymmetricMatrix m{{1.0, 0.9, 0.0}, {0.9, 1.0, 1.0}, {0.0, 1.0, 1.0}};
    // sigma(2) = 1 - 1/1 = 0: the recursion cannot continue reliably
    ConditionReport rep = path_conditions(m);
    CHECK(rep.overall == OverallVerdict::Indeterminate);
    REQUIRE(!rep.items.empty());
    CHECK(rep.items[0].indeterminate);
}

TEST_CASE("sigma sweep values are listed in the report notes") {
    SymmetricMatrix t4{{2.0, 1.0, 0.0, 0.0},
                       {1.0, 2.0, 1.0, 0.0},
                       {0.0, 1.0, 2.0, 1.0},
                       {0.0, 0.0, 1.0, 2.0}};
    ConditionReport rep = path_conditions(t4);
    bool found = false;
    for (const auto& note : rep.notes) {
        if (note.find("sigma sweep:") != std::string::npos && note.find("1.5") != std::string::npos) {
            found = true;
        }
    }
    CHECK(found);
    CHECK(rep.overall == OverallVerdict::PD);
    REQUIRE(rep.items.size() == 2);  // k = 1..n-2
}
