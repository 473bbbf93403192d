#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdthresh/errors.hpp"
#include "pdthresh/thresholding.hpp"
#include "test_support.hpp"

using namespace pdthresh;

TEST_CASE("graph thresholding keeps the diagonal and the listed edges") {
    SymmetricMatrix m{{4.0, 3.0, -3.0}, {3.0, 4.0, -1.0}, {-3.0, -1.0, 4.0}};
    UndirectedGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    SymmetricMatrix t = threshold_by_graph(m, g);
    CHECK(t.at(0, 1) == 3.0);
    CHECK(t.at(0, 2) == -3.0);
    CHECK(t.at(1, 2) == 0.0);
    CHECK(t.at(1, 1) == 4.0);

    SymmetricMatrix all = threshold_by_graph(m, UndirectedGraph::complete(3));
    CHECK(all.data() == m.data());

    SymmetricMatrix none = threshold_by_graph(m, UndirectedGraph(3));
    CHECK(none.at(0, 1) == 0.0);
    CHECK(none.at(2, 2) == 4.0);

    CHECK_THROWS_AS(threshold_by_graph(m, UndirectedGraph(4)), Error);
}

TEST_CASE("graph thresholding is idempotent and composes by edge intersection") {
    auto rng = support::make_rng(41);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        SymmetricMatrix m = support::random_symmetric(n, rng);
        UndirectedGraph g(n), h(n), both(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                bool in_g = coin(rng) < 0.5;
                bool in_h = coin(rng) < 0.5;
                if (in_g) g.add_edge(i, j);
                if (in_h) h.add_edge(i, j);
                if (in_g && in_h) both.add_edge(i, j);
            }
        }
        SymmetricMatrix once = threshold_by_graph(m, g);
        CHECK(threshold_by_graph(once, g).data() == once.data());
        CHECK(threshold_by_graph(once, h).data() == threshold_by_graph(m, both).data());
    }
}

TEST_CASE("level thresholding uses a strict cutoff") {
    SymmetricMatrix m{{2.0, 0.5, -0.5}, {0.5, 2.0, 0.50000001}, {-0.5, 0.50000001, 2.0}};
    SymmetricMatrix t = threshold_at_level(m, LevelThreshold(0.5));
    CHECK(t.at(0, 1) == 0.0);  // |0.5| is not > 0.5
    CHECK(t.at(0, 2) == 0.0);
    CHECK(t.at(1, 2) == 0.50000001);
    CHECK(t.at(0, 0) == 2.0);  // diagonal survives regardless of magnitude

    SymmetricMatrix small_diag{{0.1, 3.0}, {3.0, 0.1}};
    SymmetricMatrix td = threshold_at_level(small_diag, LevelThreshold(5.0));
    CHECK(td.at(0, 0) == 0.1);
    CHECK(td.at(0, 1) == 0.0);

    CHECK_THROWS_AS(LevelThreshold(-0.25), Error);
    CHECK_THROWS_AS(LevelThreshold(std::nan("")), Error);
    CHECK_THROWS_AS(LevelThreshold(std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("level thresholding agrees with thresholding by its own pattern graph") {
    auto rng = support::make_rng(42);
    std::uniform_real_distribution<double> eta_pick(0.0, 2.5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + trial % 8;
        SymmetricMatrix m = support::random_symmetric(n, rng);
        const double eta = eta_pick(rng);
        SymmetricMatrix by_level = threshold_at_level(m, LevelThreshold(eta));
        UndirectedGraph g = zero_pattern_graph(m, eta);
        CHECK(by_level.data() == threshold_by_graph(m, g).data());
    }
}

TEST_CASE("level thresholding is monotone in the level") {
    auto rng = support::make_rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        SymmetricMatrix m = support::random_symmetric(n, rng);
        std::uniform_real_distribution<double> u(0.0, 2.0);
        double e1 = u(rng), e2 = u(rng);
        if (e1 > e2) std::swap(e1, e2);
        SymmetricMatrix t1 = threshold_at_level(m, LevelThreshold(e1));
        SymmetricMatrix t2 = threshold_at_level(m, LevelThreshold(e2));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (t2.at(i, j) != 0.0) CHECK(t1.at(i, j) == t2.at(i, j));
            }
        }
        // level 0 keeps every nonzero entry
        CHECK(threshold_at_level(m, LevelThreshold(0.0)).data() == m.data());
    }
}

TEST_CASE("pattern cone membership") {
    SymmetricMatrix m{{2.0, 1.0, 0.0}, {1.0, 2.0, 0.0}, {0.0, 0.0, 2.0}};
    UndirectedGraph g(3);
    g.add_edge(0, 1);
    CHECK(is_in_pattern_cone(m, g));
    CHECK(is_in_pattern_cone(m, UndirectedGraph::complete(3)));  // pattern may be smaller

    m.set(1, 2, 0.5);  // off-pattern entry
    CHECK(!is_in_pattern_cone(m, g));
    CHECK(is_in_pattern_cone(m, g, 0.5));  // within tolerance

    SymmetricMatrix not_pd{{1.0, 2.0}, {2.0, 1.0}};
    CHECK(!is_in_pattern_cone(not_pd, UndirectedGraph::complete(2)));
    CHECK_THROWS_AS(is_in_pattern_cone(m, UndirectedGraph(2)), Error);
}

TEST_CASE("zero pattern graph lists entries above the tolerance") {
    SymmetricMatrix m{{1.0, 0.0, 0.25}, {0.0, 1.0, -2.0}, {0.25, -2.0, 1.0}};
    UndirectedGraph g0 = zero_pattern_graph(m);
    CHECK(g0.has_edge(0, 2));
    CHECK(g0.has_edge(1, 2));
    CHECK(!g0.has_edge(0, 1));
    UndirectedGraph g1 = zero_pattern_graph(m, 0.25);
    CHECK(!g1.has_edge(0, 2));  // not strictly above
    CHECK(g1.has_edge(1, 2));
}
