#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "pdthresh/errors.hpp"
#include "pdthresh/exact.hpp"
#include "pdthresh/matrix.hpp"
#include "test_support.hpp"

using namespace pdthresh;

TEST_CASE("storage is symmetric with the upper triangle authoritative") {
    SymmetricMatrix m(2, {1.0, 5.0, 7.0, 2.0});
    CHECK(m.at(0, 1) == 5.0);
    CHECK(m.at(1, 0) == 5.0);  // lower triangle input is discarded
    m.set(1, 0, -3.0);
    CHECK(m.at(0, 1) == -3.0);

    SymmetricMatrix init{{4.0, 1.0}, {1.0, 2.0}};
    CHECK(init.size() == 2);
    CHECK(init.at(1, 1) == 2.0);

    CHECK_THROWS_AS(SymmetricMatrix(-1), Error);
    CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 2.0, 3.0}), Error);
    CHECK_THROWS_AS((SymmetricMatrix{{1.0, 2.0}, {2.0}}), Error);
    CHECK_THROWS_AS(m.at(0, 2), Error);
    CHECK_THROWS_AS(m.set(-1, 0, 0.0), Error);

    SymmetricMatrix id = SymmetricMatrix::identity(3);
    CHECK(id.at(0, 0) == 1.0);
    CHECK(id.at(0, 2) == 0.0);
}

TEST_CASE("norms and scalar summaries") {
    SymmetricMatrix m{{3.0, -4.0}, {-4.0, 2.0}};
    CHECK(m.max_abs() == 4.0);
    CHECK(m.max_abs_diagonal() == 3.0);
    CHECK(m.frobenius_norm() == doctest::Approx(std::sqrt(9.0 + 16.0 + 16.0 + 4.0)));
    CHECK(m.all_finite());
    m.set(0, 1, std::numeric_limits<double>::infinity());
    CHECK(!m.all_finite());
}

TEST_CASE("permute places entry (i,j) from (order[i], order[j])") {
    auto rng = support::make_rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 8;
        SymmetricMatrix m = support::random_symmetric(n, rng);
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);

        SymmetricMatrix p = permute(m, order);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                CHECK(p.at(i, j) == m.at(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]));
            }
        }
        std::vector<int> inverse(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) inverse[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
        SymmetricMatrix back = permute(p, inverse);
        CHECK(back.data() == m.data());
    }
    CHECK_THROWS_AS(permute(SymmetricMatrix::identity(2), {0}), Error);
    CHECK_THROWS_AS(permute(SymmetricMatrix::identity(2), {0, 0}), Error);
}

TEST_CASE("float determinant matches the cofactor expansion") {
    auto rng = support::make_rng(22);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + trial % 7;
        SymmetricMatrix m = support::random_symmetric(n, rng);
        double lu = determinant(m);
        double cof = support::oracle_det_cofactor(m);
        CHECK(std::abs(lu - cof) <= 1e-9 * std::max(1.0, std::abs(cof)));
    }
}

TEST_CASE("exact determinant is exact on integer and dyadic inputs") {
    auto rng = support::make_rng(23);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 6;
        SymmetricMatrix m(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) m.set(i, j, static_cast<double>(entry(rng)));
        }
        // Cofactor expansion over small integers is float-exact.
        double cof = support::oracle_det_cofactor(m);
        CHECK(exact_determinant(m) == Rational(cof));
    }

    SymmetricMatrix dyadic{{0.5, 0.25}, {0.25, 0.5}};
    CHECK(exact_determinant(dyadic) == Rational(3) / 16);

    SymmetricMatrix singular{{1.0, 1.0}, {1.0, 1.0}};
    CHECK(exact_determinant(singular) == 0);
}

TEST_CASE("exact leading minors") {
    SymmetricMatrix t{{2.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 2.0}};
    ExactMinors em = exact_leading_minors(t);
    REQUIRE(em.minors.size() == 3);
    CHECK(em.minors[0] == 2);
    CHECK(em.minors[1] == 3);
    CHECK(em.minors[2] == 4);
    CHECK(!em.hit_zero);

    SymmetricMatrix z{{1.0, 1.0}, {1.0, 1.0}};
    ExactMinors ez = exact_leading_minors(z);
    CHECK(ez.hit_zero);
    CHECK(ez.minors.back() == 0);

    PdReport rep = exact_pd_report(z);
    CHECK(!rep.is_pd);
    CHECK(!rep.indeterminate);
    CHECK(rep.failing_minor_order == 2);
    CHECK(rep.mode == PdMode::ExactRational);
}

TEST_CASE("positive definiteness agrees across strategies and with the eigenvalue oracle") {
    auto rng = support::make_rng(24);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 10;
        SymmetricMatrix m = (trial % 2 == 0) ? support::random_pd(n, rng)
                                             : support::random_symmetric(n, rng);
        double lam = support::oracle_min_eigenvalue(m);
        if (std::abs(lam) <= 1e-6 * std::max(1.0, m.max_abs())) continue;  // stay off the fence
        const bool truth = lam > 0.0;

        PdReport ex = is_positive_definite(m, kDefaultPdTol, PdStrategy::Exact);
        PdReport fl = is_positive_definite(m, kDefaultPdTol, PdStrategy::Float);
        PdReport au = is_positive_definite(m);
        CHECK(ex.mode == PdMode::ExactRational);
        CHECK(fl.mode == PdMode::FloatPivot);
        CHECK(au.mode == PdMode::ExactRational);  // n <= 64 routes to exact
        CHECK(!ex.indeterminate);
        CHECK(ex.is_pd == truth);
        CHECK(au.is_pd == truth);
        if (!fl.indeterminate) CHECK(fl.is_pd == truth);

        if (!truth) {
            // failing_minor_order names the first non-positive leading minor
            ExactMinors em = exact_leading_minors(m);
            int first = 0;
            for (size_t k = 0; k < em.minors.size(); ++k) {
                if (em.minors[k] <= 0) {
                    first = static_cast<int>(k) + 1;
                    break;
                }
            }
            if (first > 0) CHECK(ex.failing_minor_order == first);
        } else {
            CHECK(ex.failing_minor_order == 0);
            CHECK(ex.min_pivot_or_eigenvalue > 0.0);
        }
    }
}

TEST_CASE("auto strategy switches to float pivots above the exact cutoff") {
    const int n = kExactAutoMaxN + 6;
    SymmetricMatrix big = SymmetricMatrix::identity(n);
    PdReport rep = is_positive_definite(big);
    CHECK(rep.mode == PdMode::FloatPivot);
    CHECK(rep.is_pd);

    PdReport small = is_positive_definite(SymmetricMatrix::identity(kExactAutoMaxN));
    CHECK(small.mode == PdMode::ExactRational);
}

TEST_CASE("float mode flags borderline pivots, exact mode decides them") {
    SymmetricMatrix nearly{{1.0, 1.0}, {1.0, 1.0 + 2e-11}};
    PdReport fl = is_positive_definite(nearly, kDefaultPdTol, PdStrategy::Float);
    CHECK(fl.indeterminate);
    PdReport ex = is_positive_definite(nearly, kDefaultPdTol, PdStrategy::Exact);
    CHECK(!ex.indeterminate);
    CHECK(ex.is_pd);

    SymmetricMatrix tiny{{1e-300}};
    CHECK(is_positive_definite(tiny, kDefaultPdTol, PdStrategy::Float).indeterminate);
    CHECK(is_positive_definite(tiny, kDefaultPdTol, PdStrategy::Exact).is_pd);

    CHECK_THROWS_AS(is_positive_definite(nearly, -1.0), Error);
    SymmetricMatrix bad{{1.0, std::numeric_limits<double>::quiet_NaN()},
                        {std::numeric_limits<double>::quiet_NaN(), 1.0}};
    CHECK_THROWS_AS(is_positive_definite(bad), Error);
}

TEST_CASE("min_eigenvalue matches the dense eigensolver") {
    auto rng = support::make_rng(25);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 20;
        SymmetricMatrix m = support::random_symmetric(n, rng);
        double ours = min_eigenvalue(m);
        double ref = support::oracle_min_eigenvalue(m);
        CHECK(std::abs(ours - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
    }
    SymmetricMatrix t{{2.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 2.0}};
    CHECK(min_eigenvalue(t) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    SymmetricMatrix one{{-7.5}};
    CHECK(min_eigenvalue(one) == doctest::Approx(-7.5));
}

TEST_CASE("schur complement: worked value, determinant identity, definiteness") {
    SymmetricMatrix m{{4.0, 3.0}, {3.0, 4.0}};
    SymmetricMatrix s = schur_complement(m, {0});
    REQUIRE(s.size() == 1);
    CHECK(s.at(0, 0) == doctest::Approx(4.0 - 9.0 / 4.0));

    auto rng = support::make_rng(26);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        SymmetricMatrix a = support::random_pd(n, rng);
        std::uniform_int_distribution<int> ksize(1, n - 1);
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> keep(all.begin(), all.begin() + ksize(rng));
        std::vector<int> rest(all.begin() + static_cast<long>(keep.size()), all.end());

        SymmetricMatrix sc = schur_complement(a, keep);
        CHECK(support::oracle_min_eigenvalue(sc) > 0.0);  // Schur of PD is PD

        // det(A) = det(A[rest,rest]) * det(schur onto keep)
        std::sort(rest.begin(), rest.end());
        SymmetricMatrix block(static_cast<int>(rest.size()));
        for (size_t i = 0; i < rest.size(); ++i) {
            for (size_t j = i; j < rest.size(); ++j) {
                block.set(static_cast<int>(i), static_cast<int>(j), a.at(rest[i], rest[j]));
            }
        }
        double lhs = determinant(a);
        double rhs = determinant(block) * determinant(sc);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
    }

    SymmetricMatrix sing{{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    CHECK_THROWS_AS(schur_complement(sing, {1, 2}), Error);
    CHECK_THROWS_AS(schur_complement(m, {0, 1}), Error);   // nothing to eliminate
    CHECK_THROWS_AS(schur_complement(m, {0, 0}), Error);   // repeated index
    CHECK_THROWS_AS(schur_complement(m, {}), Error);
    CHECK_THROWS_AS(schur_complement(m, {5}), Error);
}

TEST_CASE("diagonal dominance and Gershgorin discs") {
    SymmetricMatrix m{{3.0, 1.0, -1.0}, {1.0, 2.5, 0.0}, {-1.0, 0.0, 1.5}};
    DdReport dd = is_strictly_diagonally_dominant(m);
    CHECK(dd.dominant);
    REQUIRE(dd.row_margins.size() == 3);
    CHECK(dd.row_margins[0] == doctest::Approx(1.0));
    CHECK(dd.row_margins[2] == doctest::Approx(0.5));

    SymmetricMatrix tie{{1.0, 1.0}, {1.0, 1.0}};
    CHECK(!is_strictly_diagonally_dominant(tie).dominant);  // strict inequality required

    auto discs = gershgorin_discs(m);
    REQUIRE(discs.size() == 3);
    CHECK(discs[0].center == 3.0);
    CHECK(discs[0].radius == doctest::Approx(2.0));
    CHECK(discs[1].radius == doctest::Approx(1.0));
}
