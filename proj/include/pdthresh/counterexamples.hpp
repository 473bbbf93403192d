#pragma once

#include <optional>
#include <vector>

#include "pdthresh/graph.hpp"
#include "pdthresh/matrix.hpp"
#include "pdthresh/thresholding.hpp"

namespace pdthresh {

// Parameters of the n x n broken-cycle matrix: diagonal (alpha, 2, ..., 2,
// beta), ones on the first sub/superdiagonal of the leading (n-1)-block,
// entry b at (n-1, n) and a at (1, n) (1-based).  Its zero pattern is the
// n-cycle; zeroing the corner entry a breaks the cycle into a path.
struct CycleParams {
    int n = 0;
    double alpha = 2.0;
    double beta = 2.0;
    double a = 0.0;
    double b = 0.0;
    double epsilon = 0.0;  // recipe slack; informational
};

SymmetricMatrix cycle_matrix(const CycleParams& p);

// Closed-form determinant of cycle_matrix(p).
double cycle_determinant(const CycleParams& p);

// Determinant specializations for alpha = beta = 2:
// p(a, b) = 2n - (n-1)a^2 - (n-1)b^2 + (-1)^{n+1} 2ab, and q(b) = p(0, b).
double cycle_p(int n, double a, double b);
double cycle_q(int n, double b);

// The minimal 3 x 3 example: a PD matrix whose thresholding by the 2-edge
// star graph (center vertex 1) is indefinite.
struct A3Example {
    SymmetricMatrix matrix;  // [[4,3,-3],[3,4,-1],[-3,-1,4]]
    UndirectedGraph graph;   // edges (1,2), (1,3), 1-based
};
A3Example a3_example();

struct CycleCounterexample {
    SymmetricMatrix matrix;  // scale * cycle_matrix(params), see note on `scale`
    CycleParams params;
    double scale = 1.0;
};

// alpha = beta = 2 recipe: choose b^2 = 2n/(n-1) + epsilon with
// epsilon = n / ((n-1)((n-1)^2 - 1)) and a = (-1)^{n+1} b/(n-1).  The result
// is PD with leading minors 2, 3, ..., n, determinant n/(n-1)^2, b > 1 and
// |a| < 1; zeroing the corner entry makes it indefinite.
CycleCounterexample construct_cycle_counterexample(int n);

// The recipe matrix scaled by eta/|a|, so the corner entry sits exactly at
// magnitude eta (snapped to counter rounding) while every other off-diagonal
// entry is strictly above eta: thresholding at level eta removes exactly the
// corner.  Requires eta > 0.
CycleCounterexample construct_level_counterexample(int n, LevelThreshold level);

// A witness embedded into a larger vertex set: identity outside the block.
struct EmbeddedCounterexample {
    SymmetricMatrix matrix;
    std::vector<int> cycle;  // hosts the block; closing edge (front, back)
    bool used_a3 = false;    // 3 x 3 paper block chosen over the general recipe
    std::optional<CycleParams> params;  // set when the recipe block is used
};

// Requires some connected component of h not induced in g (NoBrokenCycle
// otherwise).  Finds a broken cycle, plants a cycle counterexample on it
// (the a3 block when the cycle has length 3 and g is complete), identity
// elsewhere.  The result is PD, has zero pattern inside g, and thresholding
// by h destroys definiteness.
EmbeddedCounterexample embed_counterexample(const UndirectedGraph& g, const UndirectedGraph& h);

struct SingularShift {
    SymmetricMatrix shifted;  // m - lambda_min(m) * I, singular PSD
    double lambda_min = 0.0;
};

// Requires m PD.  Since thresholding never touches the diagonal, the shift
// commutes with it: (m - lambda I)_G = m_G - lambda I exactly.
SingularShift singular_shift(const SymmetricMatrix& m);

// For connected g on n >= 3 vertices: a matrix that is PD, has no zero
// entries, is not diagonally dominant in any row, and whose thresholding by
// g is PD but still not diagonally dominant.  Built by recursively bordering
// the 3 x 3 base [[3,-2,-2],[-2,3,2],[-2,2,3]] along removable vertices.
SymmetricMatrix non_dd_witness(const UndirectedGraph& g);

}  // namespace pdthresh
