#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdthresh/graph.hpp"
#include "pdthresh/matrix.hpp"

namespace pdthresh {

enum class OverallVerdict { PD, NotPD, Indeterminate };

// Condition values within this absolute distance of zero are reported as
// indeterminate rather than forced to a side.
inline constexpr double kConditionBand = 1e-10;

struct ConditionItem {
    std::string label;
    std::string form;    // human-readable statement, 1-based indices
    double value = 0.0;  // the scalar condition, or the minimum eigenvalue of a matrix condition
    bool is_matrix = false;
    bool passed = false;
    bool indeterminate = false;
};

struct ConditionReport {
    std::vector<ConditionItem> items;
    OverallVerdict overall = OverallVerdict::Indeterminate;
    std::vector<std::string> notes;
};

// Positivity test through a two-block decomposition of the thresholded
// matrix: vertex sets A and B joined only through the separator C (so
// m[A,B] must be identically zero).  m is PD iff m[A,A] and m[B,B] are PD
// and the two Schur complements onto C exceed m[C,C]:
//   S1 + S2 - m[C,C] > 0,
// with S1 = m[C,C] - m[C,A] m[A,A]^{-1} m[A,C] and S2 likewise through B.
ConditionReport decomposition_condition(const SymmetricMatrix& m, const Decomposition& d);

// For m whose zero pattern is exactly a connected chordal g: run a perfect
// elimination clique ordering K_1, ..., K_k and test, for each q >= 2, the
// matrix condition S1 + S2 - m[S_q, S_q] > 0 on the separator S_q.  A
// failing condition refutes positive definiteness outright; all conditions
// passing certifies it whenever m arises by thresholding a PD matrix to the
// pattern g (which keeps every clique block of m PD).
ConditionReport chordal_conditions(const SymmetricMatrix& m, const UndirectedGraph& g);

struct TreeEdgeOrder {
    int root = 0;
    std::vector<std::pair<int, int>> edges;  // (parent, child), BFS order, children ascending
};
TreeEdgeOrder tree_edge_order(const UndirectedGraph& t, int root = 0);

// Specialization to trees (every edge is a 2-clique): with edges ordered by
// tree_edge_order, the condition at edge j = 2..k with endpoints (p, q) is
//   sigma_j + eta_j - m[p,p] > 0,
// where sigma_j is the Schur complement of m over A_j u {p} onto {p}
// (A_j = vertices of earlier edges minus p) and eta_j = m[p,p] - m[p,q]^2 / m[q,q].
ConditionReport tree_conditions(const SymmetricMatrix& m, const UndirectedGraph& t, int root = 0);

struct SigmaValue {
    double value = 0.0;
    bool indeterminate = false;  // a near-zero denominator made the tail unreliable
};

// Backward continued fraction on a tridiagonal matrix, 1-based k:
//   sigma(n) = m[n,n],  sigma(k) = m[k,k] - m[k,k+1]^2 / sigma(k+1).
SigmaValue path_sigma(const SymmetricMatrix& m, int k);

// Path specialization: for tridiagonal m with positive diagonal and n >= 3,
// the report carries sigma(k) for k = 1..n-2.  A nonpositive sigma refutes
// positive definiteness; all of them positive certifies it whenever m is
// the path thresholding of a PD matrix (the trailing 2x2 sits inside one
// path clique and is then PD for free).
ConditionReport path_conditions(const SymmetricMatrix& m);

}  // namespace pdthresh
