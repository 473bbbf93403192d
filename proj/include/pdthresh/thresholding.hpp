#pragma once

#include "pdthresh/graph.hpp"
#include "pdthresh/matrix.hpp"

namespace pdthresh {

// Magnitude cutoff for level thresholding; strictly larger entries survive.
struct LevelThreshold {
    explicit LevelThreshold(double eta_);
    double eta;
};

// Keep entry (i,j) iff i == j or (i,j) is an edge of g; zero the rest.
SymmetricMatrix threshold_by_graph(const SymmetricMatrix& m, const UndirectedGraph& g);

// Keep off-diagonal entries with |a_ij| > eta (strict; boundary entries are
// zeroed); the diagonal always survives.
SymmetricMatrix threshold_at_level(const SymmetricMatrix& m, LevelThreshold level);

// Membership in the cone of positive definite matrices with zero pattern
// inside g: positive definite and |a_ij| <= tol off-pattern.
bool is_in_pattern_cone(const SymmetricMatrix& m, const UndirectedGraph& g, double tol = 0.0);

// Edge (i,j) iff |a_ij| > tol, i != j.
UndirectedGraph zero_pattern_graph(const SymmetricMatrix& m, double tol = 0.0);

}  // namespace pdthresh
