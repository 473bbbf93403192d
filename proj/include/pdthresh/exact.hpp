#pragma once

#include <gmpxx.h>

#include <vector>

#include "pdthresh/matrix.hpp"

// Exact rational arithmetic over the matrix entries.  Every finite double is
// a dyadic rational, so any stored matrix can be certified exactly: scale to
// an integer matrix and run fraction-free (Bareiss) elimination, whose pivots
// are exactly the leading principal minors.  GMP supplies the scalars; the
// elimination logic lives here.
namespace pdthresh {

using Rational = mpq_class;

// Exact determinant (Bareiss with row pivoting; handles singular and
// indefinite inputs).
Rational exact_determinant(const SymmetricMatrix& m);

struct ExactMinors {
    // Leading principal minors det(M[0..k][0..k]) as exact rationals,
    // computed for k = 0.. until all n are done or a minor is exactly zero
    // (fraction-free elimination cannot cross a zero pivot; hit_zero marks
    // that, and `minors` includes the zero entry).
    std::vector<Rational> minors;
    bool hit_zero = false;
};

ExactMinors exact_leading_minors(const SymmetricMatrix& m);

// Positive-definiteness decided exactly: PD iff all n leading principal
// minors are positive.  Stops at the first non-positive minor.
PdReport exact_pd_report(const SymmetricMatrix& m);

}  // namespace pdthresh
