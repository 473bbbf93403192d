#include "pdthresh/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pdthresh/errors.hpp"
#include "pdthresh/kernels.hpp"

namespace pdthresh {

namespace {

double parity_sign(int n) { return (n % 2 == 1) ? 1.0 : -1.0; }

void require_cycle_params(const CycleParams& p) {
    if (p.n < 3) {
        throw Error(Error::Code::TooSmall, "cycle matrix needs n >= 3, got n = " + std::to_string(p.n));
    }
    for (double v : {p.alpha, p.beta, p.a, p.b}) {
        if (!std::isfinite(v)) {
            throw Error(Error::Code::NonFinite, "cycle parameters must be finite");
        }
    }
}

// Solve a x = rhs for PD a, via the LU kernels.
std::vector<double> solve_pd(const SymmetricMatrix& a, const std::vector<double>& rhs) {
    const int n = a.size();
    std::vector<double> lu(a.data());
    std::vector<int> perm(static_cast<size_t>(n));
    const double floor = 1e-14 * std::max(1.0, a.max_abs());
    kernels::LuOutcome out = kernels::lu_factor(lu.data(), n, perm.data(), floor);
    if (out.singular) {
        throw Error(Error::Code::SingularBlock, "linear solve hit a (near-)singular matrix");
    }
    std::vector<double> x = rhs;
    kernels::lu_solve(lu.data(), perm.data(), n, x.data(), 1);
    return x;
}

}  // namespace

SymmetricMatrix cycle_matrix(const CycleParams& p) {
    require_cycle_params(p);
    const int n = p.n;
    SymmetricMatrix m(n);
    m.set(0, 0, p.alpha);
    for (int i = 1; i + 1 < n; ++i) m.set(i, i, 2.0);
    m.set(n - 1, n - 1, p.beta);
    for (int i = 0; i + 2 < n; ++i) m.set(i, i + 1, 1.0);
    m.set(n - 2, n - 1, p.b);
    m.set(0, n - 1, p.a);
    return m;
}

double cycle_determinant(const CycleParams& p) {
    require_cycle_params(p);
    const double n = static_cast<double>(p.n);
    const double s = parity_sign(p.n);
    return -(n - 2.0) * p.beta + (n - 1.0) * p.alpha * p.beta + s * 2.0 * p.a * p.b -
           (n - 1.0) * p.a * p.a + (n - 3.0) * p.b * p.b - (n - 2.0) * p.alpha * p.b * p.b;
}

double cycle_p(int n, double a, double b) {
    const double nn = static_cast<double>(n);
    return 2.0 * nn - (nn - 1.0) * a * a - (nn - 1.0) * b * b + parity_sign(n) * 2.0 * a * b;
}

double cycle_q(int n, double b) { return cycle_p(n, 0.0, b); }

A3Example a3_example() {
    A3Example ex;
    ex.matrix = SymmetricMatrix{{4.0, 3.0, -3.0}, {3.0, 4.0, -1.0}, {-3.0, -1.0, 4.0}};
    ex.graph = UndirectedGraph(3);
    ex.graph.add_edge(0, 1);
    ex.graph.add_edge(0, 2);
    return ex;
}

CycleCounterexample construct_cycle_counterexample(int n) {
    if (n < 3) {
        throw Error(Error::Code::TooSmall,
                    "cycle counterexample needs n >= 3, got n = " + std::to_string(n));
    }
    CycleCounterexample out;
    const double nn = static_cast<double>(n);
    out.params.n = n;
    out.params.alpha = 2.0;
    out.params.beta = 2.0;
    out.params.epsilon = nn / ((nn - 1.0) * ((nn - 1.0) * (nn - 1.0) - 1.0));
    out.params.b = std::sqrt(2.0 * nn / (nn - 1.0) + out.params.epsilon);
    out.params.a = parity_sign(n) * out.params.b / (nn - 1.0);
    out.scale = 1.0;
    out.matrix = cycle_matrix(out.params);
    return out;
}

CycleCounterexample construct_level_counterexample(int n, LevelThreshold level) {
    if (!(level.eta > 0.0)) {
        throw Error(Error::Code::OutOfRange, "level counterexample needs a positive level");
    }
    CycleCounterexample out = construct_cycle_counterexample(n);
    const double scale = level.eta / std::abs(out.params.a);
    SymmetricMatrix& m = out.matrix;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) m.set(i, j, m.at(i, j) * scale);
    }
    // eta/|a| * a can round to one ulp above eta, which would survive the
    // strict cutoff; snap the corner to exactly +-eta.  Every path entry is
    // eta/|a| > eta by |a| < 1 with slack far beyond rounding.
    m.set(0, n - 1, std::copysign(level.eta, out.params.a));
    out.scale = scale;
    return out;
}

EmbeddedCounterexample embed_counterexample(const UndirectedGraph& g, const UndirectedGraph& h) {
    std::optional<std::vector<int>> cycle = broken_cycle_witness(g, h);
    if (!cycle.has_value()) {
        throw Error(Error::Code::NoBrokenCycle,
                    "every component of the subgraph is induced; no counterexample exists");
    }
    const int n = g.vertex_count();
    const std::vector<int>& w = *cycle;
    const int m = static_cast<int>(w.size());

    EmbeddedCounterexample out;
    out.cycle = w;

    SymmetricMatrix block;
    if (m == 3 && is_complete(g)) {
        // Reuse the 3 x 3 example; its broken path runs through the center
        // vertex, so reorder it to match (w0, w1, w2) = (end, center, end).
        block = permute(a3_example().matrix, {1, 0, 2});
        out.used_a3 = true;
    } else {
        CycleCounterexample cc = construct_cycle_counterexample(m);
        block = cc.matrix;
        out.params = cc.params;
    }

    SymmetricMatrix r = SymmetricMatrix::identity(n);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) r.set(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)], block.at(i, j));
    }
    out.matrix = std::move(r);
    return out;
}

SingularShift singular_shift(const SymmetricMatrix& m) {
    PdReport rep = is_positive_definite(m);
    if (!rep.is_pd) {
        throw Error(Error::Code::NotPd, "singular shift needs a positive definite input");
    }
    SingularShift out;
    out.lambda_min = min_eigenvalue(m);
    out.shifted = m;
    for (int i = 0; i < m.size(); ++i) out.shifted.set(i, i, m.at(i, i) - out.lambda_min);
    return out;
}

SymmetricMatrix non_dd_witness(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n < 3) {
        throw Error(Error::Code::TooSmall,
                    "witness needs at least 3 vertices, got " + std::to_string(n));
    }
    if (!is_connected(g)) {
        throw Error(Error::Code::NotConnected, "witness construction needs a connected graph");
    }
    if (n == 3) {
        // Base case; works for every connected pattern on 3 vertices.
        return SymmetricMatrix{{3.0, -2.0, -2.0}, {-2.0, 3.0, 2.0}, {-2.0, 2.0, 3.0}};
    }

    const int v = removable_vertex(g);
    std::vector<int> rest;
    rest.reserve(static_cast<size_t>(n - 1));
    for (int u = 0; u < n; ++u) {
        if (u != v) rest.push_back(u);
    }
    InducedSubgraph sub = induced_subgraph(g, rest);
    SymmetricMatrix a = non_dd_witness(sub.graph);
    const int k = n - 1;

    // Border a with the all-ones column and diagonal entry 1/2, scaling the
    // old block by lambda large enough that both the full matrix and its
    // thresholding stay PD (Schur complements against the new vertex).
    const double xn = 0.5;
    std::vector<double> ones(static_cast<size_t>(k), 1.0);
    std::vector<double> y = solve_pd(a, ones);
    double s1 = 0.0;
    for (int i = 0; i < k; ++i) s1 += ones[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];

    SymmetricMatrix a_thr = threshold_by_graph(a, sub.graph);
    std::vector<double> xh(static_cast<size_t>(k), 0.0);
    for (int i = 0; i < k; ++i) {
        if (g.has_edge(sub.vertex_map[static_cast<size_t>(i)], v)) xh[static_cast<size_t>(i)] = 1.0;
    }
    std::vector<double> yh = solve_pd(a_thr, xh);
    double s2 = 0.0;
    for (int i = 0; i < k; ++i) s2 += xh[static_cast<size_t>(i)] * yh[static_cast<size_t>(i)];

    const double lambda = 2.0 * std::max({1.0, s1 / xn, s2 / xn});

    SymmetricMatrix r(n);
    for (int i = 0; i < k; ++i) {
        const int oi = sub.vertex_map[static_cast<size_t>(i)];
        for (int j = i; j < k; ++j) {
            r.set(oi, sub.vertex_map[static_cast<size_t>(j)], lambda * a.at(i, j));
        }
        r.set(oi, v, 1.0);
    }
    r.set(v, v, xn);
    return r;
}

}  // namespace pdthresh
