#include "pdthresh/thresholding.hpp"

#include <cmath>

#include "pdthresh/errors.hpp"

namespace pdthresh {

LevelThreshold::LevelThreshold(double eta_) : eta(eta_) {
    if (!(eta >= 0.0) || !std::isfinite(eta))
        throw Error(Error::Code::OutOfRange, "level threshold must be finite and >= 0");
}

SymmetricMatrix threshold_by_graph(const SymmetricMatrix& m, const UndirectedGraph& g) {
    const int n = m.size();
    if (g.vertex_count() != n)
        throw Error(Error::Code::DimensionMismatch, "threshold_by_graph: size mismatch");
    SymmetricMatrix out(n);
    for (int i = 0; i < n; ++i) {
        out.set(i, i, m.at(i, i));
        for (int j : g.neighbors(i))
            if (j > i) out.set(i, j, m.at(i, j));
    }
    return out;
}

SymmetricMatrix threshold_at_level(const SymmetricMatrix& m, LevelThreshold level) {
    const int n = m.size();
    SymmetricMatrix out(n);
    for (int i = 0; i < n; ++i) {
        out.set(i, i, m.at(i, i));
        for (int j = i + 1; j < n; ++j) {
            const double v = m.at(i, j);
            if (std::fabs(v) > level.eta) out.set(i, j, v);
        }
    }
    return out;
}

bool is_in_pattern_cone(const SymmetricMatrix& m, const UndirectedGraph& g, double tol) {
    const int n = m.size();
    if (g.vertex_count() != n)
        throw Error(Error::Code::DimensionMismatch, "is_in_pattern_cone: size mismatch");
    if (!(tol >= 0.0) || !std::isfinite(tol))
        throw Error(Error::Code::OutOfRange, "is_in_pattern_cone: bad tolerance");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j) && std::fabs(m.at(i, j)) > tol) return false;
    return is_positive_definite(m).is_pd;
}

UndirectedGraph zero_pattern_graph(const SymmetricMatrix& m, double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol))
        throw Error(Error::Code::OutOfRange, "zero_pattern_graph: bad tolerance");
    const int n = m.size();
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(m.at(i, j)) > tol) g.add_edge(i, j);
    return g;
}

}  // namespace pdthresh
