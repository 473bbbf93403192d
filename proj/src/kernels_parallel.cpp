// OpenMP variants of the dense kernels.  Each parallel loop distributes whole
// rows (or right-hand sides); the per-entry arithmetic is exactly the serial
// expression, so results are bitwise identical to the serial reference.
// Without OpenMP the pragmas are no-ops and these degenerate to serial code.

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdthresh/kernels.hpp"

namespace pdthresh::kernels {

LdltOutcome ldlt_pivots_parallel(double* a, int n, double pivot_floor) {
    LdltOutcome out;
    out.min_pivot = n > 0 ? a[0] : 0.0;
    std::vector<double> s(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double pivot = a[static_cast<size_t>(k) * n + k];
        if (k == 0 || pivot < out.min_pivot) out.min_pivot = pivot;
        if (pivot <= pivot_floor) {
            out.stop_order = k + 1;
            return out;
        }
        for (int j = k + 1; j < n; ++j)
            s[static_cast<size_t>(j)] = a[static_cast<size_t>(j) * n + k] / pivot;
#pragma omp parallel for schedule(static)
        for (int i = k + 1; i < n; ++i) {
            const double aik = a[static_cast<size_t>(i) * n + k];
            double* row = a + static_cast<size_t>(i) * n;
            for (int j = k + 1; j <= i; ++j) row[j] -= aik * s[static_cast<size_t>(j)];
        }
    }
    out.completed = true;
    return out;
}

LuOutcome lu_factor_parallel(double* a, int n, int* perm, double pivot_floor) {
    LuOutcome out;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::fabs(a[static_cast<size_t>(k) * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::fabs(a[static_cast<size_t>(i) * n + k]);
            if (cand > best) {
                best = cand;
                p = i;
            }
        }
        perm[k] = p;
        if (best <= pivot_floor) {
            out.singular = true;
            out.det = 0.0;
            return out;
        }
        if (p != k) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(p) * n + j]);
            sign = -sign;
        }
        const double pivot = a[static_cast<size_t>(k) * n + k];
#pragma omp parallel for schedule(static)
        for (int i = k + 1; i < n; ++i) {
            double* row = a + static_cast<size_t>(i) * n;
            const double m = row[k] / pivot;
            row[k] = m;
            const double* rk = a + static_cast<size_t>(k) * n;
            for (int j = k + 1; j < n; ++j) row[j] -= m * rk[j];
        }
    }
    out.det = sign;
    for (int k = 0; k < n; ++k) out.det *= a[static_cast<size_t>(k) * n + k];
    return out;
}

namespace {
void lu_solve_one_par(const double* lu, const int* perm, int n, double* b, int nrhs, int c) {
    for (int k = 0; k < n; ++k)
        if (perm[k] != k)
            std::swap(b[static_cast<size_t>(k) * nrhs + c], b[static_cast<size_t>(perm[k]) * nrhs + c]);
    for (int i = 1; i < n; ++i) {
        double acc = b[static_cast<size_t>(i) * nrhs + c];
        const double* row = lu + static_cast<size_t>(i) * n;
        for (int j = 0; j < i; ++j) acc -= row[j] * b[static_cast<size_t>(j) * nrhs + c];
        b[static_cast<size_t>(i) * nrhs + c] = acc;
    }
    for (int i = n - 1; i >= 0; --i) {
        double acc = b[static_cast<size_t>(i) * nrhs + c];
        const double* row = lu + static_cast<size_t>(i) * n;
        for (int j = i + 1; j < n; ++j) acc -= row[j] * b[static_cast<size_t>(j) * nrhs + c];
        b[static_cast<size_t>(i) * nrhs + c] = acc / row[i];
    }
}
}  // namespace

void lu_solve_parallel(const double* lu, const int* perm, int n, double* b, int nrhs) {
#pragma omp parallel for schedule(static)
    for (int c = 0; c < nrhs; ++c) lu_solve_one_par(lu, perm, n, b, nrhs, c);
}

void subtract_wtx_parallel(const double* w, const double* x, double* s, int r, int k) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double acc = 0.0;
            for (int t = 0; t < r; ++t)
                acc += w[static_cast<size_t>(t) * k + i] * x[static_cast<size_t>(t) * k + j];
            s[static_cast<size_t>(i) * k + j] -= acc;
        }
    }
}

void tridiagonalize_parallel(double* a, int n, double* d, double* e) {
    std::vector<double> p(static_cast<size_t>(n));
    for (int k = 0; k + 2 < n; ++k) {
        const int l = k + 1;
        double scale = 0.0;
        for (int i = l; i < n; ++i) scale += std::fabs(a[static_cast<size_t>(i) * n + k]);
        if (scale == 0.0) {
            e[k] = a[static_cast<size_t>(l) * n + k];
            continue;
        }
        double h = 0.0;
        for (int i = l; i < n; ++i) {
            a[static_cast<size_t>(i) * n + k] /= scale;
            h += a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(i) * n + k];
        }
        const double f = a[static_cast<size_t>(l) * n + k];
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[k] = scale * g;
        h -= f * g;
        a[static_cast<size_t>(l) * n + k] = f - g;

#pragma omp parallel for schedule(static)
        for (int i = l; i < n; ++i) {
            double acc = 0.0;
            const double* row = a + static_cast<size_t>(i) * n;
            for (int j = l; j < n; ++j) acc += row[j] * a[static_cast<size_t>(j) * n + k];
            p[static_cast<size_t>(i)] = acc / h;
        }
        double vp = 0.0;
        for (int i = l; i < n; ++i) vp += p[static_cast<size_t>(i)] * a[static_cast<size_t>(i) * n + k];
        const double hh = vp / (2.0 * h);
        for (int i = l; i < n; ++i) p[static_cast<size_t>(i)] -= hh * a[static_cast<size_t>(i) * n + k];

#pragma omp parallel for schedule(static)
        for (int i = l; i < n; ++i) {
            const double vi = a[static_cast<size_t>(i) * n + k];
            const double wi = p[static_cast<size_t>(i)];
            double* row = a + static_cast<size_t>(i) * n;
            for (int j = l; j < n; ++j)
                row[j] -= vi * p[static_cast<size_t>(j)] + wi * a[static_cast<size_t>(j) * n + k];
        }
    }
    if (n >= 2) e[n - 2] = a[static_cast<size_t>(n - 1) * n + (n - 2)];
    for (int i = 0; i < n; ++i) d[i] = a[static_cast<size_t>(i) * n + i];
}

}  // namespace pdthresh::kernels
