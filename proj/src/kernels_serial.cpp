#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>

#include "pdthresh/kernels.hpp"

namespace pdthresh::kernels {

namespace {
std::atomic<int> g_parallel_min_n{128};
}

int parallel_min_n() { return g_parallel_min_n.load(); }
void set_parallel_min_n(int n) { g_parallel_min_n.store(n); }

bool openmp_compiled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {
bool go_parallel(int n) { return openmp_compiled() && n >= parallel_min_n(); }
}  // namespace

LdltOutcome ldlt_pivots_serial(double* a, int n, double pivot_floor) {
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
        for (int i = k + 1; i < n; ++i) {
            const double aik = a[static_cast<size_t>(i) * n + k];
            double* row = a + static_cast<size_t>(i) * n;
            for (int j = k + 1; j <= i; ++j) row[j] -= aik * s[static_cast<size_t>(j)];
        }
    }
    out.completed = true;
    return out;
}

LdltOutcome ldlt_pivots(double* a, int n, double pivot_floor) {
    return go_parallel(n) ? ldlt_pivots_parallel(a, n, pivot_floor)
                          : ldlt_pivots_serial(a, n, pivot_floor);
}

LuOutcome lu_factor_serial(double* a, int n, int* perm, double pivot_floor) {
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

LuOutcome lu_factor(double* a, int n, int* perm, double pivot_floor) {
    return go_parallel(n) ? lu_factor_parallel(a, n, perm, pivot_floor)
                          : lu_factor_serial(a, n, perm, pivot_floor);
}

namespace {
inline void lu_solve_one(const double* lu, const int* perm, int n, double* b, int nrhs, int c) {
    // Row swaps as recorded during factorization, then Ly = b, Ux = y.
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

void lu_solve_serial(const double* lu, const int* perm, int n, double* b, int nrhs) {
    for (int c = 0; c < nrhs; ++c) lu_solve_one(lu, perm, n, b, nrhs, c);
}

void lu_solve(const double* lu, const int* perm, int n, double* b, int nrhs) {
    if (go_parallel(n) && nrhs > 1)
        lu_solve_parallel(lu, perm, n, b, nrhs);
    else
        lu_solve_serial(lu, perm, n, b, nrhs);
}

void subtract_wtx_serial(const double* w, const double* x, double* s, int r, int k) {
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double acc = 0.0;
            for (int t = 0; t < r; ++t)
                acc += w[static_cast<size_t>(t) * k + i] * x[static_cast<size_t>(t) * k + j];
            s[static_cast<size_t>(i) * k + j] -= acc;
        }
    }
}

void subtract_wtx(const double* w, const double* x, double* s, int r, int k) {
    if (go_parallel(std::max(r, k)))
        subtract_wtx_parallel(w, x, s, r, k);
    else
        subtract_wtx_serial(w, x, s, r, k);
}

void tridiagonalize_serial(double* a, int n, double* d, double* e) {
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
        a[static_cast<size_t>(l) * n + k] = f - g;  // Householder vector v lives in column k

        // p = A v / h over the trailing block (full symmetric storage).
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

        // Rank-2 update A -= v w^T + w v^T.
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

void tridiagonalize(double* a, int n, double* d, double* e) {
    if (go_parallel(n))
        tridiagonalize_parallel(a, n, d, e);
    else
        tridiagonalize_serial(a, n, d, e);
}

namespace {
// Number of eigenvalues of tridiag(d, e) strictly below x, by the Sturm/LDL
// pivot sign count.  Zero pivots are nudged; the following division may
// overflow to +-inf, which the count handles gracefully.
int count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
    int cnt = 0;
    double q = 0.0;
    for (size_t k = 0; k < d.size(); ++k) {
        double piv = d[k] - x;
        if (k > 0) {
            double prev = q;
            if (prev == 0.0) prev = 1e-300;
            piv -= e[k - 1] * e[k - 1] / prev;
        }
        if (piv < 0.0) ++cnt;
        q = piv;
    }
    return cnt;
}
}  // namespace

double tridiag_min_eigenvalue(const std::vector<double>& d, const std::vector<double>& e) {
    const size_t n = d.size();
    if (n == 0) return 0.0;
    if (n == 1) return d[0];
    double lo = d[0], hi = d[0];
    for (size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(e[i - 1]);
        if (i + 1 < n) r += std::fabs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double pad = 1e-12 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
    lo -= pad;
    hi += pad;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval exhausted in doubles
        if (count_below(d, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, std::min(std::fabs(lo), std::fabs(hi)))) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace pdthresh::kernels
