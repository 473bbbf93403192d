#pragma once

#include <vector>

// Dense kernels under the matrix operations.  Each kernel has a serial
// reference implementation and an OpenMP variant with identical per-entry
// arithmetic (the parallel loops only change iteration ownership), so the two
// produce bitwise-equal results; tests rely on that.  The unsuffixed entry
// points dispatch by problem size.
namespace pdthresh::kernels {

// Parallel variants engage for n >= parallel_min_n() when compiled with
// OpenMP.  Set a huge value to force serial, 0 to force parallel.
int parallel_min_n();
void set_parallel_min_n(int n);
bool openmp_compiled();

struct LdltOutcome {
    bool completed = false;   // all n pivots cleared the floor
    double min_pivot = 0.0;   // smallest pivot seen (the stopping pivot if any)
    int stop_order = 0;       // 1-based index of first pivot <= floor; 0 if none
};

// In-place lower LDL^T pivots of symmetric a (row-major n*n, both triangles
// filled).  Stops at the first pivot <= pivot_floor.
LdltOutcome ldlt_pivots_serial(double* a, int n, double pivot_floor);
LdltOutcome ldlt_pivots_parallel(double* a, int n, double pivot_floor);
LdltOutcome ldlt_pivots(double* a, int n, double pivot_floor);

struct LuOutcome {
    bool singular = false;  // best available pivot had |pivot| <= pivot_floor
    double det = 0.0;       // determinant (with permutation sign); 0 when singular
};

// In-place LU with partial pivoting; perm records row swaps (size n).
LuOutcome lu_factor_serial(double* a, int n, int* perm, double pivot_floor);
LuOutcome lu_factor_parallel(double* a, int n, int* perm, double pivot_floor);
LuOutcome lu_factor(double* a, int n, int* perm, double pivot_floor);

// Solves (LU) X = B for nrhs right-hand sides; b is row-major n*nrhs and is
// overwritten with X.
void lu_solve_serial(const double* lu, const int* perm, int n, double* b, int nrhs);
void lu_solve_parallel(const double* lu, const int* perm, int n, double* b, int nrhs);
void lu_solve(const double* lu, const int* perm, int n, double* b, int nrhs);

// s (k*k, row-major) -= w^T x, where w and x are r*k row-major.
void subtract_wtx_serial(const double* w, const double* x, double* s, int r, int k);
void subtract_wtx_parallel(const double* w, const double* x, double* s, int r, int k);
void subtract_wtx(const double* w, const double* x, double* s, int r, int k);

// Householder tridiagonalization of symmetric a (destroyed); writes the
// diagonal d (size n) and subdiagonal e (size n-1, e[i] couples i and i+1).
void tridiagonalize_serial(double* a, int n, double* d, double* e);
void tridiagonalize_parallel(double* a, int n, double* d, double* e);
void tridiagonalize(double* a, int n, double* d, double* e);

// Smallest eigenvalue of the symmetric tridiagonal (d, e) by Sturm-count
// bisection inside the Gershgorin interval.
double tridiag_min_eigenvalue(const std::vector<double>& d, const std::vector<double>& e);

}  // namespace pdthresh::kernels
