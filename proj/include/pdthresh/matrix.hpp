#pragma once

#include <initializer_list>
#include <vector>

namespace pdthresh {

// Dense symmetric matrix, row-major full storage.  The upper triangle is
// authoritative: construction from full data mirrors the upper triangle down,
// and set() writes both halves, so storage is exactly symmetric at all times.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n);
    SymmetricMatrix(int n, std::vector<double> full_row_major);
    SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static SymmetricMatrix identity(int n);

    int size() const { return n_; }
    double at(int i, int j) const;
    void set(int i, int j, double v);

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& raw() { return a_; }  // keep it symmetric if you touch it

    bool all_finite() const;
    double max_abs() const;
    double max_abs_diagonal() const;
    double frobenius_norm() const;

private:
    void check_index(int i, int j) const;

    int n_ = 0;
    std::vector<double> a_;
};

// order[new_index] = old_index; returns the symmetrically permuted matrix.
SymmetricMatrix permute(const SymmetricMatrix& m, const std::vector<int>& order);

enum class PdMode { FloatPivot, ExactRational };
enum class PdStrategy { Auto, Float, Exact };

// Default pivot tolerance: a pivot counts as cleared when it exceeds
// tol * max(1, max diagonal entry).
inline constexpr double kDefaultPdTol = 1e-10;

// Auto strategy switches to exact rational arithmetic up to this dimension
// (every finite double is an exact rational, so small inputs always qualify).
inline constexpr int kExactAutoMaxN = 64;

struct PdReport {
    bool is_pd = false;
    // Float mode only: the deciding pivot fell inside [-floor, +floor], so
    // the verdict is not trustworthy either way.  Exact mode never sets it.
    bool indeterminate = false;
    PdMode mode = PdMode::FloatPivot;
    // Smallest LDL^T pivot seen (float mode) or smallest leading principal
    // minor as a double (exact mode).
    double min_pivot_or_eigenvalue = 0.0;
    // 1-based order of the first non-positive leading principal minor;
    // 0 when positive definite.
    int failing_minor_order = 0;
};

PdReport is_positive_definite(const SymmetricMatrix& m, double tol = kDefaultPdTol,
                              PdStrategy strategy = PdStrategy::Auto);

// Smallest eigenvalue via Householder tridiagonalization + Sturm bisection.
double min_eigenvalue(const SymmetricMatrix& m);

// Schur complement onto `keep` (0-based, deduplicated ascending): removes the
// complement block, which must be invertible (SingularBlock otherwise).
// Result rows/columns follow `keep` sorted ascending.
SymmetricMatrix schur_complement(const SymmetricMatrix& m, const std::vector<int>& keep);

struct DdReport {
    bool dominant = false;             // every row margin strictly positive
    std::vector<double> row_margins;   // |a_ii| - sum_{j != i} |a_ij|
};

DdReport is_strictly_diagonally_dominant(const SymmetricMatrix& m);

struct GershgorinDisc {
    double center = 0.0;  // a_ii
    double radius = 0.0;  // sum_{j != i} |a_ij|
};

std::vector<GershgorinDisc> gershgorin_discs(const SymmetricMatrix& m);

// Floating-point determinant via LU with partial pivoting.  For exact values
// on rational inputs see exact.hpp.
double determinant(const SymmetricMatrix& m);

}  // namespace pdthresh
