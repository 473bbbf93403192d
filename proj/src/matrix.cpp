#include "pdthresh/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdthresh/errors.hpp"
#include "pdthresh/exact.hpp"
#include "pdthresh/kernels.hpp"

namespace pdthresh {

SymmetricMatrix::SymmetricMatrix(int n) : n_(n) {
    if (n < 0) throw Error(Error::Code::OutOfRange, "negative matrix dimension");
    a_.assign(static_cast<size_t>(n) * n, 0.0);
}

SymmetricMatrix::SymmetricMatrix(int n, std::vector<double> full_row_major) : n_(n) {
    if (n < 0) throw Error(Error::Code::OutOfRange, "negative matrix dimension");
    if (full_row_major.size() != static_cast<size_t>(n) * n)
        throw Error(Error::Code::DimensionMismatch, "matrix data size mismatch");
    a_ = std::move(full_row_major);
    // Upper triangle is authoritative.
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            a_[static_cast<size_t>(j) * n_ + i] = a_[static_cast<size_t>(i) * n_ + j];
}

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    n_ = static_cast<int>(rows.size());
    a_.assign(static_cast<size_t>(n_) * n_, 0.0);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw Error(Error::Code::DimensionMismatch, "ragged initializer");
        int j = 0;
        for (double v : row) a_[static_cast<size_t>(i) * n_ + j++] = v;
        ++i;
    }
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c)
            a_[static_cast<size_t>(c) * n_ + r] = a_[static_cast<size_t>(r) * n_ + c];
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

void SymmetricMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw Error(Error::Code::OutOfRange,
                    "index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
}

double SymmetricMatrix::at(int i, int j) const {
    check_index(i, j);
    return a_[static_cast<size_t>(i) * n_ + j];
}

void SymmetricMatrix::set(int i, int j, double v) {
    check_index(i, j);
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
}

bool SymmetricMatrix::all_finite() const {
    for (double v : a_)
        if (!std::isfinite(v)) return false;
    return true;
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

double SymmetricMatrix::max_abs_diagonal() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) m = std::max(m, std::fabs(a_[static_cast<size_t>(i) * n_ + i]));
    return m;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

SymmetricMatrix permute(const SymmetricMatrix& m, const std::vector<int>& order) {
    const int n = m.size();
    if (static_cast<int>(order.size()) != n)
        throw Error(Error::Code::DimensionMismatch, "permute: order length mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw Error(Error::Code::OutOfRange, "permute: not a permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
    SymmetricMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            out.set(i, j, m.at(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]));
    return out;
}

namespace {

void require_finite(const SymmetricMatrix& m, const char* who) {
    if (m.size() < 1) throw Error(Error::Code::TooSmall, std::string(who) + ": empty matrix");
    if (!m.all_finite()) throw Error(Error::Code::NonFinite, std::string(who) + ": non-finite entry");
}

PdReport float_pd_report(const SymmetricMatrix& m, double tol) {
    const int n = m.size();
    const double floor = tol * std::max(1.0, m.max_abs_diagonal());
    std::vector<double> a = m.data();
    const auto r = kernels::ldlt_pivots(a.data(), n, floor);
    PdReport rep;
    rep.mode = PdMode::FloatPivot;
    rep.min_pivot_or_eigenvalue = r.min_pivot;
    if (r.completed) {
        rep.is_pd = true;
        return rep;
    }
    rep.failing_minor_order = r.stop_order;
    // The deciding pivot is inside the tolerance band: too close to zero to
    // trust the sign.
    rep.indeterminate = std::fabs(r.min_pivot) <= floor;
    return rep;
}

}  // namespace

PdReport is_positive_definite(const SymmetricMatrix& m, double tol, PdStrategy strategy) {
    require_finite(m, "is_positive_definite");
    if (!(tol >= 0.0) || !std::isfinite(tol))
        throw Error(Error::Code::OutOfRange, "is_positive_definite: bad tolerance");
    const bool exact = strategy == PdStrategy::Exact ||
                       (strategy == PdStrategy::Auto && m.size() <= kExactAutoMaxN);
    return exact ? exact_pd_report(m) : float_pd_report(m, tol);
}

double min_eigenvalue(const SymmetricMatrix& m) {
    require_finite(m, "min_eigenvalue");
    const int n = m.size();
    if (n == 1) return m.at(0, 0);
    std::vector<double> a = m.data();
    std::vector<double> d(static_cast<size_t>(n)), e(static_cast<size_t>(n - 1));
    kernels::tridiagonalize(a.data(), n, d.data(), e.data());
    return kernels::tridiag_min_eigenvalue(d, e);
}

SymmetricMatrix schur_complement(const SymmetricMatrix& m, const std::vector<int>& keep) {
    require_finite(m, "schur_complement");
    const int n = m.size();
    std::vector<int> k = keep;
    std::sort(k.begin(), k.end());
    if (k.empty()) throw Error(Error::Code::OutOfRange, "schur_complement: empty keep set");
    if (std::adjacent_find(k.begin(), k.end()) != k.end())
        throw Error(Error::Code::OutOfRange, "schur_complement: repeated index");
    if (k.front() < 0 || k.back() >= n)
        throw Error(Error::Code::OutOfRange, "schur_complement: index out of range");

    std::vector<char> kept(static_cast<size_t>(n), 0);
    for (int i : k) kept[static_cast<size_t>(i)] = 1;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (!kept[static_cast<size_t>(i)]) rest.push_back(i);
    if (rest.empty())
        throw Error(Error::Code::OutOfRange, "schur_complement: keep covers the whole matrix");

    const int s = static_cast<int>(k.size());
    const int r = static_cast<int>(rest.size());

    std::vector<double> rr(static_cast<size_t>(r) * r);   // M_RR
    std::vector<double> w(static_cast<size_t>(r) * s);    // M_RK
    std::vector<double> out(static_cast<size_t>(s) * s);  // M_KK, becomes the Schur complement
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) rr[static_cast<size_t>(i) * r + j] = m.at(rest[i], rest[j]);
        for (int j = 0; j < s; ++j) w[static_cast<size_t>(i) * s + j] = m.at(rest[i], k[j]);
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) out[static_cast<size_t>(i) * s + j] = m.at(k[i], k[j]);

    double block_scale = 0.0;
    for (double v : rr) block_scale = std::max(block_scale, std::fabs(v));
    const double floor = 1e-13 * std::max(1.0, block_scale);
    std::vector<int> perm(static_cast<size_t>(r));
    std::vector<double> x = w;  // solve M_RR X = M_RK
    const auto lu = kernels::lu_factor(rr.data(), r, perm.data(), floor);
    if (lu.singular)
        throw Error(Error::Code::SingularBlock, "schur_complement: complement block is singular");
    kernels::lu_solve(rr.data(), perm.data(), r, x.data(), s);
    kernels::subtract_wtx(w.data(), x.data(), out.data(), r, s);

    // Exactly symmetric in exact arithmetic; average out the float noise.
    SymmetricMatrix result(s);
    for (int i = 0; i < s; ++i) {
        result.set(i, i, out[static_cast<size_t>(i) * s + i]);
        for (int j = i + 1; j < s; ++j)
            result.set(i, j, 0.5 * (out[static_cast<size_t>(i) * s + j] + out[static_cast<size_t>(j) * s + i]));
    }
    return result;
}

DdReport is_strictly_diagonally_dominant(const SymmetricMatrix& m) {
    require_finite(m, "is_strictly_diagonally_dominant");
    const int n = m.size();
    DdReport rep;
    rep.dominant = true;
    rep.row_margins.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) off += std::fabs(m.at(i, j));
        const double margin = std::fabs(m.at(i, i)) - off;
        rep.row_margins[static_cast<size_t>(i)] = margin;
        if (!(margin > 0.0)) rep.dominant = false;
    }
    return rep;
}

std::vector<GershgorinDisc> gershgorin_discs(const SymmetricMatrix& m) {
    require_finite(m, "gershgorin_discs");
    const int n = m.size();
    std::vector<GershgorinDisc> discs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        discs[static_cast<size_t>(i)].center = m.at(i, i);
        double r = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) r += std::fabs(m.at(i, j));
        discs[static_cast<size_t>(i)].radius = r;
    }
    return discs;
}

double determinant(const SymmetricMatrix& m) {
    require_finite(m, "determinant");
    const int n = m.size();
    std::vector<double> a = m.data();
    std::vector<int> perm(static_cast<size_t>(n));
    const auto lu = kernels::lu_factor(a.data(), n, perm.data(), 0.0);
    return lu.singular ? 0.0 : lu.det;
}

}  // namespace pdthresh
