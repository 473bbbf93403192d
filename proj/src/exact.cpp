#include "pdthresh/exact.hpp"

#include <vector>

#include "pdthresh/errors.hpp"

namespace pdthresh {

namespace {

// A = B / d entrywise, with B integer and d a positive integer (the lcm of
// the dyadic denominators of the double entries).
struct ScaledInteger {
    std::vector<mpz_class> b;
    mpz_class d;
    int n = 0;
};

ScaledInteger to_scaled_integer(const SymmetricMatrix& m) {
    if (m.size() < 1) throw Error(Error::Code::TooSmall, "exact arithmetic: empty matrix");
    if (!m.all_finite()) throw Error(Error::Code::NonFinite, "exact arithmetic: non-finite entry");
    const int n = m.size();
    std::vector<mpq_class> q(static_cast<size_t>(n) * n);
    mpz_class d = 1;
    for (size_t i = 0; i < q.size(); ++i) {
        q[i] = mpq_class(m.data()[i]);  // exact dyadic value of the double
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q[i].get_den().get_mpz_t());
    }
    ScaledInteger out;
    out.n = n;
    out.d = d;
    out.b.resize(q.size());
    mpz_class f;
    for (size_t i = 0; i < q.size(); ++i) {
        mpz_divexact(f.get_mpz_t(), d.get_mpz_t(), q[i].get_den().get_mpz_t());
        out.b[i] = q[i].get_num() * f;
    }
    return out;
}

}  // namespace

ExactMinors exact_leading_minors(const SymmetricMatrix& m) {
    ScaledInteger si = to_scaled_integer(m);
    const int n = si.n;
    auto& b = si.b;

    ExactMinors out;
    out.minors.reserve(static_cast<size_t>(n));
    // Bareiss pivots are the leading principal minors of the integer matrix;
    // minor_k(A) = minor_k(B) / d^k.
    mpz_class prev = 1, dk = 1, t;
    for (int k = 0; k < n; ++k) {
        const mpz_class& piv = b[static_cast<size_t>(k) * n + k];
        dk *= si.d;
        out.minors.emplace_back(piv, dk);
        out.minors.back().canonicalize();
        if (piv == 0) {
            out.hit_zero = true;  // cannot eliminate past a zero pivot
            return out;
        }
        if (k == n - 1) break;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= i; ++j) {
                mpz_class& bij = b[static_cast<size_t>(i) * n + j];
                t = bij * piv - b[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(j) * n + k];
                mpz_divexact(bij.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (i != j) b[static_cast<size_t>(j) * n + i] = bij;
            }
        }
        prev = piv;
    }
    return out;
}

PdReport exact_pd_report(const SymmetricMatrix& m) {
    ScaledInteger si = to_scaled_integer(m);
    const int n = si.n;
    auto& b = si.b;

    PdReport rep;
    rep.mode = PdMode::ExactRational;
    mpz_class prev = 1, dk = 1, t;
    mpq_class minor;
    bool have_min = false;
    for (int k = 0; k < n; ++k) {
        const mpz_class& piv = b[static_cast<size_t>(k) * n + k];
        dk *= si.d;
        minor = mpq_class(piv, dk);
        minor.canonicalize();
        const double minor_d = minor.get_d();
        if (!have_min || minor_d < rep.min_pivot_or_eigenvalue) {
            rep.min_pivot_or_eigenvalue = minor_d;
            have_min = true;
        }
        if (piv <= 0) {
            rep.failing_minor_order = k + 1;  // exact verdict, never indeterminate
            return rep;
        }
        if (k == n - 1) break;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= i; ++j) {
                mpz_class& bij = b[static_cast<size_t>(i) * n + j];
                t = bij * piv - b[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(j) * n + k];
                mpz_divexact(bij.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (i != j) b[static_cast<size_t>(j) * n + i] = bij;
            }
        }
        prev = piv;
    }
    rep.is_pd = true;
    return rep;
}

Rational exact_determinant(const SymmetricMatrix& m) {
    ScaledInteger si = to_scaled_integer(m);
    const int n = si.n;
    auto& b = si.b;

    // Bareiss with row pivoting (first nonzero below the diagonal), so
    // singular and indefinite inputs work too.
    int sign = 1;
    mpz_class prev = 1, t;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i) {
            if (b[static_cast<size_t>(i) * n + k] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) return Rational(0);  // zero column: determinant is zero
        if (p != k) {
            for (int j = 0; j < n; ++j)
                std::swap(b[static_cast<size_t>(k) * n + j], b[static_cast<size_t>(p) * n + j]);
            sign = -sign;
        }
        const mpz_class piv = b[static_cast<size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class& bij = b[static_cast<size_t>(i) * n + j];
                t = bij * piv - b[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(k) * n + j];
                mpz_divexact(bij.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            b[static_cast<size_t>(i) * n + k] = 0;
        }
        prev = piv;
    }

    mpz_class det_b = b[static_cast<size_t>(n - 1) * n + (n - 1)];
    if (sign < 0) det_b = -det_b;
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), si.d.get_mpz_t(), static_cast<unsigned long>(n));
    Rational det(det_b, dn);
    det.canonicalize();
    return det;
}

}  // namespace pdthresh
