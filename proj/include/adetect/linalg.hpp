#pragma once

#include <Eigen/Dense>

#include "adetect/errors.hpp"
#include "adetect/types.hpp"

namespace adetect {

// Relative rank tolerance: full column rank means sigma_min > kRankTol * sigma_max.
inline constexpr double kRankTol = 1e-8;

// Cholesky pivots below this fraction of the largest pivot mean the matrix is
// numerically singular even if the factorization formally completed.
inline constexpr double kCholPivotTol = 1e-7;

/// Exact Hermitian part (A + A^H)/2; cheap guard against round-off drift.
inline CMatrix hermitize(const CMatrix& a) {
    return 0.5 * (a + a.adjoint());
}

/// Cholesky of a Hermitian matrix expected to be PD. Returns an empty
/// optional if the factorization fails or the pivot spread betrays rank
/// deficiency.
inline std::optional<Eigen::LLT<CMatrix>> try_cholesky(const CMatrix& m) {
    Eigen::LLT<CMatrix> llt(m);
    if (llt.info() != Eigen::Success) return std::nullopt;
    const auto diag = llt.matrixLLT().diagonal().real();
    const double lo = diag.minCoeff();
    const double hi = diag.maxCoeff();
    if (!(lo > 0.0) || !(hi > 0.0) || lo < kCholPivotTol * hi || !std::isfinite(hi)) {
        return std::nullopt;
    }
    return llt;
}

/// Cholesky or NumericalError naming the offending matrix.
inline Eigen::LLT<CMatrix> cholesky_pd(const CMatrix& m, const char* what) {
    auto llt = try_cholesky(m);
    if (!llt) {
        throw NumericalError(std::string(what) + " is not positive definite");
    }
    return *std::move(llt);
}

/// log|M| for Hermitian PD M via its Cholesky factor.
inline double logdet_pd(const Eigen::LLT<CMatrix>& llt) {
    return 2.0 * llt.matrixLLT().diagonal().real().array().log().sum();
}

inline double logdet_pd(const CMatrix& m, const char* what) {
    return logdet_pd(cholesky_pd(m, what));
}

/// Thin orthonormal basis of the column space via Householder QR.
/// Zero-column inputs pass through (projector onto the trivial subspace).
inline CMatrix orthonormal_basis(const CMatrix& a) {
    if (a.cols() == 0) return CMatrix(a.rows(), 0);
    Eigen::HouseholderQR<CMatrix> qr(a);
    return qr.householderQ() * CMatrix::Identity(a.rows(), a.cols());
}

/// sigma_min / sigma_max; 0 for empty or exactly singular input.
inline double singular_value_ratio(const CMatrix& a) {
    if (a.cols() == 0 || a.rows() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& sv = svd.singularValues();
    const double hi = sv(0);
    if (!(hi > 0.0)) return 0.0;
    return sv(sv.size() - 1) / hi;
}

inline double smallest_singular_value(const CMatrix& a) {
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace adetect
