#pragma once

#include "adetect/types.hpp"

namespace adetect {

/// Everything a detection statistic needs for one cell under test.
/// s is the unnormalized SCM Z_L Z_L^H. l_train records how many training
/// snapshots produced s; it cannot be recovered from s once L >= N, and the
/// Bayesian normalizer eta + N + L + K needs it. A value of -1 means
/// unknown, which only the operations that need the normalizer reject.
struct DetectorInput {
    CMatrix z;          // N x K
    CMatrix s;          // N x N
    ScaleMatrix sigma;  // N x N
    int eta = 0;
    CMatrix phi;      // N x p
    CMatrix upsilon;  // N x q
    int l_train = -1;
};

DetectorInput make_detector_input(const ScenarioConfig& cfg, const SubspaceModel& subspaces,
                                  const ScaleMatrix& sigma, const TrialData& trial);

/// Bayesian tests whiten by S + eta*Sigma, ordinary ones by S alone.
enum class WhitenMode { Bayesian, Ordinary };

WhitenMode whiten_mode_of(DetectorKind kind);

/// Whitened data, bases, and the cached projectors every statistic is built
/// from. Projectors come from QR-orthonormalized bases rather than the
/// literal X (X^H X)^{-1} X^H, which matters for conditioning at p + q = N;
/// equality with the literal formula is covered by tests.
struct WhitenedBundle {
    CMatrix z_w;        // N x K
    CMatrix phi_w;      // N x p
    CMatrix upsilon_w;  // N x q
    CMatrix b_w;        // N x (p+q)
    CMatrix p_perp_upsilon;            // I - P onto whitened upsilon
    CMatrix p_perp_b;                  // I - P onto whitened [phi, upsilon]
    CMatrix p_proj_phi_given_upsilon;  // P onto P_perp_upsilon * whitened phi
};

/// Factor the whitening matrix (Cholesky), apply its inverse to z, phi,
/// upsilon, b, and build the projectors. Any factor F with F F^H = M gives
/// the same statistics; Cholesky is used for determinism. Throws
/// SampleStarvedError when mode is Ordinary and S is singular (L < N).
WhitenedBundle whiten(const DetectorInput& input, WhitenMode mode);

/// eta + N + L + K; requires l_train >= 0.
double alpha_factor(const DetectorInput& input);

/// Statistic of the given kind from an already-whitened bundle. The bundle
/// must come from whiten_mode_of(kind); alpha is only read by BWald.
double statistic_from_bundle(DetectorKind kind, const WhitenedBundle& wb, double alpha);

// The six detection statistics. Ratio forms are >= 1, trace forms >= 0.
double t_glrt_i(const DetectorInput& input);
double t_2s_glrt_i(const DetectorInput& input);
double t_b_glrt_i(const DetectorInput& input);
double t_b_2s_glrt_i(const DetectorInput& input);
double t_b_rao_i(const DetectorInput& input);
double t_b_wald(const DetectorInput& input);

/// Alternate resolvent form of the Bayesian Rao statistic, kept as an
/// independent algebraic route for the identity checks.
double t_b_rao_i_alt(const DetectorInput& input);

/// MAP estimate of the interference coordinates: least squares of whitened
/// z on whitened upsilon.
CMatrix map_w(const DetectorInput& input);

/// MAP estimate of the covariance under H0 with the interference coordinate
/// estimate plugged in; Hermitian positive definite.
CMatrix map_r0(const DetectorInput& input);

/// Log of the joint density of (Z, Z_L, R) under H0 at covariance r and
/// interference coordinates w, up to an additive constant:
/// -(eta+N+L+K) ln|r| - tr(r^{-1}(Z0 Z0^H + S + eta*Sigma)), Z0 = Z - upsilon*w.
double log_joint_h0(const CMatrix& r, const CMatrix& w, const DetectorInput& input);

/// Dispatch on kind. Ordinary detectors with l_train < N fail with
/// SampleStarvedError before any factorization is attempted.
double evaluate(DetectorKind kind, const DetectorInput& input);

}  // namespace adetect
