#pragma once

#include "adetect/rng.hpp"
#include "adetect/types.hpp"

namespace adetect {

/// Matrix with independent columns ~ CN(0, cov). Built as F * G where
/// F F^H = cov (Cholesky) and G has IID CN(0,1) entries filled column-major;
/// the fill order is part of the reproducibility contract.
CMatrix sample_complex_gaussian(int rows, int cols, const CMatrix& cov, RngStream& rng);

/// rows x cols IID CN(0,1) entries, column-major fill.
CMatrix sample_standard_complex_gaussian(int rows, int cols, RngStream& rng);

/// Draw R from the complex inverse-Wishart with eta degrees of freedom and
/// scale eta*Sigma: R^{-1} = sum of eta outer products g g^H with
/// g ~ CN(0, (eta*Sigma)^{-1}). Requires eta >= N; the mean is
/// eta/(eta-N) * Sigma for eta > N.
CMatrix sample_inverse_wishart(int eta, const ScaleMatrix& sigma, RngStream& rng);

/// Scale raw coordinates so that tr(X^H basis^H Sigma^{-1} basis X) hits the
/// linear power 10^(target_db/10) exactly. target_db = -inf yields the zero
/// matrix; a zero raw matrix with positive target cannot be scaled.
CMatrix scale_coordinates(const CMatrix& raw, const CMatrix& basis,
                          const ScaleMatrix& sigma, double target_db);

/// One trial of the data model: R ~ inverse-Wishart(eta, eta*Sigma), test
/// and training noise ~ CN(0, R) per column, coordinates drawn IID CN(0,1)
/// and power-scaled to SNR/INR. Interference is present under both
/// hypotheses; the signal term phi*A only under H1. Draw order is fixed
/// (R, test noise, training noise, W, A) so H0 and H1 share every draw for
/// equal streams.
TrialData synthesize_trial(const ScenarioConfig& cfg, const SubspaceModel& subspaces,
                           const ScaleMatrix& sigma, Hypothesis hypothesis, RngStream& rng);

}  // namespace adetect
