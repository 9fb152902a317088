#pragma once

#include <string>
#include <vector>

#include "adetect/types.hpp"

namespace adetect {

/// Exponentially correlated Toeplitz scale matrix, entry (i,j) equal to
/// sigma2 * rho^|i-j|. Real symmetric by construction, stored complex so a
/// user-supplied complex Hermitian scale matrix takes the same code paths.
ScaleMatrix build_scale_matrix(double sigma2, double rho, int n);

/// Unit-norm Doppler steering columns, entry k of column m equal to
/// exp(j*2*pi*f_m*k) / sqrt(n). Frequencies must be pairwise distinct.
CMatrix build_steering_subspace(const std::vector<double>& freqs, int n);

// Default frequency layouts keep the signal and interference subspaces well
// separated so [phi, upsilon] stays well conditioned even at p + q = N.
// Signal in [0.05, 0.30], interference in [-0.35, -0.10]; a single column
// sits at the interval midpoint.
std::vector<double> default_signal_freqs(int p);
std::vector<double> default_interference_freqs(int q);

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
    std::string joined_errors() const;
};

/// Normalizes cfg in place (fills default frequency layouts, sorts the
/// lists) and checks every invariant. Hard violations land in errors,
/// degenerate-but-admissible settings (eta == n_dim, l_train < n_dim) in
/// warnings.
ValidationReport validate_config(ScenarioConfig& cfg);

/// Normalized copy of cfg; throws ConfigError listing every violation.
ScenarioConfig validated(ScenarioConfig cfg);

/// Steering bases for a validated config.
SubspaceModel build_subspace_model(const ScenarioConfig& cfg);

}  // namespace adetect
