#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace adetect {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

/// Scenario dimensions and statistical parameters. Immutable after
/// validation; safe to share across worker threads.
struct ScenarioConfig {
    int n_dim = 10;      // N, dimension of each data snapshot
    int k_cells = 4;     // K, range cells occupied by the spread target
    int p_sig = 7;       // p, signal subspace dimension
    int q_intf = 3;      // q, interference subspace dimension
    int l_train = 12;    // L, training snapshots; L < N is a supported regime
    int eta = 14;        // inverse-Wishart degrees of freedom
    double sigma2 = 1.0; // scale-matrix power
    double rho = 0.9;    // one-lag correlation of the scale matrix
    double inr_db = 10.0;
    double snr_db = 0.0;

    // Normalized Doppler frequencies in [-0.5, 0.5) for the steering
    // columns; left empty, validate_config fills the default layout.
    std::vector<double> sig_freqs;
    std::vector<double> intf_freqs;

    std::uint64_t seed = 1;
};

/// N x N Hermitian positive-definite scale matrix of the covariance prior.
struct ScaleMatrix {
    CMatrix sigma;
};

/// Signal basis, interference basis, and their concatenation b = [phi, upsilon].
struct SubspaceModel {
    CMatrix phi;      // N x p
    CMatrix upsilon;  // N x q
    CMatrix b;        // N x (p+q)
};

/// Signal and interference coordinates after SNR/INR scaling.
struct Coordinates {
    CMatrix a;  // p x K
    CMatrix w;  // q x K
};

/// One synthesized Monte Carlo trial.
struct TrialData {
    CMatrix z;       // N x K test data
    CMatrix z_l;     // N x L training data
    CMatrix true_r;  // realized covariance draw, kept for diagnostics only
};

enum class Hypothesis { H0, H1 };

enum class DetectorKind {
    GlrtI,         // one-step GLRT, SCM whitening
    TwoStepGlrtI,  // two-step GLRT, SCM whitening
    BGlrtI,        // Bayesian one-step GLRT
    B2sGlrtI,      // Bayesian two-step GLRT
    BRaoI,         // Bayesian Rao test with interference rejection
    BWald,         // Bayesian Wald form; equals (eta+N+L+K) * B2sGlrtI
};

inline constexpr std::array<DetectorKind, 6> kAllDetectors = {
    DetectorKind::GlrtI,   DetectorKind::TwoStepGlrtI, DetectorKind::BGlrtI,
    DetectorKind::B2sGlrtI, DetectorKind::BRaoI,        DetectorKind::BWald,
};

const char* detector_name(DetectorKind kind);
std::optional<DetectorKind> detector_from_name(std::string_view name);

/// Bayesian detectors whiten by S + eta*Sigma and tolerate any L >= 0.
inline bool is_bayesian(DetectorKind kind) {
    return kind == DetectorKind::BGlrtI || kind == DetectorKind::B2sGlrtI ||
           kind == DetectorKind::BRaoI || kind == DetectorKind::BWald;
}

/// Ratio-form detectors have null floor 1, trace forms 0.
inline bool is_ratio_form(DetectorKind kind) {
    return kind == DetectorKind::GlrtI || kind == DetectorKind::BGlrtI;
}

}  // namespace adetect
