#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adetect/types.hpp"

namespace adetect {

/// Serial keeps the reference implementation of the trial loop; Parallel is
/// the OpenMP kernel. Both produce bit-identical results because every trial
/// owns its RNG stream and results are stored by trial index.
enum class ExecMode { Serial, Parallel };

struct McOptions {
    ExecMode mode = ExecMode::Parallel;
    int threads = 0;  // 0 = OpenMP runtime default
};

/// Stream-id layout: the purpose block in the high 32 bits, the trial index
/// in the low 32. Calibration, PD estimation, and PFA estimation never share
/// streams; grid points get their own sub-blocks.
namespace stream_block {
inline constexpr std::uint64_t kCalibrate = 0x0000'0001ull;
inline constexpr std::uint64_t kPd = 0x0001'0000ull;   // + SNR grid index
inline constexpr std::uint64_t kPfa = 0x0100'0000ull;  // + scan grid index
}  // namespace stream_block

inline std::uint64_t make_stream_id(std::uint64_t block, std::uint64_t trial) {
    return (block << 32) | trial;
}

/// The core kernel: synthesize n_trials under the given hypothesis and
/// evaluate every requested detector on each trial, sharing the whitened
/// bundles between detectors. Returns stats[kind_index][trial].
std::vector<std::vector<double>> mc_statistics(const std::vector<DetectorKind>& kinds,
                                               const ScenarioConfig& cfg, Hypothesis hypothesis,
                                               int n_trials, std::uint64_t seed,
                                               std::uint64_t block, const McOptions& opt = {});

/// Rank-ceil(n*pfa) descending order statistic; detection compares with
/// strict exceedance, so ties resolve toward the higher threshold.
double threshold_from_order_stat(std::vector<double> stats, double pfa);

struct ThresholdRecord {
    DetectorKind detector{};
    double pfa_target = 0.0;
    int n_trials = 0;
    double threshold = 0.0;
    std::uint64_t seed = 0;
};

/// Calibrate the detection threshold at the target PFA from n_trials H0
/// trials. Requires n_trials * pfa >= 10 for a stable order statistic.
ThresholdRecord calibrate_threshold(DetectorKind kind, const ScenarioConfig& cfg, double pfa,
                                    int n_trials, std::uint64_t seed, const McOptions& opt = {});

/// Fraction of H1 trials whose statistic strictly exceeds the threshold,
/// with the 1.96-sigma binomial half-width.
std::pair<double, double> estimate_pd(DetectorKind kind, const ScenarioConfig& cfg,
                                      double threshold, int n_trials, std::uint64_t seed,
                                      const McOptions& opt = {});

/// Same under H0.
std::pair<double, double> estimate_pfa(DetectorKind kind, const ScenarioConfig& cfg,
                                       double threshold, int n_trials, std::uint64_t seed,
                                       const McOptions& opt = {});

struct SweepRow {
    double snr_db = 0.0;
    DetectorKind detector{};
    double pd = 0.0;
    double ci_half = 0.0;
    double threshold = 0.0;
    int n_trials = 0;
};

struct SkipRecord {
    DetectorKind detector{};
    std::string reason;
};

struct SweepResult {
    std::vector<SweepRow> rows;       // detector-major, then SNR grid order
    std::vector<SkipRecord> skipped;  // sample-starved detectors and why
    double pfa_target = 0.0;
    int n_threshold_trials = 0;
    std::uint64_t seed = 0;
};

/// Calibrate once per detector (thresholds are SNR-independent under H0),
/// then estimate PD across the grid. Sample-starved detectors are skipped
/// with a recorded reason rather than failing the sweep.
SweepResult sweep_snr(const std::vector<DetectorKind>& kinds, const ScenarioConfig& cfg,
                      const std::vector<double>& snr_grid_db, double pfa, int n_threshold_trials,
                      int n_pd_trials, std::uint64_t seed, const McOptions& opt = {});

struct CfarCell {
    double sigma2 = 0.0;
    double rho = 0.0;
    double pfa_hat = 0.0;
    double ci_half = 0.0;
};

struct CfarScanResult {
    DetectorKind detector{};
    double threshold = 0.0;
    double pfa_target = 0.0;
    double ref_sigma2 = 0.0;
    double ref_rho = 0.0;
    std::vector<CfarCell> cells;
};

/// Fix the threshold at the reference (sigma2, rho) of cfg, then re-estimate
/// the PFA over the grid of scale-matrix parameters. Flat cells are the
/// empirical CFAR evidence.
CfarScanResult cfar_scan(DetectorKind kind, const ScenarioConfig& cfg,
                         const std::vector<double>& sigma2_grid,
                         const std::vector<double>& rho_grid, double pfa, int n_threshold_trials,
                         int n_trials, std::uint64_t seed, const McOptions& opt = {});

}  // namespace adetect
