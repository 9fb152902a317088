#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace adetect {

/// Deterministic per-trial random stream. Equal (seed, stream_id) pairs
/// reproduce bit-identical draws on any machine and any thread schedule,
/// which is what makes the Monte Carlo results independent of the worker
/// count. Normal deviates use Box-Muller on top of the fully specified
/// mt19937_64 sequence instead of std::normal_distribution, whose algorithm
/// is implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal N(0,1); Box-Muller pair, second deviate cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = 1.0 - uniform01();  // (0,1], keeps the log finite
        const double r = std::sqrt(-2.0 * std::log(u));
        const double t = 2.0 * M_PI * uniform01();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    /// Circularly symmetric CN(0,1): real and imaginary parts N(0, 1/2).
    std::complex<double> complex_normal() {
        const double u = 1.0 - uniform01();
        const double r = std::sqrt(-std::log(u));
        const double t = 2.0 * M_PI * uniform01();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace adetect
