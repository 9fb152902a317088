#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adetect/rng.hpp"
#include "adetect/types.hpp"

namespace adetect {

/// One algebraic identity verified over a set of random instances.
struct IdentityCheck {
    std::string name;
    int instances = 0;
    double worst_rel = 0.0;
    double tolerance = 0.0;
    bool pass() const { return instances > 0 && worst_rel <= tolerance; }
};

struct IdentitySuiteReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

/// Exercise the exact-algebra identities connecting the detector forms on
/// randomly drawn validated scenarios (N in 4..10, K in 1..6, p+q <= N,
/// eta in N..2N, L in 0..2N):
///   - resolvent push-through identity between the two Rao resolvent forms
///   - projector decomposition P_perp_B = P_perp_U - P_{P_perp_U phi}
///   - agreement of the two Bayesian Rao forms
///   - Woodbury inverse of the H0 MAP covariance and its push-through on
///     the interference basis
///   - determinant factorization through the whitened residual Gram
///   - Wald / two-step equivalence t_wald = (eta+N+L+K) * t_2s
IdentitySuiteReport run_identity_suite(int n_instances, std::uint64_t seed);

/// Random validated scenario used by the identity suite and tests.
ScenarioConfig random_scenario(RngStream& rng, int min_n = 4, int max_n = 10);

}  // namespace adetect
