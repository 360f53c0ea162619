#pragma once

#include <cstdint>

#include "domkit/graph.hpp"

namespace domkit {

/// Uniform stub-pairing sampler for delta-regular graphs on n vertices with
/// whole-sample rejection on loops and multi-edges. Identical (n, delta,
/// seed) yields an identical graph on every platform (SplitMix64 stream,
/// rejection-free index sampling).
///
/// Errors: infeasible_parameters when n*delta is odd or delta >= n;
/// retry_limit_exceeded when no simple pairing is found in max_attempts.
Graph random_regular(int n, int delta, uint64_t seed, int max_attempts = 10000);

}  // namespace domkit
