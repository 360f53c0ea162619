#include "domkit/random_regular.hpp"

#include <numeric>
#include <vector>

#include "domkit/rng.hpp"

namespace domkit {

Graph random_regular(int n, int delta, uint64_t seed, int max_attempts) {
  if (n < 1 || delta < 0 || delta >= n || (static_cast<long>(n) * delta) % 2 != 0) {
    fail(errc::infeasible_parameters,
         "no simple " + std::to_string(delta) + "-regular graph on " + std::to_string(n) +
             " vertices");
  }
  if (delta == 0) return Graph(n, std::vector<Edge>{});

  SplitMix64 rng(seed);
  const size_t stubs_total = static_cast<size_t>(n) * delta;
  std::vector<int> stubs(stubs_total);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (size_t i = 0; i < stubs_total; ++i) stubs[i] = static_cast<int>(i / delta);
    // Fisher-Yates with rejection-free bounded draws keeps the stream portable.
    for (size_t i = stubs_total - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(rng.next_below(i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::vector<Edge> edges;
    edges.reserve(stubs_total / 2);
    std::vector<uint8_t> seen(static_cast<size_t>(n) * n, 0);
    bool simple = true;
    for (size_t i = 0; i < stubs_total && simple; i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        simple = false;
        break;
      }
      size_t key = static_cast<size_t>(std::min(a, b)) * n + std::max(a, b);
      if (seen[key]) {
        simple = false;
        break;
      }
      seen[key] = 1;
      edges.emplace_back(a, b);
    }
    if (simple) return Graph(n, std::span<const Edge>(edges));
  }
  fail(errc::retry_limit_exceeded,
       "no simple pairing after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace domkit
