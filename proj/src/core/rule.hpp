#pragma once

#include <cstdint>
#include <vector>

#include "core/configuration.hpp"
#include "core/types.hpp"

namespace fmca {

// Synchronous update of every cell. threads > 1 splits the output rows into
// bands; the result does not depend on the thread count.
Configuration step(const Configuration& x, const LNeighborhood& nb, int threads = 1);

// F^t(x). t is clamped to n^2, after which every trajectory is constant.
Configuration simulate(const Configuration& x, const LNeighborhood& nb, uint64_t t,
                       int threads = 1);

struct FixedPointResult {
  Configuration config;
  uint64_t steps = 0;  // first t with F^t(x) == F^{t+1}(x)
};

// Throws Error(kInternal) if the trajectory is still moving after n^2 steps.
FixedPointResult run_to_fixed_point(const Configuration& x, const LNeighborhood& nb,
                                    int threads = 1);

bool predict_by_simulation(const Configuration& x, const LNeighborhood& nb, uint64_t t,
                           Cell c);

// Per cell (index j*n + i): 0 if initially +1, -1 if -1 at the fixed point,
// else the step at which it became +1.
std::vector<int64_t> simulate_flip_steps(const Configuration& x, const LNeighborhood& nb,
                                         int threads = 1);

}  // namespace fmca
