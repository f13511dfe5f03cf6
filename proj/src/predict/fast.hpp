#pragma once

#include <cstdint>

#include "core/configuration.hpp"
#include "core/types.hpp"
#include "predict/digraph.hpp"

namespace fmca::predict {

// Pred for |S_N| = |S_E| = 1: restrict x to c's residue class, relabel it
// as a Toom torus and read the flip time off the class digraph.
bool predict_fast(const Configuration& x, const LNeighborhood& nb, uint64_t t, Cell c);

// Pred for |S_N| = |S_E| = 1 through the matrix route on c's relabeled
// class; subject to the matrix size cap.
bool predict_matrix(const Configuration& x, const LNeighborhood& nb, uint64_t t, Cell c);

// Flip schedule of every cell of x, assembled class by class.
FlipSchedule fast_flip_schedule(const Configuration& x, const LNeighborhood& nb);

// Toom instance with a helical -1 chain through every other row, so flip
// times reach the order of n^2 / 2. Seeded: the helix phase, one early lane
// closed into a cycle (cells upstream never flip) and 1-3 breaks.
Configuration long_chain_configuration(int n, uint64_t seed);

}  // namespace fmca::predict
