#include "predict/fast.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "predict/matrix.hpp"
#include "predict/subgrid.hpp"

namespace fmca::predict {
namespace {

void require_singleton(const LNeighborhood& nb, int n) {
  if (!nb.is_singleton())
    throw Error(ErrorCode::kWrongNeighborhoodArity,
                "fast prediction needs |S_N| = |S_E| = 1, got " + nb.to_string());
  nb.check_bindable(n);
}

FlipSchedule class_schedule(const Configuration& x, const SubgridMap& m, int s, int t) {
  return flip_times(build_cell_digraph(extract_class(x, m, s, t), 1, 1));
}

}  // namespace

bool predict_fast(const Configuration& x, const LNeighborhood& nb, uint64_t t, Cell c) {
  require_singleton(nb, x.n());
  x.check_cell(c);
  if (x.plus(c.i, c.j) || t == 0) return false;
  const SubgridMap m = subgrid_map(nb.east()[0], nb.north()[0], x.n());
  const Location loc = locate(c, m);
  return class_schedule(x, m, loc.s, loc.t).changed_by(loc.sub, t);
}

bool predict_matrix(const Configuration& x, const LNeighborhood& nb, uint64_t t, Cell c) {
  require_singleton(nb, x.n());
  x.check_cell(c);
  if (x.n() > kMatrixSizeCap)
    throw Error(ErrorCode::kInstanceTooLarge,
                "matrix predictor is capped at n = " + std::to_string(kMatrixSizeCap));
  if (x.plus(c.i, c.j) || t == 0) return false;
  const SubgridMap m = subgrid_map(nb.east()[0], nb.north()[0], x.n());
  const Location loc = locate(c, m);
  return matrix_changed_by(extract_class(x, m, loc.s, loc.t), loc.sub, t);
}

FlipSchedule fast_flip_schedule(const Configuration& x, const LNeighborhood& nb) {
  require_singleton(nb, x.n());
  const int n = x.n();
  const SubgridMap m = subgrid_map(nb.east()[0], nb.north()[0], n);
  std::vector<int64_t> times(static_cast<size_t>(n) * n, 0);
  for (int s = 0; s < m.classes_east; ++s)
    for (int t = 0; t < m.classes_north; ++t) {
      const FlipSchedule sub = class_schedule(x, m, s, t);
      for (int q2 = 0; q2 < m.sub_height; ++q2)
        for (int q = 0; q < m.sub_width; ++q) {
          const Cell c = cell_of(m, s, t, {q, q2});
          times[static_cast<size_t>(c.j) * n + c.i] =
              sub.raw()[static_cast<size_t>(q2) * m.sub_width + q];
        }
    }
  return FlipSchedule(n, n, std::move(times));
}

Configuration long_chain_configuration(int n, uint64_t seed) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "long-chain grid needs n >= 4");
  Configuration x(n, State::kPlus);
  std::mt19937_64 rng(seed);
  // Lanes on rows 0, 2, 4, ...: n - 1 cells running east, the cell before
  // the lane start kept +1. A connector on the odd row above the lane end
  // leads into the next lane, which starts at that column. The last lane
  // has +1 rows above it, so the chain ends there.
  const int lanes = n / 2;
  std::vector<int> starts(lanes);
  int start = static_cast<int>(rng() % static_cast<uint64_t>(n));
  for (int l = 0; l < lanes; ++l) {
    starts[l] = start;
    const int j = 2 * l;
    for (int k = 0; k < n - 1; ++k) x.set_plus((start + k) % n, j, false);
    const int end = (start + n - 2) % n;
    if (l + 1 < lanes) x.set_plus(end, j + 1, false);
    start = end;
  }
  // Closing one early lane into a full -1 row makes a cycle; every cell
  // upstream of it never flips.
  const int closed = static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, lanes / 4)));
  x.set_plus((starts[closed] + n - 1) % n, 2 * closed, false);
  const int breaks = 1 + static_cast<int>(rng() % 3);
  for (int b = 0; b < breaks; ++b) {
    const int l = static_cast<int>(rng() % static_cast<uint64_t>(lanes));
    x.set_plus(static_cast<int>(rng() % static_cast<uint64_t>(n)), 2 * l, true);
  }
  return x;
}

}  // namespace fmca::predict
