#include "core/configuration.hpp"

#include <bit>
#include <random>
#include <string>

#include "core/error.hpp"

namespace fmca {

Configuration::Configuration(int n, State fill) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "grid size must be >= 1");
  wpr_ = (n + 63) / 64;
  bits_.assign(static_cast<size_t>(n) * wpr_, 0);
  if (fill == State::kPlus) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) set_plus(i, j, true);
  }
}

Configuration Configuration::random(int n, uint64_t seed, double plus_density) {
  Configuration x(n);
  std::mt19937_64 rng(seed);
  // Compare raw 53-bit draws against the density so the stream is identical
  // across standard library implementations.
  const double scale = 1.0 / static_cast<double>(uint64_t{1} << 53);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      x.set_plus(i, j, static_cast<double>(rng() >> 11) * scale < plus_density);
  return x;
}

void Configuration::check_cell(Cell c) const {
  if (!contains(c))
    throw Error(ErrorCode::kCellOutOfRange,
                "cell (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                    ") outside " + std::to_string(n_) + "x" + std::to_string(n_) + " grid");
}

State Configuration::at(Cell c) const {
  check_cell(c);
  return plus(c.i, c.j) ? State::kPlus : State::kMinus;
}

void Configuration::set(Cell c, State s) {
  check_cell(c);
  set_plus(c.i, c.j, s == State::kPlus);
}

uint64_t Configuration::count_plus() const {
  uint64_t total = 0;
  for (uint64_t w : bits_) total += std::popcount(w);
  return total;
}

Configuration Configuration::shifted(Offset d) const {
  Configuration y(n_);
  const int di = ((d.di % n_) + n_) % n_;
  const int dj = ((d.dj % n_) + n_) % n_;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if (plus(i, j)) y.set_plus((i + di) % n_, (j + dj) % n_, true);
  return y;
}

bool Configuration::leq(const Configuration& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::kInvalidArgument, "grid sizes differ");
  for (size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

uint64_t Configuration::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint64_t>(n_));
  for (uint64_t w : bits_) mix(w);
  return h;
}

}  // namespace fmca
