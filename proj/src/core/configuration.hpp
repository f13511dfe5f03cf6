#pragma once

#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace fmca {

// n x n torus, one bit per cell (set = +1). Row j occupies words_per_row()
// consecutive words; bit i of the row is cell (i, j). Bits past n stay zero.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(int n, State fill = State::kMinus);

  static Configuration random(int n, uint64_t seed, double plus_density = 0.5);

  int n() const { return n_; }
  int words_per_row() const { return wpr_; }

  bool plus(int i, int j) const {
    return (bits_[static_cast<size_t>(j) * wpr_ + (i >> 6)] >> (i & 63)) & 1u;
  }
  void set_plus(int i, int j, bool v) {
    uint64_t& w = bits_[static_cast<size_t>(j) * wpr_ + (i >> 6)];
    const uint64_t m = uint64_t{1} << (i & 63);
    w = v ? (w | m) : (w & ~m);
  }

  // Bounds-checked accessors; throw CellOutOfRange.
  State at(Cell c) const;
  void set(Cell c, State s);
  bool contains(Cell c) const { return c.i >= 0 && c.j >= 0 && c.i < n_ && c.j < n_; }
  void check_cell(Cell c) const;

  const uint64_t* row(int j) const { return bits_.data() + static_cast<size_t>(j) * wpr_; }
  uint64_t* row(int j) { return bits_.data() + static_cast<size_t>(j) * wpr_; }

  uint64_t count_plus() const;
  // Translation by d: result(c + d) = this(c).
  Configuration shifted(Offset d) const;
  // Cellwise order with -1 < +1.
  bool leq(const Configuration& other) const;
  uint64_t hash() const;  // FNV-1a over n and the packed bits

  bool operator==(const Configuration& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  int n_ = 0;
  int wpr_ = 0;
  std::vector<uint64_t> bits_;
};

}  // namespace fmca
