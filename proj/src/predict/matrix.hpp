#pragma once

#include <cstdint>
#include <vector>

#include "core/configuration.hpp"
#include "predict/digraph.hpp"

namespace fmca::predict {

// Square Boolean matrix, rows packed into 64-bit words.
class BoolMatrix {
 public:
  explicit BoolMatrix(int size = 0);
  static BoolMatrix identity(int size);

  int size() const { return size_; }
  bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(int r, int c) { row(r)[c >> 6] |= uint64_t{1} << (c & 63); }
  bool row_empty(int r) const;

  BoolMatrix operator*(const BoolMatrix& o) const;  // over (OR, AND)
  BoolMatrix& operator|=(const BoolMatrix& o);
  bool operator==(const BoolMatrix&) const = default;

 private:
  uint64_t* row(int r) { return words_.data() + static_cast<size_t>(r) * wpr_; }
  const uint64_t* row(int r) const { return words_.data() + static_cast<size_t>(r) * wpr_; }

  int size_;
  int wpr_;
  std::vector<uint64_t> words_;
};

// OR of M^1 .. M^k, by doubling with cumulative OR.
BoolMatrix power_sum(const BoolMatrix& m, uint64_t k);
BoolMatrix power(const BoolMatrix& m, uint64_t k);

enum class MatrixClass { kInCycle, kReachesCycle, kFlips };

inline constexpr int kMatrixSizeCap = 12;

// Reference classifier on the Toom neighborhood from explicit matrix
// powers. Needs n <= 12 (InstanceTooLarge) and a -1 cell (InvalidArgument).
MatrixClass matrix_power_predictor(const Configuration& x, Cell c);
// Same on a rectangular Toom torus given by its -1 cells.
MatrixClass matrix_power_predictor(const CellMask& minus, Cell c);

// Pred answer from walks: a -1 cell is still -1 at time t iff the Toom
// digraph has a walk of length t leaving it, i.e. row c of A^t is nonzero.
bool matrix_changed_by(const CellMask& minus, Cell c, uint64_t t);

}  // namespace fmca::predict
