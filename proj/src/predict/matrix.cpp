#include "predict/matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "core/error.hpp"

namespace fmca::predict {

BoolMatrix::BoolMatrix(int size)
    : size_(size), wpr_((size + 63) / 64), words_(static_cast<size_t>(size) * wpr_, 0) {}

BoolMatrix BoolMatrix::identity(int size) {
  BoolMatrix m(size);
  for (int r = 0; r < size; ++r) m.set(r, r);
  return m;
}

bool BoolMatrix::row_empty(int r) const {
  const uint64_t* w = row(r);
  return std::all_of(w, w + wpr_, [](uint64_t v) { return v == 0; });
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& o) const {
  BoolMatrix out(size_);
  for (int r = 0; r < size_; ++r) {
    uint64_t* dst = out.row(r);
    const uint64_t* src = row(r);
    for (int w = 0; w < wpr_; ++w) {
      uint64_t bits = src[w];
      while (bits) {
        const int k = 64 * w + std::countr_zero(bits);
        bits &= bits - 1;
        const uint64_t* ok = o.row(k);
        for (int x = 0; x < wpr_; ++x) dst[x] |= ok[x];
      }
    }
  }
  return out;
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& o) {
  for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

BoolMatrix power_sum(const BoolMatrix& m, uint64_t k) {
  // Invariant: sum = M^1 | ... | M^e and pow = M^e for e = prefix of k.
  BoolMatrix sum(m.size());
  BoolMatrix pow = BoolMatrix::identity(m.size());
  for (int b = 63 - std::countl_zero(k | 1); b >= 0; --b) {
    BoolMatrix doubled = sum;
    doubled |= pow * sum;
    sum = std::move(doubled);
    pow = pow * pow;
    if ((k >> b) & 1) {
      pow = pow * m;
      sum |= pow;
    }
  }
  return sum;
}

BoolMatrix power(const BoolMatrix& m, uint64_t k) {
  BoolMatrix result = BoolMatrix::identity(m.size());
  BoolMatrix base = m;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

namespace {

void check_cap(const CellMask& minus) {
  if (minus.width > kMatrixSizeCap || minus.height > kMatrixSizeCap)
    throw Error(ErrorCode::kInstanceTooLarge,
                "matrix predictor is capped at side " + std::to_string(kMatrixSizeCap));
}

// Adjacency of the Toom digraph over all cells; rows of +1 cells stay empty.
BoolMatrix adjacency(const CellMask& minus, int extra) {
  const int w = minus.width, h = minus.height;
  BoolMatrix a(w * h + extra);
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) {
      if (!minus.contains({i, j})) continue;
      const int v = j * w + i;
      const Cell north{i, (j + 1) % h}, east{(i + 1) % w, j};
      if (minus.contains(north)) a.set(v, minus.id(north));
      if (minus.contains(east)) a.set(v, minus.id(east));
    }
  return a;
}

void check_vertex(const CellMask& minus, Cell c) {
  if (c.i < 0 || c.j < 0 || c.i >= minus.width || c.j >= minus.height)
    throw Error(ErrorCode::kCellOutOfRange, "cell outside grid");
  if (!minus.contains(c))
    throw Error(ErrorCode::kInvalidArgument, "matrix predictor classifies -1 cells only");
}

}  // namespace

MatrixClass matrix_power_predictor(const Configuration& x, Cell c) {
  if (x.n() > kMatrixSizeCap)
    throw Error(ErrorCode::kInstanceTooLarge,
                "matrix predictor is capped at n = " + std::to_string(kMatrixSizeCap));
  return matrix_power_predictor(minus_cells(x), c);
}

MatrixClass matrix_power_predictor(const CellMask& minus, Cell c) {
  check_cap(minus);
  check_vertex(minus, c);
  const int m = minus.width * minus.height;
  const BoolMatrix a = adjacency(minus, 0);
  const BoolMatrix cyc = power_sum(a, static_cast<uint64_t>(m));
  const int v = minus.id(c);
  if (cyc.get(v, v)) return MatrixClass::kInCycle;
  // Augmented matrix: sink vertex m fed by every cycle vertex.
  BoolMatrix b = adjacency(minus, 1);
  for (int u = 0; u < m; ++u)
    if (cyc.get(u, u)) b.set(u, m);
  const BoolMatrix reach = power_sum(b, static_cast<uint64_t>(m) + 1);
  return reach.get(v, m) ? MatrixClass::kReachesCycle : MatrixClass::kFlips;
}

bool matrix_changed_by(const CellMask& minus, Cell c, uint64_t t) {
  check_cap(minus);
  if (c.i < 0 || c.j < 0 || c.i >= minus.width || c.j >= minus.height)
    throw Error(ErrorCode::kCellOutOfRange, "cell outside grid");
  if (!minus.contains(c) || t == 0) return false;
  const uint64_t m = static_cast<uint64_t>(minus.width) * minus.height;
  // A walk longer than the vertex count repeats a vertex, so lengths past m
  // behave like m.
  const BoolMatrix at = power(adjacency(minus, 0), std::min(t, m));
  return at.row_empty(minus.id(c));
}

}  // namespace fmca::predict
