#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/configuration.hpp"
#include "core/types.hpp"

namespace fmca::predict {

// Set of cells of a width x height torus, indexed j*width + i.
struct CellMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> bits;

  CellMask() = default;
  CellMask(int w, int h) : width(w), height(h), bits(static_cast<size_t>(w) * h, 0) {}

  int id(Cell c) const { return c.j * width + c.i; }
  Cell cell(int id) const { return {id % width, id / width}; }
  bool contains(Cell c) const { return bits[id(c)] != 0; }
  void insert(Cell c) { bits[id(c)] = 1; }
  size_t count() const;
  std::vector<Cell> cells() const;  // ascending id
  bool operator==(const CellMask&) const = default;
};

// The -1 cells of x.
CellMask minus_cells(const Configuration& x);

// Digraph on the -1 cells; each vertex points to its north and east
// neighbors when those are -1 too.
struct CellDigraph {
  int width = 0;
  int height = 0;
  int east = 1;
  int north = 1;
  CellMask vertices;
  // out[v] = {north target, east target}, -1 when absent.
  std::vector<std::array<int32_t, 2>> out;

  int north_of(int v) const;
  int east_of(int v) const;
  size_t edge_count() const;
};

// Singleton neighborhoods only; throws WrongNeighborhoodArity otherwise.
CellDigraph build_cell_digraph(const Configuration& x, const LNeighborhood& nb);
// Same construction on an arbitrary rectangular torus.
CellDigraph build_cell_digraph(const CellMask& minus, int east, int north);

CellMask cycle_vertices(const CellDigraph& g);
CellMask never_flip_set(const CellDigraph& g);

struct FlipEntry {
  enum class Kind { kAlreadyPlus, kNever, kFlipsAt };
  Kind kind;
  int64_t time;  // meaningful for kFlipsAt only
};

// Per-cell encoding shared with simulate_flip_steps: 0 = initially +1,
// -1 = never flips, t >= 1 = flips at step t.
class FlipSchedule {
 public:
  FlipSchedule() = default;
  FlipSchedule(int width, int height, std::vector<int64_t> times)
      : width_(width), height_(height), times_(std::move(times)) {}

  int width() const { return width_; }
  int height() const { return height_; }
  FlipEntry at(Cell c) const;
  // Pred answer: the cell differs from its initial state at time t.
  bool changed_by(Cell c, uint64_t t) const;
  const std::vector<int64_t>& raw() const { return times_; }
  bool operator==(const FlipSchedule&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<int64_t> times_;
};

FlipSchedule flip_times(const CellDigraph& g);
// Checks that g was built over x's grid before delegating.
FlipSchedule flip_times(const Configuration& x, const CellDigraph& g);

}  // namespace fmca::predict
