#pragma once

#include <string>
#include <vector>

#include "compile/tile.hpp"
#include "core/types.hpp"

namespace fmca::compile {

// Expected outputs of a tile as a function of its north and east inputs.
// Wires ignore the input they do not have.
struct TruthTable {
  enum class Kind { kVWire, kHWire, kAnd, kOr, kCross };
  Kind kind;

  bool south(bool north, bool east) const;
  bool west(bool north, bool east) const;
  static TruthTable for_tile(const std::string& name);  // throws InvalidArgument
};

struct VerifyRow {
  std::string tile;
  std::string contract;  // output, containment, quiescence, embedding
  std::string combo;     // e.g. "N=T E=F", "N=unfed E=T", "N=T dangling"
  bool passed = true;
  std::string detail;    // offending cell and observation when failed
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  bool passed() const;
  size_t failures() const;
  std::string table() const;  // one line per row
  void append(const VerifyReport& other);
};

// Runs the tile inside a 7x7 slot torus: the tile in the center slot, the
// given wire tiles as continuations of its ports and empty slots elsewhere.
// Contexts cover every combination of fed inputs with attached and dangling
// outputs, plus inputs left unfed or injected through the tile's own template.
VerifyReport verify_gadget(const Tile& tile, const LNeighborhood& nb, const TruthTable& tt,
                           const Tile& vwire, const Tile& hwire);

VerifyReport verify_gadget_set(const GadgetSet& gs);

}  // namespace fmca::compile
