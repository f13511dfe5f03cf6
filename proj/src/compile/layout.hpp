#pragma once

#include <string>
#include <vector>

#include "circuit/circuit.hpp"
#include "compile/tile.hpp"
#include "core/configuration.hpp"

namespace fmca::compile {

inline constexpr int kDefaultMaxGridSide = 8192;

// Square array of tile slots. Slot (u, v) counts u tiles west of the east
// edge and v tiles south of the north edge; signals only travel south and
// west, so slot (0, 0) is upstream of everything.
//
// Node k of the ordered circuit (inputs first, then gates) sits on the
// diagonal slot (k, k). Its value leaves south along column k and west along
// row k. A gate reads its first source from row k, tapped off that source's
// column by an OR duplicator, and its second source from column k, tapped
// off the source's row the same way. Crossovers carry the remaining
// intersections. Inputs enter at the north edge of their column.
struct Layout {
  int slots = 0;                    // slots per side
  std::vector<std::string> tiles;   // v * slots + u; empty string = all -1
  std::vector<int> true_inputs;     // columns whose north port is injected
  int output_u = 0;                 // output read at the south port of (u, v)
  int output_v = 0;
  std::vector<int> order;           // circuit node index of diagonal k

  const std::string& at(int u, int v) const { return tiles[static_cast<size_t>(v) * slots + u]; }
};

// Requires every node to have at most two consumers (see normalize_fanout);
// throws InvalidArgument otherwise and LayoutOverflow when the grid side
// would exceed max_side.
Layout layout_circuit(const circuit::MonotoneCircuit& c, const GadgetSet& gs,
                      int max_side = kDefaultMaxGridSide);

// Structural composability check: every output port meets an aligned input
// port or an empty slot, and every tile exists in the set. Throws Internal.
void validate_layout(const Layout& layout, const GadgetSet& gs);

// Torus side for the layout: the slot extent, rounded up so that periodic
// families keep their residue classes intact.
int layout_grid_side(const Layout& layout, const GadgetSet& gs);

struct RenderedLayout {
  Configuration config;
  Cell output_cell;
};

RenderedLayout render_layout(const Layout& layout, const GadgetSet& gs);

}  // namespace fmca::compile
