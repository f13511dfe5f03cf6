#pragma once

#include <string>
#include <vector>

#include "compile/tile.hpp"

namespace fmca::compile {

// Gadget sets compiled into the library, as (file name, text) pairs.
const std::vector<std::pair<std::string, std::string>>& shipped_gadget_files();

// Frozen support of the contiguous wires, from WireParams, for a tile of the
// given side whose signal lines sit at column/row `line` (k_E >= k_N).
Tile contiguous_vertical_wire(int k_east, int k_north, int side, int line);
Tile contiguous_horizontal_wire(int k_east, int k_north, int side, int line);

// Loads or derives the set for f and verifies every tile; throws
// GadgetConstructionFailed naming the failing contract. Results are cached
// per family.
GadgetSet build_gadget_set(const NeighborhoodFamily& f);

// Same without verification or caching.
GadgetSet load_gadget_set(const NeighborhoodFamily& f);

}  // namespace fmca::compile
