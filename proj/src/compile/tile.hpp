#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compile/family.hpp"
#include "core/types.hpp"

namespace fmca::compile {

enum class Side { kNorth, kEast, kSouth, kWest };
enum class PortDir { kIn, kOut };

char side_char(Side s);

struct Port {
  PortDir dir = PortDir::kIn;
  Side side = Side::kNorth;
  std::string name;
  // Column of the signal line for N/S ports, row for E/W ports.
  int offset = 0;
  // Tile-local cells set to +1 to inject TRUE (inputs) or read to observe
  // TRUE (outputs).
  std::vector<Cell> cells;
  bool operator==(const Port&) const = default;
};

// Rectangular pattern of frozen +1 cells on a -1 background, plus ports.
// Inputs sit on the north and east edges, outputs on the south and west.
struct Tile {
  std::string name;
  int width = 0;
  int height = 0;
  std::vector<uint8_t> plus;  // index j*width + i, j = 0 is the south row
  std::vector<Port> ports;

  Tile() = default;
  Tile(std::string n, int w, int h)
      : name(std::move(n)), width(w), height(h), plus(static_cast<size_t>(w) * h, 0) {}

  bool at(int i, int j) const { return plus[static_cast<size_t>(j) * width + i] != 0; }
  void set(int i, int j, bool v) { plus[static_cast<size_t>(j) * width + i] = v ? 1 : 0; }
  const Port* port(PortDir dir, Side side) const;
  bool operator==(const Tile&) const = default;
};

// Reflection across the main diagonal: (i, j) -> (j, i). North ports become
// east ports and south ports become west ports.
Tile transpose(const Tile& t);

// Places cell (i, j) at (p*i, p_north*j) in a (p*w) x (p_north*h) tile; the
// remaining residue classes are -1.
Tile inflate(const Tile& t, int p, int p_north);

// The tile kinds a gadget set provides.
inline constexpr const char* kVWire = "vwire";
inline constexpr const char* kHWire = "hwire";
inline constexpr const char* kAnd = "and";
inline constexpr const char* kOr = "or";
inline constexpr const char* kCross = "cross";

struct GadgetSet {
  NeighborhoodFamily family;
  int tile_width = 0;
  int tile_height = 0;
  // Sparse2 scale: the tile side used for that parameter tuple.
  int scale = 0;
  std::vector<Tile> tiles;

  const Tile& tile(std::string_view name) const;  // throws InvalidArgument
  const Tile* find(std::string_view name) const;
};

// Gadget-set text format: "family <variant> <params...>", optional
// "scale <k>", then per tile "tile <name> <w> <h>", h pattern rows from
// north to south, and "port <in|out> <N|E|S|W> <name> <offset> <i,j>..." lines.
GadgetSet parse_gadget_set(std::string_view text);
std::string format_gadget_set(const GadgetSet& gs);

}  // namespace fmca::compile
