#include "compile/gadgets.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "compile/verify.hpp"
#include "core/error.hpp"

namespace fmca::compile {
namespace {

struct WireShape {
  std::vector<int> frozen_columns;  // east of the signal column
  std::vector<int> bar_rows;        // north of the signal row
  std::function<bool(int)> bar_at;  // bar present at column line + dx
  int reach_north = 1;
  int reach_east = 1;
};

Tile vertical_wire(const WireShape& s, int side, int line) {
  Tile t(kVWire, side, side);
  for (int j = 0; j < side; ++j)
    for (int d : s.frozen_columns)
      if (line + d < side) t.set(line + d, j, true);
  Port in{PortDir::kIn, Side::kNorth, "in", line, {}};
  for (int r = 0; r < s.reach_north; ++r) in.cells.push_back({line, side - 1 - r});
  Port out{PortDir::kOut, Side::kSouth, "out", line, {{line, 0}}};
  t.ports = {in, out};
  return t;
}

Tile horizontal_wire(const WireShape& s, int side, int line) {
  Tile t(kHWire, side, side);
  int westmost = -1;
  for (int i = 0; i < side; ++i) {
    if (!s.bar_at(i - line)) continue;
    if (westmost < 0) westmost = i;
    for (int d : s.bar_rows)
      if (line + d < side) t.set(i, line + d, true);
  }
  Port in{PortDir::kIn, Side::kEast, "in", line, {}};
  for (int i = side - s.reach_east; i < side; ++i)
    if (s.bar_at(i - line)) in.cells.push_back({i, line});
  Port out{PortDir::kOut, Side::kWest, "out", line, {{westmost, line}}};
  t.ports = {in, out};
  return t;
}

WireShape contiguous_shape(int k_east, int k_north) {
  const WireParams w = wire_params(k_east, k_north);
  WireShape s;
  for (int d = w.b + 1; d <= w.b + w.a; ++d) s.frozen_columns.push_back(d);
  for (int d = 1; d <= k_north; ++d) s.bar_rows.push_back(d);
  // With k_E > k_N a solid run of +1 cells in one row would drive its west
  // neighbor alone, so the bar is cut into segments of period k_E.
  const int b = w.b, period = k_east;
  s.bar_at = [b, period](int dx) { return (((dx - 1) % period) + period) % period >= b; };
  s.reach_north = k_north;
  s.reach_east = k_east;
  return s;
}

WireShape sparse_shape(const NeighborhoodFamily& f) {
  const auto& q = f.params;
  WireShape s;
  s.frozen_columns = {q[0], q[1]};
  s.bar_rows = {q[2], q[3]};
  s.bar_at = [](int) { return true; };
  s.reach_north = q[3];
  s.reach_east = q[1];
  return s;
}

const std::pair<std::string, std::string>* find_shipped(const NeighborhoodFamily& f) {
  for (const auto& entry : shipped_gadget_files()) {
    const std::string& text = entry.second;
    const size_t eol = text.find('\n');
    const std::string head = text.substr(0, eol);
    if (head.rfind("family ", 0) != 0) continue;
    if (parse_family(head.substr(7)) == f) return &entry;
  }
  return nullptr;
}

[[noreturn]] void construction_failed(const NeighborhoodFamily& f, const std::string& why) {
  throw Error(ErrorCode::kGadgetConstructionFailed, f.to_string() + ": " + why);
}

// The wire tiles are fully determined by the family; shipped data must agree.
void check_wires(const GadgetSet& gs) {
  const WireShape shape = gs.family.variant == NeighborhoodFamily::Variant::kContiguous
                              ? contiguous_shape(gs.family.params[0], gs.family.params[1])
                              : sparse_shape(gs.family);
  const Tile& v = gs.tile(kVWire);
  const Port* p = v.port(PortDir::kIn, Side::kNorth);
  if (!p || gs.tile_width != gs.tile_height) construction_failed(gs.family, "tiles must be square");
  if (!(vertical_wire(shape, gs.tile_width, p->offset) == v))
    construction_failed(gs.family, "vertical wire differs from its parametric form");
  if (!(horizontal_wire(shape, gs.tile_width, p->offset) == gs.tile(kHWire)))
    construction_failed(gs.family, "horizontal wire differs from its parametric form");
  if (gs.family.variant == NeighborhoodFamily::Variant::kContiguous) {
    const int k_east = gs.family.params[0];
    if (wire_params(k_east, gs.family.params[1]).b > 0 && gs.tile_width % k_east != 0)
      construction_failed(gs.family, "tile side must be a multiple of k_E for segmented bars");
  }
}

GadgetSet transposed_set(const GadgetSet& gs, const NeighborhoodFamily& f) {
  GadgetSet out;
  out.family = f;
  out.scale = gs.scale;
  out.tile_width = gs.tile_height;
  out.tile_height = gs.tile_width;
  for (const Tile& t : gs.tiles) out.tiles.push_back(transpose(t));
  return out;
}

}  // namespace

Tile contiguous_vertical_wire(int k_east, int k_north, int side, int line) {
  return vertical_wire(contiguous_shape(k_east, k_north), side, line);
}

Tile contiguous_horizontal_wire(int k_east, int k_north, int side, int line) {
  return horizontal_wire(contiguous_shape(k_east, k_north), side, line);
}

GadgetSet load_gadget_set(const NeighborhoodFamily& f) {
  f.validate();
  if (f.variant == NeighborhoodFamily::Variant::kPeriodic) {
    const auto& q = f.params;
    const GadgetSet inner = load_gadget_set(NeighborhoodFamily::contiguous(q[2], q[3]));
    GadgetSet out;
    out.family = f;
    out.tile_width = inner.tile_width * q[0];
    out.tile_height = inner.tile_height * q[1];
    for (const Tile& t : inner.tiles) out.tiles.push_back(inflate(t, q[0], q[1]));
    return out;
  }
  if (const auto* entry = find_shipped(f)) {
    GadgetSet gs = parse_gadget_set(entry->second);
    check_wires(gs);
    return gs;
  }
  const NeighborhoodFamily t = transposed(f);
  if (const auto* entry = find_shipped(t)) {
    GadgetSet gs = parse_gadget_set(entry->second);
    check_wires(gs);
    return transposed_set(gs, f);
  }
  std::string have;
  for (const auto& e : shipped_gadget_files()) have += (have.empty() ? "" : ", ") + e.first;
  construction_failed(f, "no gadget pattern shipped for this family or its transpose (have: " +
                             have + ")");
}

GadgetSet build_gadget_set(const NeighborhoodFamily& f) {
  static std::mutex mu;
  static std::map<std::string, GadgetSet> cache;
  const std::string key = f.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GadgetSet gs = load_gadget_set(f);
  for (const char* name : {kVWire, kHWire, kAnd, kOr, kCross})
    if (!gs.find(name)) construction_failed(f, std::string("missing tile '") + name + "'");
  const VerifyReport report = verify_gadget_set(gs);
  for (const VerifyRow& r : report.rows)
    if (!r.passed)
      construction_failed(f, r.tile + " fails " + r.contract + " [" + r.combo + "]: " + r.detail);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, gs);
  return gs;
}

}  // namespace fmca::compile
