#include "compile/layout.hpp"

#include <numeric>

#include "core/error.hpp"

namespace fmca::compile {

using circuit::MonotoneCircuit;
using circuit::NodeKind;

namespace {

// Output cone of c in layout order: inputs first, then gates, each group in
// file order. The output node ends up last.
std::vector<int> layout_order(const MonotoneCircuit& c) {
  std::vector<uint8_t> live(c.size(), 0);
  live[c.output()] = 1;
  for (int k = c.output(); k >= 0; --k) {
    if (!live[k] || c.node(k).kind == NodeKind::kInput) continue;
    live[c.node(k).left] = 1;
    live[c.node(k).right] = 1;
  }
  std::vector<int> order;
  for (int k = 0; k < c.size(); ++k)
    if (live[k] && c.node(k).kind == NodeKind::kInput) order.push_back(k);
  for (int k = 0; k < c.size(); ++k)
    if (live[k] && c.node(k).kind != NodeKind::kInput) order.push_back(k);
  return order;
}

}  // namespace

Layout layout_circuit(const MonotoneCircuit& c, const GadgetSet& gs, int max_side) {
  if (c.output() < 0) throw Error(ErrorCode::kInvalidArgument, "circuit has no output");
  const auto consumers = circuit::consumer_counts(c);
  for (int k = 0; k < c.size(); ++k)
    if (consumers[k] > 2)
      throw Error(ErrorCode::kInvalidArgument,
                  "node '" + c.node(k).name + "' has " + std::to_string(consumers[k]) +
                      " consumers; normalize fan-out first");

  Layout l;
  l.order = layout_order(c);
  const int count = static_cast<int>(l.order.size());
  std::vector<int> pos(c.size(), -1);
  for (int k = 0; k < count; ++k) pos[l.order[k]] = k;

  // One padding row/column of wires carries the buses to the output slot,
  // one empty row/column separates the layout from its own wrap-around.
  l.slots = count + 2;
  const long long side = static_cast<long long>(l.slots) *
                         std::max(gs.tile_width, gs.tile_height);
  if (side > max_side)
    throw Error(ErrorCode::kLayoutOverflow, "layout needs side " + std::to_string(side) +
                                                " > limit " + std::to_string(max_side));
  l.tiles.assign(static_cast<size_t>(l.slots) * l.slots, "");
  auto put = [&l](int u, int v, const char* name) {
    l.tiles[static_cast<size_t>(v) * l.slots + u] = name;
  };
  const int pad = count;
  for (int v = 0; v <= pad; ++v) {
    for (int u = 0; u <= pad; ++u) {
      if (u == pad && v == pad) continue;
      if (u == v) {
        const auto& nd = c.node(l.order[u]);
        put(u, v, nd.kind == NodeKind::kAnd ? kAnd : kOr);  // inputs pass through an OR
        continue;
      }
      if (u < v) {  // below the diagonal: row v collects the first source of gate v
        if (v == pad) {
          put(u, v, kVWire);
          continue;
        }
        const auto& nd = c.node(l.order[v]);
        if (nd.kind == NodeKind::kInput) {
          put(u, v, kVWire);
          continue;
        }
        const int p = pos[nd.left];
        put(u, v, u < p ? kVWire : (u == p ? kOr : kCross));
        continue;
      }
      // Above the diagonal: column u collects the second source of gate u.
      if (u == pad) {
        put(u, v, kHWire);
        continue;
      }
      const auto& nd = c.node(l.order[u]);
      if (nd.kind == NodeKind::kInput) {
        put(u, v, kCross);
        continue;
      }
      const int q = pos[nd.right];
      put(u, v, v < q ? kHWire : (v == q ? kOr : kCross));
    }
  }
  for (int k = 0; k < count; ++k) {
    const auto& nd = c.node(l.order[k]);
    if (nd.kind == NodeKind::kInput && nd.value) l.true_inputs.push_back(k);
  }
  l.output_u = count - 1;
  l.output_v = pad;
  validate_layout(l, gs);
  return l;
}

void validate_layout(const Layout& l, const GadgetSet& gs) {
  auto tile_at = [&](int u, int v) -> const Tile* {
    if (u >= l.slots || v >= l.slots) return nullptr;
    const std::string& name = l.at(u, v);
    return name.empty() ? nullptr : &gs.tile(name);
  };
  auto fail = [](int u, int v, const std::string& why) {
    throw Error(ErrorCode::kInternal, "layout slot (" + std::to_string(u) + "," +
                                          std::to_string(v) + "): " + why);
  };
  for (int v = 0; v < l.slots; ++v)
    for (int u = 0; u < l.slots; ++u) {
      const Tile* t = tile_at(u, v);
      if (!t) continue;
      if (t->width != gs.tile_width || t->height != gs.tile_height) fail(u, v, "tile pitch differs");
      // West neighbor is slot u + 1, south neighbor is slot v + 1.
      const Tile* west = tile_at(u + 1, v);
      const Tile* south = tile_at(u, v + 1);
      const Port* w_out = t->port(PortDir::kOut, Side::kWest);
      const Port* s_out = t->port(PortDir::kOut, Side::kSouth);
      if (west) {
        const Port* e_in = west->port(PortDir::kIn, Side::kEast);
        if (w_out && !e_in) fail(u, v, "west output runs into " + west->name + " without an input");
        if (w_out && e_in && w_out->offset != e_in->offset) fail(u, v, "west port misaligned");
      }
      if (south) {
        const Port* n_in = south->port(PortDir::kIn, Side::kNorth);
        if (s_out && !n_in) fail(u, v, "south output runs into " + south->name + " without an input");
        if (s_out && n_in && s_out->offset != n_in->offset) fail(u, v, "south port misaligned");
      }
    }
  for (int k : l.true_inputs) {
    const Tile* top = tile_at(k, 0);
    if (!top || !top->port(PortDir::kIn, Side::kNorth)) fail(k, 0, "input column lacks a north port");
  }
  const Tile* out = tile_at(l.output_u, l.output_v);
  if (!out || !out->port(PortDir::kOut, Side::kSouth))
    fail(l.output_u, l.output_v, "output slot lacks a south port");
}

int layout_grid_side(const Layout& l, const GadgetSet& gs) {
  int side = l.slots * std::max(gs.tile_width, gs.tile_height);
  int period = 1;
  if (gs.family.variant == NeighborhoodFamily::Variant::kPeriodic)
    period = std::lcm(gs.family.params[0], gs.family.params[1]);
  return (side + period - 1) / period * period;
}

RenderedLayout render_layout(const Layout& l, const GadgetSet& gs) {
  const int n = layout_grid_side(l, gs);
  const int tw = gs.tile_width, th = gs.tile_height;
  const int top = l.slots * th;  // rows [0, top) hold the slots
  Configuration x(n);
  auto origin = [&](int u, int v) { return Cell{(l.slots - 1 - u) * tw, top - (v + 1) * th}; };
  for (int v = 0; v < l.slots; ++v)
    for (int u = 0; u < l.slots; ++u) {
      const std::string& name = l.at(u, v);
      if (name.empty()) continue;
      const Tile& t = gs.tile(name);
      const Cell o = origin(u, v);
      for (int j = 0; j < th; ++j)
        for (int i = 0; i < tw; ++i)
          if (t.at(i, j)) x.set_plus(o.i + i, o.j + j, true);
    }
  for (int k : l.true_inputs) {
    const Cell o = origin(k, 0);
    for (const Cell& c : gs.tile(l.at(k, 0)).port(PortDir::kIn, Side::kNorth)->cells)
      x.set_plus(o.i + c.i, o.j + c.j, true);
  }
  const Cell o = origin(l.output_u, l.output_v);
  const Cell rel = gs.tile(l.at(l.output_u, l.output_v)).port(PortDir::kOut, Side::kSouth)->cells.front();
  return {std::move(x), {o.i + rel.i, o.j + rel.j}};
}

}  // namespace fmca::compile
