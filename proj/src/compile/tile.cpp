#include "compile/tile.hpp"

#include <sstream>

#include "core/error.hpp"

namespace fmca::compile {
namespace {

Side transpose_side(Side s) {
  switch (s) {
    case Side::kNorth: return Side::kEast;
    case Side::kEast: return Side::kNorth;
    case Side::kSouth: return Side::kWest;
    case Side::kWest: return Side::kSouth;
  }
  return s;
}

const char* side_word(Side s) {
  switch (s) {
    case Side::kNorth: return "north";
    case Side::kEast: return "east";
    case Side::kSouth: return "south";
    case Side::kWest: return "west";
  }
  return "?";
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, "expected an integer, got '" + s + "'");
}

}  // namespace

char side_char(Side s) {
  switch (s) {
    case Side::kNorth: return 'N';
    case Side::kEast: return 'E';
    case Side::kSouth: return 'S';
    case Side::kWest: return 'W';
  }
  return '?';
}

const Port* Tile::port(PortDir dir, Side side) const {
  for (const Port& p : ports)
    if (p.dir == dir && p.side == side) return &p;
  return nullptr;
}

Tile transpose(const Tile& t) {
  std::string name = t.name;
  if (name == kVWire) name = kHWire;
  else if (name == kHWire) name = kVWire;
  Tile out(name, t.height, t.width);
  for (int j = 0; j < t.height; ++j)
    for (int i = 0; i < t.width; ++i) out.set(j, i, t.at(i, j));
  for (const Port& p : t.ports) {
    Port q = p;
    q.side = transpose_side(p.side);
    if (p.name == side_word(p.side)) q.name = side_word(q.side);
    for (Cell& c : q.cells) c = {c.j, c.i};
    out.ports.push_back(std::move(q));
  }
  return out;
}

Tile inflate(const Tile& t, int p, int p_north) {
  Tile out(t.name, t.width * p, t.height * p_north);
  for (int j = 0; j < t.height; ++j)
    for (int i = 0; i < t.width; ++i)
      if (t.at(i, j)) out.set(i * p, j * p_north, true);
  for (const Port& port : t.ports) {
    Port q = port;
    const bool vertical = port.side == Side::kNorth || port.side == Side::kSouth;
    q.offset = port.offset * (vertical ? p : p_north);
    for (Cell& c : q.cells) c = {c.i * p, c.j * p_north};
    out.ports.push_back(std::move(q));
  }
  return out;
}

const Tile* GadgetSet::find(std::string_view name) const {
  for (const Tile& t : tiles)
    if (t.name == name) return &t;
  return nullptr;
}

const Tile& GadgetSet::tile(std::string_view name) const {
  if (const Tile* t = find(name)) return *t;
  throw Error(ErrorCode::kInvalidArgument, "gadget set has no tile '" + std::string(name) + "'");
}

GadgetSet parse_gadget_set(std::string_view text) {
  std::vector<std::string_view> lines;
  for (size_t pos = 0; pos < text.size();) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view l = text.substr(pos, nl - pos);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back(l);
    pos = nl + 1;
  }
  GadgetSet gs;
  bool have_family = false;
  Tile* current = nullptr;
  for (size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    const auto tok = split_ws(lines[k]);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "family") {
      if (have_family) throw ParseError(line_no, "second family line");
      std::string rest;
      for (size_t t = 1; t < tok.size(); ++t) rest += tok[t] + ' ';
      try {
        gs.family = parse_family(rest);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      have_family = true;
    } else if (tok[0] == "scale") {
      if (tok.size() != 2) throw ParseError(line_no, "expected: scale <k>");
      gs.scale = to_int(tok[1], line_no);
    } else if (tok[0] == "tile") {
      if (!have_family) throw ParseError(line_no, "tile before family line");
      if (tok.size() != 4) throw ParseError(line_no, "expected: tile <name> <w> <h>");
      const int w = to_int(tok[2], line_no), h = to_int(tok[3], line_no);
      if (w < 1 || h < 1) throw ParseError(line_no, "tile dimensions must be positive");
      if (gs.find(tok[1])) throw ParseError(line_no, "duplicate tile '" + tok[1] + "'");
      gs.tiles.emplace_back(tok[1], w, h);
      current = &gs.tiles.back();
      for (int r = 0; r < h; ++r) {
        if (++k >= lines.size()) throw ParseError(line_no + r + 1, "tile pattern truncated");
        const std::string_view row = lines[k];
        if (row.size() != static_cast<size_t>(w))
          throw ParseError(static_cast<int>(k) + 1, "pattern row has wrong length");
        for (int i = 0; i < w; ++i) {
          if (row[i] == '+') current->set(i, h - 1 - r, true);
          else if (row[i] != '-')
            throw ParseError(static_cast<int>(k) + 1, "pattern rows use '+' and '-' only");
        }
      }
    } else if (tok[0] == "port") {
      if (!current) throw ParseError(line_no, "port outside a tile block");
      if (tok.size() < 6) throw ParseError(line_no, "expected: port <in|out> <side> <name> <offset> <cells>");
      Port p;
      if (tok[1] == "in") p.dir = PortDir::kIn;
      else if (tok[1] == "out") p.dir = PortDir::kOut;
      else throw ParseError(line_no, "port direction must be in or out");
      if (tok[2] == "N") p.side = Side::kNorth;
      else if (tok[2] == "E") p.side = Side::kEast;
      else if (tok[2] == "S") p.side = Side::kSouth;
      else if (tok[2] == "W") p.side = Side::kWest;
      else throw ParseError(line_no, "port side must be N, E, S or W");
      const bool inbound_side = p.side == Side::kNorth || p.side == Side::kEast;
      if (inbound_side != (p.dir == PortDir::kIn))
        throw ParseError(line_no, "inputs use N/E edges, outputs S/W edges");
      p.name = tok[3];
      p.offset = to_int(tok[4], line_no);
      for (size_t t = 5; t < tok.size(); ++t) {
        const size_t comma = tok[t].find(',');
        if (comma == std::string::npos) throw ParseError(line_no, "template cell must be i,j");
        const Cell c{to_int(tok[t].substr(0, comma), line_no),
                     to_int(tok[t].substr(comma + 1), line_no)};
        if (c.i < 0 || c.j < 0 || c.i >= current->width || c.j >= current->height)
          throw ParseError(line_no, "template cell outside the tile");
        p.cells.push_back(c);
      }
      current->ports.push_back(std::move(p));
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!have_family) throw ParseError(1, "missing family line");
  if (gs.tiles.empty()) throw ParseError(static_cast<int>(lines.size()), "no tiles");
  gs.tile_width = gs.tiles.front().width;
  gs.tile_height = gs.tiles.front().height;
  for (const Tile& t : gs.tiles)
    if (t.width != gs.tile_width || t.height != gs.tile_height)
      throw ParseError(0, "tile '" + t.name + "' breaks the uniform tile pitch");
  return gs;
}

std::string format_gadget_set(const GadgetSet& gs) {
  std::ostringstream out;
  out << "family " << gs.family.to_string() << '\n';
  if (gs.scale > 0) out << "scale " << gs.scale << '\n';
  for (const Tile& t : gs.tiles) {
    out << "tile " << t.name << ' ' << t.width << ' ' << t.height << '\n';
    for (int j = t.height - 1; j >= 0; --j) {
      for (int i = 0; i < t.width; ++i) out << (t.at(i, j) ? '+' : '-');
      out << '\n';
    }
    for (const Port& p : t.ports) {
      out << "port " << (p.dir == PortDir::kIn ? "in" : "out") << ' ' << side_char(p.side) << ' '
          << p.name << ' ' << p.offset;
      for (const Cell& c : p.cells) out << ' ' << c.i << ',' << c.j;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace fmca::compile
