#include "compile/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "core/configuration.hpp"
#include "core/error.hpp"
#include "core/rule.hpp"

namespace fmca::compile {

bool TruthTable::south(bool north, bool east) const {
  switch (kind) {
    case Kind::kVWire: return north;
    case Kind::kHWire: return false;
    case Kind::kAnd: return north && east;
    case Kind::kOr: return north || east;
    case Kind::kCross: return north;
  }
  return false;
}

bool TruthTable::west(bool north, bool east) const {
  switch (kind) {
    case Kind::kVWire: return false;
    case Kind::kHWire: return east;
    case Kind::kAnd: return north && east;
    case Kind::kOr: return north || east;
    case Kind::kCross: return east;
  }
  return false;
}

TruthTable TruthTable::for_tile(const std::string& name) {
  if (name == kVWire) return {Kind::kVWire};
  if (name == kHWire) return {Kind::kHWire};
  if (name == kAnd) return {Kind::kAnd};
  if (name == kOr) return {Kind::kOr};
  if (name == kCross) return {Kind::kCross};
  throw Error(ErrorCode::kInvalidArgument, "no truth table for tile '" + name + "'");
}

bool VerifyReport::passed() const { return failures() == 0; }

size_t VerifyReport::failures() const {
  return static_cast<size_t>(
      std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.passed; }));
}

void VerifyReport::append(const VerifyReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string VerifyReport::table() const {
  struct Tally {
    int pass = 0;
    int total = 0;
  };
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, Tally> tally;
  for (const VerifyRow& r : rows) {
    const auto key = std::make_pair(r.tile, r.contract);
    if (!tally.count(key)) order.push_back(key);
    auto& t = tally[key];
    ++t.total;
    t.pass += r.passed ? 1 : 0;
  }
  std::ostringstream out;
  out << std::left << std::setw(8) << "tile" << std::setw(13) << "contract" << std::setw(10)
      << "contexts" << "result\n";
  for (const auto& key : order) {
    const Tally& t = tally[key];
    out << std::setw(8) << key.first << std::setw(13) << key.second << std::setw(10)
        << (std::to_string(t.pass) + "/" + std::to_string(t.total))
        << (t.pass == t.total ? "PASS" : "FAIL") << '\n';
  }
  for (const VerifyRow& r : rows)
    if (!r.passed)
      out << "FAIL " << r.tile << ' ' << r.contract << " [" << r.combo << "] " << r.detail << '\n';
  return out.str();
}

namespace {

enum class InMode { kFedFalse, kFedTrue, kUnfed, kTemplate };

constexpr int kSlots = 7;
constexpr int kCenter = 3;

const char* mode_label(InMode m) {
  switch (m) {
    case InMode::kFedFalse: return "F";
    case InMode::kFedTrue: return "T";
    case InMode::kUnfed: return "unfed";
    case InMode::kTemplate: return "tmpl";
  }
  return "?";
}

bool mode_value(InMode m) { return m == InMode::kFedTrue || m == InMode::kTemplate; }

class Harness {
 public:
  Harness(const Tile& tile, const LNeighborhood& nb, const Tile& vwire, const Tile& hwire)
      : tile_(tile), nb_(nb), vwire_(vwire), hwire_(hwire), tw_(tile.width), th_(tile.height) {
    side_ = std::max(kSlots * tw_, kSlots * th_);
    for (int k : nb.east()) gcd_east_ = std::gcd(gcd_east_, k);
    for (int k : nb.north()) gcd_north_ = std::gcd(gcd_north_, k);
  }

  void run(InMode north, InMode east, bool dangling, VerifyReport& report) const {
    const Port* n_in = tile_.port(PortDir::kIn, Side::kNorth);
    const Port* e_in = tile_.port(PortDir::kIn, Side::kEast);
    const Port* s_out = tile_.port(PortDir::kOut, Side::kSouth);
    const Port* w_out = tile_.port(PortDir::kOut, Side::kWest);
    std::string combo;
    if (n_in) combo += std::string("N=") + mode_label(north);
    if (e_in) combo += std::string(combo.empty() ? "" : " ") + "E=" + mode_label(east);
    if (dangling) combo += " dangling";

    Configuration x(side_);
    place(x, tile_, kCenter, kCenter);
    if (n_in) {
      if (north == InMode::kFedFalse || north == InMode::kFedTrue) {
        place(x, vwire_, kCenter, kCenter + 1);
        place(x, vwire_, kCenter, kCenter + 2);
        if (north == InMode::kFedTrue)
          inject(x, *vwire_.port(PortDir::kIn, Side::kNorth), kCenter, kCenter + 2);
      } else if (north == InMode::kTemplate) {
        inject(x, *n_in, kCenter, kCenter);
      }
    }
    if (e_in) {
      if (east == InMode::kFedFalse || east == InMode::kFedTrue) {
        place(x, hwire_, kCenter + 1, kCenter);
        place(x, hwire_, kCenter + 2, kCenter);
        if (east == InMode::kFedTrue)
          inject(x, *hwire_.port(PortDir::kIn, Side::kEast), kCenter + 2, kCenter);
      } else if (east == InMode::kTemplate) {
        inject(x, *e_in, kCenter, kCenter);
      }
    }
    if (!dangling) {
      if (s_out) {
        place(x, vwire_, kCenter, kCenter - 1);
        place(x, vwire_, kCenter, kCenter - 2);
      }
      if (w_out) {
        place(x, hwire_, kCenter - 1, kCenter);
        place(x, hwire_, kCenter - 2, kCenter);
      }
    }

    const bool nv = n_in && mode_value(north);
    const bool ev = e_in && mode_value(east);
    const TruthTable tt = truth_;
    const bool want_s = s_out && tt.south(nv, ev);
    const bool want_w = w_out && tt.west(nv, ev);
    const Configuration fp = run_to_fixed_point(x, nb_).config;

    auto row = [&](const char* contract) {
      VerifyRow r;
      r.tile = tile_.name;
      r.contract = contract;
      r.combo = combo;
      return r;
    };

    // Output ports.
    {
      VerifyRow r = row("output");
      auto check = [&](const Port& p, int sx, int sy, bool want, const char* label) {
        int on = 0;
        for (const Cell& c : p.cells) on += fp.plus(sx * tw_ + c.i, sy * th_ + c.j) ? 1 : 0;
        const int total = static_cast<int>(p.cells.size());
        const bool ok = want ? on == total : on == 0;
        if (!ok && r.passed) {
          r.passed = false;
          r.detail = std::string(label) + " expected " + (want ? "TRUE" : "FALSE") + ", " +
                     std::to_string(on) + "/" + std::to_string(total) + " template cells active";
        }
      };
      if (s_out) {
        if (dangling) check(*s_out, kCenter, kCenter, want_s, "south");
        else check(*vwire_.port(PortDir::kOut, Side::kSouth), kCenter, kCenter - 2, want_s, "south");
      }
      if (w_out) {
        if (dangling) check(*w_out, kCenter, kCenter, want_w, "west");
        else check(*hwire_.port(PortDir::kOut, Side::kWest), kCenter - 2, kCenter, want_w, "west");
      }
      report.rows.push_back(r);
    }

    // Containment: every newly +1 cell lies where a signal may legally run.
    VerifyRow contain = row("containment");
    VerifyRow embed = row("embedding");
    size_t changed = 0;
    Cell first_changed{-1, -1};
    const int strip_e = nb_.max_east(), strip_n = nb_.max_north();
    for (int j = 0; j < side_; ++j) {
      for (int i = 0; i < side_; ++i) {
        if (!fp.plus(i, j) || x.plus(i, j)) continue;
        if (changed++ == 0) first_changed = {i, j};
        if ((i % gcd_east_ != 0 || j % gcd_north_ != 0) && embed.passed) {
          embed.passed = false;
          embed.detail = "cell " + cell_text({i, j}) + " outside the working residue class";
        }
        if (allowed(i, j, strip_e, strip_n, north, east, dangling, want_s, want_w)) continue;
        if (contain.passed) {
          contain.passed = false;
          contain.detail = "leak at " + cell_text({i, j}) + " (slot " + std::to_string(i / tw_) +
                           "," + std::to_string(j / th_) + ")";
        }
      }
    }
    report.rows.push_back(contain);
    if (gcd_east_ > 1 || gcd_north_ > 1) report.rows.push_back(embed);
    if (!nv && !ev) {
      VerifyRow q = row("quiescence");
      if (changed != 0) {
        q.passed = false;
        q.detail = std::to_string(changed) + " cells changed, first at " + cell_text(first_changed);
      }
      report.rows.push_back(q);
    }
  }

  void set_truth(const TruthTable& tt) { truth_ = tt; }

 private:
  static std::string cell_text(Cell c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
  }

  void place(Configuration& x, const Tile& t, int sx, int sy) const {
    for (int j = 0; j < t.height; ++j)
      for (int i = 0; i < t.width; ++i)
        if (t.at(i, j)) x.set_plus(sx * tw_ + i, sy * th_ + j, true);
  }

  void inject(Configuration& x, const Port& p, int sx, int sy) const {
    for (const Cell& c : p.cells) x.set_plus(sx * tw_ + c.i, sy * th_ + c.j, true);
  }

  bool allowed(int i, int j, int strip_e, int strip_n, InMode north, InMode east, bool dangling,
               bool want_s, bool want_w) const {
    const int sx = i / tw_, sy = j / th_;
    if (sx >= kSlots || sy >= kSlots) return false;
    const int li = i - sx * tw_, lj = j - sy * th_;
    if (sx == kCenter && sy == kCenter) {
      const bool in_w = li < strip_e, in_s = lj < strip_n;
      if (!in_w && !in_s) return true;
      const Port* w = tile_.port(PortDir::kOut, Side::kWest);
      const Port* s = tile_.port(PortDir::kOut, Side::kSouth);
      if (in_w && w && want_w && lj == w->offset) return true;
      if (in_s && s && want_s && li == s->offset) return true;
      return false;
    }
    if (sx == kCenter && (sy == kCenter + 1 || sy == kCenter + 2))
      return north == InMode::kFedTrue && li == vwire_.port(PortDir::kIn, Side::kNorth)->offset;
    if (sy == kCenter && (sx == kCenter + 1 || sx == kCenter + 2))
      return east == InMode::kFedTrue && lj == hwire_.port(PortDir::kIn, Side::kEast)->offset;
    if (!dangling && sx == kCenter && (sy == kCenter - 1 || sy == kCenter - 2))
      return want_s && li == vwire_.port(PortDir::kOut, Side::kSouth)->offset;
    if (!dangling && sy == kCenter && (sx == kCenter - 1 || sx == kCenter - 2))
      return want_w && lj == hwire_.port(PortDir::kOut, Side::kWest)->offset;
    return false;
  }

  const Tile& tile_;
  const LNeighborhood& nb_;
  const Tile& vwire_;
  const Tile& hwire_;
  int tw_, th_;
  int side_ = 0;
  int gcd_east_ = 0, gcd_north_ = 0;
  TruthTable truth_{TruthTable::Kind::kCross};
};

// Ports of abutting tiles must meet on the same line.
void check_alignment(const Tile& tile, const Tile& vwire, const Tile& hwire, VerifyReport& report) {
  auto check = [&](const Port* mine, const Port* theirs, const char* what) {
    if (!mine) return;
    VerifyRow r{tile.name, "alignment", what, true, ""};
    if (!theirs || theirs->offset != mine->offset) {
      r.passed = false;
      r.detail = "port line " + std::to_string(mine->offset) + " does not meet the wire's " +
                 (theirs ? std::to_string(theirs->offset) : std::string("missing port"));
    }
    report.rows.push_back(r);
  };
  check(tile.port(PortDir::kIn, Side::kNorth), vwire.port(PortDir::kOut, Side::kSouth), "N");
  check(tile.port(PortDir::kIn, Side::kEast), hwire.port(PortDir::kOut, Side::kWest), "E");
  check(tile.port(PortDir::kOut, Side::kSouth), vwire.port(PortDir::kIn, Side::kNorth), "S");
  check(tile.port(PortDir::kOut, Side::kWest), hwire.port(PortDir::kIn, Side::kEast), "W");
}

}  // namespace

VerifyReport verify_gadget(const Tile& tile, const LNeighborhood& nb, const TruthTable& tt,
                           const Tile& vwire, const Tile& hwire) {
  if (vwire.width != tile.width || vwire.height != tile.height || hwire.width != tile.width ||
      hwire.height != tile.height)
    throw Error(ErrorCode::kInvalidArgument, "wire tiles must share the gadget's dimensions");
  if (!vwire.port(PortDir::kIn, Side::kNorth) || !vwire.port(PortDir::kOut, Side::kSouth) ||
      !hwire.port(PortDir::kIn, Side::kEast) || !hwire.port(PortDir::kOut, Side::kWest))
    throw Error(ErrorCode::kInvalidArgument, "wire tiles lack their ports");
  VerifyReport report;
  check_alignment(tile, vwire, hwire, report);
  if (!report.passed()) return report;

  Harness h(tile, nb, vwire, hwire);
  h.set_truth(tt);
  const bool has_n = tile.port(PortDir::kIn, Side::kNorth) != nullptr;
  const bool has_e = tile.port(PortDir::kIn, Side::kEast) != nullptr;
  const std::vector<InMode> all = {InMode::kFedFalse, InMode::kFedTrue, InMode::kUnfed,
                                   InMode::kTemplate};
  const std::vector<InMode> none = {InMode::kUnfed};
  for (bool dangling : {false, true})
    for (InMode n : has_n ? all : none)
      for (InMode e : has_e ? all : none) h.run(n, e, dangling, report);
  return report;
}

VerifyReport verify_gadget_set(const GadgetSet& gs) {
  const LNeighborhood nb = neighborhood_of(gs.family);
  const Tile& v = gs.tile(kVWire);
  const Tile& hw = gs.tile(kHWire);
  VerifyReport report;
  for (const char* name : {kVWire, kHWire, kAnd, kOr, kCross})
    report.append(verify_gadget(gs.tile(name), nb, TruthTable::for_tile(name), v, hw));
  return report;
}

}  // namespace fmca::compile
