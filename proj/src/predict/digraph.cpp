#include "predict/digraph.hpp"

#include <algorithm>
#include <deque>

#include "core/error.hpp"

namespace fmca::predict {

size_t CellMask::count() const {
  return static_cast<size_t>(std::count(bits.begin(), bits.end(), uint8_t{1}));
}

std::vector<Cell> CellMask::cells() const {
  std::vector<Cell> out;
  for (size_t v = 0; v < bits.size(); ++v)
    if (bits[v]) out.push_back(cell(static_cast<int>(v)));
  return out;
}

CellMask minus_cells(const Configuration& x) {
  CellMask m(x.n(), x.n());
  for (int j = 0; j < x.n(); ++j)
    for (int i = 0; i < x.n(); ++i)
      if (!x.plus(i, j)) m.bits[static_cast<size_t>(j) * x.n() + i] = 1;
  return m;
}

int CellDigraph::north_of(int v) const {
  const int i = v % width, j = v / width;
  return ((j + north) % height) * width + i;
}

int CellDigraph::east_of(int v) const {
  const int i = v % width, j = v / width;
  return j * width + (i + east) % width;
}

size_t CellDigraph::edge_count() const {
  size_t e = 0;
  for (const auto& o : out) e += (o[0] >= 0) + (o[1] >= 0);
  return e;
}

CellDigraph build_cell_digraph(const Configuration& x, const LNeighborhood& nb) {
  if (!nb.is_singleton())
    throw Error(ErrorCode::kWrongNeighborhoodArity,
                "cell digraph needs |S_N| = |S_E| = 1, got " + nb.to_string());
  nb.check_bindable(x.n());
  return build_cell_digraph(minus_cells(x), nb.east()[0], nb.north()[0]);
}

CellDigraph build_cell_digraph(const CellMask& minus, int east, int north) {
  if (east < 1 || north < 1)
    throw Error(ErrorCode::kInvalidArgument, "offsets must be >= 1");
  if (east % minus.width == 0 || north % minus.height == 0)
    throw Error(ErrorCode::kOffsetCollision, "offset is a multiple of the torus side");
  CellDigraph g;
  g.width = minus.width;
  g.height = minus.height;
  g.east = east % minus.width;
  g.north = north % minus.height;
  g.vertices = minus;
  g.out.assign(minus.bits.size(), {-1, -1});
  for (size_t v = 0; v < minus.bits.size(); ++v) {
    if (!minus.bits[v]) continue;
    const int nv = g.north_of(static_cast<int>(v));
    const int ev = g.east_of(static_cast<int>(v));
    if (minus.bits[nv]) g.out[v][0] = nv;
    if (minus.bits[ev]) g.out[v][1] = ev;
  }
  return g;
}

CellMask cycle_vertices(const CellDigraph& g) {
  // Iterative Tarjan. A vertex lies on a cycle iff its component has >= 2
  // members; self-loops cannot occur.
  const int m = static_cast<int>(g.out.size());
  std::vector<int> index(m, -1), low(m, 0), comp_stack;
  std::vector<uint8_t> on_stack(m, 0);
  CellMask result(g.width, g.height);
  struct Frame {
    int v;
    int next_edge;
  };
  std::vector<Frame> call;
  int counter = 0;
  for (int root = 0; root < m; ++root) {
    if (!g.vertices.bits[root] || index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    comp_stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_edge < 2) {
        const int w = g.out[f.v][f.next_edge++];
        if (w < 0) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          comp_stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const int v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<int> members;
      int w;
      do {
        w = comp_stack.back();
        comp_stack.pop_back();
        on_stack[w] = 0;
        members.push_back(w);
      } while (w != v);
      if (members.size() >= 2)
        for (int u : members) result.bits[u] = 1;
    }
  }
  return result;
}

CellMask never_flip_set(const CellDigraph& g) {
  CellMask reach = cycle_vertices(g);
  std::deque<int> queue;
  for (size_t v = 0; v < reach.bits.size(); ++v)
    if (reach.bits[v]) queue.push_back(static_cast<int>(v));
  // Predecessors of v are the vertices whose north or east neighbor is v.
  auto pred = [&g](int v, int k) {
    const int i = v % g.width, j = v / g.width;
    if (k == 0) return ((j - g.north + g.height) % g.height) * g.width + i;
    return j * g.width + (i - g.east + g.width) % g.width;
  };
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int k = 0; k < 2; ++k) {
      const int u = pred(v, k);
      if (g.vertices.bits[u] && g.out[u][k] == v && !reach.bits[u]) {
        reach.bits[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return reach;
}

FlipEntry FlipSchedule::at(Cell c) const {
  const int64_t t = times_[static_cast<size_t>(c.j) * width_ + c.i];
  if (t == 0) return {FlipEntry::Kind::kAlreadyPlus, 0};
  if (t < 0) return {FlipEntry::Kind::kNever, 0};
  return {FlipEntry::Kind::kFlipsAt, t};
}

bool FlipSchedule::changed_by(Cell c, uint64_t t) const {
  const int64_t tau = times_[static_cast<size_t>(c.j) * width_ + c.i];
  return tau >= 1 && static_cast<uint64_t>(tau) <= t;
}

FlipSchedule flip_times(const CellDigraph& g) {
  const CellMask never = never_flip_set(g);
  const size_t m = g.out.size();
  std::vector<int64_t> tau(m, 0);
  std::vector<uint8_t> done(m, 0);
  for (size_t v = 0; v < m; ++v) {
    if (!g.vertices.bits[v]) done[v] = 1;  // +1 cells contribute 0
    else if (never.bits[v]) {
      tau[v] = -1;
      done[v] = 1;
    }
  }
  // Longest path on the acyclic remainder; successors of a flipping vertex
  // flip too, so the traversal never meets a -1 entry.
  std::vector<int> stack;
  for (size_t root = 0; root < m; ++root) {
    if (done[root]) continue;
    stack.push_back(static_cast<int>(root));
    while (!stack.empty()) {
      const int v = stack.back();
      if (done[v]) {
        stack.pop_back();
        continue;
      }
      bool ready = true;
      for (int w : g.out[v])
        if (w >= 0 && !done[w]) {
          stack.push_back(w);
          ready = false;
        }
      if (!ready) continue;
      int64_t best = 0;
      for (int w : g.out[v])
        if (w >= 0) best = std::max(best, tau[w]);
      tau[v] = best + 1;
      done[v] = 1;
      stack.pop_back();
    }
  }
  return FlipSchedule(g.width, g.height, std::move(tau));
}

FlipSchedule flip_times(const Configuration& x, const CellDigraph& g) {
  if (g.width != x.n() || g.height != x.n() || !(g.vertices == minus_cells(x)))
    throw Error(ErrorCode::kInvalidArgument, "digraph was not built from this configuration");
  return flip_times(g);
}

}  // namespace fmca::predict
