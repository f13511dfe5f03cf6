#include "predict/subgrid.hpp"

#include <numeric>
#include <string>

#include "core/error.hpp"

namespace fmca::predict {
namespace {

// a^-1 mod m for gcd(a, m) = 1; 0 when m = 1.
int mod_inverse(int a, int m) {
  if (m == 1) return 0;
  long long t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    const long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorCode::kInternal, "period not invertible on its subtorus");
  return static_cast<int>((t % m + m) % m);
}

}  // namespace

SubgridMap subgrid_map(int p, int p_north, int n) {
  if (p < 1 || p_north < 1 || n < 1)
    throw Error(ErrorCode::kInvalidArgument, "periods and grid size must be >= 1");
  SubgridMap m;
  m.p = p;
  m.p_north = p_north;
  m.n = n;
  m.classes_east = std::gcd(p, n);
  m.classes_north = std::gcd(p_north, n);
  m.sub_width = n / m.classes_east;
  m.sub_height = n / m.classes_north;
  m.inv_east = mod_inverse((p / m.classes_east) % m.sub_width, m.sub_width);
  m.inv_north = mod_inverse((p_north / m.classes_north) % m.sub_height, m.sub_height);
  return m;
}

Location locate(Cell c, const SubgridMap& m) {
  if (c.i < 0 || c.j < 0 || c.i >= m.n || c.j >= m.n)
    throw Error(ErrorCode::kCellOutOfRange, "cell (" + std::to_string(c.i) + "," +
                                                std::to_string(c.j) + ") outside grid");
  Location loc;
  loc.s = c.i % m.classes_east;
  loc.t = c.j % m.classes_north;
  const long long qe = static_cast<long long>((c.i - loc.s) / m.classes_east) * m.inv_east;
  const long long qn = static_cast<long long>((c.j - loc.t) / m.classes_north) * m.inv_north;
  loc.sub = {static_cast<int>(qe % m.sub_width), static_cast<int>(qn % m.sub_height)};
  return loc;
}

Cell cell_of(const SubgridMap& m, int s, int t, Cell sub) {
  const long long i = s + static_cast<long long>(sub.i) * m.p;
  const long long j = t + static_cast<long long>(sub.j) * m.p_north;
  return {static_cast<int>(i % m.n), static_cast<int>(j % m.n)};
}

CellMask extract_class(const Configuration& x, const SubgridMap& m, int s, int t) {
  if (x.n() != m.n) throw Error(ErrorCode::kInvalidArgument, "map built for another grid size");
  CellMask out(m.sub_width, m.sub_height);
  for (int q2 = 0; q2 < m.sub_height; ++q2)
    for (int q = 0; q < m.sub_width; ++q) {
      const Cell c = cell_of(m, s, t, {q, q2});
      if (!x.plus(c.i, c.j)) out.insert({q, q2});
    }
  return out;
}

}  // namespace fmca::predict
