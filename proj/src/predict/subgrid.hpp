#pragma once

#include "core/configuration.hpp"
#include "core/types.hpp"
#include "predict/digraph.hpp"

namespace fmca::predict {

// Residue-class partition of the n x n torus for east period p and north
// period p_north. Class (s, t) holds the cells (s + q*p, t + q'*p_north) mod n
// and is relabeled onto a sub_width x sub_height torus by (q, q').
struct SubgridMap {
  int p = 1;
  int p_north = 1;
  int n = 1;
  int classes_east = 1;   // gcd(p, n)
  int classes_north = 1;  // gcd(p_north, n)
  int sub_width = 1;      // n / gcd(p, n)
  int sub_height = 1;     // n / gcd(p_north, n)
  int inv_east = 0;       // (p / gcd) ^ -1 mod sub_width
  int inv_north = 0;

  int class_count() const { return classes_east * classes_north; }
};

struct Location {
  int s = 0;
  int t = 0;
  Cell sub;
};

SubgridMap subgrid_map(int p, int p_north, int n);
Location locate(Cell c, const SubgridMap& m);
// Inverse of locate.
Cell cell_of(const SubgridMap& m, int s, int t, Cell sub);

// The -1 cells of class (s, t), in subtorus coordinates.
CellMask extract_class(const Configuration& x, const SubgridMap& m, int s, int t);

}  // namespace fmca::predict
