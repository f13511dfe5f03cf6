#pragma once

#include <array>
#include <string>

#include "core/types.hpp"

namespace fmca::compile {

struct NeighborhoodFamily {
  enum class Variant { kContiguous, kPeriodic, kSparse2 };

  Variant variant = Variant::kContiguous;
  // Contiguous: k_E, k_N. Periodic: p, p', |S_E|, |S_N|. Sparse2: i_E, j_E, i_N, j_N.
  std::array<int, 4> params{};

  static NeighborhoodFamily contiguous(int k_east, int k_north);
  static NeighborhoodFamily periodic(int p, int p_north, int size_east, int size_north);
  static NeighborhoodFamily sparse2(int i_east, int j_east, int i_north, int j_north);

  // Throws FamilyOutOfRange.
  void validate() const;
  // "contiguous 2 2", the form used in gadget-set headers.
  std::string to_string() const;
  bool operator==(const NeighborhoodFamily&) const = default;
};

// Accepts "contiguous:2,2", "periodic:2,3,2,2", "sparse2:1,3,1,3" and the
// space separated header form.
NeighborhoodFamily parse_family(const std::string& text);

LNeighborhood neighborhood_of(const NeighborhoodFamily& f);

// The same family with east and north exchanged.
NeighborhoodFamily transposed(const NeighborhoodFamily& f);

struct WireParams {
  int a = 0;  // frozen +1 columns of a vertical wire
  int b = 0;  // gap between the signal column and the frozen block
  int c = 0;  // signal width parameter
  bool operator==(const WireParams&) const = default;
};

// Axes are swapped first when k_north > k_east.
WireParams wire_params(int k_east, int k_north);

}  // namespace fmca::compile
