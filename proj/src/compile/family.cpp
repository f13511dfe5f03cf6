#include "compile/family.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace fmca::compile {
namespace {

[[noreturn]] void out_of_range(const NeighborhoodFamily& f, const std::string& why) {
  throw Error(ErrorCode::kFamilyOutOfRange, f.to_string() + ": " + why);
}

const char* variant_word(NeighborhoodFamily::Variant v) {
  switch (v) {
    case NeighborhoodFamily::Variant::kContiguous: return "contiguous";
    case NeighborhoodFamily::Variant::kPeriodic: return "periodic";
    case NeighborhoodFamily::Variant::kSparse2: return "sparse2";
  }
  return "?";
}

}  // namespace

NeighborhoodFamily NeighborhoodFamily::contiguous(int k_east, int k_north) {
  return {Variant::kContiguous, {k_east, k_north, 0, 0}};
}

NeighborhoodFamily NeighborhoodFamily::periodic(int p, int p_north, int size_east,
                                                int size_north) {
  return {Variant::kPeriodic, {p, p_north, size_east, size_north}};
}

NeighborhoodFamily NeighborhoodFamily::sparse2(int i_east, int j_east, int i_north,
                                               int j_north) {
  return {Variant::kSparse2, {i_east, j_east, i_north, j_north}};
}

void NeighborhoodFamily::validate() const {
  const auto& q = params;
  switch (variant) {
    case Variant::kContiguous:
      if (q[0] < 2 || q[1] < 2) out_of_range(*this, "needs k_E, k_N >= 2");
      break;
    case Variant::kPeriodic:
      if (q[0] < 1 || q[1] < 1) out_of_range(*this, "periods must be >= 1");
      if (q[2] < 2 || q[3] < 2) out_of_range(*this, "needs |S_E|, |S_N| >= 2");
      break;
    case Variant::kSparse2:
      if (!(0 < q[0] && q[0] < q[1] - 1)) out_of_range(*this, "needs 0 < i_E < j_E - 1");
      if (!(0 < q[2] && q[2] < q[3] - 1)) out_of_range(*this, "needs 0 < i_N < j_N - 1");
      if (q[1] == 2 * q[0]) out_of_range(*this, "needs j_E != 2 i_E");
      if (q[3] == 2 * q[2]) out_of_range(*this, "needs j_N != 2 i_N");
      break;
  }
}

std::string NeighborhoodFamily::to_string() const {
  std::ostringstream out;
  out << variant_word(variant);
  const int count = variant == Variant::kContiguous ? 2 : 4;
  for (int k = 0; k < count; ++k) out << ' ' << params[k];
  return out.str();
}

NeighborhoodFamily parse_family(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ':', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string word;
  in >> word;
  std::vector<int> nums;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      nums.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad family parameter '" + tok + "'");
    }
  }
  NeighborhoodFamily f;
  size_t want = 4;
  if (word == "contiguous") {
    f.variant = NeighborhoodFamily::Variant::kContiguous;
    want = 2;
  } else if (word == "periodic") {
    f.variant = NeighborhoodFamily::Variant::kPeriodic;
  } else if (word == "sparse2") {
    f.variant = NeighborhoodFamily::Variant::kSparse2;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown family '" + word + "'");
  }
  if (nums.size() != want)
    throw Error(ErrorCode::kInvalidArgument,
                word + " takes " + std::to_string(want) + " parameters");
  std::copy(nums.begin(), nums.end(), f.params.begin());
  return f;
}

LNeighborhood neighborhood_of(const NeighborhoodFamily& f) {
  f.validate();
  const auto& q = f.params;
  std::vector<int> north, east;
  switch (f.variant) {
    case NeighborhoodFamily::Variant::kContiguous:
      for (int k = 1; k <= q[0]; ++k) east.push_back(k);
      for (int k = 1; k <= q[1]; ++k) north.push_back(k);
      break;
    case NeighborhoodFamily::Variant::kPeriodic:
      for (int k = 1; k <= q[2]; ++k) east.push_back(k * q[0]);
      for (int k = 1; k <= q[3]; ++k) north.push_back(k * q[1]);
      break;
    case NeighborhoodFamily::Variant::kSparse2:
      east = {q[0], q[1]};
      north = {q[2], q[3]};
      break;
  }
  return LNeighborhood(north, east);
}

NeighborhoodFamily transposed(const NeighborhoodFamily& f) {
  NeighborhoodFamily t = f;
  const auto& q = f.params;
  switch (f.variant) {
    case NeighborhoodFamily::Variant::kContiguous: t.params = {q[1], q[0], 0, 0}; break;
    case NeighborhoodFamily::Variant::kPeriodic: t.params = {q[1], q[0], q[3], q[2]}; break;
    case NeighborhoodFamily::Variant::kSparse2: t.params = {q[2], q[3], q[0], q[1]}; break;
  }
  return t;
}

WireParams wire_params(int k_east, int k_north) {
  if (k_east < 2 || k_north < 2)
    throw Error(ErrorCode::kFamilyOutOfRange, "wire parameters need k_E, k_N >= 2");
  if (k_north > k_east) std::swap(k_east, k_north);
  WireParams w;
  w.a = (k_east + k_north) / 2;
  w.b = k_east - w.a;
  w.c = (k_east + k_north) % 2 == 0 ? w.b + 1 : w.b;
  return w;
}

}  // namespace fmca::compile
