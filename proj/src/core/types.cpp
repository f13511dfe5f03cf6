#include "core/types.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace fmca {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kOffsetCollision: return "OffsetCollision";
    case ErrorCode::kCellOutOfRange: return "CellOutOfRange";
    case ErrorCode::kWrongNeighborhoodArity: return "WrongNeighborhoodArity";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kFamilyOutOfRange: return "FamilyOutOfRange";
    case ErrorCode::kGadgetConstructionFailed: return "GadgetConstructionFailed";
    case ErrorCode::kLayoutOverflow: return "LayoutOverflow";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

void normalize_axis(std::vector<int>& v, const char* axis) {
  if (v.empty())
    throw Error(ErrorCode::kInvalidArgument, std::string(axis) + " offsets must be nonempty");
  std::sort(v.begin(), v.end());
  if (v.front() < 1)
    throw Error(ErrorCode::kInvalidArgument, std::string(axis) + " offsets must be >= 1");
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw Error(ErrorCode::kInvalidArgument, std::string(axis) + " offsets repeat");
}

void check_axis(const std::vector<int>& v, int n, const char* axis) {
  std::vector<int> seen;
  for (int k : v) {
    const int r = k % n;
    if (r == 0)
      throw Error(ErrorCode::kOffsetCollision,
                  std::string(axis) + " offset " + std::to_string(k) +
                      " is a multiple of the torus side " + std::to_string(n));
    if (std::find(seen.begin(), seen.end(), r) != seen.end())
      throw Error(ErrorCode::kOffsetCollision,
                  std::string(axis) + " offsets collide mod " + std::to_string(n));
    seen.push_back(r);
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

}  // namespace

LNeighborhood::LNeighborhood(std::vector<int> north, std::vector<int> east)
    : north_(std::move(north)), east_(std::move(east)) {
  normalize_axis(north_, "north");
  normalize_axis(east_, "east");
}

void LNeighborhood::check_bindable(int n) const { check_bindable(n, n); }

void LNeighborhood::check_bindable(int width, int height) const {
  if (north_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty neighborhood");
  check_axis(north_, height, "north");
  check_axis(east_, width, "east");
}

std::string LNeighborhood::to_string() const {
  return "N=" + join(north_) + " E=" + join(east_);
}

std::vector<Offset> offsets(const LNeighborhood& nb) {
  std::vector<Offset> out;
  for (int k : nb.north()) out.push_back({0, k});
  for (int k : nb.east()) out.push_back({k, 0});
  return out;
}

State local_rule(State self, const std::vector<State>& neighbors) {
  if (self == State::kPlus) return State::kPlus;
  int sum = 0;
  for (State s : neighbors) sum += static_cast<int>(s);
  return sum > 0 ? State::kPlus : State::kMinus;
}

}  // namespace fmca
