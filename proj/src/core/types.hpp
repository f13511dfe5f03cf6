#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fmca {

enum class State : int8_t { kMinus = -1, kPlus = 1 };

inline char state_char(State s) { return s == State::kPlus ? '+' : '-'; }

// Column i grows east, row j grows north. 0-based.
struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

struct Offset {
  int di = 0;
  int dj = 0;
  auto operator<=>(const Offset&) const = default;
};

class LNeighborhood {
 public:
  LNeighborhood() = default;
  // Sorts and validates; throws InvalidArgument on empty sets, duplicates or
  // offsets below 1.
  LNeighborhood(std::vector<int> north, std::vector<int> east);

  static LNeighborhood toom() { return LNeighborhood({1}, {1}); }

  const std::vector<int>& north() const { return north_; }
  const std::vector<int>& east() const { return east_; }
  int size() const { return static_cast<int>(north_.size() + east_.size()); }
  // Smallest number of +1 neighbors that makes a -1 cell flip.
  int threshold() const { return size() / 2 + 1; }
  int max_north() const { return north_.back(); }
  int max_east() const { return east_.back(); }
  bool is_singleton() const { return north_.size() == 1 && east_.size() == 1; }

  // Throws OffsetCollision if two offsets of one axis agree mod n, or an
  // offset is a multiple of n (the cell would be its own neighbor).
  void check_bindable(int n) const;
  void check_bindable(int width, int height) const;

  std::string to_string() const;  // "N=1,2 E=3"
  bool operator==(const LNeighborhood&) const = default;

 private:
  std::vector<int> north_;
  std::vector<int> east_;
};

// North offsets ascending, then east offsets ascending.
std::vector<Offset> offsets(const LNeighborhood& nb);

State local_rule(State self, const std::vector<State>& neighbors);

}  // namespace fmca
