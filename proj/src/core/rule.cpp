#include "core/rule.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "core/error.hpp"

namespace fmca {
namespace {

// len bits (1..64) of a packed row starting at bit p; p + len <= row length.
inline uint64_t extract(const uint64_t* row, int p, int len) {
  const int w = p >> 6;
  const int off = p & 63;
  uint64_t v = row[w] >> off;
  if (off != 0 && off + len > 64) v |= row[w + 1] << (64 - off);
  if (len < 64) v &= (uint64_t{1} << len) - 1;
  return v;
}

// 64 bits of the cyclic n-bit row starting at bit s.
inline uint64_t cyclic_window(const uint64_t* row, int n, int s) {
  if (s + 64 <= n) return extract(row, s, 64);
  uint64_t r = 0;
  int got = 0;
  int p = s;
  while (got < 64) {
    const int avail = std::min(64 - got, n - p);
    r |= extract(row, p, avail) << got;
    got += avail;
    p += avail;
    if (p == n) p = 0;
  }
  return r;
}

class Engine {
 public:
  Engine(const LNeighborhood& nb, int n, int threads)
      : nb_(nb), n_(n), wpr_((n + 63) / 64), threshold_(nb.threshold()) {
    nb.check_bindable(n);
    planes_ = std::bit_width(static_cast<unsigned>(nb.size()));
    threads_ = std::clamp(threads, 1, std::max(1, n / 16));
    last_mask_ = (n % 64 == 0) ? ~uint64_t{0} : (uint64_t{1} << (n % 64)) - 1;
  }

  // Writes every row of out that is marked in need (all rows when need is
  // null) and copies the rest from in. changed[j] reports out row != in row.
  bool advance(const Configuration& in, Configuration& out, const std::vector<uint8_t>* need,
               std::vector<uint8_t>& changed) const {
    changed.assign(n_, 0);
    auto band = [&](int j0, int j1) {
      std::vector<uint64_t> planes(planes_);
      for (int j = j0; j < j1; ++j) {
        if (need && !(*need)[j]) {
          std::copy_n(in.row(j), wpr_, out.row(j));
          continue;
        }
        changed[j] = compute_row(in, j, out.row(j), planes);
      }
    };
    if (threads_ == 1) {
      band(0, n_);
    } else {
      std::vector<std::thread> pool;
      const int per = (n_ + threads_ - 1) / threads_;
      for (int t = 0; t < threads_; ++t) {
        const int j0 = t * per, j1 = std::min(n_, j0 + per);
        if (j0 < j1) pool.emplace_back(band, j0, j1);
      }
      for (auto& th : pool) th.join();
    }
    return std::any_of(changed.begin(), changed.end(), [](uint8_t c) { return c != 0; });
  }

  // Rows whose update may differ from the previous step.
  void rows_to_update(const std::vector<uint8_t>& changed, std::vector<uint8_t>& need) const {
    need.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
      if (!changed[j]) continue;
      need[j] = 1;
      for (int k : nb_.north()) need[((j - k) % n_ + n_) % n_] = 1;
    }
  }

 private:
  bool compute_row(const Configuration& in, int j, uint64_t* out,
                   std::vector<uint64_t>& planes) const {
    const uint64_t* self = in.row(j);
    bool any_change = false;
    for (int w = 0; w < wpr_; ++w) {
      const uint64_t mask = (w == wpr_ - 1) ? last_mask_ : ~uint64_t{0};
      if ((self[w] & mask) == mask) {
        out[w] = self[w];
        continue;
      }
      std::fill(planes.begin(), planes.end(), 0);
      auto add = [&planes](uint64_t v) {
        for (auto& p : planes) {
          const uint64_t carry = p & v;
          p ^= v;
          v = carry;
          if (!v) break;
        }
      };
      for (int k : nb_.north()) add(in.row((j + k) % n_)[w]);
      for (int k : nb_.east()) add(cyclic_window(self, n_, (64 * w + k % n_) % n_));
      uint64_t gt = 0, eq = ~uint64_t{0};
      for (int b = planes_ - 1; b >= 0; --b) {
        if ((threshold_ >> b) & 1) {
          eq &= planes[b];
        } else {
          gt |= eq & planes[b];
          eq &= ~planes[b];
        }
      }
      const uint64_t next = (self[w] | gt | eq) & mask;
      any_change |= next != self[w];
      out[w] = next;
    }
    return any_change;
  }

  const LNeighborhood& nb_;
  int n_;
  int wpr_;
  int threshold_;
  int planes_ = 0;
  int threads_ = 1;
  uint64_t last_mask_ = 0;
};

uint64_t square_bound(int n) { return static_cast<uint64_t>(n) * static_cast<uint64_t>(n); }

}  // namespace

Configuration step(const Configuration& x, const LNeighborhood& nb, int threads) {
  Engine engine(nb, x.n(), threads);
  Configuration out(x.n());
  std::vector<uint8_t> changed;
  engine.advance(x, out, nullptr, changed);
  return out;
}

Configuration simulate(const Configuration& x, const LNeighborhood& nb, uint64_t t,
                       int threads) {
  Engine engine(nb, x.n(), threads);
  t = std::min(t, square_bound(x.n()));
  Configuration cur = x, next(x.n());
  std::vector<uint8_t> changed, need;
  for (uint64_t s = 0; s < t; ++s) {
    const bool moved = engine.advance(cur, next, s == 0 ? nullptr : &need, changed);
    if (!moved) break;
    std::swap(cur, next);
    engine.rows_to_update(changed, need);
  }
  return cur;
}

FixedPointResult run_to_fixed_point(const Configuration& x, const LNeighborhood& nb,
                                    int threads) {
  Engine engine(nb, x.n(), threads);
  const uint64_t bound = square_bound(x.n());
  Configuration cur = x, next(x.n());
  std::vector<uint8_t> changed, need;
  uint64_t steps = 0;
  while (engine.advance(cur, next, steps == 0 ? nullptr : &need, changed)) {
    std::swap(cur, next);
    engine.rows_to_update(changed, need);
    if (++steps > bound)
      throw Error(ErrorCode::kInternal, "no fixed point within n^2 = " +
                                            std::to_string(bound) + " steps");
  }
  return {std::move(cur), steps};
}

bool predict_by_simulation(const Configuration& x, const LNeighborhood& nb, uint64_t t,
                           Cell c) {
  x.check_cell(c);
  if (x.plus(c.i, c.j) || t == 0) {
    nb.check_bindable(x.n());
    return false;
  }
  return simulate(x, nb, t).plus(c.i, c.j);
}

std::vector<int64_t> simulate_flip_steps(const Configuration& x, const LNeighborhood& nb,
                                         int threads) {
  Engine engine(nb, x.n(), threads);
  const int n = x.n();
  const uint64_t bound = square_bound(n);
  std::vector<int64_t> when(static_cast<size_t>(n) * n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (x.plus(i, j)) when[static_cast<size_t>(j) * n + i] = 0;
  Configuration cur = x, next(n);
  std::vector<uint8_t> changed, need;
  uint64_t steps = 0;
  while (engine.advance(cur, next, steps == 0 ? nullptr : &need, changed)) {
    ++steps;
    if (steps > bound) throw Error(ErrorCode::kInternal, "no fixed point within n^2 steps");
    for (int j = 0; j < n; ++j) {
      if (!changed[j]) continue;
      const uint64_t* a = cur.row(j);
      const uint64_t* b = next.row(j);
      for (int w = 0; w < cur.words_per_row(); ++w) {
        uint64_t fresh = b[w] & ~a[w];
        while (fresh) {
          const int i = 64 * w + std::countr_zero(fresh);
          when[static_cast<size_t>(j) * n + i] = static_cast<int64_t>(steps);
          fresh &= fresh - 1;
        }
      }
    }
    std::swap(cur, next);
    engine.rows_to_update(changed, need);
  }
  return when;
}

}  // namespace fmca
