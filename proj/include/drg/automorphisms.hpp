#ifndef DRG_AUTOMORPHISMS_HPP
#define DRG_AUTOMORPHISMS_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "numeric.hpp"

namespace drg {

inline constexpr int kDefaultMaxN = 64;
inline constexpr std::int64_t kEnumerationLimit = 10'000'000;

/// Backtracking search over distance-preserving bijections. Each vertex keeps
/// a bitset of admissible images; fixing x -> y intersects every other set
/// with the vertices at the matching distance from y.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const ConcreteGraph& g) : n_(g.order()), words_((n_ + 63) / 64), dist_(g.distances())
  {
    diam_ = g.diameter();
    ring_.assign(static_cast<std::size_t>(n_) * (diam_ + 1) * words_, 0);
    for (int y = 0; y < n_; ++y)
      for (int v = 0; v < n_; ++v) set_bit(ring(y, dist_[y][v]), v);
  }

  using Visitor = std::function<bool(const std::vector<int>&)>;

  /// Calls `visit` on every automorphism extending `fixed` until it returns false.
  void search(const std::vector<std::pair<int, int>>& fixed, const Visitor& visit) const
  {
    State s = initial();
    for (auto [x, y] : fixed)
      if (!assign(s, x, y)) return;
    dfs(s, visit);
  }

  bool exists(const std::vector<std::pair<int, int>>& fixed) const
  {
    bool found = false;
    search(fixed, [&](const std::vector<int>&) {
      found = true;
      return false;
    });
    return found;
  }

  /// True when fixing `fixed` pointwise forces the identity.
  bool stabiliser_trivial(const std::vector<std::pair<int, int>>& fixed) const
  {
    State s = initial();
    for (auto [x, y] : fixed)
      if (!assign(s, x, y)) return true;
    for (int x = 0; x < n_; ++x)
      if (s.image[x] < 0 && popcount(cand(s, x)) != 1) return false;
    return true;
  }

  int order() const { return n_; }

 private:
  struct State {
    std::vector<std::uint64_t> cand;  // n * words
    std::vector<int> image;
    int assigned = 0;
  };

  std::uint64_t* ring(int y, int dd) { return &ring_[(static_cast<std::size_t>(y) * (diam_ + 1) + dd) * words_]; }
  const std::uint64_t* ring(int y, int dd) const
  {
    return &ring_[(static_cast<std::size_t>(y) * (diam_ + 1) + dd) * words_];
  }
  static void set_bit(std::uint64_t* w, int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  static void clear_bit(std::uint64_t* w, int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::uint64_t* cand(State& s, int x) const { return &s.cand[static_cast<std::size_t>(x) * words_]; }
  const std::uint64_t* cand(const State& s, int x) const { return &s.cand[static_cast<std::size_t>(x) * words_]; }

  int popcount(const std::uint64_t* w) const
  {
    int c = 0;
    for (int i = 0; i < words_; ++i) c += std::popcount(w[i]);
    return c;
  }

  State initial() const
  {
    State s;
    s.cand.assign(static_cast<std::size_t>(n_) * words_, 0);
    s.image.assign(static_cast<std::size_t>(n_), -1);
    for (int x = 0; x < n_; ++x)
      for (int v = 0; v < n_; ++v) set_bit(cand(s, x), v);
    return s;
  }

  bool assign(State& s, int x, int y) const
  {
    if (s.image[x] >= 0) return s.image[x] == y;
    const std::uint64_t* cx = cand(s, x);
    if (!((cx[y >> 6] >> (y & 63)) & 1)) return false;
    s.image[x] = y;
    ++s.assigned;
    for (int z = 0; z < n_; ++z) {
      if (s.image[z] >= 0) continue;
      std::uint64_t* cz = cand(s, z);
      const std::uint64_t* r = ring(y, dist_[x][z]);
      std::uint64_t any = 0;
      for (int i = 0; i < words_; ++i) any |= (cz[i] &= r[i]);
      if (!any) return false;
    }
    return true;
  }

  bool dfs(State& s, const Visitor& visit) const
  {
    if (s.assigned == n_) return visit(s.image);
    int best = -1, best_count = n_ + 1;
    for (int x = 0; x < n_; ++x) {
      if (s.image[x] >= 0) continue;
      const int c = popcount(cand(s, x));
      if (c < best_count) {
        best = x;
        best_count = c;
        if (c <= 1) break;
      }
    }
    const std::uint64_t* cb = cand(s, best);
    std::vector<int> options;
    for (int i = 0; i < words_; ++i)
      for (std::uint64_t w = cb[i]; w; w &= w - 1) options.push_back(i * 64 + std::countr_zero(w));
    for (int y : options) {
      State next = s;
      if (assign(next, best, y) && !dfs(next, visit)) return false;
    }
    return true;
  }

  int n_;
  int words_;
  int diam_ = 0;
  const std::vector<std::vector<int>>& dist_;
  std::vector<std::uint64_t> ring_;
};

struct AutomorphismSummary {
  Integer order;
  std::vector<std::int64_t> orbit_lengths;       // along the base
  std::vector<std::vector<int>> generators;      // coset representatives of the stabiliser chain
  std::map<std::int64_t, std::int64_t> degree_histogram;  // support size -> element count, when enumerated
  std::optional<std::int64_t> motion;            // none for the trivial group
  bool motion_exact = false;                     // false: minimum over generators only (an upper bound)
};

namespace detail {

inline std::int64_t support_size(const std::vector<int>& perm)
{
  std::int64_t moved = 0;
  for (std::size_t x = 0; x < perm.size(); ++x) moved += perm[x] != static_cast<int>(x);
  return moved;
}

}  // namespace detail

/// Group order from a stabiliser chain; exact motion by enumeration when the
/// order is at most `enumeration_limit`.
inline AutomorphismSummary automorphism_summary(const ConcreteGraph& g, int max_n = kDefaultMaxN,
                                                std::int64_t enumeration_limit = kEnumerationLimit)
{
  if (g.order() > max_n)
    fail(ErrorCode::SizeLimitExceeded,
         std::to_string(g.order()) + " vertices exceeds the automorphism limit " + std::to_string(max_n));
  AutomorphismSearch search(g);
  const int n = g.order();
  AutomorphismSummary out;
  out.order = 1;
  std::vector<std::pair<int, int>> prefix;
  for (int v = 0; v < n && !search.stabiliser_trivial(prefix); ++v) {
    std::int64_t orbit = 0;
    for (int w = 0; w < n; ++w) {
      auto trial = prefix;
      trial.emplace_back(v, w);
      search.search(trial, [&](const std::vector<int>& img) {
        ++orbit;
        if (w != v) out.generators.push_back(img);
        return false;
      });
    }
    out.orbit_lengths.push_back(orbit);
    out.order *= orbit;
    prefix.emplace_back(v, v);
  }
  auto note = [&](std::int64_t moved) {
    if (moved > 0 && (!out.motion || moved < *out.motion)) out.motion = moved;
  };
  if (out.order <= enumeration_limit) {
    out.motion_exact = true;
    search.search({}, [&](const std::vector<int>& img) {
      const std::int64_t moved = detail::support_size(img);
      ++out.degree_histogram[moved];
      note(moved);
      return true;
    });
  } else {
    for (const auto& gen : out.generators) note(detail::support_size(gen));
  }
  return out;
}

/// Exact motion; SizeLimitExceeded when the group is too large to enumerate.
inline std::optional<std::int64_t> exact_motion(const ConcreteGraph& g, int max_n = kDefaultMaxN)
{
  auto s = automorphism_summary(g, max_n);
  if (!s.motion_exact)
    fail(ErrorCode::SizeLimitExceeded, "automorphism group of order " + s.order.str() + " is too large to enumerate");
  return s.motion;
}

}  // namespace drg

#endif  // DRG_AUTOMORPHISMS_HPP
