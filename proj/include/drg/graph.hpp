#ifndef DRG_GRAPH_HPP
#define DRG_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "intersection_array.hpp"
#include "numeric.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"

namespace drg {

inline constexpr int kMaxGraphVertices = 20000;
inline constexpr int kMaxSpectrumVertices = 512;

/// Simple undirected graph on 0..n-1 with cached all-pairs distances.
class ConcreteGraph {
 public:
  ConcreteGraph() = default;

  explicit ConcreteGraph(int n) : adj_(static_cast<std::size_t>(n))
  {
    if (n < 1) fail(ErrorCode::DomainError, "a graph needs at least one vertex");
    if (n > kMaxGraphVertices)
      fail(ErrorCode::SizeLimitExceeded, std::to_string(n) + " vertices exceeds " + std::to_string(kMaxGraphVertices));
  }

  void add_edge(int u, int v)
  {
    if (u == v) fail(ErrorCode::ParseError, "loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order() || v >= order())
      fail(ErrorCode::ParseError, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    if (adjacent(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    dist_.clear();
  }

  int order() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end(); }

  std::int64_t edge_count() const
  {
    std::int64_t m = 0;
    for (const auto& a : adj_) m += static_cast<std::int64_t>(a.size());
    return m / 2;
  }

  /// All-pairs BFS distances; Disconnected if some pair is unreachable.
  const std::vector<std::vector<int>>& distances() const
  {
    if (!dist_.empty()) return dist_;
    const int n = order();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
      auto& row = dist[s];
      std::queue<int> q;
      row[s] = 0;
      q.push(s);
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : adj_[u])
          if (row[w] < 0) {
            row[w] = row[u] + 1;
            q.push(w);
          }
      }
      for (int v = 0; v < n; ++v)
        if (row[v] < 0)
          fail(ErrorCode::Disconnected, "no path between " + std::to_string(s) + " and " + std::to_string(v));
    }
    dist_ = std::move(dist);
    return dist_;
  }

  int dist(int u, int v) const { return distances()[u][v]; }

  int diameter() const
  {
    int d = 0;
    for (const auto& row : distances()) d = std::max(d, *std::max_element(row.begin(), row.end()));
    return d;
  }

  Eigen::MatrixXd adjacency_matrix() const
  {
    const int n = order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
      for (int v : adj_[u]) a(u, v) = 1.0;
    return a;
  }

 private:
  std::vector<std::vector<int>> adj_;
  mutable std::vector<std::vector<int>> dist_;
};

// ---------------------------------------------------------------------------
// Builders

namespace detail {

inline std::int64_t binomial(int m, int k)
{
  if (k < 0 || k > m) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

inline void check_size(std::int64_t n)
{
  if (n > kMaxGraphVertices)
    fail(ErrorCode::SizeLimitExceeded, std::to_string(n) + " vertices exceeds " + std::to_string(kMaxGraphVertices));
}

}  // namespace detail

/// J(m, d): d-subsets of an m-set, adjacent when they share d-1 elements.
inline ConcreteGraph johnson_graph(int m, int d)
{
  if (d < 1 || m < 2 * d || m > 62) fail(ErrorCode::DomainError, "johnson_graph needs 1 <= d, 2d <= m <= 62");
  detail::check_size(detail::binomial(m, d));
  std::vector<std::uint64_t> sets{(std::uint64_t{1} << d) - 1};
  while (true) {
    const std::uint64_t s = sets.back();
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    const std::uint64_t next = (((r ^ s) >> 2) / c) | r;
    if (next >= (std::uint64_t{1} << m) || next == 0) break;
    sets.push_back(next);
  }
  ConcreteGraph g(static_cast<int>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (std::popcount(sets[i] & sets[j]) == d - 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

/// H(d, q): words of length d over q symbols, adjacent at Hamming distance 1.
inline ConcreteGraph hamming_graph(int d, int q)
{
  if (d < 1 || q < 2) fail(ErrorCode::DomainError, "hamming_graph needs d >= 1 and q >= 2");
  std::int64_t n = 1;
  for (int i = 0; i < d; ++i) {
    n *= q;
    detail::check_size(n);
  }
  ConcreteGraph g(static_cast<int>(n));
  for (std::int64_t v = 0; v < n; ++v) {
    std::int64_t place = 1;
    for (int i = 0; i < d; ++i, place *= q) {
      const std::int64_t digit = (v / place) % q;
      for (std::int64_t x = digit + 1; x < q; ++x) g.add_edge(static_cast<int>(v), static_cast<int>(v + (x - digit) * place));
    }
  }
  return g;
}

/// K_{m x 2}: 2m vertices, all adjacent except the pairs {2i, 2i+1}.
inline ConcreteGraph cocktail_party_graph(int m)
{
  if (m < 2) fail(ErrorCode::DomainError, "cocktail_party_graph needs m >= 2");
  ConcreteGraph g(2 * m);
  for (int u = 0; u < 2 * m; ++u)
    for (int v = u + 1; v < 2 * m; ++v)
      if ((u ^ 1) != v) g.add_edge(u, v);
  return g;
}

/// K_{m,m} minus a perfect matching: i ~ m+j iff i != j.
inline ConcreteGraph crown_graph(int m)
{
  if (m < 2) fail(ErrorCode::DomainError, "crown_graph needs m >= 2");
  ConcreteGraph g(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) g.add_edge(i, m + j);
  return g;
}

inline ConcreteGraph cycle_graph(int n)
{
  if (n < 3) fail(ErrorCode::DomainError, "cycle_graph needs n >= 3");
  ConcreteGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline ConcreteGraph complete_graph(int n)
{
  ConcreteGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Kneser graph K(5, 2).
inline ConcreteGraph petersen_graph()
{
  std::vector<int> pairs;
  for (int s = 0; s < 32; ++s)
    if (std::popcount(static_cast<unsigned>(s)) == 2) pairs.push_back(s);
  ConcreteGraph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if ((pairs[i] & pairs[j]) == 0) g.add_edge(i, j);
  return g;
}

/// Point-line incidence graph of the Fano plane; lines are {i, i+1, i+3} mod 7.
inline ConcreteGraph heawood_graph()
{
  ConcreteGraph g(14);
  for (int l = 0; l < 7; ++l)
    for (int off : {0, 1, 3}) g.add_edge((l + off) % 7, 7 + l);
  return g;
}

inline ConcreteGraph cube_graph() { return hamming_graph(3, 2); }

inline ConcreteGraph icosahedron_graph()
{
  // Two poles 0 and 11, upper ring 1..5, lower ring 6..10.
  ConcreteGraph g(12);
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i, up_next = 1 + (i + 1) % 5;
    const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    g.add_edge(0, up);
    g.add_edge(11, lo);
    g.add_edge(up, up_next);
    g.add_edge(lo, lo_next);
    g.add_edge(up, lo);
    g.add_edge(up, lo_next);
  }
  return g;
}

/// Whitespace-separated "u v" lines, 0-based; '#' starts a comment.
inline ConcreteGraph parse_edge_list(std::istream& in)
{
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0 || u >= kMaxGraphVertices || v >= kMaxGraphVertices)
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected two vertex ids");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    n = std::max<int>(n, static_cast<int>(std::max(u, v)) + 1);
  }
  if (edges.empty()) fail(ErrorCode::ParseError, "edge list is empty");
  ConcreteGraph g(n);
  for (auto [u, v] : edges) {
    if (u != v && g.adjacent(u, v))
      fail(ErrorCode::ParseError, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  g.distances();
  return g;
}

inline ConcreteGraph read_edge_list(const std::string& path)
{
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return parse_edge_list(in);
}

// ---------------------------------------------------------------------------
// Distance-regularity

struct DrgCheck {
  std::optional<RawArray> array;  // set when distance-regular
  std::string witness;            // first failure otherwise

  bool distance_regular() const { return array.has_value(); }
};

/// Reads b_i, c_i off every (u, v) pair and compares with the values at
/// vertex 0. Diameter-1 graphs are reported as complete.
inline DrgCheck check_distance_regular(const ConcreteGraph& g)
{
  DrgCheck out;
  const auto& dist = g.distances();
  const int n = g.order();
  const int d = g.diameter();
  if (d < 1) {
    out.witness = "single vertex";
    return out;
  }
  std::vector<std::int64_t> b(static_cast<std::size_t>(d + 1), -1), c(static_cast<std::size_t>(d + 1), -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int i = dist[u][v];
      std::int64_t bi = 0, ci = 0;
      for (int w : g.neighbours(v)) {
        if (dist[u][w] == i + 1) ++bi;
        if (dist[u][w] == i - 1) ++ci;
      }
      if (b[i] < 0) {
        b[i] = bi;
        c[i] = ci;
      } else if (b[i] != bi || c[i] != ci) {
        std::ostringstream w;
        w << "vertices " << u << ", " << v << " at distance " << i << " have (b, c) = (" << bi << ", " << ci
          << "), expected (" << b[i] << ", " << c[i] << ")";
        out.witness = w.str();
        return out;
      }
    }
  RawArray arr;
  for (int i = 0; i < d; ++i) arr.b.push_back(b[i]);
  for (int i = 1; i <= d; ++i) arr.c.push_back(c[i]);
  out.array = arr;
  return out;
}

inline IntersectionArray require_distance_regular(const ConcreteGraph& g)
{
  auto chk = check_distance_regular(g);
  if (!chk.distance_regular()) fail(ErrorCode::NotDistanceRegular, "graph is not distance-regular: " + chk.witness);
  return IntersectionArray(*chk.array);
}

/// p^s_{i,j} counted on the graph; NotDistanceRegular if a count varies.
/// Every ordered pair is checked up to `full_check_n` vertices, beyond that
/// only pairs starting at vertex 0.
inline IntersectionTensor empirical_p(const ConcreteGraph& g, int full_check_n = 64)
{
  const auto& dist = g.distances();
  const int n = g.order();
  const int d = g.diameter();
  IntersectionTensor p(d);
  BasicTensor<int> seen(d);
  std::vector<int> count(static_cast<std::size_t>((d + 1) * (d + 1)));
  const int sources = n <= full_check_n ? n : 1;
  for (int u = 0; u < sources; ++u)
    for (int v = 0; v < n; ++v) {
      const int s = dist[u][v];
      std::fill(count.begin(), count.end(), 0);
      for (int w = 0; w < n; ++w) ++count[static_cast<std::size_t>(dist[u][w] * (d + 1) + dist[v][w])];
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          const int c = count[static_cast<std::size_t>(i * (d + 1) + j)];
          if (!seen(s, i, j)) {
            seen(s, i, j) = 1;
            p(s, i, j) = c;
          } else if (p(s, i, j) != c) {
            fail(ErrorCode::NotDistanceRegular, "p^" + std::to_string(s) + "_{" + std::to_string(i) + "," +
                                                    std::to_string(j) + "} varies");
          }
        }
    }
  return p;
}

/// D(i): least number of vertices w with dist(w, u) != dist(w, v) over pairs
/// at distance i, for i = 1..d.
inline std::vector<Integer> distinguishing_exact(const ConcreteGraph& g)
{
  const auto& dist = g.distances();
  const int n = g.order();
  const int d = g.diameter();
  std::vector<std::int64_t> best(static_cast<std::size_t>(d + 1), n + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::int64_t cnt = 0;
      for (int w = 0; w < n; ++w) cnt += dist[u][w] != dist[v][w];
      auto& slot = best[static_cast<std::size_t>(dist[u][v])];
      slot = std::min(slot, cnt);
    }
  return std::vector<Integer>(best.begin() + 1, best.end());
}

/// Distance-2 graph on the colour class of vertex 0.
inline ConcreteGraph halved_graph(const ConcreteGraph& g)
{
  const auto& dist = g.distances();
  for (int u = 0; u < g.order(); ++u)
    for (int w : g.neighbours(u))
      if ((dist[0][u] + dist[0][w]) % 2 == 0) fail(ErrorCode::NotBipartite, "graph has an odd cycle");
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (dist[0][v] % 2 == 0) keep.push_back(v);
  ConcreteGraph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (dist[keep[i]][keep[j]] == 2) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

/// Quotient by the relation "distance 0 or d"; NotAntipodal unless that
/// relation is an equivalence.
inline ConcreteGraph folded_graph(const ConcreteGraph& g)
{
  const auto& dist = g.distances();
  const int n = g.order();
  const int d = g.diameter();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int classes = 0;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    std::vector<int> members{u};
    for (int v = 0; v < n; ++v)
      if (dist[u][v] == d) members.push_back(v);
    for (int a : members)
      for (int b : members)
        if (a != b && dist[a][b] != d) fail(ErrorCode::NotAntipodal, "distance-d relation is not transitive");
    for (int v : members) {
      if (cls[v] >= 0) fail(ErrorCode::NotAntipodal, "antipodal classes overlap");
      cls[v] = classes;
    }
    ++classes;
  }
  ConcreteGraph f(classes);
  for (int u = 0; u < n; ++u)
    for (int w : g.neighbours(u))
      if (cls[u] != cls[w]) f.add_edge(cls[u], cls[w]);
  return f;
}

/// Dense eigen-decomposition with eigenvalues clustered at 1e-6, descending.
inline std::vector<Eigenvalue> adjacency_spectrum(const ConcreteGraph& g)
{
  if (g.order() > kMaxSpectrumVertices)
    fail(ErrorCode::SizeLimitExceeded, "adjacency spectrum limited to " + std::to_string(kMaxSpectrumVertices) + " vertices");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency_matrix(), Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + g.order());
  std::sort(ev.rbegin(), ev.rend());
  std::vector<Eigenvalue> out;
  for (double x : ev) {
    if (!out.empty() && std::abs(out.back().value - x) <= 1e-6) {
      ++out.back().multiplicity;
    } else {
      out.push_back({x, 1});
    }
  }
  return out;
}

}  // namespace drg

#endif  // DRG_GRAPH_HPP
