#ifndef DRG_TRIDIAGONAL_EIGEN_HPP
#define DRG_TRIDIAGONAL_EIGEN_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace drg {

// Eigenvalues of a real symmetric tridiagonal matrix by implicit QL with
// Wilkinson-type shifts. `diag` has n entries, `off` has n-1 entries where
// off[i] couples rows i and i+1. Returned in non-increasing order.
inline std::vector<double> symmetric_tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off)
{
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (static_cast<int>(off.size()) != n - 1) throw std::invalid_argument("off-diagonal must have n-1 entries");
  std::vector<double>& d = diag;
  std::vector<double> e = std::move(off);
  e.push_back(0.0);

  constexpr int max_sweeps = 64;
  const double tiny = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double scale = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= tiny * scale) break;
      }
      if (m == l) break;
      if (++sweeps > max_sweeps) throw std::runtime_error("tridiagonal QL failed to converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace drg

#endif  // DRG_TRIDIAGONAL_EIGEN_HPP
