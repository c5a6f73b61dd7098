#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "drg/drg.hpp"

using namespace drg;
using Catch::Matchers::WithinAbs;

namespace {

void check_spectrum(const Spectrum& s, const std::vector<std::pair<double, std::int64_t>>& want)
{
  REQUIRE(s.eigenvalues.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK_THAT(s.eigenvalues[i].value, WithinAbs(want[i].first, 1e-9));
    CHECK(s.eigenvalues[i].multiplicity == want[i].second);
  }
}

}  // namespace

TEST_CASE("intersection matrix layout", "[spectrum]")
{
  const auto t = intersection_matrix(IntersectionArray({3, 2}, {1, 1}));
  const std::vector<std::vector<std::int64_t>> want{{0, 3, 0}, {1, 0, 2}, {0, 1, 2}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(t(r, c) == want[r][c]);
  for (int r = 0; r < 3; ++r) CHECK(t.row_sum(r) == 3);

  const auto j = intersection_matrix(johnson_array(5, 2));
  const std::vector<std::vector<std::int64_t>> wj{{0, 6, 0}, {1, 3, 2}, {0, 4, 2}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(j(r, c) == wj[r][c]);

  const auto cube = intersection_matrix(hamming_array(3, 2));
  for (int i = 0; i < 4; ++i) CHECK(cube(i, i) == 0);
}

TEST_CASE("closed-form spectra", "[spectrum]")
{
  check_spectrum(eigen_spectrum(johnson_array(5, 2)), {{6, 1}, {1, 4}, {-2, 5}});
  check_spectrum(eigen_spectrum(hamming_array(2, 3)), {{4, 1}, {1, 4}, {-2, 4}});
  const auto pet = eigen_spectrum(IntersectionArray({3, 2}, {1, 1}));
  check_spectrum(pet, {{3, 1}, {1, 5}, {-2, 4}});
  CHECK_THAT(pet.xi, WithinAbs(2.0, 1e-12));

  SECTION("Johnson family against theta_j = (d-j)(m-d-j) - j")
  {
    for (int m = 7; m <= 12; ++m)
      for (int d = 2; 2 * d + 1 <= m && d <= 4; ++d) {
        const auto s = eigen_spectrum(johnson_array(m, d));
        for (int j = 0; j <= d; ++j)
          CHECK_THAT(s.eigenvalues[j].value, WithinAbs(double((d - j) * (m - d - j) - j), 1e-8));
      }
  }
  SECTION("Hamming family against theta_j = d(q-1) - jq")
  {
    for (int d = 2; d <= 5; ++d)
      for (int q = 2; q <= 5; ++q) {
        const auto s = eigen_spectrum(hamming_array(d, q));
        for (int j = 0; j <= d; ++j) CHECK_THAT(s.eigenvalues[j].value, WithinAbs(double(d * (q - 1) - j * q), 1e-8));
        CHECK(s.total_multiplicity() == static_cast<std::int64_t>(std::pow(q, d)));
      }
  }
}

TEST_CASE("tridiagonal eigenvalues match the adjacency spectrum", "[spectrum][oracle]")
{
  for (const auto& e : catalog()) {
    if (!e.has_graph()) continue;
    CAPTURE(e.id);
    const auto alg = eigen_spectrum(e.array);
    const auto emp = adjacency_spectrum(e.build());
    CHECK(same_spectrum(alg.eigenvalues, emp));
  }
}

TEST_CASE("symmetric tridiagonal solver against Eigen", "[spectrum]")
{
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 3), pos(0.1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<double> diag(n), off(n - 1);
    for (auto& x : diag) x = u(rng);
    for (auto& x : off) x = pos(rng);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    auto ours = symmetric_tridiagonal_eigenvalues(diag, off);
    for (int i = 0; i < n; ++i) CHECK_THAT(ours[i], WithinAbs(es.eigenvalues()[n - 1 - i], 1e-9));
  }
}

TEST_CASE("multiplicity errors", "[spectrum]")
{
  CHECK_THROWS_AS(eigen_spectrum(IntersectionArray({4, 3}, {1, 2})), Error);
}

TEST_CASE("Ostrowski bound", "[spectrum]")
{
  const Eigen::MatrixXd a = intersection_matrix(IntersectionArray({3, 2}, {1, 1})).dense();
  CHECK(ostrowski_bound(a, a) == 0.0);
  Eigen::MatrixXd b = a;
  b(1, 2) = 0;  // b_1 zeroed
  CHECK_THAT(ostrowski_bound(a, b), WithinAbs(2.0 * 16 * 3 * std::cbrt(2.0 / 9.0), 1e-9));
  CHECK(eigenvalue_matching_distance(a, b) <= ostrowski_bound(a, b));
  CHECK_THROWS_AS(ostrowski_bound(a, Eigen::MatrixXd::Zero(2, 2)), Error);

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-5, 5), size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    Eigen::MatrixXd x(n, n), y(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        x(i, j) = entry(rng);
        y(i, j) = entry(rng);
      }
    CHECK(eigenvalue_matching_distance(x, y) <= ostrowski_bound(x, y) + 1e-9);
  }
}

TEST_CASE("eigenvalue locality", "[spectrum]")
{
  const IntersectionArray pet({3, 2}, {1, 1});
  const auto r = eigenvalue_locality_check(pet, 2, 1.0 / 3.0);
  CHECK_THAT(r.deviation, WithinAbs(4.0, 1e-9));
  CHECK_THAT(r.radius, WithinAbs(2.0 * 16 * std::cbrt(1.0 / 3.0) * 3, 1e-9));
  CHECK(r.holds);

  const auto c = eigenvalue_locality_check(hamming_array(3, 2), 3, 1.0);
  CHECK(c.holds);
  CHECK(c.radius >= 2 * 3);

  CHECK_THROWS_AS(eigenvalue_locality_check(pet, 1, 0.1), Error);
}
