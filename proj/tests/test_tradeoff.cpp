#include <catch_amalgamated.hpp>

#include <cmath>

#include "drg/drg.hpp"

using namespace drg;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("growth-induced tradeoff spot values", "[tradeoff]")
{
  const auto h = tradeoff_check(hamming_array(3, 3), 0, 1);
  CHECK(h.lhs == Rational(10, 6));
  CHECK(h.rhs == Rational(1, 5));
  CHECK(h.holds);

  const auto j = tradeoff_check(johnson_array(8, 3), 0, 1);
  CHECK(j.lhs == Rational(4, 3));
  CHECK(j.rhs == Rational(5, 7));
  CHECK(j.holds);

  // C <= 5 makes the right side non-positive.
  const auto p = tradeoff_check(IntersectionArray({3, 2}, {1, 1}), 0, 1);
  CHECK(p.C == 3);
  CHECK(p.rhs <= 0);
  CHECK(p.holds);
}

TEST_CASE("tradeoff preconditions", "[tradeoff]")
{
  const auto arr = hamming_array(3, 3);
  CHECK_THROWS_AS(tradeoff_check(arr, 2, 1), Error);
  CHECK_THROWS_AS(tradeoff_check(arr, 0, 2), Error);
  try {
    tradeoff_check(IntersectionArray({2, 1, 1, 1}, {1, 1, 1, 2}), 1, 1);
    FAIL("expected PremiseViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PremiseViolated);
  }
}

TEST_CASE("tradeoff holds with its intermediate estimates on the catalog", "[tradeoff]")
{
  std::size_t checks = 0;
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    for (const auto& r : tradeoff_sweep(e.array)) {
      CAPTURE(r.j, r.s);
      CHECK(r.holds);
      CHECK(r.diag.lambda_bounds_hold);
      CHECK(r.diag.mu_bound_holds);
      ++checks;
    }
  }
  CHECK(checks > 10);
}

TEST_CASE("tradeoff counts match the concrete graph", "[tradeoff][oracle]")
{
  // lambda_s in Y = distance <= j+1 graph, counted directly on H(3,3).
  const auto g = hamming_graph(3, 3);
  const auto& dist = g.distances();
  const auto r = tradeoff_check(hamming_array(3, 3), 1, 1);
  int u = 0, v = -1;
  for (int w = 0; w < g.order(); ++w)
    if (dist[u][w] == 1) v = w;
  Integer common = 0;
  for (int w = 0; w < g.order(); ++w) {
    const int a = dist[u][w], b = dist[v][w];
    common += (a >= 1 && a <= 2 && b >= 1 && b <= 2);
  }
  CHECK(Rational(common) == r.diag.lambda_s);
}

TEST_CASE("FE and BE sequences", "[sequences]")
{
  const Rational delta(1, 9);
  const auto alpha = fe_sequence(delta, 5);
  CHECK(alpha[0] == 1);
  CHECK(alpha[1] == Rational(4, 9));
  CHECK(alpha[2] == Rational(32, 153));
  CHECK(alpha[2] == (1 - delta) * (1 - delta) / (2 * (2 - delta)));
  for (int j = 1; j <= 5; ++j) CHECK(alpha[j] < alpha[j - 1]);

  const auto beta = be_sequence(delta, alpha);
  CHECK(beta.first == 2);
  CHECK(beta[2] == 1 - delta);
  CHECK(beta[3] == (1 - delta) / (1 + Rational(9, 4)));

  SECTION("closed-form lower bounds")
  {
    const auto a = fe_sequence(delta, 21);
    const auto b = be_sequence(delta, a);
    for (int j = 1; j <= 20; ++j) {
      const auto cf = closed_form_bounds(delta, j, 3);
      CHECK(to_double(a[j]) >= cf.alpha_lb);
      CHECK(to_double(b[j + 2]) >= cf.beta_lb);
    }
    CHECK_THAT(closed_form_bounds(delta, 2, 3).alpha_lb, WithinRel(64.0 / 81.0 / 4.0, 1e-12));
    CHECK_THAT(closed_form_bounds(delta, 1, 3).alpha_lb, WithinRel(32.0 / 81.0, 1e-12));
    CHECK_THROWS_AS(closed_form_bounds(Rational(1, 2), 1, 3), Error);
  }
}

TEST_CASE("compatibility and eps_delta", "[sequences]")
{
  const Rational delta(1, 9);
  const auto alpha = fe_sequence(delta, 3);
  CHECK(!is_compatible(Rational(1), delta, 3));
  CHECK(is_compatible(Rational(1, 1000000) * Rational(1, 1000000000) * Rational(1, 1000000000), delta, 3));

  const Rational cf = exact_rational(detail::eps_closed_form(delta, 3));
  CHECK(is_compatible(cf, delta, 3));

  const Rational star = eps_delta(3, delta);
  CHECK(is_compatible(star, delta, 3));
  CHECK(is_compatible(star / 2, delta, 3));
  CHECK(!is_compatible(star * Rational(1000001, 1000000), delta, 3));
  CHECK(star >= cf);
  CHECK(star < 1);

  for (int d = 3; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(detail::to_real(eps_delta(d, delta)) >= detail::eps_closed_form(delta, d));
  }

  SECTION("compatibility is inherited by smaller j")
  {
    const auto a = fe_sequence(delta, 6);
    const Rational e = eps_delta(6, delta);
    for (int j = 4; j >= 1; --j)
      if (is_compatible(e, delta, j, a, 6)) CHECK(is_compatible(e, delta, j - 1, a, 6));
  }
}

TEST_CASE("three-case analysis", "[sequences]")
{
  const Rational delta(1, 9);
  const auto alpha = fe_sequence(delta, 2);

  SECTION("BothLarge: J(m,2) with k = 2e8")
  {
    const auto arr = johnson_array(100'000'002, 2);
    const auto r = case_analysis(arr, delta, 0, alpha, Rational(1, 100'000'000));
    CHECK(r.which == ThreeCase::BothLarge);
    CHECK(r.beta_next == 1 - delta);
  }
  SECTION("SpectralGapCase: K_{m x 2} with k = 2e8")
  {
    const auto arr = cocktail_party_array(100'000'001);
    const auto r = case_analysis(arr, delta, 0, alpha, Rational(1, 100'000'000));
    CHECK(r.which == ThreeCase::SpectralGapCase);
    CHECK_THAT(r.xi, WithinAbs(2.0, 1e-6));
    CHECK(r.xi <= r.xi_cap);
  }
  SECTION("ForwardCase: H(2,m) with k = 1e8")
  {
    const auto arr = hamming_array(2, 50'000'001);
    const auto r = case_analysis(arr, delta, 0, alpha, Rational(1, 40'000'000));
    CHECK(r.which == ThreeCase::ForwardCase);
    CHECK(r.alpha_next == Rational(4, 9));
  }
  SECTION("premises")
  {
    CHECK_THROWS_AS(case_analysis(hamming_array(3, 3), delta, 0, alpha, Rational(1)), Error);
    CHECK_THROWS_AS(case_analysis(hamming_array(3, 3), delta, 5, alpha, Rational(1, 1000)), Error);
  }
}

TEST_CASE("spectral-gap dichotomy and expansion", "[dichotomy]")
{
  const auto c3 = default_constants(3);
  CHECK_THAT(c3.eta.convert_to<double>(), WithinAbs(0.01461, 1e-4));
  for (int d = 3; d <= 8; ++d) {
    const auto r = check_default_constants(d);
    CAPTURE(d);
    CHECK(r.eps_compatible);
    CHECK(r.eta_dominated);
  }

  const auto h = spectral_gap_dichotomy(hamming_array(3, 3));
  CHECK(h.expanding());
  CHECK(h.index == 1);

  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    CHECK_NOTHROW(spectral_gap_dichotomy(e.array));
    CHECK_NOTHROW(expansion_check(e.array));
  }

  const auto pet = expansion_check(IntersectionArray({3, 2}, {1, 1}));
  CHECK(!pet.premise_met);
  CHECK_THAT(pet.dominant_fraction, WithinAbs(0.6, 1e-12));
  CHECK(!expansion_check(hamming_array(3, 2)).premise_met);
}
