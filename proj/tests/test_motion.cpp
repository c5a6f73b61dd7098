#include <catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <cmath>

#include "drg/drg.hpp"

using namespace drg;
using Catch::Matchers::WithinAbs;

TEST_CASE("distinguishing numbers", "[motion]")
{
  const auto pet = derive_parameters(IntersectionArray({3, 2}, {1, 1}));
  const auto dn = distinguishing_numbers(pet);
  CHECK(dn.dvals == std::vector<Integer>{6, 6});
  CHECK(dn.dmin == 6);
  CHECK(motion_from_distinguishing(dn.dmin) == 6);
  CHECK(distinguishing_transfer(dn.dvals, 2));

  const auto j52 = derive_parameters(johnson_array(5, 2));
  CHECK(distinguishing_transfer(distinguishing_numbers(j52).dvals, 2));

  SECTION("agree with exhaustive counts")
  {
    for (const auto& e : catalog()) {
      if (!e.has_graph()) continue;
      CAPTURE(e.id);
      CHECK(distinguishing_exact(e.build()) == distinguishing_numbers(derive_parameters(e.array)).dvals);
    }
  }
}

TEST_CASE("spectral and primitive bounds", "[motion]")
{
  const IntersectionArray pet_arr({3, 2}, {1, 1});
  const auto pet = derive_parameters(pet_arr);
  CHECK_THAT(spectral_motion_bound(pet, eigen_spectrum(pet_arr)).value, WithinAbs(0.0, 1e-9));
  CHECK(!spectral_motion_bound(pet, eigen_spectrum(pet_arr)).informative());

  const auto h = derive_parameters(hamming_array(3, 3));
  const auto r = primitive_distinguish_bound(h, Rational(1, 3), 1);
  CHECK(r.bound == 3);
  CHECK(r.within_dmin);

  const auto p = primitive_distinguish_bound(pet, Rational(1, 3), 1);
  CHECK(p.bound == Rational(10, 6));
  CHECK(p.dmin == 6);

  try {
    primitive_distinguish_bound(pet, Rational(1), 1);
    FAIL("expected PremiseViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PremiseViolated);
  }
}

TEST_CASE("structural inequalities", "[motion]")
{
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    for (const auto& l : structural_inequalities(derive_parameters(e.array))) {
      CAPTURE(l.name);
      if (l.applicable) CHECK(l.holds);
    }
  }
  const auto pet = elementary_bounds(derive_parameters(IntersectionArray({3, 2}, {1, 1})), false);
  CHECK(pet.k_minus_mu == 2);
  CHECK(pet.two_k_minus_q == 4);
}

TEST_CASE("Metsch lines and geometricity", "[motion]")
{
  const auto m = metsch_lines(28, 28, 4, 3, 81);
  CHECK(m.condition3);
  CHECK(m.condition4);
  CHECK(m.applies);
  CHECK(m.line_size_threshold == 24);

  CHECK(!metsch_lines(0, 0, 4, 3, 81).applies);
  // 2k = cap exactly: strict inequality fails.
  CHECK(!metsch_lines(28, 28, 4, 3, 98).condition4);
  CHECK(metsch_lines(28, 28, 4, 3, 97).condition4);

  CHECK(geometricity_check(derive_parameters(johnson_array(30, 3))) == std::optional<std::int64_t>(3));
  CHECK(!geometricity_check(derive_parameters(johnson_array(8, 3))));
  CHECK(!geometricity_check(derive_parameters(IntersectionArray({3, 2}, {1, 1}))));
}

TEST_CASE("Delsarte clique bound", "[motion]")
{
  const IntersectionArray pet({3, 2}, {1, 1});
  CHECK_THAT(delsarte_clique_bound(eigen_spectrum(pet), 3), WithinAbs(2.5, 1e-9));
  CHECK_THAT(delsarte_clique_bound(eigen_spectrum(johnson_array(5, 2)), 6), WithinAbs(4.0, 1e-9));
  CHECK_THAT(delsarte_clique_bound(eigen_spectrum(hamming_array(3, 2)), 3), WithinAbs(2.0, 1e-9));

  // Clique number of the concrete J(5,2) is 4.
  const auto g = johnson_graph(5, 2);
  int best = 0;
  for (int mask = 1; mask < (1 << 10); ++mask) {
    bool clique = true;
    for (int u = 0; u < 10 && clique; ++u)
      for (int v = u + 1; v < 10 && clique; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) clique = false;
    if (clique) best = std::max(best, std::popcount(static_cast<unsigned>(mask)));
  }
  CHECK(best == 4);
}

TEST_CASE("m_d", "[motion]")
{
  CHECK(m_d(2) == 20);
  CHECK(m_d(3) == 85);
  CHECK(m_d(4) == 320);
  CHECK(m_d(8) == 5 * 4096);
  // not a power of two: floating path
  CHECK(m_d(5) == Integer(static_cast<std::int64_t>(std::floor(5 * std::pow(5.0, std::log2(5.0) + 1)))));
}

TEST_CASE("primitive classifier", "[motion]")
{
  const auto j30 = classify_primitive(johnson_array(30, 3));
  CHECK(j30.verdict.geometric());
  CHECK(j30.verdict.m == 3);
  CHECK_THAT(j30.theta_min, WithinAbs(-3.0, 1e-6));
  CHECK(j30.theta_min_consistent);
  CHECK(j30.md == 85);

  const auto h = classify_primitive(hamming_array(3, 3));
  CHECK(!h.verdict.geometric());
  CHECK(h.verdict.gamma > 0);
  CHECK(h.tree_branch == 'a');

  CHECK_THROWS_AS(classify_primitive(IntersectionArray({3, 2}, {1, 1})), Error);
}

TEST_CASE("motion bounds never exceed exact motion", "[motion][oracle]")
{
  for (const auto& e : catalog()) {
    if (!e.has_graph()) continue;
    CAPTURE(e.id);
    const auto motion = exact_motion(e.build());
    REQUIRE(motion);
    for (const auto& b : motion_lower_bounds(e)) {
      CAPTURE(b.name);
      CHECK(b.value <= double(*motion) + 1e-9);
    }
  }
}
