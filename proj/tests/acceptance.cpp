// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "drg/drg.hpp"

using namespace drg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what)
  {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool run(int number, const std::string& title, const std::function<void(Outcome&)>& body)
{
  Outcome o;
  try {
    body(o);
  } catch (const Error& e) {
    o.pass = false;
    o.detail << " [" << to_string(e.code()) << ": " << e.what() << "]";
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << " " << title << o.detail.str() << "\n";
  return o.pass;
}

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

bool spectrum_is(const Spectrum& s, const std::vector<std::pair<double, std::int64_t>>& want)
{
  if (s.eigenvalues.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (!near(s.eigenvalues[i].value, want[i].first, 1e-6) || s.eigenvalues[i].multiplicity != want[i].second)
      return false;
  return true;
}

RawArray concrete(const ConcreteGraph& g)
{
  const auto chk = check_distance_regular(g);
  return chk.distance_regular() ? *chk.array : RawArray{};
}

}  // namespace

int main()
{
  bool ok = true;

  ok &= run(1, "growth-induced tradeoff", [](Outcome& o) {
    const auto suite = verify_tradeoff();
    std::size_t bad = 0;
    for (const auto& l : suite) bad += !l.holds;
    o.require(!suite.empty() && bad == 0, std::to_string(bad) + " violations");
    const auto h = tradeoff_check(hamming_array(3, 3), 0, 1);
    o.require(h.lhs == Rational(10, 6) && h.rhs == Rational(1, 5), "H(3,3) spot values");
    o.detail << " (" << suite.size() << " exact checks, 0 violations required; H(3,3) lhs " << h.lhs.str() << " rhs "
             << h.rhs.str() << ")";
  });

  ok &= run(2, "oracle equivalence", [](Outcome& o) {
    int graphs = 0;
    for (const auto& e : catalog()) {
      if (!e.has_graph()) continue;
      const auto g = e.build();
      if (g.order() > 64) continue;
      ++graphs;
      o.require(empirical_p(g) == derive_parameters(e.array).p, e.id + " p-tensor");
      o.require(concrete(g) == e.array.raw(), e.id + " array");
    }
    o.detail << " (" << graphs << " graphs)";
  });

  ok &= run(3, "spectrum agreement", [](Outcome& o) {
    int graphs = 0;
    for (const auto& e : catalog()) {
      if (!e.has_graph()) continue;
      ++graphs;
      o.require(same_spectrum(eigen_spectrum(e.array).eigenvalues, adjacency_spectrum(e.build()), 1e-6), e.id);
    }
    o.require(spectrum_is(eigen_spectrum(johnson_array(5, 2)), {{6, 1}, {1, 4}, {-2, 5}}), "J(5,2) closed form");
    o.require(spectrum_is(eigen_spectrum(hamming_array(2, 3)), {{4, 1}, {1, 4}, {-2, 4}}), "H(2,3) closed form");
    o.detail << " (" << graphs << " graphs)";
  });

  ok &= run(4, "sequence domination", [](Outcome& o) {
    const Rational delta(1, 9);
    const auto alpha = fe_sequence(delta, 21);
    const auto beta = be_sequence(delta, alpha);
    for (int j = 1; j <= 20; ++j) {
      const auto cf = closed_form_bounds(delta, j, 3);
      o.require(to_double(alpha[j]) >= cf.alpha_lb, "FE at j=" + std::to_string(j));
      o.require(to_double(beta[j + 2]) >= cf.beta_lb, "BE at j=" + std::to_string(j));
    }
    o.require(alpha[1] == Rational(4, 9) && alpha[2] == Rational(32, 153), "alpha_1, alpha_2");
    for (int d = 3; d <= 8; ++d)
      o.require(detail::to_real(eps_delta(d, delta)) >= detail::eps_closed_form(delta, d),
                "eps_delta at d=" + std::to_string(d));
    o.detail << " (alpha_1 " << alpha[1].str() << ", alpha_2 " << alpha[2].str() << ", eps_delta(3) "
             << to_double(eps_delta(3, delta)) << ")";
  });

  ok &= run(5, "dichotomy soundness", [](Outcome& o) {
    const double eta3 = default_constants(3).eta.convert_to<double>();
    o.require(near(eta3, 0.01461, 1e-4), "eta(3)");
    int violations = 0;
    for (const auto& e : catalog()) {
      for (auto fn : {std::function<void()>([&] { spectral_gap_dichotomy(e.array); }),
                      std::function<void()>([&] { expansion_check(e.array); })}) {
        try {
          fn();
        } catch (const Error& err) {
          if (err.code() == ErrorCode::TheoremViolation) ++violations;
          o.require(false, e.id + " " + std::string(to_string(err.code())));
        }
      }
    }
    o.require(violations == 0, "TheoremViolation raised");
    o.detail << " (eta(3) = " << eta3 << ", " << violations << " violations)";
  });

  ok &= run(6, "motion-bound soundness", [](Outcome& o) {
    std::size_t bounds = 0;
    for (const auto& e : catalog()) {
      if (!e.has_graph()) continue;
      const auto g = e.build();
      if (g.order() > 64) continue;
      const auto motion = exact_motion(g);
      o.require(motion.has_value(), e.id + " trivial group");
      if (!motion) continue;
      for (const auto& b : motion_lower_bounds(e)) {
        ++bounds;
        o.require(b.value <= double(*motion) + 1e-9, e.id + " " + b.name);
      }
    }
    const auto pet = exact_motion(petersen_graph());
    const auto dmin = distinguishing_numbers(derive_parameters(IntersectionArray({3, 2}, {1, 1}))).dmin;
    o.require(pet == 6 && dmin == 6, "Petersen anchors");
    o.require(exact_motion(cocktail_party_graph(3)) == 2, "cocktail-party(3) motion");
    o.require(exact_motion(cycle_graph(8)) == 6, "cycle(8) motion");
    o.detail << " (" << bounds << " bounds checked)";
  });

  ok &= run(7, "imprimitive structure", [](Outcome& o) {
    const IntersectionArray cube({3, 2, 1}, {1, 2, 3});
    const IntersectionArray octagon({2, 1, 1, 1}, {1, 1, 1, 2});
    const IntersectionArray ico({5, 2, 1}, {1, 2, 5});
    const IntersectionArray heawood({3, 2, 2}, {1, 1, 3});
    const auto p = detect(cube);
    o.require(p.is_bipartite && p.is_antipodal && p.r == Rational(2), "cube detection");
    o.require(halved_array(cube) == RawArray{{3}, {1}} && halved_array(cube) == concrete(halved_graph(cube_graph())),
              "cube halved");
    o.require(folded_array(cube).array == concrete(folded_graph(cube_graph())), "cube folded");
    o.require(halved_array(octagon) == concrete(halved_graph(cycle_graph(8))), "octagon halved");
    const auto fo = folded_array(octagon);
    o.require(fo.r == 2 && fo.array == RawArray{{2, 1}, {1, 2}} && fo.array == concrete(folded_graph(cycle_graph(8))),
              "octagon folded");
    o.require(folded_array(ico).array == RawArray{{5}, {1}} &&
                  folded_array(ico).array == concrete(folded_graph(icosahedron_graph())),
              "icosahedron folded");
    o.require(halved_array(heawood) == concrete(halved_graph(heawood_graph())), "Heawood halved");
    o.require(derive_parameters(heawood).n == 14 && !bip3_analysis(heawood).exception(), "Heawood n = 14");
    const double s2 = std::sqrt(2.0);
    o.require(spectrum_is(eigen_spectrum(octagon), {{2, 1}, {s2, 2}, {0, 2}, {-s2, 2}, {-2, 1}}), "octagon spectrum");
    o.require(bip_antip4_analysis(octagon).m == 2, "octagon shape");
  });

  ok &= run(8, "Ostrowski property", [](Outcome& o) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-5, 5), size(1, 6);
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = size(rng);
      Eigen::MatrixXd x(n, n), y(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          x(i, j) = entry(rng);
          y(i, j) = entry(rng);
        }
      bad += eigenvalue_matching_distance(x, y) > ostrowski_bound(x, y) + 1e-9;
    }
    o.require(bad == 0, std::to_string(bad) + " pairs outside the bound");
    o.detail << " (200 pairs, seed 2024)";
  });

  ok &= run(9, "classifier consistency", [](Outcome& o) {
    const auto r = classify_primitive(johnson_array(30, 3));
    o.require(r.verdict.geometric() && r.verdict.m == 3, "J(30,3) verdict");
    o.require(near(r.theta_min, -3.0, 1e-6), "theta_min");
    o.require(m_d(3) == 85, "m_d(3)");
    o.detail << " (J(30,3): GeometricCandidate(" << r.verdict.m << "), theta_min " << r.theta_min << ", m_d(3) "
             << m_d(3).str() << ", case tree branch " << r.tree_branch << ")";
  });

  return ok ? 0 : 1;
}
