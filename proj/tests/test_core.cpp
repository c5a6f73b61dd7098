#include <catch_amalgamated.hpp>

#include "drg/drg.hpp"

using namespace drg;

namespace {

bool has_code(const std::vector<Violation>& v, ErrorCode code)
{
  for (const auto& x : v)
    if (x.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("derived parameters of small graphs", "[core]")
{
  SECTION("Petersen")
  {
    const auto t = derive_parameters(IntersectionArray({3, 2}, {1, 1}));
    CHECK(t.kdist == std::vector<Integer>{1, 3, 6});
    CHECK(t.n == 10);
    CHECK(t.lambda == 0);
    CHECK(t.mu == 1);
    CHECK(t.a == std::vector<std::int64_t>{0, 0, 2});
  }
  SECTION("J(5,2)")
  {
    const auto t = derive_parameters(johnson_array(5, 2));
    CHECK(t.kdist == std::vector<Integer>{1, 6, 3});
    CHECK(t.n == 10);
    CHECK(t.lambda == 3);
    CHECK(t.mu == 4);
  }
  SECTION("cube")
  {
    const auto t = derive_parameters(hamming_array(3, 2));
    CHECK(t.kdist == std::vector<Integer>{1, 3, 3, 1});
    CHECK(t.n == 8);
    CHECK(t.a == std::vector<std::int64_t>{0, 0, 0, 0});
  }
}

TEST_CASE("parameters agree with BFS on concrete graphs", "[core][oracle]")
{
  for (const auto& e : catalog()) {
    if (!e.has_graph()) continue;
    CAPTURE(e.id);
    const auto g = e.build();
    const auto t = derive_parameters(e.array);
    CHECK(Integer(g.order()) == t.n);
    const auto& dist = g.distances();
    std::vector<Integer> counts(static_cast<std::size_t>(t.diameter() + 1));
    for (int v = 0; v < g.order(); ++v) counts[static_cast<std::size_t>(dist[0][v])] += 1;
    CHECK(counts == t.kdist);
  }
}

TEST_CASE("intersection tensor", "[core]")
{
  const auto p = intersection_tensor(IntersectionArray({3, 2}, {1, 1}));
  CHECK(p(2, 2, 2) == 3);
  CHECK(p(2, 1, 1) == 1);
  for (int s = 0; s <= 2; ++s)
    for (int i = 0; i <= 2; ++i) CHECK(p(s, i, 0) == (i == s ? 1 : 0));

  const auto q = intersection_tensor(johnson_array(5, 2));
  CHECK(q(1, 1, 1) == 3);

  SECTION("row sums: sum_j p^s_{i,j} = k_i")
  {
    const auto arr = johnson_array(8, 3);
    const auto t = derive_parameters(arr);
    for (int s = 0; s <= 3; ++s)
      for (int i = 0; i <= 3; ++i) {
        Integer sum = 0;
        for (int j = 0; j <= 3; ++j) sum += t.p(s, i, j);
        CHECK(sum == t.kdist[static_cast<std::size_t>(i)]);
      }
  }
}

TEST_CASE("generators", "[core]")
{
  CHECK(johnson_array(5, 2).raw() == RawArray{{6, 2}, {1, 4}});
  CHECK(hamming_array(2, 3).raw() == RawArray{{4, 2}, {1, 2}});
  CHECK(cocktail_party_array(3).raw() == RawArray{{4, 1}, {1, 4}});
  CHECK(derive_parameters(cocktail_party_array(3)).n == 6);

  CHECK_THROWS_AS(johnson_array(4, 2), Error);
  CHECK_THROWS_AS(hamming_array(1, 3), Error);
  CHECK_THROWS_AS(cocktail_party_array(1), Error);

  // Generated arrays match the arrays read off the concrete graphs.
  CHECK(*check_distance_regular(johnson_graph(7, 3)).array == johnson_array(7, 3).raw());
  CHECK(*check_distance_regular(hamming_graph(3, 4)).array == hamming_array(3, 4).raw());
  CHECK(*check_distance_regular(cocktail_party_graph(5)).array == cocktail_party_array(5).raw());
}

TEST_CASE("array validation", "[core]")
{
  auto code_of = [](RawArray r) {
    try {
      IntersectionArray a(std::move(r));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;  // sentinel: accepted
  };
  CHECK(code_of({{3, 2}, {1}}) == ErrorCode::InvalidArray);
  CHECK(code_of({{3}, {1}}) == ErrorCode::InvalidArray);
  CHECK(code_of({{3, 2}, {2, 1}}) == ErrorCode::InvalidArray);
  CHECK(code_of({{3, 4}, {1, 1}}) == ErrorCode::InvalidArray);
  CHECK(code_of({{3, 0}, {1, 1}}) == ErrorCode::InvalidArray);
  CHECK(code_of({{3, 3}, {1, 1}}) == ErrorCode::NegativeA);
  CHECK(code_of({{3, 2}, {1, 1}}) == ErrorCode::ParseError);
}

TEST_CASE("feasibility report", "[core]")
{
  CHECK(feasibility_report(RawArray{{3, 2}, {1, 1}}).empty());

  const auto bad = feasibility_report(RawArray{{5, 4}, {1, 3}});
  REQUIRE(!bad.empty());
  CHECK(bad.front().code == ErrorCode::NonIntegralDistanceDegree);

  const auto v = feasibility_report(RawArray{{3, 3}, {1, 1}});
  CHECK(has_code(v, ErrorCode::NegativeA));
  CHECK(has_code(v, ErrorCode::MultiplicityNotIntegral));

  SECTION("every catalog entry is feasible")
  {
    for (const auto& e : catalog()) {
      CAPTURE(e.id);
      CHECK(feasibility_report(e.array).empty());
    }
  }
  SECTION("a non-integral p-tensor is reported")
  {
    // k = [1, 4, 6]: integral, but p^1_{1,1} = a_1 with a_1 = 1 and the rest inconsistent.
    const auto w = feasibility_report(RawArray{{4, 3}, {1, 2}});
    CHECK((has_code(w, ErrorCode::NonIntegralP) || has_code(w, ErrorCode::MultiplicityNotIntegral)));
  }
}

TEST_CASE("exact rational helpers", "[core]")
{
  CHECK(parse_rational("1/9") == Rational(1, 9));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS(parse_rational("1/x"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(is_power_of_two(64));
  CHECK(!is_power_of_two(12));
}
