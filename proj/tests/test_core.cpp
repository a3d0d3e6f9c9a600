#include <random>

#include "catch_amalgamated.hpp"

#include "mdsp/economy.hpp"
#include "mdsp/preferences.hpp"

using namespace mdsp;

namespace {

Rational rat(long long num, long long den = 1) { return Rational(num, den); }

// Deterministic random rationals with small numerators/denominators.
struct Rng {
  std::mt19937_64 gen{20260810};

  Rational rational(long long lo, long long hi, long long max_den = 12) {
    std::uniform_int_distribution<long long> num(lo, hi);
    std::uniform_int_distribution<long long> den(1, max_den);
    return Rational(num(gen), den(gen));
  }

  Rational in_range(const Rational& hi) {
    std::uniform_int_distribution<long long> num(0, 24);
    return hi * num(gen) / 24;
  }

  // Lower half of the range; keeps random partial columns summable.
  Rational in_low_range(const Rational& hi) {
    std::uniform_int_distribution<long long> num(0, 12);
    return hi * num(gen) / 24;
  }

  Bundle bundle_in(const Economy& econ) {
    Bundle b(econ.commodities());
    for (std::size_t c = 0; c < b.size(); ++c) b[c] = in_range(econ.omega[c]);
    return b;
  }

  std::size_t index(std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(gen);
  }
};

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("13.5") == rat(27, 2));
  CHECK(parse_rational("27/2") == rat(27, 2));
  CHECK(parse_rational("6") == rat(6));
  CHECK(parse_rational("-0.25") == rat(-1, 4));
  CHECK(parse_rational("-3/9") == rat(-1, 3));
  CHECK(parse_rational(" 10/4 ") == rat(5, 2));

  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
  CHECK_THROWS_AS(parse_rational("1e3"), Error);
}

TEST_CASE("rational formatting") {
  CHECK(to_fraction_string(rat(6)) == "6/1");
  CHECK(to_fraction_string(rat(-3, 2)) == "-3/2");
  CHECK(to_decimal_string(rat(6)) == "6");
  CHECK(to_decimal_string(rat(27, 2)) == "13.5");
  CHECK(to_decimal_string(rat(-9, 4)) == "-2.25");
  CHECK(to_decimal_string(rat(0)) == "0");
  // Non-terminating expansions are flagged as approximations.
  CHECK(to_decimal_string(rat(10, 3)) == "~3.333333");
}

TEST_CASE("rational round-trip") {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    const Rational r = rng.rational(-400, 400, 60);
    CHECK(parse_rational(to_fraction_string(r)) == r);
    if (has_terminating_decimal(r)) {
      CHECK(parse_rational(to_decimal_string(r)) == r);
    }
  }
}

TEST_CASE("make_economy validates") {
  const Economy fig = make_economy(2, {rat(12), rat(15)}, 3);
  CHECK(fig.commodities() == 2);
  CHECK(fig.agents == 3);

  const Economy degenerate = make_economy(1, {rat(0)}, 2);
  CHECK(degenerate.omega[0] == 0);

  const Economy ex1 = make_economy(2, {rat(18), rat(12)}, 2);
  CHECK(ex1.omega[1] == 12);

  CHECK_THROWS_AS(make_economy(2, {rat(-1), rat(3)}, 2), Error);
  CHECK_THROWS_AS(make_economy(0, {}, 2), Error);
  CHECK_THROWS_AS(make_economy(1, {rat(1)}, 0), Error);
  CHECK_THROWS_AS(make_economy(2, {rat(1)}, 2), Error);
}

TEST_CASE("is_feasible checks exact column sums and box membership") {
  const Economy econ = make_economy(2, {rat(18), rat(12)}, 2);

  CHECK(is_feasible(Allocation{{{rat(9), rat(6)}, {rat(9), rat(6)}}}, econ));
  CHECK_FALSE(is_feasible(Allocation{{{rat(18), rat(12)}, {rat(1), rat(0)}}}, econ));
  CHECK(is_feasible(
      Allocation{{{rat(15, 2), rat(15, 2)}, {rat(21, 2), rat(9, 2)}}}, econ));

  CHECK_THROWS_AS(is_feasible(Allocation{{{rat(18), rat(12)}}}, econ), Error);
  CHECK_THROWS_AS(is_feasible(Allocation{{{rat(18)}, {rat(0)}}}, econ), Error);
}

TEST_CASE("betweenness") {
  CHECK(between({rat(2), rat(3)}, {rat(1), rat(5)}, {rat(4), rat(2)}));
  CHECK(between({rat(1), rat(5)}, {rat(1), rat(5)}, {rat(4), rat(2)}));
  CHECK_FALSE(between({rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}));
  CHECK_THROWS_AS(between({rat(1)}, {rat(1), rat(2)}, {rat(0), rat(0)}), Error);
}

TEST_CASE("betweenness endpoint and symmetry properties") {
  Rng rng;
  const Economy econ = make_economy(2, {rat(6), rat(8)}, 2);
  for (int i = 0; i < 300; ++i) {
    const Bundle a = rng.bundle_in(econ);
    const Bundle b = rng.bundle_in(econ);
    const Bundle x = rng.bundle_in(econ);
    CHECK(between(a, a, b));
    CHECK(between(b, a, b));
    CHECK(between(x, a, b) == between(x, b, a));
  }
}

TEST_CASE("feasibility is closed under averaging") {
  Rng rng;
  const Economy econ = make_economy(2, {rat(9), rat(5)}, 3);
  int produced = 0;
  for (int i = 0; i < 400 && produced < 100; ++i) {
    Allocation x{std::vector<Bundle>(econ.agents, Bundle(econ.commodities()))};
    Allocation y = x;
    bool ok = true;
    for (std::size_t c = 0; c < econ.commodities() && ok; ++c) {
      Rational rx = econ.omega[c], ry = econ.omega[c];
      for (std::size_t a = 0; a + 1 < econ.agents; ++a) {
        x.shares[a][c] = rng.in_low_range(econ.omega[c]);
        y.shares[a][c] = rng.in_low_range(econ.omega[c]);
        rx -= x.shares[a][c];
        ry -= y.shares[a][c];
      }
      if (rx < 0 || ry < 0) ok = false;
      x.shares[econ.agents - 1][c] = rx;
      y.shares[econ.agents - 1][c] = ry;
    }
    if (!ok) continue;
    REQUIRE(is_feasible(x, econ));
    REQUIRE(is_feasible(y, econ));
    Allocation avg = x;
    for (std::size_t a = 0; a < econ.agents; ++a)
      for (std::size_t c = 0; c < econ.commodities(); ++c)
        avg.shares[a][c] = (x.shares[a][c] + y.shares[a][c]) / 2;
    CHECK(is_feasible(avg, econ));
    ++produced;
  }
  CHECK(produced >= 50);
}

TEST_CASE("quadratic preferences compare exactly") {
  const QuadraticPreference q1 =
      make_quadratic({rat(27, 2), rat(9)}, {rat(1), rat(3)});
  CHECK(quad_loss(q1, {rat(15, 2), rat(15, 2)}) == rat(171, 4));  // 42.75
  CHECK(quad_loss(q1, {rat(9), rat(6)}) == rat(189, 4));          // 47.25
  CHECK(quad_strictly_prefers(q1, {rat(15, 2), rat(15, 2)}, {rat(9), rat(6)}));

  const QuadraticPreference q2 =
      make_quadratic({rat(12), rat(21, 2)}, {rat(3), rat(1)});
  CHECK(quad_strictly_prefers(q2, {rat(21, 2), rat(9, 2)}, {rat(9), rat(6)}));

  // The peak is the unique best point.
  CHECK(quad_strictly_prefers(q1, q1.peak, {rat(9), rat(6)}));

  CHECK_THROWS_AS(make_quadratic({rat(1)}, {rat(0)}), Error);
  CHECK_THROWS_AS(make_quadratic({rat(1)}, {rat(-2)}), Error);
}

TEST_CASE("quadratic family satisfies the single-peaked sandwich") {
  // Exhaustive on small grids: if x is between the peak and y, x is better.
  const Economy one = make_economy(1, {rat(4)}, 2);
  for (int p = 0; p <= 4; ++p)
    for (int x = 0; x <= 4; ++x)
      for (int y = 0; y <= 4; ++y) {
        if (x == y) continue;
        const QuadraticPreference q = make_quadratic({rat(p)}, {rat(1)});
        if (between({rat(x)}, {rat(p)}, {rat(y)}))
          CHECK(quad_strictly_prefers(q, {rat(x)}, {rat(y)}));
      }

  for (int p1 = 0; p1 <= 2; ++p1)
    for (int p2 = 0; p2 <= 2; ++p2)
      for (int x1 = 0; x1 <= 2; ++x1)
        for (int x2 = 0; x2 <= 2; ++x2)
          for (int y1 = 0; y1 <= 2; ++y1)
            for (int y2 = 0; y2 <= 2; ++y2) {
              if (x1 == y1 && x2 == y2) continue;
              const Bundle peak = {rat(p1), rat(p2)};
              const Bundle x = {rat(x1), rat(x2)};
              const Bundle y = {rat(y1), rat(y2)};
              if (!between(x, peak, y)) continue;
              const QuadraticPreference q = make_quadratic(peak, {rat(2), rat(5)});
              CHECK(quad_strictly_prefers(q, x, y));
            }

  // Random weights, with x constructed between the peak and y.
  Rng rng;
  const Economy econ = make_economy(2, {rat(6), rat(8)}, 2);
  const Rational fractions[] = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
  for (int i = 0; i < 500; ++i) {
    const Bundle peak = rng.bundle_in(econ);
    const Bundle y = rng.bundle_in(econ);
    Bundle x(2);
    for (std::size_t c = 0; c < 2; ++c) {
      const Rational t = fractions[rng.index(5)];
      x[c] = peak[c] + (y[c] - peak[c]) * t;
    }
    if (x == y) continue;
    REQUIRE(between(x, peak, y));
    const QuadraticPreference q = make_quadratic(
        peak, {rng.rational(1, 9, 4), rng.rational(1, 9, 4)});
    CHECK(quad_strictly_prefers(q, x, y));
  }
}

TEST_CASE("sp_witness_preference finds quadratic witnesses") {
  // Two-commodity witness: some ladder weights must strictly prefer `better`.
  const Bundle peak = {rat(27, 2), rat(9)};
  const Bundle better = {rat(15, 2), rat(15, 2)};
  const Bundle worse = {rat(9), rat(6)};
  const auto w = sp_witness_preference(peak, better, worse);
  REQUIRE(w.has_value());
  CHECK(w->peak == peak);
  CHECK(quad_strictly_prefers(*w, better, worse));

  // One-commodity manipulation instance: |30/7 - 4| < |10/3 - 4|.
  const auto w1 = sp_witness_preference({rat(4)}, {rat(30, 7)}, {rat(10, 3)});
  REQUIRE(w1.has_value());
  CHECK(quad_strictly_prefers(*w1, {rat(30, 7)}, {rat(10, 3)}));

  // Quadratic symmetry cannot rank 9 above 4 around peak 5.
  CHECK_FALSE(sp_witness_preference({rat(5)}, {rat(9)}, {rat(4)}).has_value());

  // Precondition: `worse` between peak and `better` means no witness can exist.
  CHECK_THROWS_AS(sp_witness_preference({rat(0)}, {rat(4)}, {rat(2)}), Error);
}
