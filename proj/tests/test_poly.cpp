#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dh/factor.hpp"
#include "dh/poly.hpp"
#include "dh/rational.hpp"

using namespace dh;

namespace {
PolyA random_poly(unsigned q, int maxdeg, std::mt19937_64& rng) {
  std::vector<uint8_t> c(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
  for (auto& v : c) v = static_cast<uint8_t>(rng() % q);
  return PolyA(q, std::move(c));
}
}  // namespace

TEST_CASE("canonical form") {
  PolyA z(2);
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(PolyA(2, {1, 1, 0, 0}) == PolyA(2, {1, 1}));  // trailing zeros trimmed
  CHECK(PolyA(3, {0, 0, 1}).degree() == 2);
  CHECK(PolyA(2, {0, 1}) == PolyA::T(2));
}

TEST_CASE("hand-checked arithmetic over F2") {
  PolyA t = PolyA::T(2);
  PolyA f = t * t + t + PolyA(2, {1});  // T^2+T+1
  CHECK(f.to_string() == "T^2+T+1");
  CHECK((f + f).is_zero());
  CHECK((f * f).to_string() == "T^4+T^2+1");  // squaring is coefficientwise in char 2
  auto dm = (f * f + t).divmod(f);
  CHECK(dm.quo == f);
  CHECK(dm.rem == t);
  CHECK((f * f + t) == dm.quo * f + dm.rem);
}

TEST_CASE("division invariant, random") {
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 5u, 9u}) {
    for (int i = 0; i < 60; ++i) {
      PolyA a = random_poly(q, 9, rng);
      PolyA b = random_poly(q, 5, rng);
      if (b.is_zero()) continue;
      auto dm = a.divmod(b);
      CHECK(a == dm.quo * b + dm.rem);
      CHECK(dm.rem.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd and extended gcd") {
  PolyA t = PolyA::T(3);
  PolyA a = (t + PolyA(3, {1})).pow(2) * t;
  PolyA b = (t + PolyA(3, {1})) * (t + PolyA(3, {2}));
  CHECK(poly_gcd(a, b) == t + PolyA(3, {1}));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    PolyA x = random_poly(3, 6, rng), y = random_poly(3, 6, rng);
    auto xg = poly_xgcd(x, y);
    CHECK(xg.s * x + xg.t * y == xg.g);
    if (!x.is_zero() && !y.is_zero()) {
      CHECK((x % xg.g).is_zero());
      CHECK((y % xg.g).is_zero());
    }
  }
}

TEST_CASE("canonical ordering and enumeration") {
  auto all = polys_of_degree_below(2, 3);
  CHECK(all.size() == 8);
  CHECK(all[0].is_zero());
  CHECK(all[1].is_one());
  CHECK(all[2] == PolyA::T(2));
  CHECK(all[3] == PolyA(2, {1, 1}));
  for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  auto monic = monic_polys_of_degree(3, 2);
  CHECK(monic.size() == 9);
  for (const PolyA& m : monic) {
    CHECK(m.is_monic());
    CHECK(m.degree() == 2);
  }
}

TEST_CASE("derivative in characteristic p") {
  // d/dT (T^3+T^2+1) = 3T^2+2T = 2T over F3
  PolyA f(3, {1, 0, 1, 1});
  CHECK(f.derivative() == PolyA(3, {0, 2}));
  // squares have zero derivative in char 2
  PolyA g(2, {1, 0, 1});  // T^2+1
  CHECK(g.derivative().is_zero());
}

TEST_CASE("rational function canonical form") {
  unsigned q = 2;
  PolyA t = PolyA::T(q), one(q, {1});
  RatFunc x(t * t + one, t * (t + one));  // (T+1)^2 / T(T+1) = (T+1)/T
  CHECK(x.num() == t + one);
  CHECK(x.den() == t);
  RatFunc y = x + x;
  CHECK(y.is_zero());  // char 2
  CHECK((x * x.inverse()).is_one());
  CHECK(x.to_string() == "(T+1)/T");
  // denominator is normalized monic
  RatFunc z(PolyA(3, {1}), PolyA(3, {0, 2}));
  CHECK(z.den() == PolyA::T(3));
  CHECK(z.num() == PolyA(3, {2}));
}

TEST_CASE("rational function field axioms, random") {
  std::mt19937_64 rng(5);
  for (unsigned q : {2u, 3u}) {
    for (int i = 0; i < 30; ++i) {
      PolyA n1 = random_poly(q, 4, rng), d1 = random_poly(q, 4, rng);
      PolyA n2 = random_poly(q, 4, rng), d2 = random_poly(q, 4, rng);
      if (d1.is_zero() || d2.is_zero()) continue;
      RatFunc a(n1, d1), b(n2, d2);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == RatFunc(q));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a.frob() == a.pow(static_cast<long>(q)));
    }
  }
}

TEST_CASE("factorization round-trips and canonical order") {
  std::mt19937_64 rng(13);
  for (unsigned q : {2u, 3u, 4u}) {
    for (int i = 0; i < 25; ++i) {
      PolyA a = random_poly(q, 8, rng);
      if (a.is_zero()) continue;
      Factorization f = factorize(a);
      PolyA prod = PolyA::constant(f.unit);
      for (const auto& [p, e] : f.factors) {
        CHECK(p.is_monic());
        CHECK(is_irreducible(p));
        prod = prod * p.pow(e);
      }
      CHECK(prod == a);
      for (size_t j = 1; j < f.factors.size(); ++j)
        CHECK(f.factors[j - 1].first < f.factors[j].first);
    }
  }
}

TEST_CASE("factorization of known shapes") {
  // T^4+T over F2 = T (T+1) (T^2+T+1)
  PolyA f(2, {0, 1, 0, 0, 1});
  Factorization fac = factorize(f);
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.factors[0].first == PolyA::T(2));
  CHECK(fac.factors[1].first == PolyA(2, {1, 1}));
  CHECK(fac.factors[2].first == PolyA(2, {1, 1, 1}));
  // (T+1)^4 over F2: inseparable tower handled
  PolyA g = PolyA(2, {1, 1}).pow(4);
  Factorization fg = factorize(g);
  REQUIRE(fg.factors.size() == 1);
  CHECK(fg.factors[0].first == PolyA(2, {1, 1}));
  CHECK(fg.factors[0].second == 4);
}

TEST_CASE("irreducible tables match the counting formula") {
  CHECK(count_monic_irreducibles(2, 1) == 2);
  CHECK(count_monic_irreducibles(2, 2) == 1);
  CHECK(count_monic_irreducibles(2, 3) == 2);
  CHECK(count_monic_irreducibles(2, 4) == 3);
  CHECK(count_monic_irreducibles(3, 2) == 3);
  CHECK(count_monic_irreducibles(3, 3) == 8);
  CHECK(count_monic_irreducibles(9, 2) == 36);
  for (unsigned q : {2u, 3u, 5u}) {
    unsigned maxd = q == 2 ? 6u : 4u;
    auto table = irreducibles_up_to(q, maxd);
    size_t expect = 0;
    for (unsigned d = 1; d <= maxd; ++d) expect += count_monic_irreducibles(q, d);
    CHECK(table.size() == expect);
    for (const PolyA& p : table) CHECK(is_irreducible(p));
  }
}

TEST_CASE("monic divisors") {
  PolyA f = PolyA::T(2) * PolyA(2, {1, 1}).pow(2);  // T (T+1)^2
  auto divs = monic_divisors(f);
  CHECK(divs.size() == 6);
  CHECK(divs.front().is_one());
  for (const PolyA& d : divs) CHECK((f % d).is_zero());
}
