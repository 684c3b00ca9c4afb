#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dh/algebraic.hpp"
#include "dh/place.hpp"

using namespace dh;

namespace {

RatFunc random_ratfunc(unsigned q, std::mt19937_64& rng) {
  auto rand_poly = [&](int maxdeg) {
    std::vector<uint8_t> c(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
    for (auto& v : c) v = static_cast<uint8_t>(rng() % q);
    return PolyA(q, std::move(c));
  };
  PolyA den = rand_poly(2);
  while (den.is_zero()) den = rand_poly(2);
  return RatFunc(rand_poly(3), den);
}

AlgebraicElement random_element(const AmbientPtr& amb, std::mt19937_64& rng) {
  std::vector<RatFunc> co;
  for (unsigned i = 0; i < amb->degree(); ++i) co.push_back(random_ratfunc(amb->q(), rng));
  return amb->element(std::move(co));
}

// x^q has conjugate valuations q*v(conjugates of x) once both lists are
// replicated to a common length (the minimal polynomials can have different
// degrees when x^q generates a smaller subfield).
std::vector<Rat> replicate_to(const std::vector<Rat>& vals, size_t n) {
  std::vector<Rat> out;
  for (size_t i = 0; i < n / vals.size(); ++i) out.insert(out.end(), vals.begin(), vals.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rational ambient is k itself") {
  AmbientPtr k = Ambient::rational(3);
  CHECK(k->degree() == 1);
  CHECK(k->certificate() == Ambient::Certificate::kRationalField);
  CHECK(k->generator().is_zero());
  RatFunc c(PolyA(3, {1, 2}), PolyA::T(3));
  AlgebraicElement x = k->from_k(c);
  CHECK(x.in_k());
  CHECK(x.as_k() == c);
  CHECK((x * x).as_k() == c * c);
  CHECK(x.inverse().as_k() == c.inverse());
}

TEST_CASE("quadratic extension: square root of T") {
  unsigned q = 2;
  RatFunc t = RatFunc::T(q);
  PolyK f({-t, RatFunc(q), RatFunc::one(q)}, RatFunc(q));  // X^2 - T
  AmbientPtr M = Ambient::create(f, "s");
  CHECK(M->degree() == 2);
  CHECK(M->certificate() == Ambient::Certificate::kNoRationalRoot);
  AlgebraicElement s = M->generator();
  CHECK(s * s == M->from_k(t));
  CHECK_FALSE(s.in_k());
  CHECK((s * s).in_k());

  // inverse: 1/s = s/T
  AlgebraicElement si = s.inverse();
  CHECK(si * s == M->one());
  CHECK(si == s * M->from_k(t.inverse()));

  // minimal polynomials
  CHECK(s.min_poly_monic() == M->modulus());
  IntPolyX mp = (s + M->one()).min_poly();
  CHECK(mp.to_string() == "X^2+T+1");  // (s+1)^2 = T+1 in characteristic 2
  IntPolyX mk = M->from_k(t.inverse()).min_poly();
  CHECK(mk.to_string() == "T*X+1");  // cleared form of X - 1/T
}

TEST_CASE("field axioms in a quadratic extension") {
  unsigned q = 3;
  RatFunc t = RatFunc::T(q);
  PolyK f({-t, RatFunc(q), RatFunc::one(q)}, RatFunc(q));
  AmbientPtr M = Ambient::create(f);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 12; ++i) {
    AlgebraicElement a = random_element(M, rng);
    AlgebraicElement b = random_element(M, rng);
    AlgebraicElement c = random_element(M, rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == M->zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == M->one());
      CHECK(a.pow(-2) == (a * a).inverse());
    }
    CHECK(a.frob() == a.pow(3));
  }
}

TEST_CASE("irreducibility certificates and rejections") {
  unsigned q = 2;
  RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);

  // linear
  AmbientPtr L = Ambient::create(PolyK({t, one}, z));
  CHECK(L->certificate() == Ambient::Certificate::kLinear);
  CHECK(L->generator().as_k() == -t);

  // degree 2 with a rational root: X^2 + T^2 = (X+T)^2
  CHECK_THROWS_AS(Ambient::create(PolyK({t * t, z, one}, z)), std::invalid_argument);

  // degree 3, no rational root
  RatFunc p(PolyA(q, {1, 1, 1}));  // T^2+T+1
  AmbientPtr C = Ambient::create(PolyK({p, p, z, one}, z), "l");
  CHECK(C->certificate() == Ambient::Certificate::kNoRationalRoot);

  // degree 4: certified only through an Eisenstein prime of the constant term
  AmbientPtr E = Ambient::create(PolyK({t, t, z, z, one}, z));
  CHECK(E->certificate() == Ambient::Certificate::kEisenstein);
  CHECK(E->eisenstein_prime() == PolyA::T(q));
  CHECK_THROWS_AS(Ambient::create(PolyK({one, one, z, z, one}, z)), std::invalid_argument);

  // explicit Eisenstein constructor validates the prime
  AmbientPtr E2 = Ambient::eisenstein(PolyK({p, p, z, one}, z), PolyA(q, {1, 1, 1}), "l");
  CHECK(E2->certificate() == Ambient::Certificate::kEisenstein);
  CHECK_THROWS_AS(Ambient::eisenstein(PolyK({t, t, z, z, one}, z), PolyA(q, {1, 1}), "x"),
                  std::invalid_argument);
}

TEST_CASE("primitive modulus clears denominators") {
  unsigned q = 2;
  RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);
  // X^2 + X/T + 1/T: cleared to T*X^2 + X + 1
  AmbientPtr M = Ambient::create(PolyK({t.inverse(), t.inverse(), one}, z));
  CHECK(M->primitive_modulus().to_string() == "T*X^2+X+1");
  CHECK(M->modulus().is_monic());
  CHECK(M->modulus().coeff(1) == t.inverse());
}

TEST_CASE("cross-ambient operations are rejected") {
  unsigned q = 2;
  RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);
  AmbientPtr M1 = Ambient::create(PolyK({-t, z, one}, z));
  AmbientPtr M2 = Ambient::create(PolyK({-t - one, z, one}, z));
  CHECK_THROWS_AS(M1->generator() + M2->generator(), std::invalid_argument);
  AmbientPtr M1b = Ambient::create(PolyK({-t, z, one}, z));
  CHECK(M1->same_as(*M1b));
  CHECK(M1->generator() == M1b->generator());  // equal moduli interoperate
}

TEST_CASE("conjugate valuations from the Newton polygon") {
  unsigned q = 2;
  RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);
  AmbientPtr M = Ambient::create(PolyK({-t, z, one}, z), "s");  // s^2 = T
  AlgebraicElement s = M->generator();
  Place inf = Place::infinity(q);
  Place at_t = Place::finite(PolyA::T(q));

  std::vector<Rat> vi = conjugate_valuations(s, inf);
  REQUIRE(vi.size() == 2);
  CHECK(vi[0] == Rat(-1, 2));
  CHECK(vi[1] == Rat(-1, 2));
  std::vector<Rat> vt = conjugate_valuations(s, at_t);
  CHECK(vt == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});

  // 1 + 1/s has a pole of order 1/2 at (T) and is a unit at infinity
  AlgebraicElement u = M->one() + s.inverse();
  std::vector<Rat> ut = conjugate_valuations(u, at_t);
  CHECK(ut == std::vector<Rat>{Rat(-1, 2), Rat(-1, 2)});

  CHECK_THROWS_AS(conjugate_valuations(M->zero(), inf), std::domain_error);
}

TEST_CASE("Frobenius scales conjugate valuations by q") {
  std::mt19937_64 rng(23);
  for (unsigned q : {2u, 3u}) {
    RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);
    AmbientPtr M = Ambient::create(PolyK({-t, z, one}, z));
    Place inf = Place::infinity(q);
    Place at_t = Place::finite(PolyA::T(q));
    for (int i = 0; i < 8; ++i) {
      AlgebraicElement x = random_element(M, rng);
      if (x.is_zero()) continue;
      AlgebraicElement xq = x.pow(static_cast<long>(q));
      for (const Place& v : {inf, at_t}) {
        std::vector<Rat> vx = conjugate_valuations(x, v);
        std::vector<Rat> vq = conjugate_valuations(xq, v);
        size_t n = std::max(vx.size(), vq.size());
        std::vector<Rat> lhs = replicate_to(vq, n);
        std::vector<Rat> rhs = replicate_to(vx, n);
        for (Rat& r : rhs) {
          Rat s = r * q;
          r = s;
        }
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("element rendering") {
  unsigned q = 2;
  RatFunc t = RatFunc::T(q), one = RatFunc::one(q), z(q);
  AmbientPtr M = Ambient::create(PolyK({-t, z, one}, z), "s");
  AlgebraicElement x = M->element({t + one, t.inverse()});
  CHECK(x.to_string() == "(1/T)*s+T+1");
  CHECK(M->zero().to_string() == "0");
  CHECK(Ambient::rational(q)->from_k(t).to_string() == "T");
}
