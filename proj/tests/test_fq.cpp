#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dh/fq.hpp"

using namespace dh;

TEST_CASE("supported field sizes") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) CHECK(fq_supported(q));
  for (unsigned q : {0u, 1u, 6u, 10u, 16u, 25u}) CHECK_FALSE(fq_supported(q));
  CHECK_THROWS_AS(FqElem(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(FqElem(3, 5), std::invalid_argument);
}

TEST_CASE("characteristic and degree") {
  CHECK(fq_char(2) == 2);
  CHECK(fq_char(4) == 2);
  CHECK(fq_char(8) == 2);
  CHECK(fq_char(9) == 3);
  CHECK(fq_char(7) == 7);
  CHECK(fq_degree(8) == 3);
  CHECK(fq_degree(9) == 2);
  CHECK(fq_degree(5) == 1);
}

TEST_CASE("field axioms, all q") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (unsigned a = 0; a < q; ++a) {
      FqElem x(q, a);
      CHECK(x + FqElem::zero(q) == x);
      CHECK(x * FqElem::one(q) == x);
      CHECK((x + (-x)).is_zero());
      if (a != 0) {
        CHECK((x * x.inverse()).is_one());
        CHECK(x.pow(q - 1).is_one());  // multiplicative group order
      }
      // additive order divides the characteristic
      FqElem s = FqElem::zero(q);
      for (unsigned i = 0; i < fq_char(q); ++i) s = s + x;
      CHECK(s.is_zero());
      // Frobenius x -> x^q is the identity on F_q
      CHECK(x.pow(q) == x);
      for (unsigned b = 0; b < q; ++b) {
        FqElem y(q, b);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        for (unsigned c = 0; c < q; ++c) {
          FqElem z(q, c);
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
    }
  }
}

TEST_CASE("published moduli for the non-prime fields") {
  // F4: g^2 = g + 1
  FqElem g4 = FqElem::gen(4);
  CHECK(g4 * g4 == g4 + FqElem::one(4));
  // F8: g^3 = g + 1
  FqElem g8 = FqElem::gen(8);
  CHECK(g8 * g8 * g8 == g8 + FqElem::one(8));
  // F9: g^2 = -2g - 2 = g + 1 over F3
  FqElem g9 = FqElem::gen(9);
  CHECK(g9 * g9 == -(g9 + g9) - (FqElem::one(9) + FqElem::one(9)));
  CHECK_THROWS_AS(FqElem::gen(5), std::invalid_argument);
}

TEST_CASE("generator has full multiplicative order") {
  for (unsigned q : {4u, 8u, 9u}) {
    FqElem g = FqElem::gen(q);
    FqElem p = g;
    unsigned order = 1;
    while (!p.is_one()) {
      p = p * g;
      ++order;
    }
    CHECK(order == q - 1);  // Conway moduli are primitive
  }
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS_AS(FqElem(2, 1) + FqElem(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(FqElem(4, 1) * FqElem(8, 1), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(FqElem(3, 2).to_string() == "2");
  CHECK(FqElem::gen(4).to_string() == "g");
  CHECK((FqElem::gen(4) + FqElem::one(4)).to_string() == "g+1");
  CHECK((FqElem::gen(9) + FqElem::gen(9)).to_string() == "2*g");
  CHECK(FqElem::zero(8).to_string() == "0");
  CHECK((FqElem::gen(8) * FqElem::gen(8)).to_string() == "g^2");
}
