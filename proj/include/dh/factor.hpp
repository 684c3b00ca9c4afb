#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "dh/poly.hpp"

namespace dh {

// a = unit * prod factors[i].first ^ factors[i].second, factors monic
// irreducible, pairwise distinct, in canonical order.
struct Factorization {
  FqElem unit;
  std::vector<std::pair<PolyA, unsigned>> factors;
};

// Cantor-Zassenhaus (squarefree + distinct-degree + seeded equal-degree).
Factorization factorize(const PolyA& a, uint64_t seed = 0x5eed5eedULL);

// Deterministic distinct-degree irreducibility test.
bool is_irreducible(const PolyA& a);

// All monic irreducibles of degree 1..maxdeg, canonical order.  Results are
// memoized in-process; if DH_CACHE_DIR is set, tables are also read from and
// written to that directory.
std::vector<PolyA> irreducibles_up_to(unsigned q, unsigned maxdeg);

// (1/n) sum_{d | n} mu(d) q^(n/d): the count the tables are validated against.
uint64_t count_monic_irreducibles(unsigned q, unsigned n);

// base^e mod m (e >= 0).
PolyA poly_powmod(const PolyA& base, const mpz_class& e, const PolyA& m);

// Monic divisors of a (all of them), canonical order.  Needs the number of
// divisors to stay within a desk-scale budget.
std::vector<PolyA> monic_divisors(const PolyA& a, uint64_t seed = 0x5eed5eedULL);

}  // namespace dh
