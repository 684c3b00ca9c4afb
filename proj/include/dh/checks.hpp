#pragma once

#include <string>
#include <vector>

#include "dh/heights.hpp"

namespace dh {

// Parameters of the iterated Frobenius congruence for the Carlitz module.
// For P monic irreducible and a residue degree f with deg P | (q-1)f, set
// nu = (q-1)f / deg P.  Then C_{P^nu} is monic of tau-degree n = (q-1)f with
// every lower coefficient divisible by P, i.e. it acts as the q^n-power map
// on residues mod P.
struct PowerCongruence {
  PolyA P;
  unsigned residue_degree;  // f
  unsigned nu, n, s;        // n = s * f with s = q - 1
};
PowerCongruence power_congruence_params(const PolyA& P, unsigned residue_degree);
bool check_power_congruence(const PowerCongruence& pc);

// (A/m^e)^x for m monic irreducible: the residues of degree < e deg m
// coprime to m, sorted.  Construction validates the order formula
// q^{(e-1) deg m} (q^{deg m} - 1).
struct UnitGroup {
  PolyA m;
  unsigned e;
  PolyA modulus;                // m^e
  std::vector<PolyA> elements;  // sorted
};
UnitGroup unit_group(const PolyA& m, unsigned e);

// A subgroup as its sorted residue set.
using Subgroup = std::vector<PolyA>;

// All subgroups of index < max_index.  Every proper index that can occur
// below 4 is prime, so they arise as kernels of characters of prime order;
// max_index > 4 is out of scope and throws.
std::vector<Subgroup> subgroups_of_unit_group(const UnitGroup& G, unsigned max_index);
// Independent oracle: breadth-first closure of generator sets reaches every
// subgroup; kept for cross-checking the character route.
std::vector<Subgroup> subgroups_by_closure(const UnitGroup& G, unsigned max_index);

// Digit expansions: if R0 represents A/(m) then {sum_i lambda_i m^i} with e
// digits represents A/(m^e).  Validated on both sides.
std::vector<PolyA> representatives(const PolyA& m, unsigned e, const std::vector<PolyA>& R0);

// The standard digit set {a : deg a < deg m}, its exact maximal degree d_m,
// and the cap deg m that the general construction promises.
struct BoundedRepresentatives {
  std::vector<PolyA> R0;
  int d_m;
  int cap;
};
BoundedRepresentatives bounded_representatives(const PolyA& m);

// A pair produced by the pigeonhole argument in (A/m^e)^x: two residues of H
// in one digit block, so their difference has degree >= 2 but is capped by
// the block size.  Requires index(H) < B and q^e >= 2 N B with N = q^2.
struct PigeonholePair {
  PolyA a, b;
  unsigned c;        // digit depth of the blocks
  int diff_degree;   // deg(b - a)
  mpz_class window;  // strict bound: 2 < q^diff_degree < window = 2 N B q^{d_m}
};
PigeonholePair pigeonhole_find(const UnitGroup& G, const Subgroup& H, unsigned B);

// Refinement for a rank-1 module: shifting both members by lambda m^e makes
// the degrees equal and the leading coefficients of phi_a, phi_b agree,
// without changing the residues or the difference.
struct RefinedPair {
  PolyA a, b;
  int diff_degree;
  RatFunc mu_a, mu_b;  // leading coefficients of phi_a, phi_b
  mpz_class window;    // 2 B q^{2 + d_m}
};
RefinedPair pigeonhole_refined(const UnitGroup& G, const Subgroup& H, unsigned B,
                               const DrinfeldModule& phi);

struct ProfileCheck {
  bool pass;
  std::string detail;
};

// Growth identity at a finite place v: over the conjugates, the profile
// min(0, val) of C_{P^nu}(x) equals q^n times the profile of x (sorted
// multisets in v-normalized units).
ProfileCheck check_growth_identity(const PowerCongruence& pc, const AlgebraicElement& x,
                                   const Place& v);

// Deviation bound at v = (P): every conjugate valuation of
// C_{P^nu}(x) - x^{q^n} is >= 1 + q^{n-1} min(0, val(x)), checked slot-wise
// after sorting (the bound is monotone in val(x)).
ProfileCheck check_power_deviation(const PowerCongruence& pc, const AlgebraicElement& x);

// Gap deepening: if val(x - y) >= c + min(0, val x) + min(0, val y) at the
// place of the ambient over v (integer-normalized), applying C_{P^nu} l
// times deepens the gap to c + l.  The ambient must be k, or Eisenstein at P
// with v = (P), so that the place over v is unique.
struct AccelerationCheck {
  bool hypothesis;  // false means the premise failed and the check is vacuous
  bool pass;
  std::string detail;
};
AccelerationCheck check_acceleration(const PowerCongruence& pc, const AlgebraicElement& x,
                                     const AlgebraicElement& y, unsigned c, unsigned l,
                                     const Place& v);

// Height floor for the Carlitz module on division-field samples: torsion
// elements are excluded with exact annihilators, and every non-torsion
// element must have its certified lower height endpoint above q^{-11 q gamma}.
struct FloorRow {
  std::string element;
  bool torsion;
  PolyA annihilator;  // meaningful when torsion
  Rat lo;             // certified lower endpoint of the canonical height
  Rat floor;          // q^{-11 q gamma}
  Rat margin;         // lo / floor, > 1 on pass
  bool pass;
};
std::vector<FloorRow> check_carlitz_floor(const CyclotomicField& kP,
                                          const std::vector<AlgebraicElement>& sample);

}  // namespace dh
