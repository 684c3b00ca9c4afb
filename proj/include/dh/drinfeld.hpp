#pragma once

#include <vector>

#include "dh/algebraic.hpp"
#include "dh/ore.hpp"

namespace dh {

using OreK = OrePoly<RatFunc>;

// A Drinfeld A-module over k, given by the image of T: a twisted polynomial
// with constant term T and positive tau-degree r (the rank).  The action of
// any a in A follows by substitution.
class DrinfeldModule {
 public:
  DrinfeldModule(unsigned q, OreK phi_T);
  static DrinfeldModule carlitz(unsigned q);  // T + tau

  unsigned q() const { return q_; }
  unsigned rank() const { return static_cast<unsigned>(phi_T_.deg_tau()); }
  const OreK& phi_T() const { return phi_T_; }

  OreK action(const PolyA& a) const;  // the twisted polynomial of a
  RatFunc act(const PolyA& a, const RatFunc& x) const;
  AlgebraicElement act(const PolyA& a, const AlgebraicElement& x) const;

  bool operator==(const DrinfeldModule& o) const { return q_ == o.q_ && phi_T_ == o.phi_T_; }

 private:
  unsigned q_;
  OreK phi_T_;
};

// For the Carlitz module and a monic P of positive degree: whether C_P has
// all tau-coefficients below the top divisible by P and the top equal to 1,
// i.e. C_P reduces to the deg(P)-power Frobenius mod P.  True whenever P is
// irreducible; the converse makes this worth checking.
bool carlitz_frobenius_congruence(const PolyA& P);

// The P-division field of the Carlitz module (P monic irreducible): the
// extension cut out by C_P(X)/X, which is Eisenstein at P, together with its
// generator, a point of exact Carlitz order P.
struct CyclotomicField {
  PolyA P;
  AmbientPtr field;
  AlgebraicElement lambda;
};
CyclotomicField cyclotomic_field(const PolyA& P);

// A torsion point with its exact annihilator: the minimal monic a with
// phi_a(value) = 0 (a = 1 exactly for value 0).
struct TorsionPoint {
  AlgebraicElement value;
  PolyA annihilator;
};

// The full kernel of phi_m inside M (m nonzero), each point with its exact
// annihilator, sorted by value.  Validates F_q-linearity of the set found.
std::vector<TorsionPoint> torsion_points_in(const DrinfeldModule& phi, const PolyA& m,
                                            const AmbientPtr& M);

// Minimal monic annihilator of a point already known to be killed by m.
PolyA torsion_annihilator(const DrinfeldModule& phi, const AlgebraicElement& x, const PolyA& m);

// Split a torsion point as (m-primary part) + (part of order prime to m), for
// m monic irreducible.  The two annihilators multiply to the original one.
struct TorsionSplit {
  TorsionPoint m_primary, coprime;
};
TorsionSplit torsion_decompose(const DrinfeldModule& phi, const TorsionPoint& x, const PolyA& m);

}  // namespace dh
