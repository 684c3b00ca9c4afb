#pragma once

#include <string>
#include <vector>

#include "dh/bigrat.hpp"
#include "dh/drinfeld.hpp"

namespace dh {

// Absolute Weil height of an algebraic element, from the integral minimal
// polynomial: (deg_T of the leading coefficient plus the pole orders of the
// conjugates at infinity) / (degree of the minimal polynomial).  Elements of
// k shortcut to max(deg num, deg den).  Nonnegative, zero exactly on 0 and
// the constants.
Rat weil_height(const AlgebraicElement& x);
Rat weil_height(const RatFunc& x);

// The same height as a sum over all places (infinity plus the primes dividing
// the leading coefficient of the minimal polynomial), each weighted by its
// degree.  Independent route kept for cross-checking the closed form.
Rat weil_height_place_sum(const AlgebraicElement& x);

// One-step height distortion bound for an additive operator sum a_i tau^i of
// positive degree: |h(op x) - q^r h(x)| <= c for every algebraic x, computed
// place by place from the coefficients.  gamma_bound turns it into the
// telescoped bound |hhat - h| <= gamma, floored at 1.
Rat distortion_bound(const OreK& op);
Rat gamma_bound(const DrinfeldModule& phi);

// Certified canonical height: lo <= hhat(x) <= hi with hi - lo <= tol,
// obtained from h(phi_T^n x)/q^(rn) with the telescoping error bound.
struct CanonicalHeight {
  Rat lo, hi;
  Rat weil;            // h(x)
  Rat gamma;           // the |hhat - h| bound used
  unsigned iterations; // orbit steps taken
};
CanonicalHeight canonical_height(const DrinfeldModule& phi, const AlgebraicElement& x,
                                 const Rat& tol);
// Same estimate for a raw additive operator (used for isogeny targets whose
// constant term is not T).
CanonicalHeight canonical_height_raw(const OreK& op, const AlgebraicElement& x, const Rat& tol);

// Exact torsion decision by orbit scan: torsion points repeat inside the
// finite set of bounded-height elements; non-torsion orbits certify
// themselves by climbing past gamma.
struct TorsionDecision {
  bool torsion;
  PolyA annihilator;        // monic; meaningful when torsion
  unsigned steps;
  std::string certificate;
};
TorsionDecision is_torsion(const DrinfeldModule& phi, const AlgebraicElement& x);

// Two certified intervals that must describe the same number: pass needs a
// nonempty intersection and midpoints within tol.
struct IntervalCheck {
  bool pass;
  Rat lhs_lo, lhs_hi;
  Rat rhs_lo, rhs_hi;
};

// hhat(phi_a x) = q^(r deg a) hhat(x).
IntervalCheck check_functional_equation(const DrinfeldModule& phi, const AlgebraicElement& x,
                                        const PolyA& a, const Rat& tol);
// hhat(x + t) = hhat(x) for a torsion point t (validated).
IntervalCheck check_translation_invariance(const DrinfeldModule& phi, const AlgebraicElement& x,
                                           const TorsionPoint& t, const Rat& tol);
// q^(deg_tau P) hhat_rho(x) = hhat_target(P x) for P with target_T P = P rho_T.
// The target may be a tau-twist whose constant term differs from T.
IntervalCheck check_isogeny_relation(const DrinfeldModule& rho, const OreK& target_T,
                                     const OreK& P, const AlgebraicElement& x, const Rat& tol);

// Height-driven scan over candidate minimal polynomials with bounded degrees.
struct SearchRow {
  IntPolyX minpoly;
  Rat weil, lo, hi;
  bool torsion;
  unsigned iterations;
};
std::vector<SearchRow> minimal_height_scan(const DrinfeldModule& phi, unsigned max_ext_degree,
                                           unsigned max_coeff_degree, const Rat& tol,
                                           size_t budget = 4096);
// Same scan, but when the budget runs out it returns the rows finished so
// far with complete = false instead of discarding them.
struct ScanOutcome {
  std::vector<SearchRow> rows;
  bool complete;
};
ScanOutcome minimal_height_scan_bounded(const DrinfeldModule& phi, unsigned max_ext_degree,
                                        unsigned max_coeff_degree, const Rat& tol,
                                        size_t budget);

}  // namespace dh
