#include "dh/heights.hpp"

#include <algorithm>
#include <stdexcept>

#include "dh/factor.hpp"
#include "dh/newton.hpp"
#include "dh/place.hpp"

namespace dh {

namespace {

Rat positive_part(const Rat& x) { return x > 0 ? x : Rat(0); }

// carries the finished rows out of a scan that hit its budget; still a
// length_error for callers of the throwing entry point
struct ScanBudget : std::length_error {
  std::vector<SearchRow> rows;
  explicit ScanBudget(std::vector<SearchRow> r)
      : std::length_error("height scan budget exhausted"), rows(std::move(r)) {}
};

// pole mass of the conjugates of x at v, from the Newton polygon
Rat pole_mass(const PolyK& min_poly_monic, const Place& v) {
  Rat acc(0);
  for (const Rat& val : NewtonPolygon::compute(min_poly_monic, v).root_valuations()) {
    Rat a = -val;
    acc += positive_part(a);
  }
  return acc;
}

}  // namespace

Rat weil_height(const RatFunc& x) { return Rat(x.max_degree()); }

Rat weil_height(const AlgebraicElement& x) {
  if (x.is_zero()) return Rat(0);
  if (x.in_k()) return weil_height(x.as_k());
  IntPolyX F = x.min_poly();
  int d = F.degree();
  Rat mass = pole_mass(F.to_polyk().monic(), Place::infinity(x.q()));
  Rat h = (Rat(F.c.back().degree()) + mass) / d;
  return h;
}

Rat weil_height_place_sum(const AlgebraicElement& x) {
  if (x.is_zero()) return Rat(0);
  unsigned q = x.q();
  IntPolyX F = x.min_poly();
  int d = F.degree();
  PolyK monic = F.to_polyk().monic();
  Rat acc = pole_mass(monic, Place::infinity(q));
  const PolyA& lead = F.c.back();
  if (lead.degree() > 0)
    for (const auto& [P, e] : factorize(lead).factors) {
      (void)e;
      Rat m = pole_mass(monic, Place::finite(P));
      acc += Rat(P.degree()) * m;
    }
  Rat h = acc / d;
  return h;
}

Rat distortion_bound(const OreK& op) {
  int r = op.deg_tau();
  if (r < 1) throw std::invalid_argument("distortion bound needs positive tau-degree");
  unsigned q = op.zero_witness().q();
  const RatFunc& ar = op.leading();

  std::vector<PolyA> primes;
  for (int i = 0; i <= r; ++i) {
    const RatFunc& a = op.coeff(static_cast<unsigned>(i));
    if (a.is_zero()) continue;
    for (const PolyA* part : {&a.num(), &a.den()})
      if (part->degree() > 0)
        for (const auto& [P, e] : factorize(*part).factors) {
          (void)e;
          primes.push_back(P);
        }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  Rat qr = rat_qpow(q, r);
  Rat c_up(0), c_down(0);
  std::vector<Place> places = {Place::infinity(q)};
  for (const PolyA& P : primes) places.push_back(Place::finite(P));
  for (const Place& v : places) {
    Rat degv(v.degree());
    Rat vr(v.valuation(ar));
    Rat a_v(0), b_v(0);
    for (int i = 0; i <= r; ++i) {
      const RatFunc& a = op.coeff(static_cast<unsigned>(i));
      if (a.is_zero()) continue;
      Rat val(v.valuation(a));
      Rat na = -val;
      a_v = std::max(a_v, positive_part(na));
      if (i < r) {
        Rat gap = (vr - val) / (qr - rat_qpow(q, i));
        b_v = std::max(b_v, positive_part(gap));
      }
    }
    c_up += degv * a_v;
    Rat down = qr * b_v + positive_part(vr);
    c_down += degv * down;
  }
  return std::max(c_up, c_down);
}

Rat gamma_bound(const DrinfeldModule& phi) {
  Rat c = distortion_bound(phi.phi_T());
  Rat g = c / (rat_qpow(phi.q(), phi.rank()) - 1);
  return std::max(Rat(1), g);
}

CanonicalHeight canonical_height_raw(const OreK& op, const AlgebraicElement& x, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  int r = op.deg_tau();
  if (r < 1) throw std::invalid_argument("canonical height needs positive tau-degree");
  unsigned q = x.q();
  Rat c = distortion_bound(op);
  Rat gamma = std::max(Rat(1), Rat(c / (rat_qpow(q, r) - 1)));

  Rat need = 2 * gamma / tol;
  unsigned L = ceil_log_q(q, need);
  unsigned n = (L + static_cast<unsigned>(r) - 1) / static_cast<unsigned>(r);

  const AmbientPtr& M = x.ambient();
  auto lift = [&](const RatFunc& cf) { return M->from_k(cf); };
  AlgebraicElement y = x;
  for (unsigned i = 0; i < n; ++i) y = op.eval(y, lift);

  Rat h = weil_height(y);
  Rat scale = rat_qpow(q, static_cast<long>(n) * r);
  Rat mid = h / scale;
  Rat delta = gamma / scale;
  Rat lo = mid - delta;
  if (lo < 0) lo = 0;
  Rat hi = mid + delta;
  return CanonicalHeight{lo, hi, weil_height(x), gamma, n};
}

CanonicalHeight canonical_height(const DrinfeldModule& phi, const AlgebraicElement& x,
                                 const Rat& tol) {
  return canonical_height_raw(phi.phi_T(), x, tol);
}

TorsionDecision is_torsion(const DrinfeldModule& phi, const AlgebraicElement& x) {
  constexpr unsigned kOrbitCap = 100000;
  Rat gamma = gamma_bound(phi);
  PolyA t = PolyA::T(phi.q());
  std::vector<AlgebraicElement> orbit;
  AlgebraicElement y = x;
  for (unsigned i = 0;; ++i) {
    Rat h = weil_height(y);
    if (h > gamma) {
      // hhat(y) >= h - gamma > 0, and hhat scales by a unit power along the orbit
      return TorsionDecision{false, PolyA(phi.q()), i,
                             "weil height " + rat_str(h) + " exceeds gamma " + rat_str(gamma) +
                                 " at orbit step " + std::to_string(i)};
    }
    for (unsigned j = 0; j < orbit.size(); ++j) {
      if (orbit[j] == y) {
        // phi_(T^i - T^j) kills x; take the smallest monic divisor that does
        PolyA killer = t.pow(i) - t.pow(j);
        PolyA ann(phi.q());
        for (const PolyA& d : monic_divisors(killer))
          if (phi.act(d, x).is_zero()) {
            ann = d;
            break;
          }
        if (ann.is_zero()) throw std::logic_error("orbit repeat without an annihilator");
        return TorsionDecision{true, ann, i,
                               "orbit repeats: steps " + std::to_string(j) + " and " +
                                   std::to_string(i)};
      }
    }
    orbit.push_back(y);
    if (i >= kOrbitCap) throw std::length_error("torsion orbit scan exceeded its budget");
    y = phi.act(t, y);
  }
}

namespace {

IntervalCheck compare_intervals(const CanonicalHeight& lhs, Rat rhs_lo, Rat rhs_hi,
                                const Rat& tol) {
  bool overlap = std::max(lhs.lo, rhs_lo) <= std::min(lhs.hi, rhs_hi);
  Rat mid_l = (lhs.lo + lhs.hi) / 2;
  Rat mid_r = (rhs_lo + rhs_hi) / 2;
  Rat diff = mid_l - mid_r;
  if (diff < 0) diff = -diff;
  return IntervalCheck{overlap && diff <= tol, lhs.lo, lhs.hi, std::move(rhs_lo),
                       std::move(rhs_hi)};
}

}  // namespace

IntervalCheck check_functional_equation(const DrinfeldModule& phi, const AlgebraicElement& x,
                                        const PolyA& a, const Rat& tol) {
  if (a.is_zero()) throw std::invalid_argument("functional equation needs a nonzero operand");
  Rat s = rat_qpow(phi.q(), static_cast<long>(phi.rank()) * a.degree());
  CanonicalHeight lhs = canonical_height(phi, phi.act(a, x), tol / 2);
  CanonicalHeight rhs = canonical_height(phi, x, tol / (2 * s));
  Rat rlo = s * rhs.lo, rhi = s * rhs.hi;
  return compare_intervals(lhs, rlo, rhi, tol);
}

IntervalCheck check_translation_invariance(const DrinfeldModule& phi, const AlgebraicElement& x,
                                           const TorsionPoint& t, const Rat& tol) {
  if (!phi.act(t.annihilator, t.value).is_zero())
    throw std::invalid_argument("claimed torsion point is not killed by its annihilator");
  CanonicalHeight lhs = canonical_height(phi, x + t.value, tol / 2);
  CanonicalHeight rhs = canonical_height(phi, x, tol / 2);
  return compare_intervals(lhs, rhs.lo, rhs.hi, tol);
}

IntervalCheck check_isogeny_relation(const DrinfeldModule& rho, const OreK& target_T,
                                     const OreK& P, const AlgebraicElement& x, const Rat& tol) {
  if (P.is_zero()) throw std::invalid_argument("the zero map is not an isogeny");
  if (!(target_T * P == P * rho.phi_T()))
    throw std::invalid_argument("twisted polynomial does not intertwine the two actions");
  unsigned q = rho.q();
  Rat s = rat_qpow(q, P.deg_tau());
  const AmbientPtr& M = x.ambient();
  auto lift = [&](const RatFunc& c) { return M->from_k(c); };
  CanonicalHeight lhs = canonical_height_raw(target_T, P.eval(x, lift), tol / 2);
  CanonicalHeight rhs = canonical_height(rho, x, tol / (2 * s));
  Rat rlo = s * rhs.lo, rhi = s * rhs.hi;
  return compare_intervals(lhs, rlo, rhi, tol);
}

ScanOutcome minimal_height_scan_bounded(const DrinfeldModule& phi, unsigned max_ext_degree,
                                        unsigned max_coeff_degree, const Rat& tol,
                                        size_t budget) {
  ScanOutcome out{{}, true};
  try {
    out.rows = minimal_height_scan(phi, max_ext_degree, max_coeff_degree, tol, budget);
  } catch (ScanBudget& partial) {
    out.rows = std::move(partial.rows);
    out.complete = false;
  }
  return out;
}

std::vector<SearchRow> minimal_height_scan(const DrinfeldModule& phi, unsigned max_ext_degree,
                                           unsigned max_coeff_degree, const Rat& tol,
                                           size_t budget) {
  unsigned q = phi.q();
  std::vector<SearchRow> rows;
  size_t visited = 0;
  auto take = [&](const AlgebraicElement& x) {
    if (++visited > budget) throw ScanBudget{std::move(rows)};
    TorsionDecision dec = is_torsion(phi, x);
    if (dec.torsion) {
      rows.push_back(SearchRow{x.min_poly(), weil_height(x), Rat(0), Rat(0), true, dec.steps});
    } else {
      CanonicalHeight ch = canonical_height(phi, x, tol);
      rows.push_back(SearchRow{x.min_poly(), ch.weil, ch.lo, ch.hi, false, ch.iterations});
    }
  };

  std::vector<PolyA> coeffs = polys_of_degree_below(q, max_coeff_degree + 1);
  if (max_ext_degree >= 1) {
    AmbientPtr k = Ambient::rational(q);
    for (unsigned dd = 0; dd <= max_coeff_degree; ++dd)
      for (const PolyA& den : monic_polys_of_degree(q, dd))
        for (const PolyA& num : coeffs) {
          RatFunc c(num, den);
          if (!(c.num() == num) || !(c.den() == den)) continue;  // counted at reduced form
          take(k->from_k(c));
        }
  }

  for (unsigned d = 2; d <= max_ext_degree; ++d) {
    std::vector<unsigned> idx(d, 0);
    for (unsigned ld = 0; ld <= max_coeff_degree; ++ld)
      for (const PolyA& lead : monic_polys_of_degree(q, ld)) {
        // odometer over the d lower coefficients
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
          std::vector<RatFunc> f;
          PolyA content = lead;
          for (unsigned i = 0; i < d; ++i) {
            f.emplace_back(coeffs[idx[i]]);
            content = poly_gcd(content, coeffs[idx[i]]);
          }
          f.emplace_back(lead);
          if (content.degree() == 0 && !f[0].is_zero()) {
            try {
              AmbientPtr M = Ambient::create(PolyK(std::move(f), RatFunc(q)));
              if (M->degree() == d) take(M->generator());
            } catch (const std::invalid_argument&) {
              // not certifiably irreducible at this degree; skip
            }
          }
          unsigned i = 0;
          while (i < d && ++idx[i] == coeffs.size()) idx[i++] = 0;
          if (i == d) break;
        }
      }
  }
  return rows;
}

}  // namespace dh
