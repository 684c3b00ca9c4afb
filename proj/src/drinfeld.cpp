#include "dh/drinfeld.hpp"

#include <algorithm>
#include <stdexcept>

#include "dh/factor.hpp"
#include "dh/rootfind.hpp"

namespace dh {

DrinfeldModule::DrinfeldModule(unsigned q, OreK phi_T) : q_(q), phi_T_(std::move(phi_T)) {
  if (phi_T_.deg_tau() < 1)
    throw std::invalid_argument("a Drinfeld module needs positive rank");
  if (phi_T_.zero_witness().q() != q_)
    throw std::invalid_argument("coefficient field does not match q");
  if (phi_T_.constant_term() != RatFunc::T(q_))
    throw std::invalid_argument("the image of T must have constant term T");
}

DrinfeldModule DrinfeldModule::carlitz(unsigned q) {
  RatFunc z(q);
  return DrinfeldModule(q, OreK({RatFunc::T(q), RatFunc::one(q)}, z));
}

OreK DrinfeldModule::action(const PolyA& a) const {
  if (a.q() != q_) throw std::invalid_argument("operand field does not match the module");
  OreK r{RatFunc(q_)};
  for (int i = a.degree(); i >= 0; --i) {
    r = r * phi_T_;
    FqElem c = a.coeff(static_cast<unsigned>(i));
    if (!c.is_zero()) r = r + OreK::constant(RatFunc::constant(c));
  }
  return r;
}

RatFunc DrinfeldModule::act(const PolyA& a, const RatFunc& x) const { return action(a).eval(x); }

AlgebraicElement DrinfeldModule::act(const PolyA& a, const AlgebraicElement& x) const {
  const AmbientPtr& M = x.ambient();
  return action(a).eval(x, [&](const RatFunc& c) { return M->from_k(c); });
}

bool carlitz_frobenius_congruence(const PolyA& P) {
  if (P.degree() < 1 || !P.is_monic())
    throw std::invalid_argument("the congruence is about monic P of positive degree");
  OreK cP = DrinfeldModule::carlitz(P.q()).action(P);
  int d = P.degree();
  if (cP.deg_tau() != d) return false;
  if (!cP.leading().is_one()) return false;
  for (int i = 0; i < d; ++i) {
    const RatFunc& c = cP.coeff(static_cast<unsigned>(i));
    if (!c.is_polynomial()) return false;
    if (!(c.num() % P).is_zero()) return false;
  }
  return true;
}

CyclotomicField cyclotomic_field(const PolyA& P) {
  if (!is_irreducible(P) || !P.is_monic())
    throw std::invalid_argument("the division field needs a monic irreducible P");
  unsigned q = P.q();
  PolyK add = DrinfeldModule::carlitz(q).action(P).associated_additive_polynomial(q);
  std::vector<RatFunc> psi;
  for (int i = 1; i <= add.degree(); ++i) psi.push_back(add.coeff(static_cast<unsigned>(i)));
  AmbientPtr field = Ambient::eisenstein(PolyK(std::move(psi), RatFunc(q)), P, "l");
  return CyclotomicField{P, field, field->generator()};
}

PolyA torsion_annihilator(const DrinfeldModule& phi, const AlgebraicElement& x, const PolyA& m) {
  if (m.is_zero()) throw std::invalid_argument("annihilator search needs a nonzero bound");
  for (const PolyA& d : monic_divisors(m))
    if (phi.act(d, x).is_zero()) return d;
  throw std::invalid_argument("the point is not killed by the stated bound");
}

std::vector<TorsionPoint> torsion_points_in(const DrinfeldModule& phi, const PolyA& m,
                                            const AmbientPtr& M) {
  if (m.is_zero()) throw std::invalid_argument("torsion of the zero ideal is everything");
  unsigned q = phi.q();
  PolyK add = phi.action(m).associated_additive_polynomial(q);
  std::vector<AlgebraicElement> roots = roots_in_ambient(add, M);

  // the kernel of an additive map is an F_q-space; catch an incomplete search
  for (const AlgebraicElement& a : roots) {
    for (const AlgebraicElement& b : roots)
      if (!std::binary_search(roots.begin(), roots.end(), a + b))
        throw std::logic_error("torsion set is not closed under addition");
    for (unsigned c = 2; c < q; ++c) {
      AlgebraicElement s = a * M->from_k(RatFunc::constant(FqElem(q, static_cast<uint8_t>(c))));
      if (!std::binary_search(roots.begin(), roots.end(), s))
        throw std::logic_error("torsion set is not closed under scalars");
    }
  }

  std::vector<TorsionPoint> out;
  out.reserve(roots.size());
  for (AlgebraicElement& x : roots) {
    PolyA ann = torsion_annihilator(phi, x, m);
    out.push_back(TorsionPoint{std::move(x), std::move(ann)});
  }
  return out;
}

TorsionSplit torsion_decompose(const DrinfeldModule& phi, const TorsionPoint& x, const PolyA& m) {
  if (!is_irreducible(m) || !m.is_monic())
    throw std::invalid_argument("decomposition splits along a monic irreducible");
  PolyA ann = x.annihilator, mg(m.q(), {1});
  while ((ann % m).is_zero()) {
    ann = ann / m;
    mg = mg * m;
  }
  // x.annihilator = mg * ann with m not dividing ann
  const AmbientPtr& M = x.value.ambient();
  AlgebraicElement zero = M->zero();
  PolyA one(m.q(), {1});
  if (mg.degree() == 0) return TorsionSplit{TorsionPoint{zero, one}, x};
  if (ann.degree() == 0) return TorsionSplit{x, TorsionPoint{zero, one}};
  PolyXGcd xg = poly_xgcd(mg, ann);
  if (xg.g.degree() != 0) throw std::logic_error("coprime split failed");
  FqElem scale = xg.g.coeff(0).inverse();
  // (s*mg)x has order ann, (t*ann)x has order mg, and they sum to x
  AlgebraicElement primary = phi.act(xg.t * scale * ann, x.value);
  AlgebraicElement coprime = phi.act(xg.s * scale * mg, x.value);
  if (primary + coprime != x.value) throw std::logic_error("torsion split does not sum back");
  TorsionSplit split{TorsionPoint{primary, torsion_annihilator(phi, primary, mg)},
                     TorsionPoint{coprime, torsion_annihilator(phi, coprime, ann)}};
  if (split.m_primary.annihilator * split.coprime.annihilator != x.annihilator)
    throw std::logic_error("torsion split annihilators do not multiply back");
  return split;
}

}  // namespace dh
