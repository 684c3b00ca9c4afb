#include "dh/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dh/factor.hpp"

namespace dh {

namespace {

constexpr size_t kGroupCap = 1u << 20;
constexpr size_t kEnumCap = 1u << 16;

mpz_class mpz_qpow(unsigned q, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

PolyA mul_mod(const PolyA& a, const PolyA& b, const PolyA& mod) { return (a * b) % mod; }

PolyA pow_mod_small(const PolyA& a, unsigned e, const PolyA& mod) {
  PolyA r(a.q(), {1});
  for (unsigned i = 0; i < e; ++i) r = mul_mod(r, a, mod);
  return r;
}

void require_subgroup(const UnitGroup& G, const Subgroup& H) {
  if (H.empty() || !std::is_sorted(H.begin(), H.end()))
    throw std::invalid_argument("subgroup must be a sorted nonempty residue set");
  if (H.size() > 512) throw std::length_error("subgroup too large to validate");
  for (const PolyA& h : H)
    if (!std::binary_search(G.elements.begin(), G.elements.end(), h))
      throw std::invalid_argument("subgroup member outside the unit group");
  for (const PolyA& a : H)
    for (const PolyA& b : H)
      if (!std::binary_search(H.begin(), H.end(), mul_mod(a, b, G.modulus)))
        throw std::invalid_argument("residue set is not closed under multiplication");
}

// Sorted multiset of min(0, conjugate valuation), replicated to size n.
std::vector<Rat> min_profile(const AlgebraicElement& x, const Place& v, size_t n) {
  std::vector<Rat> out;
  if (x.is_zero()) {
    out.assign(n, Rat(0));
    return out;
  }
  std::vector<Rat> vals = conjugate_valuations(x, v);
  if (n % vals.size() != 0) throw std::logic_error("profile sizes are incompatible");
  size_t rep = n / vals.size();
  for (const Rat& w : vals) {
    Rat m = std::min(Rat(0), w);
    for (size_t i = 0; i < rep; ++i) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

size_t conjugate_count(const AlgebraicElement& x) {
  return x.is_zero() ? 1 : static_cast<size_t>(x.min_poly().degree());
}

std::string profile_str(const std::vector<Rat>& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += rat_str(p[i]);
  }
  return s + "]";
}

}  // namespace

PowerCongruence power_congruence_params(const PolyA& P, unsigned residue_degree) {
  if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P))
    throw std::invalid_argument("modulus must be monic irreducible of positive degree");
  if (residue_degree == 0) throw std::invalid_argument("residue degree must be positive");
  unsigned q = P.q();
  unsigned s = q - 1;
  unsigned n = s * residue_degree;
  unsigned d = static_cast<unsigned>(P.degree());
  if (n % d != 0)
    throw std::invalid_argument("residue degree incompatible: deg P must divide (q-1)f");
  return PowerCongruence{P, residue_degree, n / d, n, s};
}

bool check_power_congruence(const PowerCongruence& pc) {
  DrinfeldModule c = DrinfeldModule::carlitz(pc.P.q());
  OreK op = c.action(pc.P.pow(pc.nu));
  if (op.deg_tau() != static_cast<int>(pc.n)) return false;
  if (!op.coeff(pc.n).is_one()) return false;
  for (unsigned i = 0; i < pc.n; ++i) {
    const RatFunc& a = op.coeff(i);
    if (a.is_zero()) continue;
    if (!a.is_polynomial() || !(a.num() % pc.P).is_zero()) return false;
  }
  return true;
}

UnitGroup unit_group(const PolyA& m, unsigned e) {
  if (m.degree() < 1 || !m.is_monic() || !is_irreducible(m))
    throw std::invalid_argument("unit group modulus must be a power of a monic irreducible");
  if (e < 1) throw std::invalid_argument("exponent must be positive");
  unsigned q = m.q();
  unsigned dm = static_cast<unsigned>(m.degree());
  if (mpz_qpow(q, static_cast<unsigned long>(e) * dm) > kGroupCap)
    throw std::length_error("unit group exceeds the size budget");
  UnitGroup G{m, e, m.pow(e), {}};
  for (PolyA& a : polys_of_degree_below(q, e * dm))
    if (poly_gcd(a, m).is_one()) G.elements.push_back(std::move(a));
  std::sort(G.elements.begin(), G.elements.end());
  mpz_class expect = mpz_qpow(q, static_cast<unsigned long>(e - 1) * dm) * (mpz_qpow(q, dm) - 1);
  if (expect != mpz_class(static_cast<unsigned long>(G.elements.size())))
    throw std::logic_error("unit group order does not match the product formula");
  return G;
}

std::vector<Subgroup> subgroups_of_unit_group(const UnitGroup& G, unsigned max_index) {
  if (max_index > 4)
    throw std::length_error("subgroup enumeration is implemented for index below 4");
  std::vector<Subgroup> out;
  if (max_index < 2) return out;
  out.push_back(G.elements);
  for (unsigned p : {2u, 3u}) {
    if (p >= max_index) continue;
    // kernels of the order-p characters: hyperplanes of G / G^p
    std::set<PolyA> powers;
    for (const PolyA& g : G.elements) powers.insert(pow_mod_small(g, p, G.modulus));
    std::set<PolyA> spanned = powers;
    std::vector<PolyA> basis;
    for (const PolyA& g : G.elements) {
      if (spanned.size() == G.elements.size()) break;
      if (spanned.count(g)) continue;
      basis.push_back(g);
      std::set<PolyA> grown = spanned;
      PolyA gp = g;
      for (unsigned j = 1; j < p; ++j) {
        for (const PolyA& h : spanned) grown.insert(mul_mod(h, gp, G.modulus));
        gp = mul_mod(gp, g, G.modulus);
      }
      spanned = std::move(grown);
    }
    size_t s = basis.size();
    if (s == 0) continue;
    if (s > 16) throw std::length_error("character space too large");
    // coordinates of every element over the basis, mod p-th powers
    std::map<PolyA, std::vector<unsigned>> coords;
    std::vector<unsigned> digits(s, 0);
    while (true) {
      PolyA base(G.m.q(), {1});
      for (size_t i = 0; i < s; ++i) base = mul_mod(base, pow_mod_small(basis[i], digits[i], G.modulus), G.modulus);
      for (const PolyA& h : powers) {
        auto [it, fresh] = coords.emplace(mul_mod(base, h, G.modulus), digits);
        if (!fresh) throw std::logic_error("basis coordinates collide");
      }
      size_t i = 0;
      while (i < s && ++digits[i] == p) digits[i++] = 0;
      if (i == s) break;
    }
    if (coords.size() != G.elements.size())
      throw std::logic_error("basis coordinates do not cover the group");
    // normalized nonzero functionals, one per hyperplane
    std::vector<unsigned> chi(s, 0);
    while (true) {
      size_t i = 0;
      while (i < s && ++chi[i] == p) chi[i++] = 0;
      if (i == s) break;
      size_t lead = s;
      for (size_t j = s; j-- > 0;)
        if (chi[j]) lead = j;
      if (chi[lead] != 1) continue;
      Subgroup H;
      for (const PolyA& g : G.elements) {
        unsigned dot = 0;
        const std::vector<unsigned>& cg = coords.at(g);
        for (size_t j = 0; j < s; ++j) dot += chi[j] * cg[j];
        if (dot % p == 0) H.push_back(g);
      }
      out.push_back(std::move(H));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> subgroups_by_closure(const UnitGroup& G, unsigned max_index) {
  if (G.elements.size() > 4096) throw std::length_error("closure enumeration budget exceeded");
  std::set<Subgroup> seen;
  Subgroup trivial{PolyA(G.m.q(), {1})};
  seen.insert(trivial);
  std::vector<Subgroup> queue{trivial};
  while (!queue.empty()) {
    Subgroup S = std::move(queue.back());
    queue.pop_back();
    for (const PolyA& g : G.elements) {
      if (std::binary_search(S.begin(), S.end(), g)) continue;
      std::set<PolyA> grown(S.begin(), S.end());
      PolyA h = g;
      while (!grown.count(h)) {
        for (const PolyA& a : S) grown.insert(mul_mod(a, h, G.modulus));
        h = mul_mod(h, g, G.modulus);
      }
      Subgroup next(grown.begin(), grown.end());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out;
  for (const Subgroup& S : seen)
    if (S.size() * max_index > G.elements.size()) out.push_back(S);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PolyA> representatives(const PolyA& m, unsigned e, const std::vector<PolyA>& R0) {
  if (m.degree() < 1 || !m.is_monic()) throw std::invalid_argument("modulus must be monic of positive degree");
  if (e < 1) throw std::invalid_argument("exponent must be positive");
  unsigned q = m.q();
  mpz_class want = mpz_qpow(q, static_cast<unsigned>(m.degree()));
  if (want > kEnumCap) throw std::length_error("digit expansion budget exceeded");
  if (mpz_class(static_cast<unsigned long>(R0.size())) != want)
    throw std::invalid_argument("digit set has the wrong cardinality");
  std::vector<PolyA> reduced;
  for (const PolyA& r : R0) reduced.push_back(r % m);
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end())
    throw std::invalid_argument("digit set has a repeated residue");

  double total = std::pow(static_cast<double>(R0.size()), static_cast<double>(e));
  if (total > static_cast<double>(kEnumCap)) throw std::length_error("digit expansion budget exceeded");
  std::vector<PolyA> powers{PolyA(q, {1})};
  for (unsigned i = 1; i < e; ++i) powers.push_back(powers.back() * m);
  std::vector<size_t> digit(e, 0);
  std::vector<PolyA> out;
  while (true) {
    PolyA sum(q);
    for (unsigned i = 0; i < e; ++i) sum = sum + R0[digit[i]] * powers[i];
    out.push_back(std::move(sum));
    size_t i = 0;
    while (i < e && ++digit[i] == R0.size()) digit[i++] = 0;
    if (i == e) break;
  }
  PolyA mod = m.pow(e);
  std::vector<PolyA> check;
  for (const PolyA& a : out) check.push_back(a % mod);
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw std::logic_error("digit expansions collide mod m^e");
  return out;
}

BoundedRepresentatives bounded_representatives(const PolyA& m) {
  if (m.degree() < 1 || !m.is_monic()) throw std::invalid_argument("modulus must be monic of positive degree");
  BoundedRepresentatives r{polys_of_degree_below(m.q(), static_cast<unsigned>(m.degree())),
                           std::max(0, m.degree() - 1), m.degree()};
  std::sort(r.R0.begin(), r.R0.end());
  return r;
}

PigeonholePair pigeonhole_find(const UnitGroup& G, const Subgroup& H, unsigned B) {
  if (B < 2) throw std::invalid_argument("index bound must exceed 1");
  require_subgroup(G, H);
  if (G.elements.size() % H.size() != 0) throw std::logic_error("subgroup order must divide the group order");
  if (G.elements.size() / H.size() >= B)
    throw std::invalid_argument("subgroup index is not below the stated bound");
  unsigned q = G.m.q();
  unsigned dm = static_cast<unsigned>(G.m.degree());
  mpz_class NB2 = 2 * mpz_qpow(q, 2) * B;  // 2 N B with N = q^2
  if (mpz_qpow(q, G.e) < NB2)
    throw std::invalid_argument("q^e >= 2 N B is required for the pigeonhole step");
  unsigned c = 1;
  while (mpz_qpow(q, c * dm) < NB2) ++c;

  BoundedRepresentatives br = bounded_representatives(G.m);
  const std::vector<PolyA>& R0 = br.R0;
  std::vector<PolyA> powers{PolyA(q, {1})};
  for (unsigned i = 1; i < G.e; ++i) powers.push_back(powers.back() * G.m);

  size_t N = static_cast<size_t>(q) * q;
  mpz_class window = NB2 * mpz_qpow(q, static_cast<unsigned>(br.d_m));

  unsigned tail_len = G.e - c;
  std::vector<size_t> tail(tail_len, 0);
  std::vector<size_t> low(c, 0);
  while (true) {
    PolyA shift(q);
    for (unsigned i = 0; i < tail_len; ++i) shift = shift + R0[tail[i]] * powers[c + i];
    std::vector<PolyA> block;
    std::fill(low.begin(), low.end(), 0);
    while (true) {
      PolyA a = shift;
      for (unsigned i = 0; i < c; ++i) a = a + R0[low[i]] * powers[i];
      if (std::binary_search(H.begin(), H.end(), a)) block.push_back(std::move(a));
      size_t i = 0;
      while (i < c && ++low[i] == R0.size()) low[i++] = 0;
      if (i == c) break;
    }
    if (block.size() >= N + 1) {
      const PolyA& a = block.front();
      for (size_t j = 1; j < block.size(); ++j) {
        PolyA diff = block[j] - a;
        if (diff.degree() >= 2) {
          mpz_class sz = mpz_qpow(q, static_cast<unsigned>(diff.degree()));
          if (!(2 < sz && sz < window)) throw std::logic_error("pigeonhole window violated");
          return PigeonholePair{a, block[j], c, diff.degree(), window};
        }
      }
      throw std::logic_error("overfull block without a degree-2 difference");
    }
    size_t i = 0;
    while (i < tail_len && ++tail[i] == R0.size()) tail[i++] = 0;
    if (i == tail_len) break;
  }
  throw std::logic_error("no overfull block found despite the counting bound");
}

RefinedPair pigeonhole_refined(const UnitGroup& G, const Subgroup& H, unsigned B,
                               const DrinfeldModule& phi) {
  if (phi.rank() != 1) throw std::invalid_argument("refined pigeonhole needs a rank-1 module");
  if (phi.q() != G.m.q()) throw std::invalid_argument("field size mismatch");
  PigeonholePair base = pigeonhole_find(G, H, B);
  unsigned q = G.m.q();
  int j = std::max(base.a.degree(), base.b.degree()) + 1;
  PolyA lam = PolyA::T(q).pow(static_cast<unsigned>(j));
  PolyA a = base.a + lam * G.modulus;
  PolyA b = base.b + lam * G.modulus;
  if (a % G.modulus != base.a || b % G.modulus != base.b)
    throw std::logic_error("shift changed the residues");
  if (a.degree() != b.degree() || a.degree() != j + G.modulus.degree())
    throw std::logic_error("shift failed to equalize degrees");
  OreK pa = phi.action(a), pb = phi.action(b);
  RatFunc mu_a = pa.coeff(static_cast<unsigned>(pa.deg_tau()));
  RatFunc mu_b = pb.coeff(static_cast<unsigned>(pb.deg_tau()));
  if (!(mu_a == mu_b)) throw std::logic_error("leading coefficients differ after the shift");
  PolyA diff = b - a;
  mpz_class window = 2 * B * mpz_qpow(q, 2 + static_cast<unsigned>(bounded_representatives(G.m).d_m));
  mpz_class sz = mpz_qpow(q, static_cast<unsigned>(diff.degree()));
  if (!(2 < sz && sz < window)) throw std::logic_error("refined window violated");
  return RefinedPair{a, b, diff.degree(), mu_a, mu_b, window};
}

ProfileCheck check_growth_identity(const PowerCongruence& pc, const AlgebraicElement& x,
                                   const Place& v) {
  if (v.is_infinite()) throw std::invalid_argument("the growth identity concerns finite places");
  DrinfeldModule c = DrinfeldModule::carlitz(pc.P.q());
  AlgebraicElement y = c.act(pc.P.pow(pc.nu), x);
  size_t n = std::lcm(conjugate_count(x), conjugate_count(y));
  std::vector<Rat> left = min_profile(y, v, n);
  std::vector<Rat> right = min_profile(x, v, n);
  Rat scale = rat_qpow(pc.P.q(), pc.n);
  for (Rat& r : right) r *= scale;
  std::sort(right.begin(), right.end());
  if (left == right) return ProfileCheck{true, "profiles agree: " + profile_str(left)};
  return ProfileCheck{false, "image profile " + profile_str(left) + " != scaled profile " +
                                 profile_str(right)};
}

ProfileCheck check_power_deviation(const PowerCongruence& pc, const AlgebraicElement& x) {
  unsigned q = pc.P.q();
  Place v = Place::finite(pc.P);
  DrinfeldModule c = DrinfeldModule::carlitz(q);
  AlgebraicElement y = c.act(pc.P.pow(pc.nu), x);
  mpz_class e = mpz_qpow(q, pc.n);
  AlgebraicElement delta = y - x.pow(static_cast<long>(e.get_ui()));
  if (delta.is_zero()) return ProfileCheck{true, "difference vanishes"};
  size_t n = std::lcm(conjugate_count(x), conjugate_count(delta));
  // sorted ascending; the bound is monotone, so slot-wise dominance suffices
  std::vector<Rat> dv;
  {
    std::vector<Rat> vals = conjugate_valuations(delta, v);
    if (n % vals.size() != 0) throw std::logic_error("profile sizes are incompatible");
    size_t rep = n / vals.size();
    for (const Rat& w : vals)
      for (size_t i = 0; i < rep; ++i) dv.push_back(w);
    std::sort(dv.begin(), dv.end());
  }
  std::vector<Rat> xb = min_profile(x, v, n);
  Rat scale = rat_qpow(q, pc.n - 1);
  bool ok = true;
  for (size_t i = 0; i < n; ++i)
    if (dv[i] < 1 + scale * xb[i]) ok = false;
  std::ostringstream os;
  os << "valuations " << profile_str(dv) << " vs bound 1 + " << rat_str(scale) << "*"
     << profile_str(xb);
  return ProfileCheck{ok, os.str()};
}

namespace {

// The single integer-normalized valuation over v; empty means +infinity.
std::optional<Rat> lone_valuation(const AlgebraicElement& z, const Place& v, unsigned e_wv) {
  if (z.is_zero()) return std::nullopt;
  std::vector<Rat> vals = conjugate_valuations(z, v);
  for (const Rat& w : vals)
    if (w != vals.front()) throw std::logic_error("expected a single place over v");
  return vals.front() * e_wv;
}

Rat min0(const std::optional<Rat>& w) { return w ? std::min(Rat(0), *w) : Rat(0); }

bool gap_at_least(const std::optional<Rat>& d, const Rat& bound) { return !d || *d >= bound; }

std::string val_str(const std::optional<Rat>& w) { return w ? rat_str(*w) : "inf"; }

}  // namespace

AccelerationCheck check_acceleration(const PowerCongruence& pc, const AlgebraicElement& x,
                                     const AlgebraicElement& y, unsigned c, unsigned l,
                                     const Place& v) {
  if (c == 0) throw std::invalid_argument("gap must be positive");
  if (v.is_infinite()) throw std::invalid_argument("gap deepening concerns finite places");
  const AmbientPtr& M = x.ambient();
  unsigned e_wv = 1;
  if (M->degree() > 1) {
    if (M->certificate() != Ambient::Certificate::kEisenstein ||
        !(M->eisenstein_prime() == pc.P) || !(v == Place::finite(pc.P)))
      throw std::invalid_argument(
          "ambient must be k, or totally ramified at P with v = (P), so the place is unique");
    e_wv = M->degree();
  }
  std::optional<Rat> vx = lone_valuation(x, v, e_wv);
  std::optional<Rat> vy = lone_valuation(y, v, e_wv);
  std::optional<Rat> vd = lone_valuation(x - y, v, e_wv);
  if (!gap_at_least(vd, Rat(static_cast<long>(c)) + min0(vx) + min0(vy)))
    return AccelerationCheck{false, true,
                             "hypothesis not satisfied: val(x-y) = " + val_str(vd)};
  DrinfeldModule C = DrinfeldModule::carlitz(pc.P.q());
  PolyA step = pc.P.pow(pc.nu);
  AlgebraicElement X = x, Y = y, D = x - y;
  for (unsigned i = 0; i < l; ++i) {
    X = C.act(step, X);
    Y = C.act(step, Y);
    D = C.act(step, D);
  }
  std::optional<Rat> vD = lone_valuation(D, v, e_wv);
  Rat bound = Rat(static_cast<long>(c + l)) + min0(lone_valuation(X, v, e_wv)) +
              min0(lone_valuation(Y, v, e_wv));
  bool ok = gap_at_least(vD, bound);
  std::ostringstream os;
  os << "after " << l << " steps: val = " << val_str(vD) << ", required >= " << rat_str(bound);
  return AccelerationCheck{true, ok, os.str()};
}

std::vector<FloorRow> check_carlitz_floor(const CyclotomicField& kP,
                                          const std::vector<AlgebraicElement>& sample) {
  unsigned q = kP.P.q();
  DrinfeldModule C = DrinfeldModule::carlitz(q);
  Rat exponent = Rat(11) * q * gamma_bound(C);
  // a fractional exponent is rounded down, which only strengthens the floor
  mpz_class efl = exponent.get_num() / exponent.get_den();
  Rat floor = Rat(1) / rat_qpow(q, efl.get_ui());
  std::vector<FloorRow> rows;
  for (const AlgebraicElement& x : sample) {
    if (!x.ambient()->same_as(*kP.field))
      throw std::invalid_argument("sample element lives outside the division field");
    TorsionDecision td = is_torsion(C, x);
    if (td.torsion) {
      rows.push_back(FloorRow{x.to_string(), true, td.annihilator, Rat(0), floor, Rat(0), true});
      continue;
    }
    Rat tol(1, 8);
    CanonicalHeight h = canonical_height(C, x, tol);
    for (int tries = 0; h.lo <= floor && tries < 4; ++tries) {
      tol /= 64;
      h = canonical_height(C, x, tol);
    }
    Rat margin = h.lo / floor;
    rows.push_back(FloorRow{x.to_string(), false, td.annihilator, h.lo, floor, margin,
                            margin > 1});
  }
  return rows;
}

}  // namespace dh
