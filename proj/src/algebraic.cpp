#include "dh/algebraic.hpp"

#include <stdexcept>

#include "dh/factor.hpp"
#include "dh/place.hpp"

namespace dh {

namespace {

// Clear denominators and divide by content: monic-leading primitive integral
// form of a nonzero f over k.
IntPolyX make_primitive(const PolyK& f) {
  if (f.is_zero()) throw std::domain_error("primitive form of the zero polynomial");
  unsigned q = f.coeff(0).q();
  PolyA lcm(q, {1});
  for (int i = 0; i <= f.degree(); ++i) {
    const PolyA& d = f.coeff(static_cast<unsigned>(i)).den();
    lcm = (lcm * d) / poly_gcd(lcm, d);
  }
  std::vector<PolyA> cs;
  for (int i = 0; i <= f.degree(); ++i) {
    const RatFunc& ci = f.coeff(static_cast<unsigned>(i));
    cs.push_back(ci.num() * (lcm / ci.den()));
  }
  PolyA content(q);
  for (const PolyA& c : cs) content = poly_gcd(content, c);
  for (PolyA& c : cs) c = c / content;
  FqElem scale = cs.back().leading_coeff().inverse();
  for (PolyA& c : cs) c = c * scale;
  return IntPolyX{q, std::move(cs)};
}

bool eisenstein_at(const IntPolyX& f, const PolyA& P) {
  int d = f.degree();
  if (d < 1) return false;
  Place v = Place::finite(P);
  if (f.coeff(static_cast<unsigned>(d)).is_zero() ||
      v.valuation(f.coeff(static_cast<unsigned>(d))) != 0)
    return false;
  if (f.coeff(0).is_zero() || v.valuation(f.coeff(0)) != 1) return false;
  for (int i = 1; i < d; ++i) {
    const PolyA& c = f.coeff(static_cast<unsigned>(i));
    if (!c.is_zero() && v.valuation(c) < 1) return false;
  }
  return true;
}

// Exact rational-root existence test for a primitive F in A[X].
bool has_root_in_k(const IntPolyX& F) {
  unsigned q = F.q;
  int d = F.degree();
  const PolyA& A0 = F.coeff(0);
  if (A0.is_zero()) return true;  // root 0
  const PolyA& Ad = F.coeff(static_cast<unsigned>(d));
  for (const PolyA& den : monic_divisors(Ad)) {
    for (const PolyA& num0 : monic_divisors(A0)) {
      for (unsigned u = 1; u < q; ++u) {
        PolyA num = num0 * FqElem(q, u);
        // evaluate sum A_i num^i den^(d-i)
        PolyA acc(q);
        for (int i = 0; i <= d; ++i)
          acc = acc + F.coeff(static_cast<unsigned>(i)) * num.pow(static_cast<unsigned>(i)) *
                          den.pow(static_cast<unsigned>(d - i));
        if (acc.is_zero()) return true;
      }
    }
  }
  return false;
}

}  // namespace

const PolyA& IntPolyX::coeff(unsigned i) const {
  if (i >= c.size()) throw std::out_of_range("IntPolyX coefficient index");
  return c[i];
}

PolyK IntPolyX::to_polyk() const {
  std::vector<RatFunc> cs;
  cs.reserve(c.size());
  for (const PolyA& p : c) cs.emplace_back(p);
  return PolyK(std::move(cs), RatFunc(q));
}

std::string IntPolyX::to_string(const std::string& var) const {
  return to_polyk().to_string(var, [](const RatFunc& r) { return r.to_string(); });
}

Ambient::Ambient(unsigned q, PolyK modulus, IntPolyX primitive, Certificate cert, PolyA eis,
                 std::string gen_name)
    : q_(q), modulus_(std::move(modulus)), primitive_(std::move(primitive)), cert_(cert),
      eis_prime_(std::move(eis)), gen_name_(std::move(gen_name)) {}

AmbientPtr Ambient::rational(unsigned q) {
  PolyK f = PolyK::X(RatFunc::one(q));
  IntPolyX prim{q, {PolyA(q), PolyA(q, {1})}};
  return AmbientPtr(new Ambient(q, std::move(f), std::move(prim), Certificate::kRationalField,
                                PolyA(q), "x"));
}

AmbientPtr Ambient::create(const PolyK& f, const std::string& generator_name) {
  if (f.degree() < 1) throw std::invalid_argument("ambient modulus must have degree >= 1");
  unsigned q = f.coeff(0).q();
  IntPolyX prim = make_primitive(f);
  int d = prim.degree();
  PolyK monic = prim.to_polyk().monic();
  if (d == 1)
    return AmbientPtr(new Ambient(q, std::move(monic), std::move(prim), Certificate::kLinear,
                                  PolyA(q), generator_name));
  if (d <= 3) {
    if (has_root_in_k(prim))
      throw std::invalid_argument("ambient modulus is reducible (rational root): " + prim.to_string());
    return AmbientPtr(new Ambient(q, std::move(monic), std::move(prim),
                                  Certificate::kNoRationalRoot, PolyA(q), generator_name));
  }
  // Degree >= 4: only an Eisenstein certificate is accepted.
  if (!prim.coeff(0).is_zero()) {
    for (const auto& [P, e] : factorize(prim.coeff(0)).factors) {
      (void)e;
      if (eisenstein_at(prim, P))
        return AmbientPtr(new Ambient(q, std::move(monic), std::move(prim),
                                      Certificate::kEisenstein, P, generator_name));
    }
  }
  throw std::invalid_argument(
      "cannot certify irreducibility of a degree >= 4 modulus without an Eisenstein prime: " +
      prim.to_string());
}

AmbientPtr Ambient::eisenstein(const PolyK& f, const PolyA& P, const std::string& generator_name) {
  unsigned q = f.coeff(0).q();
  IntPolyX prim = make_primitive(f);
  if (prim.degree() == 1)
    return AmbientPtr(new Ambient(q, prim.to_polyk().monic(), std::move(prim), Certificate::kLinear,
                                  PolyA(q), generator_name));
  if (!eisenstein_at(prim, P))
    throw std::invalid_argument("polynomial is not Eisenstein at " + P.to_string() + ": " +
                                prim.to_string());
  PolyK monic = prim.to_polyk().monic();
  return AmbientPtr(new Ambient(q, std::move(monic), std::move(prim), Certificate::kEisenstein, P,
                                generator_name));
}

const PolyA& Ambient::eisenstein_prime() const {
  if (cert_ != Certificate::kEisenstein)
    throw std::logic_error("ambient has no Eisenstein certificate");
  return eis_prime_;
}

AlgebraicElement Ambient::zero() const {
  return AlgebraicElement(shared_from_this(), std::vector<RatFunc>(degree(), RatFunc(q_)));
}

AlgebraicElement Ambient::one() const { return from_k(RatFunc::one(q_)); }

AlgebraicElement Ambient::generator() const {
  std::vector<RatFunc> co(degree(), RatFunc(q_));
  if (degree() == 1) {
    // k itself: the class of X is the root of the linear modulus.
    RatFunc a0 = modulus_.coeff(0);
    co[0] = -a0;
  } else {
    co[1] = RatFunc::one(q_);
  }
  return AlgebraicElement(shared_from_this(), std::move(co));
}

AlgebraicElement Ambient::from_k(const RatFunc& c) const {
  if (c.q() != q_) throw std::invalid_argument("mixed coefficient fields in ambient element");
  std::vector<RatFunc> co(degree(), RatFunc(q_));
  co[0] = c;
  return AlgebraicElement(shared_from_this(), std::move(co));
}

AlgebraicElement Ambient::element(std::vector<RatFunc> coords) const {
  return AlgebraicElement(shared_from_this(), std::move(coords));
}

bool Ambient::same_as(const Ambient& o) const {
  return q_ == o.q_ && modulus_ == o.modulus_;
}

namespace {
void check_same_ambient(const AlgebraicElement& a, const AlgebraicElement& b) {
  if (!a.ambient()->same_as(*b.ambient()))
    throw std::invalid_argument("elements live in different ambient extensions");
}
}  // namespace

AlgebraicElement::AlgebraicElement(AmbientPtr ambient, std::vector<RatFunc> coords)
    : amb_(std::move(ambient)), co_(std::move(coords)) {
  if (co_.size() != amb_->degree())
    throw std::invalid_argument("coordinate vector length must equal the ambient degree");
}

bool AlgebraicElement::is_zero() const {
  for (const RatFunc& c : co_)
    if (!c.is_zero()) return false;
  return true;
}

bool AlgebraicElement::is_one() const {
  if (!co_[0].is_one()) return false;
  for (size_t i = 1; i < co_.size(); ++i)
    if (!co_[i].is_zero()) return false;
  return true;
}

bool AlgebraicElement::in_k() const {
  for (size_t i = 1; i < co_.size(); ++i)
    if (!co_[i].is_zero()) return false;
  return true;
}

RatFunc AlgebraicElement::as_k() const {
  if (!in_k()) throw std::domain_error("element does not lie in k");
  return co_[0];
}

AlgebraicElement AlgebraicElement::operator+(const AlgebraicElement& o) const {
  check_same_ambient(*this, o);
  std::vector<RatFunc> r;
  r.reserve(co_.size());
  for (size_t i = 0; i < co_.size(); ++i) r.push_back(co_[i] + o.co_[i]);
  return AlgebraicElement(amb_, std::move(r));
}

AlgebraicElement AlgebraicElement::operator-(const AlgebraicElement& o) const {
  return *this + (-o);
}

AlgebraicElement AlgebraicElement::operator-() const {
  std::vector<RatFunc> r;
  r.reserve(co_.size());
  for (const RatFunc& c : co_) r.push_back(-c);
  return AlgebraicElement(amb_, std::move(r));
}

AlgebraicElement AlgebraicElement::operator*(const AlgebraicElement& o) const {
  check_same_ambient(*this, o);
  unsigned D = amb_->degree();
  RatFunc z(amb_->q());
  PolyK a(std::vector<RatFunc>(co_), z), b(std::vector<RatFunc>(o.co_), z);
  PolyK prod = (a * b) % amb_->modulus();
  std::vector<RatFunc> r(D, z);
  for (unsigned i = 0; i < D; ++i) r[i] = prod.coeff(i);
  return AlgebraicElement(amb_, std::move(r));
}

AlgebraicElement AlgebraicElement::operator/(const AlgebraicElement& o) const {
  return *this * o.inverse();
}

AlgebraicElement AlgebraicElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in ambient extension");
  RatFunc z(amb_->q());
  PolyK a(std::vector<RatFunc>(co_), z);
  auto xg = poly_xgcd(a, amb_->modulus());
  if (xg.g.degree() != 0) throw std::logic_error("ambient modulus is not irreducible");
  PolyK inv = (xg.s * PolyK::constant(xg.g.coeff(0).inverse())) % amb_->modulus();
  std::vector<RatFunc> r(amb_->degree(), z);
  for (unsigned i = 0; i < amb_->degree(); ++i) r[i] = inv.coeff(i);
  return AlgebraicElement(amb_, std::move(r));
}

AlgebraicElement AlgebraicElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgebraicElement r = one_like();
  AlgebraicElement b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = r * b;
    b = b * b;
    u >>= 1;
  }
  return r;
}

bool AlgebraicElement::operator==(const AlgebraicElement& o) const {
  check_same_ambient(*this, o);
  return co_ == o.co_;
}

bool AlgebraicElement::operator<(const AlgebraicElement& o) const {
  check_same_ambient(*this, o);
  for (size_t i = 0; i < co_.size(); ++i) {
    if (co_[i] == o.co_[i]) continue;
    return co_[i] < o.co_[i];
  }
  return false;
}

PolyK AlgebraicElement::min_poly_monic() const {
  unsigned D = amb_->degree();
  RatFunc z(amb_->q());
  // Row-reduce the powers 1, x, x^2, ... with an augmented combination part;
  // the first power that reduces to zero yields the (monic, minimal) relation.
  struct Row {
    std::vector<RatFunc> vec;   // length D
    std::vector<RatFunc> comb;  // coefficients over the powers
    unsigned pivot;
  };
  std::vector<Row> rows;
  AlgebraicElement p = one_like();
  for (unsigned j = 0; j <= D; ++j) {
    std::vector<RatFunc> vec = p.coords();
    std::vector<RatFunc> comb(j + 1, z);
    comb[j] = z.one_like();
    for (const Row& r : rows) {
      if (vec[r.pivot].is_zero()) continue;
      RatFunc f = vec[r.pivot];
      for (unsigned i = 0; i < D; ++i) vec[i] = vec[i] - f * r.vec[i];
      for (size_t i = 0; i < r.comb.size(); ++i) comb[i] = comb[i] - f * r.comb[i];
    }
    unsigned piv = D;
    for (unsigned i = 0; i < D; ++i)
      if (!vec[i].is_zero()) { piv = i; break; }
    if (piv == D) return PolyK(std::move(comb), z);  // monic by construction
    RatFunc inv = vec[piv].inverse();
    for (unsigned i = 0; i < D; ++i) vec[i] = vec[i] * inv;
    for (RatFunc& c : comb) c = c * inv;
    rows.push_back({std::move(vec), std::move(comb), piv});
    p = p * *this;
  }
  throw std::logic_error("minimal polynomial not found below ambient degree + 1");
}

IntPolyX AlgebraicElement::min_poly() const { return make_primitive(min_poly_monic()); }

std::string AlgebraicElement::to_string() const {
  RatFunc z(amb_->q());
  PolyK p(std::vector<RatFunc>(co_), z);
  std::string gen = amb_->degree() == 1 ? "1" : amb_->generator_name();
  if (p.is_zero()) return "0";
  if (amb_->degree() == 1) return co_[0].to_string();
  return p.to_string(gen, [](const RatFunc& r) { return r.to_string(); });
}

std::vector<Rat> conjugate_valuations(const AlgebraicElement& x, const Place& v) {
  if (x.is_zero()) throw std::domain_error("conjugate valuations of zero");
  if (v.q() != x.q()) throw std::invalid_argument("place and element over different F_q");
  PolyK f = x.min_poly_monic();
  NewtonPolygon np = NewtonPolygon::compute(f, v);
  return np.root_valuations();
}

}  // namespace dh
