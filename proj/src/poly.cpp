#include "dh/poly.hpp"

#include <stdexcept>

namespace dh {

namespace {
void check_same(const PolyA& a, const PolyA& b) {
  if (a.q() != b.q())
    throw std::invalid_argument("mixed coefficient fields F_" + std::to_string(a.q()) + " and F_" +
                                std::to_string(b.q()));
}
}  // namespace

PolyA::PolyA(unsigned q) : q_(q) {
  if (!fq_supported(q))
    throw std::invalid_argument("unsupported coefficient field F_" + std::to_string(q));
}

PolyA::PolyA(unsigned q, std::initializer_list<unsigned> low_to_high) : PolyA(q) {
  for (unsigned v : low_to_high) c_.push_back(static_cast<uint8_t>(FqElem(q, v).value()));
  trim();
}

PolyA::PolyA(unsigned q, std::vector<uint8_t> low_to_high) : PolyA(q) {
  for (uint8_t v : low_to_high) (void)FqElem(q, v);  // range check
  c_ = std::move(low_to_high);
  trim();
}

PolyA PolyA::constant(FqElem c) {
  PolyA r(c.q());
  if (!c.is_zero()) r.c_.push_back(static_cast<uint8_t>(c.value()));
  return r;
}

PolyA PolyA::monomial(FqElem c, unsigned k) {
  PolyA r(c.q());
  if (c.is_zero()) return r;
  r.c_.assign(k + 1, 0);
  r.c_[k] = static_cast<uint8_t>(c.value());
  return r;
}

void PolyA::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqElem PolyA::coeff(unsigned i) const {
  if (i >= c_.size()) return FqElem::zero(q_);
  return FqElem(q_, c_[i]);
}

FqElem PolyA::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return FqElem(q_, c_.back());
}

PolyA PolyA::monic() const { return *this * leading_coeff().inverse(); }

PolyA PolyA::operator+(const PolyA& o) const {
  check_same(*this, o);
  PolyA r(q_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = static_cast<uint8_t>((coeff(i) + o.coeff(i)).value());
  r.trim();
  return r;
}

PolyA PolyA::operator-(const PolyA& o) const { return *this + (-o); }

PolyA PolyA::operator-() const {
  PolyA r(q_);
  r.c_.reserve(c_.size());
  for (uint8_t v : c_) r.c_.push_back(static_cast<uint8_t>((-FqElem(q_, v)).value()));
  return r;
}

PolyA PolyA::operator*(const PolyA& o) const {
  check_same(*this, o);
  PolyA r(q_);
  if (is_zero() || o.is_zero()) return r;
  std::vector<FqElem> acc(c_.size() + o.c_.size() - 1, FqElem::zero(q_));
  for (size_t i = 0; i < c_.size(); ++i) {
    FqElem a(q_, c_[i]);
    if (a.is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      acc[i + j] = acc[i + j] + a * FqElem(q_, o.c_[j]);
  }
  r.c_.reserve(acc.size());
  for (const FqElem& e : acc) r.c_.push_back(static_cast<uint8_t>(e.value()));
  r.trim();
  return r;
}

PolyA PolyA::operator*(FqElem c) const {
  if (c.q() != q_) throw std::invalid_argument("mixed coefficient fields in scalar multiply");
  PolyA r(q_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (uint8_t v : c_) r.c_.push_back(static_cast<uint8_t>((FqElem(q_, v) * c).value()));
  return r;
}

PolyA PolyA::pow(unsigned e) const {
  PolyA r = PolyA(q_, {1});
  PolyA b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

PolyA::DivMod PolyA::divmod(const PolyA& d) const {
  check_same(*this, d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  PolyA quo(q_), rem = *this;
  FqElem dinv = d.leading_coeff().inverse();
  int dd = d.degree();
  while (rem.degree() >= dd) {
    unsigned k = static_cast<unsigned>(rem.degree() - dd);
    FqElem c = rem.leading_coeff() * dinv;
    PolyA t = PolyA::monomial(c, k);
    quo = quo + t;
    rem = rem - t * d;
  }
  return {quo, rem};
}

PolyA PolyA::derivative() const {
  PolyA r(q_);
  if (c_.size() <= 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    unsigned m = static_cast<unsigned>(i % fq_char(q_));
    FqElem e = FqElem(q_, c_[i]);
    FqElem s = FqElem::zero(q_);
    for (unsigned j = 0; j < m; ++j) s = s + e;
    r.c_.push_back(static_cast<uint8_t>(s.value()));
  }
  r.trim();
  return r;
}

FqElem PolyA::eval(FqElem x) const {
  FqElem r = FqElem::zero(q_);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + FqElem(q_, c_[i]);
  return r;
}

bool PolyA::operator<(const PolyA& o) const {
  check_same(*this, o);
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string PolyA::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    FqElem c(q_, c_[i]);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    std::string cs = c.to_string();
    if (i == 0) {
      out += c.needs_parens() ? "(" + cs + ")" : cs;
      continue;
    }
    if (!c.is_one()) out += (c.needs_parens() ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyA poly_gcd(PolyA a, PolyA b) {
  while (!b.is_zero()) {
    PolyA r = a % b;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

PolyXGcd poly_xgcd(const PolyA& a, const PolyA& b) {
  unsigned q = a.q();
  PolyA r0 = a, r1 = b;
  PolyA s0(q, {1}), s1(q), t0(q), t1(q, {1});
  while (!r1.is_zero()) {
    PolyA::DivMod dm = r0.divmod(r1);
    PolyA r2 = dm.rem;
    PolyA s2 = s0 - dm.quo * s1;
    PolyA t2 = t0 - dm.quo * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FqElem inv = r0.leading_coeff().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<PolyA> polys_of_degree_below(unsigned q, unsigned d) {
  unsigned long count = 1;
  for (unsigned i = 0; i < d; ++i) {
    count *= q;
    if (count > (1ul << 22)) throw std::length_error("polys_of_degree_below: enumeration too large");
  }
  std::vector<PolyA> out;
  out.reserve(count);
  for (unsigned long n = 0; n < count; ++n) {
    std::vector<uint8_t> digits;
    unsigned long m = n;
    while (m) {
      digits.push_back(static_cast<uint8_t>(m % q));
      m /= q;
    }
    out.emplace_back(q, std::move(digits));
  }
  return out;
}

std::vector<PolyA> monic_polys_of_degree(unsigned q, unsigned d) {
  std::vector<PolyA> out;
  for (const PolyA& low : polys_of_degree_below(q, d)) {
    std::vector<uint8_t> digits;
    for (unsigned i = 0; i < d; ++i) digits.push_back(static_cast<uint8_t>(low.coeff(i).value()));
    digits.push_back(1);
    out.emplace_back(q, std::move(digits));
  }
  return out;
}

}  // namespace dh
