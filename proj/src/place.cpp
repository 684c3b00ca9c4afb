#include "dh/place.hpp"

#include <stdexcept>

#include "dh/factor.hpp"

namespace dh {

Place::Place(unsigned q, bool infinite, PolyA prime)
    : q_(q), infinite_(infinite), prime_(std::move(prime)) {}

Place Place::infinity(unsigned q) { return Place(q, true, PolyA(q)); }

Place Place::finite(PolyA prime) {
  unsigned q = prime.q();
  if (!prime.is_monic() || !is_irreducible(prime))
    throw std::invalid_argument("finite places need a monic irreducible: " + prime.to_string());
  return Place(q, false, std::move(prime));
}

const PolyA& Place::prime() const {
  if (infinite_) throw std::logic_error("the infinite place has no prime");
  return prime_;
}

unsigned Place::degree() const {
  return infinite_ ? 1u : static_cast<unsigned>(prime_.degree());
}

long Place::valuation(const PolyA& a) const {
  if (a.is_zero()) throw std::domain_error("valuation of zero");
  if (infinite_) return -static_cast<long>(a.degree());
  long ord = 0;
  PolyA r = a;
  while (true) {
    PolyA::DivMod dm = r.divmod(prime_);
    if (!dm.rem.is_zero()) break;
    ++ord;
    r = dm.quo;
  }
  return ord;
}

long Place::valuation(const RatFunc& x) const {
  if (x.is_zero()) throw std::domain_error("valuation of zero");
  return valuation(x.num()) - valuation(x.den());
}

std::string Place::to_string() const {
  return infinite_ ? "inf" : "(" + prime_.to_string() + ")";
}

}  // namespace dh
