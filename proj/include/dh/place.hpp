#pragma once

#include <string>

#include "dh/rational.hpp"

namespace dh {

// A place of k = F_q(T): either the infinite place (v = -deg) or a finite
// place given by a monic irreducible of A.  |x|_v = q^(-v(x)).
class Place {
 public:
  static Place infinity(unsigned q);
  static Place finite(PolyA prime);  // validates monic irreducible

  bool is_infinite() const { return infinite_; }
  const PolyA& prime() const;  // finite places only
  unsigned q() const { return q_; }
  unsigned degree() const;  // 1 at infinity, deg(prime) otherwise

  long valuation(const PolyA& a) const;    // rejects zero
  long valuation(const RatFunc& x) const;  // rejects zero

  bool operator==(const Place&) const = default;
  std::string to_string() const;

 private:
  Place(unsigned q, bool infinite, PolyA prime);
  unsigned q_;
  bool infinite_;
  PolyA prime_;
};

}  // namespace dh
