#include "dh/bigrat.hpp"

#include <stdexcept>

namespace dh {

Rat rat_qpow(unsigned q, long e) {
  mpz_class num = 1, den = 1;
  mpz_ui_pow_ui(num.get_mpz_t(), q, static_cast<unsigned long>(e >= 0 ? e : -e));
  if (e < 0) std::swap(num, den);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

unsigned ceil_log_q(unsigned q, const Rat& x) {
  if (x <= 0) throw std::domain_error("ceil_log_q: argument must be positive");
  if (q < 2) throw std::domain_error("ceil_log_q: base must be >= 2");
  unsigned n = 0;
  Rat p(1);
  while (p < x) {
    p *= q;
    ++n;
    if (n > 100000) throw std::runtime_error("ceil_log_q: exponent out of range");
  }
  return n;
}

std::string rat_str(const Rat& x) {
  return x.get_str();
}

}  // namespace dh
