#pragma once

#include <gmpxx.h>
#include <string>

namespace dh {

// Exact rational numbers (heights, Newton-polygon slopes, tolerances).
using Rat = mpq_class;

// q^e with e possibly negative.
Rat rat_qpow(unsigned q, long e);

// Smallest n >= 0 with q^n >= x; requires x > 0.
unsigned ceil_log_q(unsigned q, const Rat& x);

// Canonical decimal-free rendering: "num" or "num/den".
std::string rat_str(const Rat& x);

}  // namespace dh
