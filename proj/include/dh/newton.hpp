#pragma once

#include <utility>
#include <vector>

#include "dh/bigrat.hpp"
#include "dh/place.hpp"
#include "dh/polyx.hpp"
#include "dh/rational.hpp"

namespace dh {

using PolyK = Poly<RatFunc>;

/// One edge of the lower convex hull: geometric slope and horizontal length.
struct NPSegment {
  Rat slope;
  unsigned length;
};

// Newton polygon of a nonzero f in k[X] at a place v: the lower convex hull
// of the points (i, v(c_i)) over nonzero coefficients.  Hull slopes are
// strictly increasing; a segment of slope s and length l certifies l roots of
// valuation -s (in the valuation on the splitting field normalized to extend
// v with rational values).  Calibration: f = X - c has the single root
// valuation v(c).
class NewtonPolygon {
 public:
  static NewtonPolygon compute(const PolyK& f, const Place& v);

  const std::vector<std::pair<unsigned, Rat>>& points() const { return points_; }
  const std::vector<NPSegment>& segments() const { return segments_; }
  // Multiplicity of the root 0 (index of the lowest nonzero coefficient).
  unsigned order_at_zero() const { return order_; }
  // Valuations of the nonzero roots, ascending, with multiplicity; size
  // deg(f) - order_at_zero().
  std::vector<Rat> root_valuations() const;

 private:
  std::vector<std::pair<unsigned, Rat>> points_;
  std::vector<NPSegment> segments_;
  unsigned order_ = 0;
};

}  // namespace dh
