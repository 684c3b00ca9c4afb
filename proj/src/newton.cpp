#include "dh/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace dh {

NewtonPolygon NewtonPolygon::compute(const PolyK& f, const Place& v) {
  if (f.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");
  NewtonPolygon np;
  np.order_ = f.order();
  for (unsigned i = np.order_; i <= static_cast<unsigned>(f.degree()); ++i) {
    const RatFunc& c = f.coeff(i);
    if (c.is_zero()) continue;
    np.points_.emplace_back(i, Rat(v.valuation(c)));
  }
  // Lower convex hull, left to right (points already sorted by abscissa).
  std::vector<std::pair<unsigned, Rat>> hull;
  for (const auto& p : np.points_) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b only if it lies strictly below segment a-p
      Rat lhs = (b.second - a.second) * static_cast<long>(p.first - a.first);
      Rat rhs = (p.second - a.second) * static_cast<long>(b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  for (size_t i = 1; i < hull.size(); ++i) {
    Rat slope = (hull[i].second - hull[i - 1].second) / static_cast<long>(hull[i].first - hull[i - 1].first);
    np.segments_.push_back({slope, hull[i].first - hull[i - 1].first});
  }
  return np;
}

std::vector<Rat> NewtonPolygon::root_valuations() const {
  std::vector<Rat> out;
  for (const NPSegment& s : segments_)
    for (unsigned i = 0; i < s.length; ++i) out.push_back(-s.slope);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dh
