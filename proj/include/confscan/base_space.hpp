#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "confscan/scalar.hpp"

namespace confscan {

// Point of a base space. Product spaces R^n x Y are kept flat: the n product
// coordinates form `coords` (outermost first) and the point of the atomic
// space underneath sits in `core`. A point of an atomic space has empty
// coords. The core is either a rational (line model) or an id (discrete
// model).
struct BasePoint {
  std::vector<Scalar> coords;
  std::variant<Scalar, std::int64_t> core;

  static BasePoint line(Scalar value) { return {{}, std::move(value)}; }
  static BasePoint discrete(std::int64_t id) { return {{}, id}; }

  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

// Total order used for canonical forms: coords lexicographically, then core.
std::strong_ordering compare(const BasePoint& a, const BasePoint& b);
inline bool operator<(const BasePoint& a, const BasePoint& b) {
  return compare(a, b) == std::strong_ordering::less;
}

// Prepend a product coordinate: the slice embedding y -> (head, y).
BasePoint with_head(const Scalar& head, const BasePoint& y);
// Split off the outermost product coordinate. Errors if the point is atomic.
std::pair<Scalar, BasePoint> split_head(const BasePoint& p);

// Weak metric space: d >= 0 with d(y,y') = 0 exactly when y = y'. No
// triangle inequality is assumed anywhere, and none of the library's maps
// require symmetry, although the provided models are all symmetric.
class BaseSpace {
 public:
  virtual ~BaseSpace() = default;
  virtual std::string name() const = 0;
  virtual bool contains(const BasePoint& p) const = 0;
  virtual Scalar distance(const BasePoint& a, const BasePoint& b) const = 0;
};

using BaseSpacePtr = std::shared_ptr<const BaseSpace>;

// Y = Q with d(y,y') = |y - y'|.
BaseSpacePtr rational_line();

// Y = {0, ..., size-1} with d(y,y') = 1 for y != y'.
BaseSpacePtr discrete_space(std::int64_t size);

// Q^n x Y with d((u,y),(v,y')) = max(L-infinity(u,v), d_Y(y,y')); order on
// points is lexicographic. Rational-valued, so the weak-metric axioms hold
// exactly.
BaseSpacePtr product_base_space(int n, BaseSpacePtr inner);

// Reconstruct a space that accepts the given point: product(coords.size())
// over the line or over a discrete space. Used by the CLI, where the space a
// JSON configuration lives in is implied by its points.
BaseSpacePtr infer_base_space(const BasePoint& p, std::int64_t discrete_size_hint = 0);

// Comparison scale on R x Y from which separation radii are taken:
//   g((a,y),(a',y')) = ((a-a')^2 + d(y,y')) / (2 (|a-a'| + d(y,y') + 1))
// g = 0 exactly on the diagonal, and g <= |a-a'|/2 whenever y = y'.
Scalar g_metric(const Scalar& a, const BasePoint& y,
                const Scalar& a2, const BasePoint& y2,
                const BaseSpace& space);

}  // namespace confscan
