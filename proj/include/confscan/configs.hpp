#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "confscan/base_space.hpp"
#include "confscan/label_space.hpp"

namespace confscan {

// Label carried by a point of a labeled configuration. A plain X-label has
// degree 0; a label in the n-fold suspension of X carries n extra circle
// parameters, each strictly inside (0,1). The smash collapse is applied on
// construction: any parameter hitting 0 or 1, or an underlying basepoint
// label, gives the basepoint.
class Label {
 public:
  Label() = default;  // basepoint

  static Label base() { return Label(); }
  static Label plain(XLabel x);
  // Suspension parameters must lie in [0,1]; boundary values collapse.
  static Label suspended(XLabel x, std::vector<Scalar> params);

  bool is_basepoint() const { return basepoint_; }
  std::size_t degree() const;  // number of suspension parameters
  const XLabel& x() const;
  const std::vector<Scalar>& params() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  bool basepoint_ = true;
  XLabel x_;
  std::vector<Scalar> params_;
};

// ---------------------------------------------------------------------------
// Point configurations: finite sets of distinct base points with labels,
// kept in normal form (basepoint-labeled entries deleted, canonical sort).
// The empty configuration is the basepoint of the configuration space.
// ---------------------------------------------------------------------------

struct PointEntry {
  BasePoint y;
  Label label;

  friend bool operator==(const PointEntry&, const PointEntry&) = default;
};

class PointConfig {
 public:
  PointConfig() = default;

  // Deletes basepoint-labeled entries, requires the surviving base points to
  // be pairwise distinct (config_error otherwise), sorts canonically.
  static PointConfig normalized(std::vector<PointEntry> raw);

  const std::vector<PointEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::vector<PointEntry> entries_;
};

// Number of carried points; the configuration lies in filtration level j
// exactly when this is <= j. Level 0 is the basepoint alone.
inline std::size_t filtration_level(const PointConfig& z) { return z.size(); }

using BaseMap = std::function<BasePoint(const BasePoint&)>;
using LabelMap = std::function<Label(const Label&)>;
using XLabelMap = std::function<XLabel(const XLabel&)>;

// Functorial action: f on base points (must be injective on the support),
// g on labels, then renormalize (g may create basepoint labels).
PointConfig map_point_config(const BaseMap& f, const LabelMap& g, const PointConfig& c);

// ---------------------------------------------------------------------------
// Segment configurations: labeled segments [a,b] x {y} with a < b, where
// segments over the same base point have disjoint interiors.
// ---------------------------------------------------------------------------

struct SegmentEntry {
  Scalar a, b;
  BasePoint y;
  XLabel x;

  Scalar center() const { return (a + b) / Scalar(2); }
  Scalar radius() const { return (b - a) / Scalar(2); }

  friend bool operator==(const SegmentEntry&, const SegmentEntry&) = default;
};

class SegmentConfig {
 public:
  SegmentConfig() = default;

  // Requires a < b on every raw entry, deletes basepoint-labeled entries,
  // then checks interior-disjointness over equal base points among the
  // survivors. Violations raise config_error.
  static SegmentConfig normalized(std::vector<SegmentEntry> raw);

  const std::vector<SegmentEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // All endpoints strictly inside (0,1)?
  bool in_unit_interval() const;

  friend bool operator==(const SegmentConfig&, const SegmentConfig&) = default;

 private:
  std::vector<SegmentEntry> entries_;
};

// Functorial action on segment configurations: f injective on the support,
// g a based map of labels.
SegmentConfig map_segment_config(const BaseMap& f, const XLabelMap& g, const SegmentConfig& w);

// Disjoint union. Partial: raises config_error when an open segment of w
// meets one of w2 over the same base point.
SegmentConfig union_configs(const SegmentConfig& w, const SegmentConfig& w2);

// Affine compression of (0,1) onto (s,t): endpoints map through
// u -> s + (t-s)u. Requires s < t.
SegmentConfig shrink(const Scalar& s, const Scalar& t, const SegmentConfig& w);

// H-space multiplication: w into the lower half-slice, w2 into the upper.
// Total on unit-interval configurations (the halves cannot meet).
SegmentConfig mu(const SegmentConfig& w, const SegmentConfig& w2);

// Segments contained in [0,s] x Y, i.e. those with b <= s.
SegmentConfig below(const Scalar& s, const SegmentConfig& w);

// ---------------------------------------------------------------------------
// Box configurations: the n-dimensional extension, axis-aligned open boxes
// over base points; boxes over the same base point must have some coordinate
// in which they are interval-disjoint. Dimension 1 matches SegmentConfig.
// ---------------------------------------------------------------------------

struct BoxEntry {
  std::vector<Scalar> lo, hi;  // lo[m] < hi[m] per coordinate
  BasePoint y;
  XLabel x;

  friend bool operator==(const BoxEntry&, const BoxEntry&) = default;
};

class BoxConfig {
 public:
  explicit BoxConfig(std::size_t dim = 1) : dim_(dim) {}

  static BoxConfig normalized(std::size_t dim, std::vector<BoxEntry> raw);

  std::size_t dim() const { return dim_; }
  const std::vector<BoxEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool in_unit_cube() const;

  friend bool operator==(const BoxConfig&, const BoxConfig&) = default;

 private:
  std::size_t dim_;
  std::vector<BoxEntry> entries_;
};

BoxConfig segment_to_box(const SegmentConfig& w);
SegmentConfig box_to_segment(const BoxConfig& w);  // requires dim == 1

}  // namespace confscan
