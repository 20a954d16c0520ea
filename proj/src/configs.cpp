#include "confscan/configs.hpp"

#include <algorithm>

#include "confscan/errors.hpp"

namespace confscan {

// --------------------------------------------------------------------------
// Label
// --------------------------------------------------------------------------

Label Label::plain(XLabel x) {
  if (x.is_basepoint()) return base();
  Label l;
  l.basepoint_ = false;
  l.x_ = std::move(x);
  return l;
}

Label Label::suspended(XLabel x, std::vector<Scalar> params) {
  for (const Scalar& s : params)
    if (s < Scalar(0) || s > Scalar(1))
      throw input_error("Label: suspension parameter outside [0,1]");
  if (x.is_basepoint()) return base();
  for (const Scalar& s : params)
    if (s.is_zero() || s == Scalar(1)) return base();
  Label l;
  l.basepoint_ = false;
  l.x_ = std::move(x);
  l.params_ = std::move(params);
  return l;
}

std::size_t Label::degree() const {
  if (basepoint_) throw input_error("Label: basepoint has no fixed degree");
  return params_.size();
}

const XLabel& Label::x() const {
  if (basepoint_) throw input_error("Label: basepoint has no underlying label");
  return x_;
}

const std::vector<Scalar>& Label::params() const {
  if (basepoint_) throw input_error("Label: basepoint has no parameters");
  return params_;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (auto c = b.basepoint_ <=> a.basepoint_; c != 0) return c;  // basepoint first
  if (a.basepoint_) return std::strong_ordering::equal;
  if (auto c = a.x_ <=> b.x_; c != 0) return c;
  const std::size_t n = std::min(a.params_.size(), b.params_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.params_[i] <=> b.params_[i]; c != 0) return c;
  return a.params_.size() <=> b.params_.size();
}

// --------------------------------------------------------------------------
// PointConfig
// --------------------------------------------------------------------------

PointConfig PointConfig::normalized(std::vector<PointEntry> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (raw[i].y == raw[j].y)
        throw config_error("PointConfig: duplicate base point");
  std::erase_if(raw, [](const PointEntry& e) { return e.label.is_basepoint(); });
  std::ranges::sort(raw, [](const PointEntry& a, const PointEntry& b) {
    if (auto c = compare(a.y, b.y); c != 0) return c == std::strong_ordering::less;
    return a.label < b.label;
  });
  PointConfig c;
  c.entries_ = std::move(raw);
  return c;
}

PointConfig map_point_config(const BaseMap& f, const LabelMap& g, const PointConfig& c) {
  std::vector<PointEntry> raw;
  raw.reserve(c.size());
  for (const PointEntry& e : c.entries()) raw.push_back({f(e.y), g(e.label)});
  // f must be injective on the support before any labels collapse
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (raw[i].y == raw[j].y)
        throw input_error("map_point_config: base map not injective on support");
  return PointConfig::normalized(std::move(raw));
}

// --------------------------------------------------------------------------
// SegmentConfig
// --------------------------------------------------------------------------

namespace {

bool segment_less(const SegmentEntry& a, const SegmentEntry& b) {
  if (auto c = compare(a.y, b.y); c != 0) return c == std::strong_ordering::less;
  if (auto c = a.a <=> b.a; c != 0) return c == std::strong_ordering::less;
  if (auto c = a.b <=> b.b; c != 0) return c == std::strong_ordering::less;
  return a.x < b.x;
}

// Entries sorted by (y, a, ...): open-interval overlap over equal base
// points shows up between neighbours.
void check_segment_disjointness(const std::vector<SegmentEntry>& entries) {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const SegmentEntry& p = entries[i - 1];
    const SegmentEntry& q = entries[i];
    if (p.y == q.y && q.a < p.b)
      throw config_error("SegmentConfig: overlapping segments over one base point");
  }
}

}  // namespace

SegmentConfig SegmentConfig::normalized(std::vector<SegmentEntry> raw) {
  for (const SegmentEntry& e : raw)
    if (!(e.a < e.b)) throw config_error("SegmentConfig: needs a < b");
  std::erase_if(raw, [](const SegmentEntry& e) { return e.x.is_basepoint(); });
  std::ranges::sort(raw, segment_less);
  check_segment_disjointness(raw);
  SegmentConfig w;
  w.entries_ = std::move(raw);
  return w;
}

bool SegmentConfig::in_unit_interval() const {
  return std::ranges::all_of(entries_, [](const SegmentEntry& e) {
    return e.a > Scalar(0) && e.b < Scalar(1);
  });
}

SegmentConfig map_segment_config(const BaseMap& f, const XLabelMap& g, const SegmentConfig& w) {
  std::vector<SegmentEntry> raw;
  raw.reserve(w.size());
  for (const SegmentEntry& e : w.entries()) raw.push_back({e.a, e.b, f(e.y), g(e.x)});
  std::vector<const BasePoint*> support;
  for (const SegmentEntry& e : w.entries()) support.push_back(&e.y);
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (raw[i].y == raw[j].y && !(*support[i] == *support[j]))
        throw input_error("map_segment_config: base map not injective on support");
  return SegmentConfig::normalized(std::move(raw));
}

SegmentConfig union_configs(const SegmentConfig& w, const SegmentConfig& w2) {
  std::vector<SegmentEntry> raw = w.entries();
  raw.insert(raw.end(), w2.entries().begin(), w2.entries().end());
  return SegmentConfig::normalized(std::move(raw));
}

SegmentConfig shrink(const Scalar& s, const Scalar& t, const SegmentConfig& w) {
  if (!(s < t)) throw input_error("shrink: needs s < t");
  std::vector<SegmentEntry> raw;
  raw.reserve(w.size());
  const Scalar len = t - s;
  for (const SegmentEntry& e : w.entries())
    raw.push_back({s + len * e.a, s + len * e.b, e.y, e.x});
  return SegmentConfig::normalized(std::move(raw));
}

SegmentConfig mu(const SegmentConfig& w, const SegmentConfig& w2) {
  if (!w.in_unit_interval() || !w2.in_unit_interval())
    throw input_error("mu: configurations must lie in (0,1)");
  return union_configs(shrink(Scalar(0), Scalar(1, 2), w),
                       shrink(Scalar(1, 2), Scalar(1), w2));
}

SegmentConfig below(const Scalar& s, const SegmentConfig& w) {
  std::vector<SegmentEntry> raw;
  for (const SegmentEntry& e : w.entries())
    if (e.b <= s) raw.push_back(e);
  return SegmentConfig::normalized(std::move(raw));
}

// --------------------------------------------------------------------------
// BoxConfig
// --------------------------------------------------------------------------

namespace {

bool lex_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return std::ranges::lexicographical_compare(a, b);
}

bool box_less(const BoxEntry& p, const BoxEntry& q) {
  if (auto c = compare(p.y, q.y); c != 0) return c == std::strong_ordering::less;
  if (p.lo != q.lo) return lex_less(p.lo, q.lo);
  if (p.hi != q.hi) return lex_less(p.hi, q.hi);
  return p.x < q.x;
}

bool boxes_interior_disjoint(const BoxEntry& p, const BoxEntry& q) {
  for (std::size_t m = 0; m < p.lo.size(); ++m)
    if (p.hi[m] <= q.lo[m] || q.hi[m] <= p.lo[m]) return true;
  return false;
}

}  // namespace

BoxConfig BoxConfig::normalized(std::size_t dim, std::vector<BoxEntry> raw) {
  if (dim < 1) throw input_error("BoxConfig: dimension must be >= 1");
  for (const BoxEntry& e : raw) {
    if (e.lo.size() != dim || e.hi.size() != dim)
      throw input_error("BoxConfig: entry dimension mismatch");
    for (std::size_t m = 0; m < dim; ++m)
      if (!(e.lo[m] < e.hi[m])) throw config_error("BoxConfig: needs lo < hi");
  }
  std::erase_if(raw, [](const BoxEntry& e) { return e.x.is_basepoint(); });
  std::ranges::sort(raw, box_less);
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (raw[i].y == raw[j].y && !boxes_interior_disjoint(raw[i], raw[j]))
        throw config_error("BoxConfig: overlapping boxes over one base point");
  BoxConfig w(dim);
  w.entries_ = std::move(raw);
  return w;
}

bool BoxConfig::in_unit_cube() const {
  return std::ranges::all_of(entries_, [](const BoxEntry& e) {
    for (std::size_t m = 0; m < e.lo.size(); ++m)
      if (!(e.lo[m] > Scalar(0) && e.hi[m] < Scalar(1))) return false;
    return true;
  });
}

BoxConfig segment_to_box(const SegmentConfig& w) {
  std::vector<BoxEntry> raw;
  raw.reserve(w.size());
  for (const SegmentEntry& e : w.entries()) raw.push_back({{e.a}, {e.b}, e.y, e.x});
  return BoxConfig::normalized(1, std::move(raw));
}

SegmentConfig box_to_segment(const BoxConfig& w) {
  if (w.dim() != 1) throw input_error("box_to_segment: dimension must be 1");
  std::vector<SegmentEntry> raw;
  raw.reserve(w.size());
  for (const BoxEntry& e : w.entries()) raw.push_back({e.lo[0], e.hi[0], e.y, e.x});
  return SegmentConfig::normalized(std::move(raw));
}

}  // namespace confscan
