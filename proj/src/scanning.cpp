#include "confscan/scanning.hpp"

#include <algorithm>
#include <utility>

#include "confscan/errors.hpp"

namespace confscan {

namespace {

const Scalar kHalf(1, 2);
const Scalar kQuarter(1, 4);

void check_unit_time(const Scalar& t, const char* who) {
  if (t < Scalar(0) || t > Scalar(1))
    throw input_error(std::string(who) + ": time outside [0,1]");
}

void check_unit_config(const SegmentConfig& w, const char* who) {
  if (!w.in_unit_interval())
    throw input_error(std::string(who) + ": configuration not inside (0,1)");
}

void check_degree(const PointConfig& z, std::size_t degree, const char* who) {
  for (const PointEntry& e : z.entries())
    if (e.label.degree() != degree)
      throw input_error(std::string(who) + ": label degree mismatch");
}

}  // namespace

// --------------------------------------------------------------------------
// phi and its section
// --------------------------------------------------------------------------

PointConfig phi(const SegmentConfig& w) {
  std::vector<PointEntry> raw;
  raw.reserve(w.size());
  for (const SegmentEntry& e : w.entries())
    raw.push_back({with_head(e.center(), e.y), Label::plain(e.x)});
  return PointConfig::normalized(std::move(raw));
}

PointConfig phi_n(const BoxConfig& w) {
  std::vector<PointEntry> raw;
  raw.reserve(w.size());
  for (const BoxEntry& e : w.entries()) {
    BasePoint p = e.y;
    for (std::size_t m = w.dim(); m-- > 0;)
      p = with_head((e.lo[m] + e.hi[m]) / Scalar(2), p);
    raw.push_back({std::move(p), Label::plain(e.x)});
  }
  return PointConfig::normalized(std::move(raw));
}

Scalar separation(const PointConfig& kappa, const BaseSpace& base) {
  check_degree(kappa, 0, "separation");
  if (kappa.size() < 2) return kHalf;  // no pairs; any positive radius works
  bool first = true;
  Scalar v;
  const auto& es = kappa.entries();
  for (std::size_t k = 0; k < es.size(); ++k) {
    auto [ak, yk] = split_head(es[k].y);
    for (std::size_t l = k + 1; l < es.size(); ++l) {
      auto [al, yl] = split_head(es[l].y);
      Scalar gkl = g_metric(ak, yk, al, yl, base);
      if (first || gkl < v) {
        v = gkl;
        first = false;
      }
    }
  }
  return v;
}

SegmentConfig phi_bar(const PointConfig& kappa, const BaseSpace& base) {
  const Scalar v = separation(kappa, base);
  std::vector<SegmentEntry> raw;
  raw.reserve(kappa.size());
  for (const PointEntry& e : kappa.entries()) {
    auto [a, y] = split_head(e.y);
    raw.push_back({a - v, a + v, std::move(y), e.label.x()});
  }
  return SegmentConfig::normalized(std::move(raw));
}

SegmentConfig retraction_homotopy(const Scalar& t, const SegmentConfig& w,
                                  const BaseSpace& base) {
  check_unit_time(t, "retraction_homotopy");
  const Scalar v = separation(phi(w), base);
  std::vector<SegmentEntry> raw;
  raw.reserve(w.size());
  for (const SegmentEntry& e : w.entries()) {
    const Scalar c = e.center();
    const Scalar r = (Scalar(1) - t) * e.radius() + t * v;
    raw.push_back({c - r, c + r, e.y, e.x});
  }
  return SegmentConfig::normalized(std::move(raw));
}

// --------------------------------------------------------------------------
// R <-> (0,1)
// --------------------------------------------------------------------------

Scalar rescale_value(const Scalar& u) {
  return kHalf * (Scalar(1) + u / (Scalar(1) + abs(u)));
}

Scalar rescale_value_inverse(const Scalar& v) {
  if (!(v > Scalar(0) && v < Scalar(1)))
    throw input_error("rescale_value_inverse: value outside (0,1)");
  const Scalar w = Scalar(2) * v - Scalar(1);  // in (-1,1)
  return w / (Scalar(1) - abs(w));
}

SegmentConfig rescale_to_unit(const SegmentConfig& w) {
  std::vector<SegmentEntry> raw;
  raw.reserve(w.size());
  for (const SegmentEntry& e : w.entries())
    raw.push_back({rescale_value(e.a), rescale_value(e.b), e.y, e.x});
  return SegmentConfig::normalized(std::move(raw));
}

SegmentConfig rescale_from_unit(const SegmentConfig& w) {
  std::vector<SegmentEntry> raw;
  raw.reserve(w.size());
  for (const SegmentEntry& e : w.entries())
    raw.push_back({rescale_value_inverse(e.a), rescale_value_inverse(e.b), e.y, e.x});
  return SegmentConfig::normalized(std::move(raw));
}

// --------------------------------------------------------------------------
// Scanning
// --------------------------------------------------------------------------

PointConfig alpha_eval(const SegmentConfig& w, const Scalar& t) {
  check_unit_config(w, "alpha_eval");
  check_unit_time(t, "alpha_eval");
  std::vector<PointEntry> raw;
  for (const SegmentEntry& e : w.entries()) {
    if (e.a <= t && t <= e.b) {
      Label l = Label::suspended(e.x, {(t - e.a) / (e.b - e.a)});
      if (!l.is_basepoint()) raw.push_back({e.y, std::move(l)});
    }
  }
  return PointConfig::normalized(std::move(raw));
}

PointConfig alpha_n_eval(const BoxConfig& w, const std::vector<Scalar>& ts) {
  if (ts.size() != w.dim())
    throw input_error("alpha_n_eval: time vector dimension mismatch");
  if (!w.in_unit_cube())
    throw input_error("alpha_n_eval: configuration not inside (0,1)^n");
  for (const Scalar& t : ts) check_unit_time(t, "alpha_n_eval");
  std::vector<PointEntry> raw;
  for (const BoxEntry& e : w.entries()) {
    bool inside = true;
    std::vector<Scalar> params;
    params.reserve(w.dim());
    for (std::size_t m = 0; m < w.dim(); ++m) {
      if (!(e.lo[m] <= ts[m] && ts[m] <= e.hi[m])) {
        inside = false;
        break;
      }
      params.push_back((ts[m] - e.lo[m]) / (e.hi[m] - e.lo[m]));
    }
    if (!inside) continue;
    Label l = Label::suspended(e.x, std::move(params));
    if (!l.is_basepoint()) raw.push_back({e.y, std::move(l)});
  }
  return PointConfig::normalized(std::move(raw));
}

Loop::Loop(SegmentConfig w) : w_(std::move(w)) {
  check_unit_config(w_, "Loop");
}

SegmentConfig lambda_section(const PointConfig& z) {
  check_degree(z, 1, "lambda_section");
  std::vector<SegmentEntry> raw;
  raw.reserve(z.size());
  for (const PointEntry& e : z.entries()) {
    const Scalar& s = e.label.params()[0];
    raw.push_back({kHalf - s / Scalar(2), Scalar(1) - s / Scalar(2), e.y, e.label.x()});
  }
  return SegmentConfig::normalized(std::move(raw));
}

// --------------------------------------------------------------------------
// E_1
// --------------------------------------------------------------------------

PathPoint PathPoint::normalized(SegmentConfig w, Scalar s) {
  check_unit_config(w, "PathPoint");
  check_unit_time(s, "PathPoint");
  std::vector<SegmentEntry> raw;
  for (const SegmentEntry& e : w.entries())
    if (e.a < s) raw.push_back(e);
  return PathPoint(SegmentConfig::normalized(std::move(raw)), std::move(s));
}

PointConfig alpha_bar_eval(const PathPoint& p, const Scalar& t) {
  check_unit_time(t, "alpha_bar_eval");
  return alpha_eval(p.w(), min(t, p.s()));
}

PointConfig q_eval(const PathPoint& p) { return alpha_eval(p.w(), p.s()); }

PathPoint psi(const SegmentConfig& w, const PointConfig& z) {
  check_unit_config(w, "psi");
  SegmentConfig packed = union_configs(shrink(Scalar(0), kHalf, w),
                                       shrink(kHalf, Scalar(1), lambda_section(z)));
  return PathPoint::normalized(std::move(packed), Scalar(3, 4));
}

SegmentConfig psi_bar(const PathPoint& p) { return below(p.s(), p.w()); }

PathPoint fiber_retraction_homotopy(const Scalar& t, const PathPoint& p,
                                    const PointConfig& z) {
  check_unit_time(t, "fiber_retraction_homotopy");
  if (!(q_eval(p) == z))
    throw input_error("fiber_retraction_homotopy: q(p) != z");
  const Scalar& s = p.s();
  const Scalar u = t;  // u=0: packed configuration; u=1: p itself
  const Scalar one_minus = Scalar(1) - u;
  std::vector<SegmentEntry> raw;
  raw.reserve(p.w().size());
  for (const SegmentEntry& e : p.w().entries()) {
    Scalar a0, b0;  // location at u = 0
    if (e.b <= s) {
      // below-part segment: compressed into the lower half slice
      a0 = e.a / Scalar(2);
      b0 = e.b / Scalar(2);
    } else {
      // straddling segment: its image under shrink(1/2,1) o lambda o q
      const Scalar sigma = (s - e.a) / (e.b - e.a);
      a0 = Scalar(3, 4) - sigma / Scalar(4);
      b0 = Scalar(1) - sigma / Scalar(4);
    }
    raw.push_back({one_minus * a0 + u * e.a, one_minus * b0 + u * e.b, e.y, e.x});
  }
  const Scalar st = one_minus * Scalar(3, 4) + u * s;
  return PathPoint::normalized(SegmentConfig::normalized(std::move(raw)), st);
}

// --------------------------------------------------------------------------
// Filtration deformations
// --------------------------------------------------------------------------

Scalar L_map(const Scalar& t, const Scalar& u) {
  check_unit_time(t, "L_map");
  check_unit_time(u, "L_map");
  const Scalar lo = t / Scalar(4);
  const Scalar hi = Scalar(1) - t / Scalar(4);
  if (u <= lo) return Scalar(0);
  if (u >= hi) return Scalar(1);
  return (u - lo) / (hi - lo);
}

Label J_map(const Scalar& t, const Label& l, const LabelSpace& labels) {
  check_unit_time(t, "J_map");
  if (l.is_basepoint()) return Label::base();
  if (l.degree() != 1) throw input_error("J_map: label degree must be 1");
  return Label::suspended(labels.contract(t, l.x()), {L_map(t, l.params()[0])});
}

bool in_U(const PointConfig& z, const LabelSpace& labels) {
  check_degree(z, 1, "in_U");
  for (const PointEntry& e : z.entries()) {
    const Scalar& s = e.label.params()[0];
    if (labels.in_W(e.label.x()) || s < kQuarter || s > Scalar(3, 4)) return true;
  }
  return false;
}

PointConfig h_map(const Scalar& t, const PointConfig& z, const LabelSpace& labels) {
  check_degree(z, 1, "h_map");
  return map_point_config([](const BasePoint& y) { return y; },
                          [&](const Label& l) { return J_map(t, l, labels); }, z);
}

PathPoint H_map(const Scalar& t, const PathPoint& p, const LabelSpace& labels) {
  check_unit_time(t, "H_map");
  std::vector<SegmentEntry> raw;
  raw.reserve(p.w().size());
  for (const SegmentEntry& e : p.w().entries()) {
    const Scalar quarter_len = (e.b - e.a) / Scalar(4);
    raw.push_back({e.a + t * quarter_len, e.b - t * quarter_len, e.y,
                   labels.contract(t, e.x)});
  }
  return PathPoint::normalized(SegmentConfig::normalized(std::move(raw)), p.s());
}

SegmentConfig xi_element(const SegmentConfig& w, const Scalar& s,
                         const LabelSpace& labels) {
  check_unit_time(s, "xi_element");
  std::vector<SegmentEntry> raw;
  for (const SegmentEntry& e : w.entries()) {
    const Scalar quarter_len = (e.b - e.a) / Scalar(4);
    const Scalar b1 = e.b - quarter_len;
    if (b1 <= s && s < e.b)
      raw.push_back({e.a + quarter_len, b1, e.y, labels.contract(Scalar(1), e.x)});
  }
  return SegmentConfig::normalized(std::move(raw));
}

SegmentConfig xi(const SegmentConfig& v, const SegmentConfig& element) {
  return mu(v, element);
}

}  // namespace confscan
