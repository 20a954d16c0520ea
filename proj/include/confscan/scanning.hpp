#pragma once

#include <vector>

#include "confscan/configs.hpp"

namespace confscan {

// ---------------------------------------------------------------------------
// Comparison with C(R x Y, X): centers and fattened points.
// ---------------------------------------------------------------------------

// Each segment [a,b] x {y} goes to its center point ((a+b)/2, y). Segments
// over one base point have disjoint interiors, so the centers are distinct.
PointConfig phi(const SegmentConfig& w);

// Coordinate-wise centers of an n-dimensional box configuration; the point
// configuration lives over Q^n x Y.
PointConfig phi_n(const BoxConfig& w);

// v(kappa) = min over distinct pairs of g((a_k,y_k),(a_l,y_l)); strictly
// positive. Configurations with fewer than two points have no pairs; 1/2 is
// returned so the fattening below stays total.
Scalar separation(const PointConfig& kappa, const BaseSpace& base);

// Fatten each point (a,y) of kappa to the segment [a - v, a + v] x {y} with
// v = separation(kappa). phi(phi_bar(kappa)) == kappa exactly.
SegmentConfig phi_bar(const PointConfig& kappa, const BaseSpace& base);

// Deformation from the identity (t=0) to phi_bar o phi (t=1): every
// segment's radius interpolates linearly from its own value to the common
// separation radius, centers fixed. Valid for every t in [0,1].
SegmentConfig retraction_homotopy(const Scalar& t, const SegmentConfig& w,
                                  const BaseSpace& base);

// Order-preserving bijection Q -> Q n (0,1), r(u) = (1 + u/(1+|u|))/2,
// applied to segment endpoints; rescale_from_unit inverts it.
Scalar rescale_value(const Scalar& u);
Scalar rescale_value_inverse(const Scalar& v);  // input must lie in (0,1)
SegmentConfig rescale_to_unit(const SegmentConfig& w);
SegmentConfig rescale_from_unit(const SegmentConfig& w);

// ---------------------------------------------------------------------------
// Scanning: reading a segment configuration with a moving time slice.
// ---------------------------------------------------------------------------

// alpha(w)(t) for w inside (0,1) x Y: the segments whose time window
// contains t, labeled [x_i, s_i] with s_i = (t-a_i)/(b_i-a_i). Window
// endpoints produce s in {0,1} and collapse away, so t=0 and t=1 always give
// the empty configuration.
PointConfig alpha_eval(const SegmentConfig& w, const Scalar& t);

// n-dimensional scan of a box configuration at a time vector; labels carry
// one suspension parameter per coordinate. Dimension 1 agrees with
// alpha_eval.
PointConfig alpha_n_eval(const BoxConfig& w, const std::vector<Scalar>& ts);

// A loop in the suspension-labeled configuration space, represented by its
// generating segment configuration and observed through evaluation.
class Loop {
 public:
  explicit Loop(SegmentConfig w);
  const SegmentConfig& config() const { return w_; }
  PointConfig at(const Scalar& t) const { return alpha_eval(w_, t); }

 private:
  SegmentConfig w_;
};

// Section of evaluation-at-1/2 on a stratum: z with j suspension-labeled
// points maps to j segments [1/2 - s_i/2, 1 - s_i/2] x {y_i}; scanning the
// result at t = 1/2 returns z exactly.
SegmentConfig lambda_section(const PointConfig& z);

// ---------------------------------------------------------------------------
// The contractible path-space model E_1.
// ---------------------------------------------------------------------------

// Pair (w, s): a configuration in (0,1) x Y together with a stop time. The
// normal form drops every segment starting at or after s; at s = 0 that
// leaves only the basepoint pair (empty, 0).
class PathPoint {
 public:
  PathPoint() : s_(1) {}
  static PathPoint normalized(SegmentConfig w, Scalar s);

  const SegmentConfig& w() const { return w_; }
  const Scalar& s() const { return s_; }

  friend bool operator==(const PathPoint&, const PathPoint&) = default;

 private:
  PathPoint(SegmentConfig w, Scalar s) : w_(std::move(w)), s_(std::move(s)) {}
  SegmentConfig w_;
  Scalar s_;
};

inline PathPoint iota(const SegmentConfig& w) {
  return PathPoint::normalized(w, Scalar(1));
}

// The path alpha(w) frozen from time s on.
PointConfig alpha_bar_eval(const PathPoint& p, const Scalar& t);

// Endpoint projection q(w,s) = alpha(w)(s). Invariant under the E_1
// identification: segments starting at or after s never contribute.
PointConfig q_eval(const PathPoint& p);

// Local trivialization over a stratum: psi(w,z) packs w into the lower half
// slice and a lift of z into the upper, stopped at 3/4. q o psi = z exactly.
PathPoint psi(const SegmentConfig& w, const PointConfig& z);

// psi_bar(w,s) = below_s(w); inverse to psi up to the half-slice
// compression: psi_bar(psi(w,z)) == shrink(0,1/2,w).
SegmentConfig psi_bar(const PathPoint& p);

// Straight-line homotopy from psi(psi_bar(p), z) at t=0 to p at t=1, moving
// every segment to its original location while the stop time slides from
// 3/4 to s. q of the result equals z at every t. Requires q_eval(p) == z.
PathPoint fiber_retraction_homotopy(const Scalar& t, const PathPoint& p,
                                    const PointConfig& z);

// ---------------------------------------------------------------------------
// The cofibration deformations used for the filtration step.
// ---------------------------------------------------------------------------

// Circle deformation: L_0 = id and L_1 collapses [0,1/4] to 0 and [3/4,1]
// to 1. Intermediate stages collapse [0,t/4] and [1-t/4,1] and stretch the
// middle affinely, which is exactly the reparametrization induced by
// contracting segments toward their middle halves; see H_map.
Scalar L_map(const Scalar& t, const Scalar& u);

// J_t = K_t smash L_t on a degree-1 suspension label.
Label J_map(const Scalar& t, const Label& l, const LabelSpace& labels);

// The neighborhood U of the lower filtration: some point's label [x,s] has
// x in W, s < 1/4 or s > 3/4.
bool in_U(const PointConfig& z, const LabelSpace& labels);

// h_t = C(id_Y, J_t). Never raises the filtration level; h_1 strictly drops
// it on U.
PointConfig h_map(const Scalar& t, const PointConfig& z, const LabelSpace& labels);

// Total-space deformation over h: contract every segment toward its middle
// half while the label runs through K_t; the stop time is unchanged and the
// E_1 normal form is re-applied (contraction can push a segment start past
// s, which is the identification acting). q o H_t == h_t o q pointwise.
PathPoint H_map(const Scalar& t, const PathPoint& p, const LabelSpace& labels);

// The correction element for the fiber diagram of H_1: the middle halves
// [a'_i, b'_i] of the segments with b'_i <= s < b_i, labels through K_1.
SegmentConfig xi_element(const SegmentConfig& w, const Scalar& s,
                         const LabelSpace& labels);

// Multiplication by the correction element in the H-space structure.
SegmentConfig xi(const SegmentConfig& v, const SegmentConfig& element);

}  // namespace confscan
