#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include "confscan/scalar.hpp"

namespace confscan {

// Point of a label space X. Two concrete models are provided:
//   interval  [0,1] n Q with basepoint 0;
//   wedge     k arcs, each a copy of (0,1] n Q, glued to a common basepoint.
// The basepoint is encoded as value 0 (arm normalized to 0), so
// is_basepoint() is model-independent.
struct XLabel {
  enum class Model : std::uint8_t { interval, wedge };

  Model model = Model::interval;
  std::int64_t arm = 0;  // wedge only; 0 for interval points and basepoints
  Scalar value;          // position along the interval / arm

  static XLabel interval(Scalar v) { return make(Model::interval, 0, std::move(v)); }
  static XLabel wedge(std::int64_t arm, Scalar pos) { return make(Model::wedge, arm, std::move(pos)); }
  static XLabel basepoint_of(Model m) { return make(m, 0, Scalar(0)); }

  bool is_basepoint() const { return value.is_zero(); }

  friend bool operator==(const XLabel&, const XLabel&) = default;
  friend std::strong_ordering operator<=>(const XLabel& a, const XLabel& b) {
    if (auto c = a.model <=> b.model; c != 0) return c;
    if (auto c = a.arm <=> b.arm; c != 0) return c;
    return a.value <=> b.value;
  }

 private:
  static XLabel make(Model m, std::int64_t arm, Scalar v) {
    XLabel x;
    x.model = m;
    x.value = std::move(v);
    x.arm = x.value.is_zero() ? 0 : arm;  // canonical basepoint
    return x;
  }
};

// Nondegenerately based label space: a basepoint *, an open neighborhood W
// of *, and a based contraction K with K(0,.) = id, K(t,*) = * and
// K(1,W) = {*}.
class LabelSpace {
 public:
  virtual ~LabelSpace() = default;
  virtual std::string name() const = 0;
  virtual XLabel basepoint() const = 0;
  virtual bool contains(const XLabel& x) const = 0;
  virtual bool in_W(const XLabel& x) const = 0;
  virtual XLabel contract(const Scalar& t, const XLabel& x) const = 0;  // K(t, x)
};

using LabelSpacePtr = std::shared_ptr<const LabelSpace>;

// X = [0,1] n Q, * = 0, W = [0, 1/4). K(1,.) collapses W and stretches the
// rest back over [0,1]; K(t,.) interpolates linearly from the identity.
LabelSpacePtr interval_label_space();

// Wedge of `arms` rational arcs (0,1] joined at the basepoint; W is the
// sub-quarter of every arm. Contraction acts along each arm like the
// interval model. Arms never mix, which makes the model useful for tests
// that need labels in several "directions" away from *.
LabelSpacePtr wedge_label_space(std::int64_t arms);

// Space a JSON label belongs to, implied by its model tag.
LabelSpacePtr infer_label_space(const XLabel& x, std::int64_t arms_hint = 0);

}  // namespace confscan
