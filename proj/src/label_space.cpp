#include "confscan/label_space.hpp"

#include <algorithm>

#include "confscan/errors.hpp"

namespace confscan {

namespace {

const Scalar kQuarter(1, 4);

void check_time(const Scalar& t) {
  if (t < Scalar(0) || t > Scalar(1))
    throw input_error("contract: t outside [0,1]");
}

// Endpoint of the contraction on a single arc: kill [0,1/4], stretch
// [1/4,1] back onto [0,1].
Scalar collapse_end(const Scalar& v) {
  if (v <= kQuarter) return Scalar(0);
  return (Scalar(4) * v - Scalar(1)) / Scalar(3);
}

Scalar contract_value(const Scalar& t, const Scalar& v) {
  return (Scalar(1) - t) * v + t * collapse_end(v);
}

class IntervalLabelSpace final : public LabelSpace {
 public:
  std::string name() const override { return "interval"; }
  XLabel basepoint() const override { return XLabel::basepoint_of(XLabel::Model::interval); }
  bool contains(const XLabel& x) const override {
    return x.model == XLabel::Model::interval && x.value >= Scalar(0) && x.value <= Scalar(1);
  }
  bool in_W(const XLabel& x) const override {
    if (!contains(x)) throw input_error("interval label space: foreign label");
    return x.value < kQuarter;
  }
  XLabel contract(const Scalar& t, const XLabel& x) const override {
    check_time(t);
    if (!contains(x)) throw input_error("interval label space: foreign label");
    return XLabel::interval(contract_value(t, x.value));
  }
};

class WedgeLabelSpace final : public LabelSpace {
 public:
  explicit WedgeLabelSpace(std::int64_t arms) : arms_(arms) {
    if (arms < 2) throw input_error("wedge_label_space: needs >= 2 arms");
  }
  std::string name() const override { return "wedge"; }
  XLabel basepoint() const override { return XLabel::basepoint_of(XLabel::Model::wedge); }
  bool contains(const XLabel& x) const override {
    if (x.model != XLabel::Model::wedge) return false;
    if (x.is_basepoint()) return true;
    return x.arm >= 0 && x.arm < arms_ && x.value > Scalar(0) && x.value <= Scalar(1);
  }
  bool in_W(const XLabel& x) const override {
    if (!contains(x)) throw input_error("wedge label space: foreign label");
    return x.value < kQuarter;
  }
  XLabel contract(const Scalar& t, const XLabel& x) const override {
    check_time(t);
    if (!contains(x)) throw input_error("wedge label space: foreign label");
    return XLabel::wedge(x.arm, contract_value(t, x.value));
  }

 private:
  std::int64_t arms_;
};

}  // namespace

LabelSpacePtr interval_label_space() { return std::make_shared<IntervalLabelSpace>(); }

LabelSpacePtr wedge_label_space(std::int64_t arms) {
  return std::make_shared<WedgeLabelSpace>(arms);
}

LabelSpacePtr infer_label_space(const XLabel& x, std::int64_t arms_hint) {
  if (x.model == XLabel::Model::interval) return interval_label_space();
  return wedge_label_space(std::max<std::int64_t>({x.arm + 1, arms_hint, 2}));
}

}  // namespace confscan
