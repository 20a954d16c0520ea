#include "confscan/base_space.hpp"

#include <utility>

#include "confscan/errors.hpp"

namespace confscan {

std::strong_ordering compare(const BasePoint& a, const BasePoint& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.coords[i] <=> b.coords[i]; c != 0) return c;
  }
  if (auto c = a.coords.size() <=> b.coords.size(); c != 0) return c;
  if (auto c = a.core.index() <=> b.core.index(); c != 0) return c;
  if (a.core.index() == 0)
    return std::get<0>(a.core) <=> std::get<0>(b.core);
  return std::get<1>(a.core) <=> std::get<1>(b.core);
}

BasePoint with_head(const Scalar& head, const BasePoint& y) {
  BasePoint p;
  p.coords.reserve(y.coords.size() + 1);
  p.coords.push_back(head);
  p.coords.insert(p.coords.end(), y.coords.begin(), y.coords.end());
  p.core = y.core;
  return p;
}

std::pair<Scalar, BasePoint> split_head(const BasePoint& p) {
  if (p.coords.empty())
    throw input_error("split_head: point has no product coordinate");
  BasePoint rest;
  rest.coords.assign(p.coords.begin() + 1, p.coords.end());
  rest.core = p.core;
  return {p.coords.front(), std::move(rest)};
}

namespace {

class RationalLine final : public BaseSpace {
 public:
  std::string name() const override { return "line"; }
  bool contains(const BasePoint& p) const override {
    return p.coords.empty() && p.core.index() == 0;
  }
  Scalar distance(const BasePoint& a, const BasePoint& b) const override {
    if (!contains(a) || !contains(b)) throw input_error("line: foreign point");
    return abs(std::get<0>(a.core) - std::get<0>(b.core));
  }
};

class DiscreteSpace final : public BaseSpace {
 public:
  explicit DiscreteSpace(std::int64_t size) : size_(size) {
    if (size < 1) throw input_error("discrete_space: size must be >= 1");
  }
  std::string name() const override { return "discrete"; }
  bool contains(const BasePoint& p) const override {
    if (!p.coords.empty() || p.core.index() != 1) return false;
    const auto id = std::get<1>(p.core);
    return id >= 0 && id < size_;
  }
  Scalar distance(const BasePoint& a, const BasePoint& b) const override {
    if (!contains(a) || !contains(b)) throw input_error("discrete: foreign point");
    return std::get<1>(a.core) == std::get<1>(b.core) ? Scalar(0) : Scalar(1);
  }

 private:
  std::int64_t size_;
};

class ProductSpace final : public BaseSpace {
 public:
  ProductSpace(int n, BaseSpacePtr inner) : n_(n), inner_(std::move(inner)) {
    if (n_ < 1) throw input_error("product_base_space: n must be >= 1");
    if (!inner_) throw input_error("product_base_space: null inner space");
  }
  std::string name() const override {
    return "product(" + std::to_string(n_) + "," + inner_->name() + ")";
  }
  bool contains(const BasePoint& p) const override {
    if (p.coords.size() < static_cast<std::size_t>(n_)) return false;
    BasePoint rest;
    rest.coords.assign(p.coords.begin() + n_, p.coords.end());
    rest.core = p.core;
    return inner_->contains(rest);
  }
  Scalar distance(const BasePoint& a, const BasePoint& b) const override {
    if (!contains(a) || !contains(b)) throw input_error("product: foreign point");
    Scalar d(0);
    for (int i = 0; i < n_; ++i) d = max(d, abs(a.coords[i] - b.coords[i]));
    BasePoint ra, rb;
    ra.coords.assign(a.coords.begin() + n_, a.coords.end());
    ra.core = a.core;
    rb.coords.assign(b.coords.begin() + n_, b.coords.end());
    rb.core = b.core;
    return max(d, inner_->distance(ra, rb));
  }

 private:
  int n_;
  BaseSpacePtr inner_;
};

}  // namespace

BaseSpacePtr rational_line() { return std::make_shared<RationalLine>(); }

BaseSpacePtr discrete_space(std::int64_t size) {
  return std::make_shared<DiscreteSpace>(size);
}

BaseSpacePtr product_base_space(int n, BaseSpacePtr inner) {
  return std::make_shared<ProductSpace>(n, std::move(inner));
}

BaseSpacePtr infer_base_space(const BasePoint& p, std::int64_t discrete_size_hint) {
  BaseSpacePtr atom;
  if (p.core.index() == 0) {
    atom = rational_line();
  } else {
    const auto id = std::get<1>(p.core);
    atom = discrete_space(std::max<std::int64_t>(id + 1, std::max<std::int64_t>(discrete_size_hint, 1)));
  }
  if (p.coords.empty()) return atom;
  return product_base_space(static_cast<int>(p.coords.size()), std::move(atom));
}

Scalar g_metric(const Scalar& a, const BasePoint& y,
                const Scalar& a2, const BasePoint& y2,
                const BaseSpace& space) {
  const Scalar da = abs(a - a2);
  const Scalar dy = space.distance(y, y2);
  return (da * da + dy) / (Scalar(2) * (da + dy + Scalar(1)));
}

}  // namespace confscan
