#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "confscan/errors.hpp"

namespace confscan {

// Injective function {0,...,i-1} -> {0,...,j-1}, stored as its image list.
// Indices are 0-based throughout the library; the codomain size j is
// supplied at the point of use.
class Injection {
 public:
  Injection() = default;
  explicit Injection(std::vector<std::size_t> image) : image_(std::move(image)) {
    for (std::size_t k = 0; k < image_.size(); ++k)
      for (std::size_t l = k + 1; l < image_.size(); ++l)
        if (image_[k] == image_[l])
          throw input_error("Injection: image values must be distinct");
  }

  std::size_t arity() const { return image_.size(); }
  std::size_t operator()(std::size_t k) const {
    if (k >= image_.size()) throw input_error("Injection: index out of range");
    return image_[k];
  }
  const std::vector<std::size_t>& image() const { return image_; }
  bool fits_into(std::size_t j) const {
    return std::ranges::all_of(image_, [j](std::size_t v) { return v < j; });
  }

  friend bool operator==(const Injection&, const Injection&) = default;

 private:
  std::vector<std::size_t> image_;
};

// (nu o mu)(k) = nu(mu(k)).
inline Injection compose(const Injection& nu, const Injection& mu) {
  std::vector<std::size_t> image(mu.arity());
  for (std::size_t k = 0; k < mu.arity(); ++k) image[k] = nu(mu(k));
  return Injection(std::move(image));
}

// nu^*: sends (y_0,...,y_{j-1}) to (y_{nu(0)},...,y_{nu(i-1)}). The input
// tuple must have pairwise distinct entries; the output then does too.
template <class T>
std::vector<T> pullback(const Injection& nu, const std::vector<T>& tuple) {
  if (!nu.fits_into(tuple.size()))
    throw input_error("pullback: injection does not fit tuple");
  for (std::size_t k = 0; k < tuple.size(); ++k)
    for (std::size_t l = k + 1; l < tuple.size(); ++l)
      if (tuple[k] == tuple[l])
        throw input_error("pullback: tuple entries must be distinct");
  std::vector<T> out;
  out.reserve(nu.arity());
  for (std::size_t k = 0; k < nu.arity(); ++k) out.push_back(tuple[nu(k)]);
  return out;
}

// nu_*: spreads an i-tuple of labels over j slots, basepoint elsewhere.
template <class T>
std::vector<T> pushforward(const Injection& nu, const std::vector<T>& tuple,
                           std::size_t j, const T& basepoint) {
  if (nu.arity() != tuple.size())
    throw input_error("pushforward: tuple length does not match injection arity");
  if (!nu.fits_into(j))
    throw input_error("pushforward: injection does not fit codomain " + std::to_string(j));
  std::vector<T> out(j, basepoint);
  for (std::size_t l = 0; l < nu.arity(); ++l) out[nu(l)] = tuple[l];
  return out;
}

}  // namespace confscan
