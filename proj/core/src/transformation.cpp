#include "semirank/transformation.hpp"

#include <algorithm>
#include <map>

#include "semirank/errors.hpp"

namespace semirank {

Transformation::Transformation(std::vector<Point> images) : img_(std::move(images)) {
  for (auto p : img_) {
    if (p >= img_.size()) {
      throw ParameterError("image point " + std::to_string(p) + " outside degree " +
                           std::to_string(img_.size()));
    }
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t x = 0; x < n; ++x) v[x] = static_cast<Point>(x);
  return Transformation(std::move(v));
}

Transformation Transformation::constant(std::size_t n, Point value) {
  return Transformation(std::vector<Point>(n, value));
}

bool Transformation::is_order_preserving() const noexcept {
  return std::is_sorted(img_.begin(), img_.end());
}

bool Transformation::is_permutation() const noexcept {
  std::vector<bool> hit(img_.size(), false);
  for (auto p : img_) {
    if (hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

std::size_t Transformation::rank() const {
  std::vector<bool> hit(img_.size(), false);
  std::size_t r = 0;
  for (auto p : img_) {
    if (!hit[p]) {
      hit[p] = true;
      ++r;
    }
  }
  return r;
}

std::string Transformation::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (x != 0) out += ",";
    out += std::to_string(img_[x] + 1);
  }
  return out + "]";
}

Transformation compose(Transformation const& alpha, Transformation const& beta) {
  if (alpha.degree() != beta.degree()) {
    throw ParameterError("cannot compose maps of degree " +
                         std::to_string(alpha.degree()) + " and " +
                         std::to_string(beta.degree()));
  }
  std::vector<Transformation::Point> out(alpha.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = beta[alpha[x]];
  return Transformation(std::move(out));
}

ImageAndKernel image_and_kernel(Transformation const& alpha) {
  std::map<Transformation::Point, std::vector<Transformation::Point>> classes;
  for (std::size_t x = 0; x < alpha.degree(); ++x) {
    classes[alpha[x]].push_back(static_cast<Transformation::Point>(x));
  }
  ImageAndKernel out;
  for (auto& [value, cls] : classes) {
    out.image.push_back(value);
    out.kernel.push_back(std::move(cls));
  }
  return out;
}

Transformation zeta(std::size_t n, std::size_t i, std::size_t k) {
  if (n < 2) throw ParameterError("zeta needs n >= 2");
  if (i < 1 || i > n - 1) {
    throw ParameterError("zeta: i = " + std::to_string(i) + " outside [1, " +
                         std::to_string(n - 1) + "]");
  }
  if (k < 1 || k > n) {
    throw ParameterError("zeta: k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  // Collapse i+1 onto i, then skip over k in the image.
  std::vector<Transformation::Point> img(n);
  for (std::size_t x = 1; x <= n; ++x) {
    auto const t = x <= i ? x : x - 1;
    auto const y = t < k ? t : t + 1;
    img[x - 1] = static_cast<Transformation::Point>(y - 1);
  }
  return Transformation(std::move(img));
}

}  // namespace semirank
