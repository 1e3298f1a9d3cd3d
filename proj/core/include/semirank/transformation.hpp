#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace semirank {

// A self-map of {0, ..., n-1}. Stored 0-based; rendered 1-based.
// Maps act on the right: x(alpha beta) = (x alpha) beta.
class Transformation {
 public:
  using Point = std::uint32_t;

  Transformation() = default;
  // Throws ParameterError when an image lies outside [0, n).
  explicit Transformation(std::vector<Point> images);

  static Transformation identity(std::size_t n);
  static Transformation constant(std::size_t n, Point value);

  std::size_t degree() const noexcept { return img_.size(); }
  Point operator[](std::size_t x) const noexcept { return img_[x]; }
  std::vector<Point> const& images() const noexcept { return img_; }

  bool is_order_preserving() const noexcept;
  bool is_permutation() const noexcept;
  bool is_singular() const noexcept { return !is_permutation(); }
  std::size_t rank() const;  // |im|

  // "[1,1,2]"
  std::string to_string() const;

  friend auto operator<=>(Transformation const&, Transformation const&) = default;

 private:
  std::vector<Point> img_;
};

// Apply alpha first, then beta. Throws ParameterError on mismatched degree.
Transformation compose(Transformation const& alpha, Transformation const& beta);

struct ImageAndKernel {
  std::vector<Transformation::Point> image;               // sorted
  std::vector<std::vector<Transformation::Point>> kernel;  // classes, ordered by image value
};

ImageAndKernel image_and_kernel(Transformation const& alpha);

// The element of J_{n-1} in O_n whose kernel has the non-singleton class
// {i, i+1} and whose image is [n] \ {k}. Parameters are 1-based:
// 1 <= i <= n-1, 1 <= k <= n.
Transformation zeta(std::size_t n, std::size_t i, std::size_t k);

}  // namespace semirank
