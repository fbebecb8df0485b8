#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cpg {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Points are 0-based internally and
/// printed 1-based (see cycle_notation.hpp).
///
/// Products are read left to right: `compose(p, q)` applies p first, so
/// `compose(p, q)(i) == q(p(i))`. Every product in the library follows this
/// convention, which makes the conjugate h^x equal to x^-1 h x.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// Element order (lcm of cycle lengths).
std::size_t order(const Permutation& p);

// Embeds p into a larger degree, moving its support up by `shift` points.
Permutation pad(const Permutation& p, std::size_t new_degree, std::size_t shift = 0);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cpg
