#include "cpg/permutation.hpp"

#include <numeric>
#include <string>

#include "cpg/errors.hpp"

namespace cpg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidPermutation("image list is not a bijection on " +
                               std::to_string(images_.size()) + " points");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q(p(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p(static_cast<Point>(i))] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

std::size_t order(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::size_t result = 1;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point i = static_cast<Point>(start); !seen[i]; i = p(i)) {
      seen[i] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation pad(const Permutation& p, std::size_t new_degree, std::size_t shift) {
  if (p.degree() + shift > new_degree) {
    throw DegreeMismatch("padding target degree too small");
  }
  std::vector<Point> images(new_degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i) {
    images[i + shift] = static_cast<Point>(p(static_cast<Point>(i)) + shift);
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image list
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cpg
