#include "cpg/element_set.hpp"

#include <algorithm>

namespace cpg {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Index>(i));
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<Index> ElementSet::to_vector() const {
  std::vector<Index> out;
  out.reserve(count());
  for_each([&](Index i) { out.push_back(i); });
  return out;
}

bool ElementSet::lex_less(const ElementSet& other) const {
  auto a = to_vector();
  auto b = other.to_vector();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cpg
