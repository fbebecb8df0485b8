#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cpg {

using Index = std::uint32_t;

/// Fixed-universe bit vector of element indices. Subset products, equality
/// and hashing of member sets all go through this type.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Index i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(Index i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Index i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  // Inserts i and reports whether it was absent.
  bool add(Index i) noexcept {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    std::uint64_t& w = words_[i >> 6];
    bool fresh = !(w & bit);
    w |= bit;
    return fresh;
  }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;

  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator|=(const ElementSet& other) noexcept;
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<Index>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  // Sorted member indices.
  std::vector<Index> to_vector() const;

  // Lexicographic order of the sorted member sequences.
  bool lex_less(const ElementSet& other) const;

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cpg
