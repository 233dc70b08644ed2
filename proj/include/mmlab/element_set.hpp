#ifndef MMLAB_ELEMENT_SET_HPP
#define MMLAB_ELEMENT_SET_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace mmlab {

/// Subset of a ground set of at most 64 elements, addressed by index.
class ElementSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(int i) { return ElementSet(std::uint64_t{1} << i); }
  static constexpr ElementSet prefix(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static ElementSet of(std::initializer_list<int> items) {
    ElementSet s;
    for (int i : items) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr ElementSet with(int i) const { return ElementSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr ElementSet without(int i) const { return ElementSet(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator^=(ElementSet o) { bits_ ^= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: lexicographic on the ascending index sequence, shorter prefix first.
inline bool canonical_less(ElementSet a, ElementSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    const int lx = std::countr_zero(x), ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

inline void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

/// Visits every subset of `universe` (including the empty set) in increasing bit order.
template <typename Fn>
void for_each_subset(ElementSet universe, Fn&& fn) {
  const std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  while (true) {
    fn(ElementSet(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

}  // namespace mmlab

template <>
struct std::hash<mmlab::ElementSet> {
  std::size_t operator()(mmlab::ElementSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

#endif  // MMLAB_ELEMENT_SET_HPP
