#ifndef MMLAB_CARRIER_HPP
#define MMLAB_CARRIER_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mmlab/element_set.hpp"
#include "mmlab/error.hpp"

namespace mmlab {

/// (class, slot) address of an element.
struct ElementLabel {
  int cls = 0;
  int slot = 0;
  friend constexpr auto operator<=>(const ElementLabel&, const ElementLabel&) = default;
};

/// Partition of the ground set into skew classes. Element e of class c and
/// slot s has index offset(c) + s, so index order is (class, slot) order.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    int total = 0;
    for (int s : sizes_) {
      require(s >= 1, ErrorCode::InvalidArgument, "skew classes must be nonempty");
      offsets_.push_back(total);
      total += s;
    }
    require(total <= ElementSet::kCapacity, ErrorCode::TooLarge, "carriers are limited to 64 elements");
    require(order() <= ElementSet::kCapacity, ErrorCode::TooLarge, "carriers are limited to 64 classes");
    size_ = total;
    for (int c = 0; c < order(); ++c)
      for (int s = 0; s < sizes_[static_cast<std::size_t>(c)]; ++s) {
        class_of_.push_back(c);
        slot_of_.push_back(s);
      }
  }

  static Carrier uniform(int order, int k) { return Carrier(std::vector<int>(static_cast<std::size_t>(order), k)); }

  int order() const { return static_cast<int>(sizes_.size()); }
  int size() const { return size_; }
  const std::vector<int>& class_sizes() const { return sizes_; }
  int class_size(int c) const { return sizes_[static_cast<std::size_t>(c)]; }
  int offset(int c) const { return offsets_[static_cast<std::size_t>(c)]; }
  int element(int c, int s) const {
    require(c >= 0 && c < order() && s >= 0 && s < class_size(c), ErrorCode::UnknownElement,
            "no element (" + std::to_string(c) + "," + std::to_string(s) + ")");
    return offset(c) + s;
  }
  int element(ElementLabel l) const { return element(l.cls, l.slot); }
  int class_of(int e) const { return class_of_[static_cast<std::size_t>(e)]; }
  int slot_of(int e) const { return slot_of_[static_cast<std::size_t>(e)]; }
  ElementLabel label_of(int e) const { return {class_of(e), slot_of(e)}; }

  ElementSet ground() const { return ElementSet::prefix(size_); }
  ElementSet class_set(int c) const {
    return ElementSet((ElementSet::prefix(class_size(c)).bits()) << offset(c));
  }

  bool nondegenerate() const {
    for (int s : sizes_)
      if (s < 2) return false;
    return true;
  }
  std::optional<int> uniform_k() const {
    if (sizes_.empty()) return std::nullopt;
    for (int s : sizes_)
      if (s != sizes_[0]) return std::nullopt;
    return sizes_[0];
  }
  /// Largest class size (0 for the empty carrier).
  int max_class_size() const {
    int m = 0;
    for (int s : sizes_) m = std::max(m, s);
    return m;
  }

  /// Bitmask over class indices of the classes met by `s`.
  std::uint64_t classes_met(ElementSet s) const {
    std::uint64_t m = 0;
    s.for_each([&](int e) { m |= std::uint64_t{1} << class_of(e); });
    return m;
  }
  /// Union of all classes met by `s`.
  ElementSet covered(ElementSet s) const {
    ElementSet out;
    for (std::uint64_t m = classes_met(s); m != 0; m &= m - 1) out |= class_set(std::countr_zero(m));
    return out;
  }
  ElementSet siblings(ElementSet s) const { return covered(s) - s; }

  bool is_subtransversal(ElementSet s) const {
    if (!s.subset_of(ground())) return false;
    return std::popcount(classes_met(s)) == s.size();
  }
  bool is_transversal(ElementSet s) const { return is_subtransversal(s) && s.size() == order(); }

  /// Classes holding at least two elements of w, as a bitmask over class indices.
  std::uint64_t sc(ElementSet w) const {
    std::uint64_t m = 0;
    for (int c = 0; c < order(); ++c)
      if ((w & class_set(c)).size() >= 2) m |= std::uint64_t{1} << c;
    return m;
  }
  ElementSet classes_union(std::uint64_t class_mask) const {
    ElementSet out;
    for (std::uint64_t m = class_mask; m != 0; m &= m - 1) out |= class_set(std::countr_zero(m));
    return out;
  }

  /// Every transversal of the classes in `class_mask`, restricted to elements
  /// of `allowed`, in canonical order.
  template <typename Fn>
  void for_each_transversal_of(std::uint64_t class_mask, ElementSet allowed, Fn&& fn) const {
    std::vector<std::vector<int>> choices;
    for (std::uint64_t m = class_mask; m != 0; m &= m - 1) {
      const auto opts = (class_set(std::countr_zero(m)) & allowed).indices();
      if (opts.empty()) return;
      choices.push_back(opts);
    }
    odometer(choices, false, fn);
  }
  template <typename Fn>
  void for_each_transversal(Fn&& fn) const {
    for_each_transversal_of(all_classes(), ground(), fn);
  }
  /// Every subtransversal (including the empty set), canonical order of choice vectors.
  template <typename Fn>
  void for_each_subtransversal(Fn&& fn) const {
    std::vector<std::vector<int>> choices;
    for (int c = 0; c < order(); ++c) choices.push_back(class_set(c).indices());
    odometer(choices, true, fn);
  }
  /// Every subtransversal missing exactly one class: fn(S, missing_class).
  template <typename Fn>
  void for_each_near_transversal(Fn&& fn) const {
    for (int w = 0; w < order(); ++w)
      for_each_transversal_of(all_classes() & ~(std::uint64_t{1} << w), ground(),
                              [&](ElementSet s) { fn(s, w); });
  }

  std::uint64_t all_classes() const {
    return order() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order()) - 1;
  }

  std::uint64_t transversal_count() const {
    std::uint64_t n = 1;
    for (int s : sizes_) n *= static_cast<std::uint64_t>(s);
    return n;
  }

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.sizes_ == b.sizes_; }

 private:
  template <typename Fn>
  static void odometer(const std::vector<std::vector<int>>& choices, bool allow_none, Fn&& fn) {
    const std::size_t n = choices.size();
    // digit value -1 means "no element" when allow_none
    std::vector<int> digit(n, allow_none ? -1 : 0);
    while (true) {
      ElementSet s;
      for (std::size_t i = 0; i < n; ++i)
        if (digit[i] >= 0) s.insert(choices[i][static_cast<std::size_t>(digit[i])]);
      fn(s);
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (digit[i] + 1 < static_cast<int>(choices[i].size())) {
          ++digit[i];
          break;
        }
        digit[i] = allow_none ? -1 : 0;
        if (i == 0) return;
      }
      if (n == 0) return;
    }
  }

  std::vector<int> sizes_;
  std::vector<int> offsets_;
  std::vector<int> class_of_;
  std::vector<int> slot_of_;
  int size_ = 0;
};

/// X + Y on a carrier whose classes all have three elements.
inline ElementSet sum_subtransversals(const Carrier& c, ElementSet x, ElementSet y) {
  for (int s : c.class_sizes()) require(s == 3, ErrorCode::NotTriple, "the sum needs every class to have size 3");
  require(c.is_subtransversal(x) && c.is_subtransversal(y), ErrorCode::NotSubtransversal,
          "summands must be subtransversals");
  const ElementSet d = x ^ y;
  return d ^ c.classes_union(c.sc(d));
}

}  // namespace mmlab

#endif  // MMLAB_CARRIER_HPP
