#ifndef MMLAB_MULTIMATROID_HPP
#define MMLAB_MULTIMATROID_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "mmlab/algebra.hpp"
#include "mmlab/carrier.hpp"
#include "mmlab/element_set.hpp"
#include "mmlab/limits.hpp"
#include "mmlab/matroid.hpp"

namespace mmlab {

/// Carrier plus a rank oracle on subtransversals. The oracle comes either from
/// a sheltering matrix (column e represents element e) or from a circuit list.
/// Labels remember where each element came from when minors are taken.
class Multimatroid {
 public:
  enum class Kind { Sheltered, Circuits };

  Multimatroid() { finish({}); }

  static Multimatroid sheltered(Carrier carrier, const FieldMatrix& m, std::vector<ElementLabel> labels = {}) {
    require(m.cols() == carrier.size(), ErrorCode::InvalidArgument, "sheltering matrix needs one column per element");
    Multimatroid z;
    z.kind_ = Kind::Sheltered;
    z.carrier_ = std::move(carrier);
    z.matrix_ = m.row_reduced();
    for (int j = 0; j < z.matrix_.cols(); ++j) z.packed_.push_back(z.matrix_.packed_column(j));
    z.finish(std::move(labels));
    return z;
  }

  static Multimatroid from_circuits(Carrier carrier, std::vector<ElementSet> circuits,
                                    std::vector<ElementLabel> labels = {}) {
    Multimatroid z;
    z.kind_ = Kind::Circuits;
    z.carrier_ = std::move(carrier);
    for (auto c : circuits)
      require(!c.empty() && z.carrier_.is_subtransversal(c), ErrorCode::NotSubtransversal,
              "every circuit must be a nonempty subtransversal");
    sort_canonical(circuits);
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    for (std::size_t i = 0; i < circuits.size(); ++i)
      for (std::size_t j = 0; j < circuits.size(); ++j)
        require(i == j || !circuits[i].subset_of(circuits[j]), ErrorCode::InvalidArgument,
                "circuit family is not an antichain");
    z.circuits_ = std::move(circuits);
    z.finish(std::move(labels));
    return z;
  }

  Kind kind() const { return kind_; }
  bool is_sheltered() const { return kind_ == Kind::Sheltered; }
  const Carrier& carrier() const { return carrier_; }
  int order() const { return carrier_.order(); }
  int size() const { return carrier_.size(); }
  const std::vector<ElementLabel>& labels() const { return labels_; }
  ElementLabel label(int e) const { return labels_[static_cast<std::size_t>(e)]; }
  /// Index of the element carrying `l`, or -1.
  int find_label(ElementLabel l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return static_cast<int>(i);
    return -1;
  }

  const FieldMatrix& matrix() const {
    require(is_sheltered(), ErrorCode::InvalidArgument, "multimatroid has no sheltering matrix");
    return matrix_;
  }
  const std::vector<ElementSet>& circuit_family() const {
    require(!is_sheltered(), ErrorCode::InvalidArgument, "sheltered multimatroid has no stored circuit list");
    return circuits_;
  }
  bool binary_sheltered() const { return is_sheltered() && matrix_.entries_binary(); }

  int rank(ElementSet s) const {
    require(carrier_.is_subtransversal(s), ErrorCode::NotSubtransversal, "rank is defined on subtransversals only");
    return rank_unchecked(s);
  }
  int nullity(ElementSet s) const { return s.size() - rank(s); }

  /// No subtransversal check; callers guarantee it.
  int rank_unchecked(ElementSet s) const {
    if (table_) return (*table_)[index(s)];
    return compute_rank(s);
  }
  int nullity_unchecked(ElementSet s) const { return s.size() - rank_unchecked(s); }

 private:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 17;

  void finish(std::vector<ElementLabel> labels) {
    if (labels.empty())
      for (int e = 0; e < carrier_.size(); ++e) labels.push_back(carrier_.label_of(e));
    require(static_cast<int>(labels.size()) == carrier_.size(), ErrorCode::InvalidArgument,
            "one label per element expected");
    labels_ = std::move(labels);
    // mixed-radix index: digit of class c is 0 (absent) or slot + 1
    std::uint64_t radix = 1;
    weight_.assign(static_cast<std::size_t>(carrier_.size()), 0);
    for (int c = 0; c < carrier_.order(); ++c) {
      for (int s = 0; s < carrier_.class_size(c); ++s)
        weight_[static_cast<std::size_t>(carrier_.element(c, s))] = static_cast<std::uint32_t>(radix * (s + 1));
      radix *= static_cast<std::uint64_t>(carrier_.class_size(c) + 1);
      if (radix > kTableLimit) return;
    }
    auto t = std::make_shared<std::vector<std::int8_t>>(radix, 0);
    carrier_.for_each_subtransversal(
        [&](ElementSet s) { (*t)[index(s)] = static_cast<std::int8_t>(compute_rank(s)); });
    table_ = std::move(t);
  }

  std::size_t index(ElementSet s) const {
    std::size_t i = 0;
    s.for_each([&](int e) { i += weight_[static_cast<std::size_t>(e)]; });
    return i;
  }

  int compute_rank(ElementSet s) const {
    if (kind_ == Kind::Sheltered) return packed_rank(packed_, s.bits());
    // greedy, valid because Z[T] is a matroid for every transversal T
    ElementSet indep;
    s.for_each([&](int e) {
      const ElementSet cand = indep.with(e);
      for (auto c : circuits_)
        if (c.contains(e) && c.subset_of(cand)) return;
      indep = cand;
    });
    return indep.size();
  }

  Kind kind_ = Kind::Circuits;
  Carrier carrier_;
  FieldMatrix matrix_;
  std::vector<PackedColumn> packed_;
  std::vector<ElementSet> circuits_;
  std::vector<ElementLabel> labels_;
  std::vector<std::uint32_t> weight_;
  std::shared_ptr<const std::vector<std::int8_t>> table_;
};

inline void check_enumerable(const Multimatroid& z) {
  check_bound(z.order(), limits().max_order, "multimatroid order");
  check_bound(z.carrier().max_class_size(), limits().max_class_size, "skew class size");
}

/// Minimal dependent subtransversals in canonical order.
inline std::vector<ElementSet> circuits(const Multimatroid& z) {
  check_enumerable(z);
  if (!z.is_sheltered()) return z.circuit_family();
  std::vector<ElementSet> out;
  z.carrier().for_each_subtransversal([&](ElementSet s) {
    if (s.empty() || z.rank_unchecked(s) != s.size() - 1) return;
    bool minimal = true;
    s.for_each([&](int e) {
      if (minimal && z.rank_unchecked(s.without(e)) != s.size() - 1) minimal = false;
    });
    if (minimal) out.push_back(s);
  });
  sort_canonical(out);
  return out;
}

/// Maximal independent subtransversals in canonical order.
inline std::vector<ElementSet> bases(const Multimatroid& z) {
  check_enumerable(z);
  const Carrier& c = z.carrier();
  std::vector<ElementSet> out;
  if (c.nondegenerate()) {
    c.for_each_transversal([&](ElementSet t) {
      if (z.rank_unchecked(t) == t.size()) out.push_back(t);
    });
  } else {
    c.for_each_subtransversal([&](ElementSet s) {
      if (z.rank_unchecked(s) != s.size()) return;
      const std::uint64_t missing = c.all_classes() & ~c.classes_met(s);
      bool maximal = true;
      c.classes_union(missing).for_each([&](int e) {
        if (maximal && z.rank_unchecked(s.with(e)) == s.size() + 1) maximal = false;
      });
      if (maximal) out.push_back(s);
    });
  }
  if (c.nondegenerate())
    for (auto b : out)
      require(c.is_transversal(b) && z.nullity_unchecked(b) == 0, ErrorCode::InternalInconsistency,
              "basis of a nondegenerate multimatroid is not an independent transversal");
  sort_canonical(out);
  return out;
}

namespace detail {

/// Carrier of the classes meeting `keep`, with elements renumbered in order.
struct Restriction {
  Carrier carrier;
  std::vector<int> old_of_new;  // new element -> old element
  std::vector<int> new_of_old;  // old element -> new element or -1
};

inline Restriction restrict_carrier(const Carrier& c, ElementSet keep) {
  Restriction r;
  std::vector<int> sizes;
  r.new_of_old.assign(static_cast<std::size_t>(c.size()), -1);
  for (int cls = 0; cls < c.order(); ++cls) {
    const auto elems = (c.class_set(cls) & keep).indices();
    if (elems.empty()) continue;
    sizes.push_back(static_cast<int>(elems.size()));
    for (int e : elems) {
      r.new_of_old[static_cast<std::size_t>(e)] = static_cast<int>(r.old_of_new.size());
      r.old_of_new.push_back(e);
    }
  }
  r.carrier = Carrier(std::move(sizes));
  return r;
}

inline ElementSet map_set(ElementSet s, const std::vector<int>& to) {
  ElementSet out;
  s.for_each([&](int e) { out.insert(to[static_cast<std::size_t>(e)]); });
  return out;
}

inline std::vector<ElementLabel> map_labels(const Multimatroid& z, const std::vector<int>& old_of_new) {
  std::vector<ElementLabel> out;
  for (int e : old_of_new) out.push_back(z.label(e));
  return out;
}

}  // namespace detail

/// Z restricted to the element set X (classes shrink or vanish).
inline Multimatroid restrict_to(const Multimatroid& z, ElementSet x) {
  require(x.subset_of(z.carrier().ground()), ErrorCode::UnknownElement, "restriction set outside the carrier");
  const auto r = detail::restrict_carrier(z.carrier(), x);
  auto labels = detail::map_labels(z, r.old_of_new);
  if (z.is_sheltered()) return Multimatroid::sheltered(r.carrier, z.matrix().select_columns(r.old_of_new), labels);
  std::vector<ElementSet> cs;
  for (auto c : z.circuit_family())
    if (c.subset_of(x)) cs.push_back(detail::map_set(c, r.new_of_old));
  return Multimatroid::from_circuits(r.carrier, std::move(cs), labels);
}

inline Multimatroid delete_elements(const Multimatroid& z, ElementSet x) {
  require(x.subset_of(z.carrier().ground()), ErrorCode::UnknownElement, "deletion set outside the carrier");
  return restrict_to(z, z.carrier().ground() - x);
}

enum class RestrictMode { Restrict, Delete };

inline Multimatroid restrict_delete(const Multimatroid& z, ElementSet x, RestrictMode mode) {
  return mode == RestrictMode::Restrict ? restrict_to(z, x) : delete_elements(z, x);
}

/// Z|X: classes disjoint from X remain, with r'(S) = r(S u X) - r(X).
inline Multimatroid minor(const Multimatroid& z, ElementSet x) {
  const Carrier& c = z.carrier();
  require(c.is_subtransversal(x), ErrorCode::NotSubtransversal, "minors are taken at subtransversals");
  const ElementSet keep = c.ground() - c.covered(x);
  const auto r = detail::restrict_carrier(c, keep);
  auto labels = detail::map_labels(z, r.old_of_new);
  if (z.is_sheltered()) {
    // contract X, delete its siblings
    std::vector<int> order = x.indices();
    order.insert(order.end(), r.old_of_new.begin(), r.old_of_new.end());
    const auto e = z.matrix().select_columns(order).rref();
    int rc = 0;
    for (int p : e.pivots)
      if (p < x.size()) ++rc;
    std::vector<int> rows, cols;
    for (int i = rc; i < static_cast<int>(e.pivots.size()); ++i) rows.push_back(i);
    for (std::size_t j = 0; j < r.old_of_new.size(); ++j) cols.push_back(x.size() + static_cast<int>(j));
    return Multimatroid::sheltered(r.carrier, e.reduced.select_rows(rows).select_columns(cols), labels);
  }
  const ElementSet sib = c.siblings(x);
  std::vector<ElementSet> cand;
  for (auto circ : z.circuit_family())
    if (!circ.intersects(sib) && !(circ - x).empty()) cand.push_back(circ - x);
  std::vector<ElementSet> cs;
  for (auto a : cand) {
    bool minimal = true;
    for (auto b : cand)
      if (b != a && b.subset_of(a)) minimal = false;
    if (minimal) cs.push_back(detail::map_set(a, r.new_of_old));
  }
  return Multimatroid::from_circuits(r.carrier, std::move(cs), labels);
}

/// Same carrier, labels and rank on every subtransversal.
inline bool same_structure(const Multimatroid& a, const Multimatroid& b) {
  if (!(a.carrier() == b.carrier())) return false;
  bool same = true;
  a.carrier().for_each_subtransversal([&](ElementSet s) {
    if (same && a.rank_unchecked(s) != b.rank_unchecked(s)) same = false;
  });
  return same;
}

/// Failure certificate for the multimatroid and tightness validators:
/// the near-transversal S, its missing class, and the elements x of that
/// class with n(S + x) != n(S).
struct NearTransversalWitness {
  ElementSet s;
  int missing_class = -1;
  std::vector<int> raisers;
};

struct Verdict {
  bool holds = true;
  std::optional<NearTransversalWitness> witness;
  explicit operator bool() const { return holds; }
};

namespace detail {

/// Per near-transversal: count of raising elements (direct rank) and count of
/// circuits of the order-one minor (independent path). They must agree.
template <typename Fn>
void scan_near_transversals(const Multimatroid& z, bool cross_check, Fn&& fn) {
  check_bound(z.order(), limits().max_order, "multimatroid order for validation");
  const Carrier& c = z.carrier();
  c.for_each_near_transversal([&](ElementSet s, int w) {
    NearTransversalWitness wit{s, w, {}};
    const int n0 = z.nullity_unchecked(s);
    c.class_set(w).for_each([&](int x) {
      if (z.nullity_unchecked(s.with(x)) != n0) wit.raisers.push_back(x);
    });
    if (cross_check) {
      const Multimatroid m = minor(z, s);
      int minor_circuits = 0;
      for (int e = 0; e < m.size(); ++e)
        if (m.rank_unchecked(ElementSet::singleton(e)) == 0) ++minor_circuits;
      // x raises nullity iff {x} is a loop of Z|S, so the counts coincide
      require(minor_circuits == static_cast<int>(wit.raisers.size()), ErrorCode::InternalInconsistency,
              "near-transversal condition and order-one minor condition disagree");
    }
    fn(wit);
  });
}

}  // namespace detail

/// At most one element of the missing class raises nullity, for every near-transversal.
inline Verdict is_multimatroid(const Multimatroid& z, bool cross_check = true) {
  Verdict v;
  detail::scan_near_transversals(z, cross_check, [&](const NearTransversalWitness& w) {
    if (v.holds && w.raisers.size() > 1) {
      v.holds = false;
      v.witness = w;
    }
  });
  return v;
}

/// Exactly one element raises nullity at every near-transversal. A
/// non-multimatroid is reported as not tight with its multimatroid witness.
inline Verdict is_tight(const Multimatroid& z, bool cross_check = true) {
  Verdict v;
  detail::scan_near_transversals(z, cross_check, [&](const NearTransversalWitness& w) {
    if (v.holds && w.raisers.size() != 1) {
      v.holds = false;
      v.witness = w;
    }
  });
  return v;
}

/// Sc(W) as a sorted list of class indices.
inline std::vector<int> sc(const Carrier& c, ElementSet w) {
  require(w.subset_of(c.ground()), ErrorCode::UnknownElement, "set outside the carrier");
  return ElementSet(c.sc(w)).indices();
}

/// Union over transversals T of the span of the circuits inside T.
inline std::vector<ElementSet> cycle_space_mm(const Multimatroid& z) {
  check_bound(z.order(), limits().max_cycle_order, "multimatroid order for cycle space");
  check_bound(z.carrier().max_class_size(), limits().max_class_size, "skew class size");
  const auto cs = circuits(z);
  std::unordered_set<ElementSet> seen;
  z.carrier().for_each_transversal([&](ElementSet t) {
    // XOR basis of the circuits inside t, keyed by lowest element
    std::vector<std::uint64_t> basis;
    for (auto c : cs) {
      if (!c.subset_of(t)) continue;
      std::uint64_t v = c.bits();
      for (auto b : basis)
        if (v & (b & (~b + 1))) v ^= b;
      if (v == 0) continue;
      for (auto& b : basis)
        if (b & (v & (~v + 1))) b ^= v;
      basis.push_back(v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if ((mask >> i) & 1U) s ^= basis[i];
      seen.insert(ElementSet(s));
    }
  });
  std::vector<ElementSet> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

/// Free sum of matroids on a common ground set: class e holds element e of
/// each matroid, slot i coming from matroids[i].
inline Multimatroid free_sum(const std::vector<Matroid>& ms) {
  require(!ms.empty(), ErrorCode::InvalidArgument, "free sum of an empty list");
  const int n = ms[0].size();
  const int k = static_cast<int>(ms.size());
  std::vector<std::vector<int>> pos;
  for (const auto& m : ms) pos.push_back(align_ground(ms[0], m));
  const Carrier c = Carrier::uniform(n, k);
  bool all_represented = true;
  for (const auto& m : ms) all_represented = all_represented && m.is_represented();
  if (all_represented) {
    Field f = Field::GF2;
    for (const auto& m : ms)
      if (m.matrix().field() == Field::GF4) f = Field::GF4;
    int rows = 0;
    for (const auto& m : ms) rows += m.matrix().rows();
    FieldMatrix big(f, rows, n * k);
    int r0 = 0;
    for (int i = 0; i < k; ++i) {
      const FieldMatrix& a = ms[static_cast<std::size_t>(i)].matrix();
      for (int e = 0; e < n; ++e) {
        const int src = pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
        for (int r = 0; r < a.rows(); ++r) big.set_code(r0 + r, c.element(e, i), a.code(r, src));
      }
      r0 += a.rows();
    }
    return Multimatroid::sheltered(c, big);
  }
  std::vector<ElementSet> cs;
  for (int i = 0; i < k; ++i) {
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) inverse[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)])] = e;
    for (auto circ : circuits(ms[static_cast<std::size_t>(i)])) {
      ElementSet s;
      circ.for_each([&](int j) { s.insert(c.element(inverse[static_cast<std::size_t>(j)], i)); });
      cs.push_back(s);
    }
  }
  return Multimatroid::from_circuits(c, std::move(cs));
}

/// Z_M: the free sum of (M*, M), so slot 0 carries M* and slot 1 carries M.
inline Multimatroid z_matroid(const Matroid& m) { return free_sum({dual(m), m}); }

/// Element map phi (element of Z1 -> element of Z2) preserving classes and
/// circuits in both directions.
using Isomorphism = std::vector<int>;

inline std::optional<Isomorphism> isomorphic(const Multimatroid& z1, const Multimatroid& z2) {
  for (const auto* z : {&z1, &z2}) {
    check_bound(z->order(), limits().max_iso_order, "multimatroid order for isomorphism");
    check_bound(z->carrier().max_class_size(), limits().max_iso_class_size, "class size for isomorphism");
  }
  const Carrier& c1 = z1.carrier();
  const Carrier& c2 = z2.carrier();
  if (c1.order() != c2.order() || c1.size() != c2.size()) return std::nullopt;
  auto s1 = c1.class_sizes(), s2 = c2.class_sizes();
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  const auto cs1 = circuits(z1), cs2 = circuits(z2);
  if (cs1.size() != cs2.size()) return std::nullopt;
  {
    std::vector<int> h1, h2;
    for (auto c : cs1) h1.push_back(c.size());
    for (auto c : cs2) h2.push_back(c.size());
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return std::nullopt;
  }
  const std::unordered_set<ElementSet> set2(cs2.begin(), cs2.end());
  const int l = c1.order();
  // a circuit of Z1 becomes checkable once its largest class is assigned
  std::vector<std::vector<ElementSet>> due(static_cast<std::size_t>(l));
  for (auto c : cs1) due[static_cast<std::size_t>(c1.class_of(c.highest()))].push_back(c);
  std::vector<std::uint64_t> cls2;
  for (auto c : cs2) cls2.push_back(c2.classes_met(c));

  Isomorphism phi(static_cast<std::size_t>(c1.size()), -1);
  std::vector<char> used(static_cast<std::size_t>(l), 0);
  std::uint64_t image = 0;
  std::size_t checked1 = 0;

  std::function<bool(int)> assign = [&](int cls) -> bool {
    if (cls == l) return true;
    const int k = c1.class_size(cls);
    for (int target = 0; target < l; ++target) {
      if (used[static_cast<std::size_t>(target)] || c2.class_size(target) != k) continue;
      std::vector<int> perm(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
      do {
        for (int i = 0; i < k; ++i)
          phi[static_cast<std::size_t>(c1.element(cls, i))] = c2.element(target, perm[static_cast<std::size_t>(i)]);
        bool ok = true;
        for (auto c : due[static_cast<std::size_t>(cls)]) {
          if (!set2.count(detail::map_set(c, phi))) {
            ok = false;
            break;
          }
        }
        const std::uint64_t img = image | (std::uint64_t{1} << target);
        if (ok) {
          // injectivity of circuits: counts inside the assigned region must match
          std::size_t n1 = checked1 + due[static_cast<std::size_t>(cls)].size(), n2 = 0;
          for (auto m : cls2)
            if ((m & ~img) == 0) ++n2;
          ok = n1 == n2;
        }
        if (ok) {
          used[static_cast<std::size_t>(target)] = 1;
          const std::uint64_t saved_image = image;
          const std::size_t saved_checked = checked1;
          image = img;
          checked1 += due[static_cast<std::size_t>(cls)].size();
          if (assign(cls + 1)) return true;
          image = saved_image;
          checked1 = saved_checked;
          used[static_cast<std::size_t>(target)] = 0;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (int i = 0; i < k; ++i) phi[static_cast<std::size_t>(c1.element(cls, i))] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return phi;
}

}  // namespace mmlab

#endif  // MMLAB_MULTIMATROID_HPP
