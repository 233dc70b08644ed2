#ifndef MMLAB_MATROID_HPP
#define MMLAB_MATROID_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mmlab/algebra.hpp"
#include "mmlab/element_set.hpp"
#include "mmlab/limits.hpp"
#include "mmlab/polynomial.hpp"

namespace mmlab {

/// Ordinary matroid on at most 64 labelled elements, given either by a matrix
/// over GF(2)/GF(4) (column j = element j) or by its circuit family.
class Matroid {
 public:
  enum class Kind { Represented, CircuitList };

  Matroid() = default;

  static Matroid represented(const FieldMatrix& m, std::vector<std::string> labels = {}) {
    Matroid out;
    out.kind_ = Kind::Represented;
    out.labels_ = labels.empty() ? default_labels(m.cols()) : std::move(labels);
    require(static_cast<int>(out.labels_.size()) == m.cols(), ErrorCode::InvalidArgument,
            "label count differs from column count");
    require(m.cols() <= ElementSet::kCapacity, ErrorCode::TooLarge, "matroids are limited to 64 elements");
    out.matrix_ = m;
    out.check_labels();
    const FieldMatrix reduced = m.row_reduced();
    for (int j = 0; j < m.cols(); ++j) out.packed_.push_back(reduced.packed_column(j));
    return out;
  }

  static Matroid from_circuits(std::vector<std::string> labels, std::vector<ElementSet> circuits, bool validate = true) {
    Matroid out;
    out.kind_ = Kind::CircuitList;
    out.labels_ = std::move(labels);
    require(out.labels_.size() <= static_cast<std::size_t>(ElementSet::kCapacity), ErrorCode::TooLarge,
            "matroids are limited to 64 elements");
    out.check_labels();
    const ElementSet ground = ElementSet::prefix(out.size());
    for (auto c : circuits) require(!c.empty() && c.subset_of(ground), ErrorCode::InvalidArgument, "circuit outside ground set");
    sort_canonical(circuits);
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    out.circuits_ = std::move(circuits);
    if (validate && out.size() <= 12) out.validate_circuits();
    return out;
  }

  static Matroid from_circuit_labels(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<std::string>>& circuits) {
    Matroid probe = from_circuits(labels, {}, false);
    std::vector<ElementSet> cs;
    for (const auto& c : circuits) cs.push_back(probe.set_of(c));
    return from_circuits(labels, std::move(cs));
  }

  /// Circuit-list matroid whose rank function is `rank` on subsets of the ground set.
  static Matroid from_rank(std::vector<std::string> labels, const std::function<int(ElementSet)>& rank) {
    const int n = static_cast<int>(labels.size());
    check_bound(n, limits().max_matroid_enum, "matroid size for circuit enumeration");
    std::vector<ElementSet> circuits;
    for_each_subset(ElementSet::prefix(n), [&](ElementSet s) {
      if (s.empty() || rank(s) != s.size() - 1) return;
      bool minimal = true;
      s.for_each([&](int e) {
        if (minimal && rank(s.without(e)) != s.size() - 1) minimal = false;
      });
      if (minimal) circuits.push_back(s);
    });
    return from_circuits(std::move(labels), std::move(circuits), false);
  }

  static Matroid uniform(int r, int n, std::vector<std::string> labels = {}) {
    if (labels.empty()) labels = default_labels(n);
    std::vector<ElementSet> circuits;
    for_each_subset(ElementSet::prefix(n), [&](ElementSet s) {
      if (s.size() == r + 1) circuits.push_back(s);
    });
    return from_circuits(std::move(labels), std::move(circuits), false);
  }

  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i) l.push_back(std::to_string(i));
    return l;
  }

  Kind kind() const { return kind_; }
  bool is_represented() const { return kind_ == Kind::Represented; }
  int size() const { return static_cast<int>(labels_.size()); }
  ElementSet ground() const { return ElementSet::prefix(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const FieldMatrix& matrix() const {
    require(is_represented(), ErrorCode::InvalidArgument, "matroid has no matrix");
    return matrix_;
  }
  /// Circuits as supplied (circuit-list kind only).
  const std::vector<ElementSet>& circuit_family() const {
    require(!is_represented(), ErrorCode::InvalidArgument, "represented matroid has no stored circuit list");
    return circuits_;
  }

  /// True when a GF(2) matrix is at hand (GF(4) matrices with 0/1 entries count).
  bool has_binary_matrix() const { return is_represented() && matrix_.entries_binary(); }

  int index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[static_cast<std::size_t>(i)] == label) return i;
    fail(ErrorCode::UnknownElement, "no element labelled '" + label + "'");
  }

  ElementSet set_of(const std::vector<std::string>& labels) const {
    ElementSet s;
    for (const auto& l : labels) s.insert(index_of(l));
    return s;
  }

  std::vector<std::string> labels_of(ElementSet s) const {
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(labels_[static_cast<std::size_t>(i)]); });
    return out;
  }

  int rank(ElementSet x) const {
    require(x.subset_of(ground()), ErrorCode::UnknownElement, "subset not inside the ground set");
    if (is_represented()) return packed_rank(packed_, x.bits());
    // greedy is exact for matroids
    ElementSet indep;
    x.for_each([&](int e) {
      const ElementSet cand = indep.with(e);
      for (const auto& c : circuits_)
        if (c.contains(e) && c.subset_of(cand)) return;
      indep = cand;
    });
    return indep.size();
  }
  int rank() const { return rank(ground()); }
  int nullity(ElementSet x) const { return x.size() - rank(x); }
  bool independent(ElementSet x) const { return rank(x) == x.size(); }

  int rank_of(const std::vector<std::string>& labels) const { return rank(set_of(labels)); }

 private:
  void check_labels() const {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    require(seen.size() == labels_.size(), ErrorCode::LabelCollision, "duplicate element label");
  }

  void validate_circuits() const {
    for (std::size_t i = 0; i < circuits_.size(); ++i)
      for (std::size_t j = 0; j < circuits_.size(); ++j) {
        if (i == j) continue;
        const ElementSet a = circuits_[i], b = circuits_[j];
        require(!a.subset_of(b), ErrorCode::InvalidArgument, "circuit family is not an antichain");
        if (j < i) continue;
        (a & b).for_each([&](int e) {
          const ElementSet u = (a | b).without(e);
          bool found = false;
          for (const auto& c : circuits_)
            if (c.subset_of(u)) {
              found = true;
              break;
            }
          require(found, ErrorCode::InvalidArgument, "circuit family violates circuit elimination");
        });
      }
  }

  Kind kind_ = Kind::CircuitList;
  std::vector<std::string> labels_;
  FieldMatrix matrix_;
  std::vector<PackedColumn> packed_;
  std::vector<ElementSet> circuits_;
};

/// All 2^n ranks, indexed by subset bits. n <= the matroid enumeration bound.
inline std::vector<std::int8_t> rank_table(const Matroid& m) {
  check_bound(m.size(), limits().max_matroid_enum, "matroid size for subset enumeration");
  std::vector<std::int8_t> t(std::size_t{1} << m.size());
  for (std::uint64_t s = 0; s < t.size(); ++s) t[s] = static_cast<std::int8_t>(m.rank(ElementSet(s)));
  return t;
}

/// Minimal dependent sets, in canonical (ground-order lexicographic) order.
inline std::vector<ElementSet> circuits(const Matroid& m) {
  check_bound(m.size(), limits().max_matroid_enum, "matroid size for circuit enumeration");
  if (!m.is_represented()) return m.circuit_family();
  const auto r = rank_table(m);
  std::vector<ElementSet> out;
  for (std::uint64_t s = 1; s < r.size(); ++s) {
    const ElementSet set(s);
    if (r[s] != set.size() - 1) continue;
    bool minimal = true;
    set.for_each([&](int e) {
      if (r[set.without(e).bits()] != set.size() - 1) minimal = false;
    });
    if (minimal) out.push_back(set);
  }
  sort_canonical(out);
  return out;
}

inline std::vector<ElementSet> bases(const Matroid& m) {
  check_bound(m.size(), limits().max_matroid_enum, "matroid size for basis enumeration");
  const int r = m.rank();
  std::vector<ElementSet> out;
  for_each_subset(m.ground(), [&](ElementSet s) {
    if (s.size() == r && m.independent(s)) out.push_back(s);
  });
  sort_canonical(out);
  return out;
}

/// Row-reduced representation whose identity block sits on the
/// lexicographically least basis. Circuit-list matroids are returned as is.
inline Matroid standard_form(const Matroid& m) {
  if (!m.is_represented()) return m;
  return Matroid::represented(m.matrix().row_reduced(), m.labels());
}

/// For a matrix of the form (I | A) up to column permutation: the column that
/// carries e_i for every row i. Empty optional if some row has none.
inline std::optional<std::vector<int>> unit_columns(const FieldMatrix& a) {
  std::vector<int> unit(static_cast<std::size_t>(a.rows()), -1);
  for (int j = 0; j < a.cols(); ++j) {
    int one = -1;
    bool ok = true;
    for (int i = 0; i < a.rows() && ok; ++i) {
      const auto v = a.code(i, j);
      if (v == 0) continue;
      if (v == 1 && one < 0) one = i;
      else ok = false;
    }
    if (ok && one >= 0 && unit[static_cast<std::size_t>(one)] < 0) unit[static_cast<std::size_t>(one)] = j;
  }
  for (int u : unit)
    if (u < 0) return std::nullopt;
  return unit;
}

inline Matroid dual(const Matroid& m) {
  if (!m.is_represented()) {
    const int full = m.rank();
    const ElementSet e = m.ground();
    return Matroid::from_rank(m.labels(), [&](ElementSet x) { return x.size() + m.rank(e - x) - full; });
  }
  const FieldMatrix& a = m.matrix();
  const auto unit = unit_columns(a);
  require(unit.has_value(), ErrorCode::NotStandardForm, "matrix is not (I | A) up to column order; pivot first");
  std::vector<int> row_of(static_cast<std::size_t>(a.cols()), -1);
  for (int i = 0; i < a.rows(); ++i) row_of[static_cast<std::size_t>((*unit)[static_cast<std::size_t>(i)])] = i;
  std::vector<int> others;
  for (int j = 0; j < a.cols(); ++j)
    if (row_of[static_cast<std::size_t>(j)] < 0) others.push_back(j);
  // (A^T | I) in the same column order; characteristic 2 makes -A^T = A^T
  FieldMatrix d(a.field(), static_cast<int>(others.size()), a.cols());
  for (std::size_t k = 0; k < others.size(); ++k) {
    d.set_code(static_cast<int>(k), others[k], 1);
    for (int i = 0; i < a.rows(); ++i)
      if (auto v = a.code(i, others[k])) d.set_code(static_cast<int>(k), (*unit)[static_cast<std::size_t>(i)], v);
  }
  return Matroid::represented(d, m.labels());
}

/// M / contract \ del, on the remaining elements in ground order.
inline Matroid minor(const Matroid& m, ElementSet contract, ElementSet del) {
  require(!contract.intersects(del), ErrorCode::OverlappingSets, "contract and delete sets overlap");
  require((contract | del).subset_of(m.ground()), ErrorCode::UnknownElement, "minor sets outside the ground set");
  const ElementSet rest = m.ground() - contract - del;
  const std::vector<int> keep = rest.indices();
  std::vector<std::string> labels;
  for (int e : keep) labels.push_back(m.labels()[static_cast<std::size_t>(e)]);
  if (!m.is_represented()) {
    const int rc = m.rank(contract);
    return Matroid::from_rank(labels, [&](ElementSet x) {
      ElementSet lifted;
      x.for_each([&](int i) { lifted.insert(keep[static_cast<std::size_t>(i)]); });
      return m.rank(lifted | contract) - rc;
    });
  }
  // contracted columns first: their pivot rows are the first r(contract) rows,
  // and the remaining nonzero rows restricted to `rest` represent M/contract
  std::vector<int> order = contract.indices();
  order.insert(order.end(), keep.begin(), keep.end());
  const auto e = m.matrix().select_columns(order).rref();
  int rc = 0;
  for (int p : e.pivots)
    if (p < contract.size()) ++rc;
  std::vector<int> rows, cols;
  for (int i = rc; i < static_cast<int>(e.pivots.size()); ++i) rows.push_back(i);
  for (std::size_t j = 0; j < keep.size(); ++j) cols.push_back(contract.size() + static_cast<int>(j));
  return Matroid::represented(e.reduced.select_rows(rows).select_columns(cols), labels);
}

inline Matroid restrict_to(const Matroid& m, ElementSet keep) { return minor(m, {}, m.ground() - keep); }

inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::set<std::string> seen(labels.begin(), labels.end());
  require(seen.size() == labels.size(), ErrorCode::LabelCollision, "direct summands share a label; relabel first");
  if (a.is_represented() && b.is_represented())
    return Matroid::represented(FieldMatrix::block_diagonal(a.matrix(), b.matrix()), labels);
  std::vector<ElementSet> cs = circuits(a);
  for (auto c : circuits(b)) cs.push_back(ElementSet(c.bits() << a.size()));
  return Matroid::from_circuits(labels, std::move(cs), false);
}

/// Position in `b` of each label of `a`; GroundMismatch unless the label sets agree.
inline std::vector<int> align_ground(const Matroid& a, const Matroid& b) {
  require(a.size() == b.size(), ErrorCode::GroundMismatch, "ground sets differ in size");
  std::vector<int> pos;
  for (const auto& l : a.labels()) {
    int found = -1;
    for (int j = 0; j < b.size(); ++j)
      if (b.labels()[static_cast<std::size_t>(j)] == l) found = j;
    require(found >= 0, ErrorCode::GroundMismatch, "label '" + l + "' missing from second ground set");
    pos.push_back(found);
  }
  return pos;
}

inline ElementSet remap(ElementSet s, const std::vector<int>& pos) {
  ElementSet out;
  s.for_each([&](int i) { out.insert(pos[static_cast<std::size_t>(i)]); });
  return out;
}

/// Every circuit of a meets every circuit of b in a number of elements other than one.
inline bool orthogonal(const Matroid& a, const Matroid& b) {
  const auto pos = align_ground(a, b);
  const auto ca = circuits(a), cb = circuits(b);
  for (auto c : ca) {
    const ElementSet mapped = remap(c, pos);
    for (auto d : cb)
      if ((mapped & d).size() == 1) return false;
  }
  return true;
}

/// Cycle space of a binary matroid: all 2^nullity kernel supports, each
/// checked to decompose into disjoint circuits.
inline std::vector<ElementSet> cycle_space(const Matroid& m) {
  require(m.has_binary_matrix(), ErrorCode::NotBinary, "cycle space needs a GF(2) representation");
  check_bound(m.size(), limits().max_cycle_space_cols, "columns for cycle space");
  const FieldMatrix a = m.matrix().as_binary();
  std::vector<std::uint64_t> gens;
  for (const auto& v : a.null_space()) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) s |= std::uint64_t{1} << j;
    gens.push_back(s);
  }
  const FieldMatrix reduced = a.row_reduced();
  std::vector<PackedColumn> cols;
  for (int j = 0; j < m.size(); ++j) cols.push_back(reduced.packed_column(j));
  auto is_cycle = [&](ElementSet d) {
    std::uint64_t sum = 0;
    d.for_each([&](int e) { sum ^= cols[static_cast<std::size_t>(e)].lo; });
    return sum == 0;
  };
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    std::uint64_t s = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if ((mask >> g) & 1U) s ^= gens[g];
    // peel circuits off until nothing is left
    ElementSet d(s);
    while (!d.empty()) {
      ElementSet c = d;
      d.for_each([&](int e) {
        if (!m.independent(c.without(e))) c.erase(e);
      });
      d -= c;
      require(is_cycle(d), ErrorCode::InternalInconsistency, "cycle is not a disjoint union of circuits");
    }
    out.emplace_back(s);
  }
  sort_canonical(out);
  return out;
}

/// T(M; x, y) by deletion-contraction over (remaining elements, closure of the
/// contracted set); the memo lives only for this call.
inline Rational tutte(const Matroid& m, const Rational& x, const Rational& y) {
  check_bound(m.size(), limits().max_matroid_enum, "matroid size for Tutte evaluation");
  const auto r = rank_table(m);
  const std::uint64_t all = m.ground().bits();
  auto closure = [&](std::uint64_t k) {
    std::uint64_t c = k;
    for (std::uint64_t rest = all & ~k; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      if (r[k | bit] == r[k]) c |= bit;
    }
    return c;
  };
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
      return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Rational, KeyHash> memo;
  std::function<Rational(std::uint64_t, std::uint64_t)> go = [&](std::uint64_t rem, std::uint64_t k) -> Rational {
    if (rem == 0) return Rational(1);
    const auto key = std::make_pair(rem, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint64_t bit = rem & (~rem + 1);
    const std::uint64_t rest = rem & ~bit;
    Rational v;
    if (r[k | bit] == r[k]) {
      v = y * go(rest, k);
    } else if (r[k | rem] != r[k | rest]) {
      v = x * go(rest, closure(k | bit));
    } else {
      v = go(rest, k) + go(rest, closure(k | bit));
    }
    memo.emplace(key, v);
    return v;
  };
  return go(all, closure(0));
}

}  // namespace mmlab

#endif  // MMLAB_MATROID_HPP
