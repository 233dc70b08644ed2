#ifndef MMLAB_CATALOG_HPP
#define MMLAB_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mmlab/io.hpp"
#include "mmlab/isotropic.hpp"
#include "mmlab/multimatroid.hpp"
#include "mmlab/orienting.hpp"

namespace mmlab {

namespace detail {

inline Multimatroid circuit_fixture(int order, const std::vector<std::vector<std::string>>& names) {
  const Carrier c = Carrier::uniform(order, 2);
  std::vector<ElementSet> cs;
  for (const auto& circ : names) {
    ElementSet s;
    for (const auto& n : circ) s.insert(parse_element_name(c, n));
    cs.push_back(s);
  }
  return Multimatroid::from_circuits(c, std::move(cs));
}

}  // namespace detail

inline Multimatroid fixture_s1() {
  return detail::circuit_fixture(3, {{"1a", "2b", "3b"}, {"1b", "2a", "3b"}, {"1b", "2b", "3a"}});
}
inline Multimatroid fixture_s2() { return detail::circuit_fixture(3, {{"1a", "2a", "3a"}}); }
inline Multimatroid fixture_s3() { return detail::circuit_fixture(3, {{"1a", "2a", "3a"}, {"1b", "2b", "3b"}}); }
inline Multimatroid fixture_s4() {
  return detail::circuit_fixture(4, {{"1a", "2b", "3b", "4b"},
                                     {"1b", "2a", "3b", "4b"},
                                     {"1b", "2b", "3a", "4b"},
                                     {"1b", "2b", "3b", "4a"},
                                     {"1a", "2a", "3a"},
                                     {"1a", "2a", "4a"},
                                     {"1a", "3a", "4a"},
                                     {"2a", "3a", "4a"}});
}
inline Multimatroid fixture_s5() {
  std::vector<std::vector<std::string>> cs;
  for (char x : {'a', 'b'})
    for (int skip = 1; skip <= 4; ++skip) {
      std::vector<std::string> c;
      for (int i = 1; i <= 4; ++i)
        if (i != skip) c.push_back(std::to_string(i) + x);
      cs.push_back(c);
    }
  return detail::circuit_fixture(4, cs);
}

inline FieldMatrix h33_matrix() { return FieldMatrix::from_codes(Field::GF4, {{0, 1, 2}, {1, 0, 1}, {3, 1, 0}}); }
inline FieldMatrix u24_3_matrix() {
  return FieldMatrix::from_codes(Field::GF4, {{0, 0, 2, 3}, {0, 0, 3, 2}, {3, 2, 0, 0}, {2, 3, 0, 0}});
}
/// U(2,4) over GF(4) in standard form.
inline Matroid u24_matroid() {
  return Matroid::represented(FieldMatrix::from_codes(Field::GF4, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
}

inline Multimatroid fixture_h33() { return isotropic_multimatroid(h33_matrix(), Field::GF4).z; }
inline Multimatroid fixture_zu24() { return z_matroid(u24_matroid()); }
inline Multimatroid fixture_zu24_3() { return isotropic_multimatroid(u24_3_matrix(), Field::GF4).z; }

struct Fixture {
  std::string name;
  std::function<Multimatroid()> build;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"S1", fixture_s1},   {"S2", fixture_s2},     {"S3", fixture_s3},       {"S4", fixture_s4},
      {"S5", fixture_s5},   {"H33", fixture_h33},   {"ZU24", fixture_zu24},   {"ZU24_3", fixture_zu24_3},
  };
  return all;
}

inline Multimatroid fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f.build();
  fail(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

// ---------------------------------------------------------------- minors

struct MinorWitness {
  ElementSet x;
  Isomorphism iso;  // element of the minor -> element of the pattern
};

/// First subtransversal X (canonical order) with Z|X isomorphic to P.
inline std::optional<MinorWitness> has_minor(const Multimatroid& z, const Multimatroid& p) {
  check_bound(z.order(), limits().max_minor_scan_order, "multimatroid order for minor scans");
  const int want = z.order() - p.order();
  if (want < 0) return std::nullopt;
  std::vector<ElementSet> xs;
  z.carrier().for_each_subtransversal([&](ElementSet s) {
    if (s.size() == want) xs.push_back(s);
  });
  sort_canonical(xs);
  for (auto x : xs) {
    const Multimatroid m = minor(z, x);
    if (auto iso = isomorphic(m, p)) return MinorWitness{x, *iso};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- strongly binary

struct StronglyBinaryWitness {
  ElementSet t1;  // basis transversal carrying the identity block
  FieldMatrix a;  // symmetric over GF(2), rows and columns indexed by class
};

inline void require_two_matroid(const Multimatroid& z) {
  for (int s : z.carrier().class_sizes()) {
    require(s >= 2, ErrorCode::Degenerate, "needs a nondegenerate 2-matroid");
    require(s == 2, ErrorCode::InvalidArgument, "needs a 2-matroid");
  }
}

/// Sheltering by (I | A) on (T1, T2). A is read off single and double swaps
/// of a basis T1, then verified on every subtransversal.
inline std::optional<StronglyBinaryWitness> is_strongly_binary(const Multimatroid& z) {
  require_two_matroid(z);
  check_bound(z.order(), limits().max_strongly_binary_order, "2-matroid order for strong binarity");
  const Carrier& c = z.carrier();
  const int l = z.order();
  std::optional<ElementSet> t1;
  c.for_each_transversal([&](ElementSet t) {
    if (!t1 && z.nullity_unchecked(t) == 0) t1 = t;
  });
  require(t1.has_value(), ErrorCode::NoBasis, "no transversal basis");
  auto swapped = [&](std::initializer_list<int> classes) {
    ElementSet t = *t1;
    for (int v : classes) t = t ^ c.class_set(v);
    return t;
  };
  FieldMatrix a(Field::GF2, l, l);
  for (int v = 0; v < l; ++v) a.set_code(v, v, z.nullity_unchecked(swapped({v})) == 0 ? 1 : 0);
  for (int u = 0; u < l; ++u)
    for (int v = u + 1; v < l; ++v) {
      // det [[a_uu, a_uv], [a_uv, a_vv]] = a_uu a_vv + a_uv over GF(2)
      const int is_basis = z.nullity_unchecked(swapped({u, v})) == 0 ? 1 : 0;
      const int entry = is_basis ^ (a.code(u, u) & a.code(v, v));
      a.set_code(u, v, static_cast<std::uint8_t>(entry));
      a.set_code(v, u, static_cast<std::uint8_t>(entry));
    }
  FieldMatrix d(Field::GF2, l, c.size());
  for (int v = 0; v < l; ++v) {
    c.class_set(v).for_each([&](int e) {
      if (t1->contains(e)) d.set_code(v, e, 1);
      else
        for (int r = 0; r < l; ++r) d.set_code(r, e, a.code(r, v));
    });
  }
  if (!same_structure(z, Multimatroid::sheltered(c, d))) return std::nullopt;
  return StronglyBinaryWitness{*t1, a};
}

// ---------------------------------------------------------------- skew pairs of circuit unions

struct SkewPairProfile {
  bool all_even = true;
  bool no_three = true;
  std::optional<std::pair<ElementSet, ElementSet>> odd_pair;
  std::optional<std::pair<ElementSet, ElementSet>> three_pair;
};

inline SkewPairProfile skew_pair_profile(const Multimatroid& z) {
  SkewPairProfile p;
  const auto cs = circuits(z);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j) {
      const int pairs = std::popcount(z.carrier().sc(cs[i] | cs[j]));
      if (pairs % 2 != 0 && p.all_even) {
        p.all_even = false;
        p.odd_pair = {cs[i], cs[j]};
      }
      if (pairs == 3 && p.no_three) {
        p.no_three = false;
        p.three_pair = {cs[i], cs[j]};
      }
    }
  return p;
}

// ---------------------------------------------------------------- binary sheltering search

/// A GF(2) matrix whose column matroid agrees with Z on every subtransversal,
/// found by extending columns one element at a time in column echelon form.
inline std::optional<FieldMatrix> binary_sheltering(const Multimatroid& z) {
  check_bound(z.order(), limits().max_extension_order, "multimatroid order for the sheltering search");
  const Carrier& c = z.carrier();
  const int n = c.size();
  // subtransversals whose largest element is e
  std::vector<std::vector<ElementSet>> checks(static_cast<std::size_t>(n));
  c.for_each_subtransversal([&](ElementSet s) {
    if (!s.empty()) checks[static_cast<std::size_t>(s.indices().back())].push_back(s);
  });
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(n), 0);
  std::optional<FieldMatrix> found;
  std::function<void(int, int)> dfs = [&](int e, int dim) {
    if (found) return;
    if (e == n) {
      FieldMatrix m(Field::GF2, dim, n);
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < dim; ++r)
          if ((cols[static_cast<std::size_t>(j)] >> r) & 1U) m.set_code(r, j, 1);
      found = m;
      return;
    }
    auto fits = [&]() {
      for (auto s : checks[static_cast<std::size_t>(e)]) {
        std::vector<std::uint64_t> rows;
        s.for_each([&](int x) { rows.push_back(cols[static_cast<std::size_t>(x)]); });
        if (gf2_rank(std::move(rows)) != z.rank_unchecked(s)) return false;
      }
      return true;
    };
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << dim) && !found; ++v) {
      cols[static_cast<std::size_t>(e)] = v;
      if (fits()) dfs(e + 1, dim);
    }
    if (found || dim >= 63) return;
    cols[static_cast<std::size_t>(e)] = std::uint64_t{1} << dim;
    if (fits()) dfs(e + 1, dim + 1);
  };
  dfs(0, 0);
  return found;
}

// ---------------------------------------------------------------- binary tight 3-matroids

struct BinaryClassification {
  bool binary = false;
  ElementSet removed;                                   // T used for the strong binarity test
  std::optional<StronglyBinaryWitness> strongly_binary; // certificate of Z - T
  std::optional<MinorWitness> h33_minor;
  std::optional<std::pair<ElementSet, ElementSet>> three_pair;
};

/// Three independent verdicts, required to agree.
inline BinaryClassification classify_binary_tight3(const Multimatroid& z) {
  check_bound(z.order(), 5, "multimatroid order for classification");
  for (int s : z.carrier().class_sizes()) require(s == 3, ErrorCode::NotTriple, "needs a 3-matroid");
  require(is_tight(z, false).holds, ErrorCode::NotTight, "classification needs a tight 3-matroid");
  BinaryClassification out;
  const Carrier& c = z.carrier();
  for (int v = 0; v < c.order(); ++v) out.removed.insert(c.element(v, 0));
  const Multimatroid rest = delete_elements(z, out.removed);
  out.strongly_binary = is_strongly_binary(rest);
  out.h33_minor = has_minor(z, fixture_h33());
  out.three_pair = skew_pair_profile(z).three_pair;
  const bool a = out.strongly_binary.has_value();
  const bool b = !out.h33_minor.has_value();
  const bool d = !out.three_pair.has_value();
  require(a == b && b == d, ErrorCode::InternalInconsistency, "binary classification tests disagree");
  out.binary = a;
  return out;
}

// ---------------------------------------------------------------- tight extension

namespace detail {

/// Bounds-propagating search over rank values of subtransversals of the lifted
/// carrier. Constraints: unit increase, local submodularity, at most one
/// nullity raiser per (S, class), exactly one when S misses a single class.
class ExtensionSearch {
 public:
  ExtensionSearch(const Multimatroid& z, const Carrier& c3) : l_(z.order()) {
    c3.for_each_subtransversal([&](ElementSet s) {
      index_[s.bits()] = static_cast<int>(sets_.size());
      sets_.push_back(s);
    });
    const int n = static_cast<int>(sets_.size());
    lo_.assign(static_cast<std::size_t>(n), 0);
    hi_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const ElementSet s = sets_[static_cast<std::size_t>(i)];
      bool uses_new = false;
      ElementSet old;
      s.for_each([&](int e) {
        if (c3.slot_of(e) == 2) uses_new = true;
        else old.insert(z.carrier().element(c3.class_of(e), c3.slot_of(e)));
      });
      if (uses_new) {
        hi_[static_cast<std::size_t>(i)] = s.size();
      } else {
        lo_[static_cast<std::size_t>(i)] = hi_[static_cast<std::size_t>(i)] = z.rank_unchecked(old);
      }
      const auto idx = s.indices();
      for (int x : idx) unit_.push_back({i, at(s.without(x))});
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
          submod_.push_back({at(s.without(idx[b])), at(s.without(idx[a])), i, at(s.without(idx[a]).without(idx[b]))});
    }
    for (int i = 0; i < n; ++i) {
      const ElementSet s = sets_[static_cast<std::size_t>(i)];
      for (std::uint64_t m = c3.all_classes() & ~c3.classes_met(s); m != 0; m &= m - 1) {
        Group g{i, {}, s.size() == l_ - 1};
        c3.class_set(std::countr_zero(m)).for_each([&](int y) { g.ext.push_back(at(s.with(y))); });
        groups_.push_back(std::move(g));
      }
    }
  }

  /// Up to `limit` complete rank assignments.
  std::vector<std::vector<int>> solve(std::size_t limit) {
    std::vector<std::vector<int>> out;
    State st{lo_, hi_};
    search(st, limit, out);
    return out;
  }

  const std::vector<ElementSet>& sets() const { return sets_; }
  int at(ElementSet s) const { return index_.at(s.bits()); }

 private:
  struct Unit { int big, small; };
  struct Submod { int a, b, u, i; };
  struct Group { int s; std::vector<int> ext; bool exact; };
  struct State { std::vector<int> lo, hi; };

  static bool tighten_hi(State& st, int i, int v, bool& changed) {
    auto& h = st.hi[static_cast<std::size_t>(i)];
    if (v < h) { h = v; changed = true; }
    return h >= st.lo[static_cast<std::size_t>(i)];
  }
  static bool tighten_lo(State& st, int i, int v, bool& changed) {
    auto& l = st.lo[static_cast<std::size_t>(i)];
    if (v > l) { l = v; changed = true; }
    return l <= st.hi[static_cast<std::size_t>(i)];
  }

  bool propagate(State& st) const {
    bool changed = true;
    auto lo = [&](int i) { return st.lo[static_cast<std::size_t>(i)]; };
    auto hi = [&](int i) { return st.hi[static_cast<std::size_t>(i)]; };
    while (changed) {
      changed = false;
      for (const auto& u : unit_) {
        if (!tighten_lo(st, u.big, lo(u.small), changed) || !tighten_hi(st, u.big, hi(u.small) + 1, changed) ||
            !tighten_lo(st, u.small, lo(u.big) - 1, changed) || !tighten_hi(st, u.small, hi(u.big), changed))
          return false;
      }
      for (const auto& q : submod_) {
        // r(a) + r(b) >= r(u) + r(i)
        if (!tighten_hi(st, q.u, hi(q.a) + hi(q.b) - lo(q.i), changed) ||
            !tighten_hi(st, q.i, hi(q.a) + hi(q.b) - lo(q.u), changed) ||
            !tighten_lo(st, q.a, lo(q.u) + lo(q.i) - hi(q.b), changed) ||
            !tighten_lo(st, q.b, lo(q.u) + lo(q.i) - hi(q.a), changed))
          return false;
      }
      for (const auto& g : groups_) {
        // y raises nullity iff r(S + y) = r(S)
        int raise = 0, open = 0, open_at = -1, raise_at = -1;
        for (int e : g.ext) {
          if (hi(e) <= lo(g.s)) { ++raise; raise_at = e; }
          else if (lo(e) > hi(g.s)) continue;
          else { ++open; open_at = e; }
        }
        if (raise > 1) return false;
        if (raise == 1) {
          for (int e : g.ext)
            if (e != raise_at && !tighten_lo(st, e, lo(g.s) + 1, changed)) return false;
          if (!tighten_hi(st, g.s, hi(raise_at), changed)) return false;
        }
        if (g.exact && raise == 0) {
          if (open == 0) return false;
          if (open == 1 && (!tighten_hi(st, open_at, hi(g.s), changed) || !tighten_lo(st, g.s, lo(open_at), changed)))
            return false;
        }
      }
    }
    return true;
  }

  void search(State& st, std::size_t limit, std::vector<std::vector<int>>& out) const {
    if (out.size() >= limit || !propagate(st)) return;
    int pick = -1, width = 0;
    for (std::size_t i = 0; i < st.lo.size(); ++i) {
      const int w = st.hi[i] - st.lo[i];
      if (w > 0 && (pick < 0 || w < width)) { pick = static_cast<int>(i); width = w; }
    }
    if (pick < 0) {
      out.push_back(st.lo);
      return;
    }
    for (int v = st.lo[static_cast<std::size_t>(pick)]; v <= st.hi[static_cast<std::size_t>(pick)]; ++v) {
      State next = st;
      next.lo[static_cast<std::size_t>(pick)] = next.hi[static_cast<std::size_t>(pick)] = v;
      search(next, limit, out);
    }
  }

  int l_;
  std::vector<ElementSet> sets_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> lo_, hi_;
  std::vector<Unit> unit_;
  std::vector<Submod> submod_;
  std::vector<Group> groups_;
};

}  // namespace detail

/// Unique tight 3-matroid Z' whose restriction to the old slots is Z, found by
/// a constraint search over rank functions of the lifted carrier.
inline std::optional<Multimatroid> tight_extension_search(const Multimatroid& z) {
  require_two_matroid(z);
  check_bound(z.order(), limits().max_extension_order, "2-matroid order for the extension search");
  const Carrier c3 = Carrier::uniform(z.order(), 3);
  if (z.order() == 0) return Multimatroid::from_circuits(c3, {});
  detail::ExtensionSearch cs(z, c3);
  const auto solutions = cs.solve(2);
  if (solutions.empty()) return std::nullopt;
  require(solutions.size() == 1, ErrorCode::InternalInconsistency, "tight extension is not unique");
  const auto& r = solutions[0];
  auto rank_of = [&](ElementSet s) { return r[static_cast<std::size_t>(cs.at(s))]; };
  std::vector<ElementSet> circuits_found;
  for (auto s : cs.sets()) {
    if (s.empty() || rank_of(s) == s.size()) continue;
    bool minimal = true;
    s.for_each([&](int x) {
      const ElementSet t = s.without(x);
      if (rank_of(t) != t.size()) minimal = false;
    });
    if (minimal) circuits_found.push_back(s);
  }
  sort_canonical(circuits_found);
  Multimatroid out = Multimatroid::from_circuits(c3, std::move(circuits_found));
  require(is_tight(out).holds, ErrorCode::InternalInconsistency, "extension search returned a non-tight result");
  return out;
}

// ---------------------------------------------------------------- bases

struct BasisParity {
  std::size_t b1 = 0;
  std::size_t b2 = 0;
};

inline void require_tight_odd(const Multimatroid& z) {
  const auto k = z.carrier().uniform_k();
  require(z.order() == 0 || (k && *k >= 3 && *k % 2 == 1), ErrorCode::InvalidArgument,
          "needs a k-matroid with odd k >= 3");
  require(is_tight(z, false).holds, ErrorCode::NotTight, "needs a tight multimatroid");
}

/// Bases of Z inside X and inside X ^ Y; the parities must agree.
inline BasisParity basis_parity(const Multimatroid& z, ElementSet x, ElementSet y) {
  check_bound(z.order(), 5, "multimatroid order for basis parity");
  require(z.carrier().covered(y) == y, ErrorCode::NotClassUnion, "Y must be a union of skew classes");
  require(x.subset_of(z.carrier().ground()), ErrorCode::UnknownElement, "X outside the carrier");
  require_tight_odd(z);
  BasisParity p;
  for (auto b : bases(z)) {
    if (b.subset_of(x)) ++p.b1;
    if (b.subset_of(x ^ y)) ++p.b2;
  }
  require(p.b1 % 2 == p.b2 % 2, ErrorCode::InternalInconsistency, "basis counts differ in parity");
  return p;
}

/// Histogram of the number of bases inside T u w over transversals T and classes w.
inline std::map<int, std::size_t> class_extension_basis_counts(const Multimatroid& z) {
  require(z.carrier().nondegenerate(), ErrorCode::Degenerate, "needs a nondegenerate multimatroid");
  check_enumerable(z);
  const Carrier& c = z.carrier();
  std::map<int, std::size_t> hist;
  for (int w = 0; w < c.order(); ++w)
    c.for_each_transversal_of(c.all_classes() & ~(std::uint64_t{1} << w), c.ground(), [&](ElementSet s) {
      int count = 0;
      c.class_set(w).for_each([&](int x) { count += z.nullity_unchecked(s.with(x)) == 0 ? 1 : 0; });
      ++hist[count];
    });
  return hist;
}

/// For bases T, T' and a skew pair p in T ^ T', some skew pair q in T ^ T'
/// makes T' ^ (p u q) a basis.
inline bool basis_exchange_holds(const Multimatroid& z) {
  require(z.carrier().nondegenerate(), ErrorCode::Degenerate, "needs a nondegenerate multimatroid");
  const auto bs = bases(z);
  const std::unordered_set<ElementSet> is_basis(bs.begin(), bs.end());
  const Carrier& c = z.carrier();
  for (auto t : bs)
    for (auto t2 : bs) {
      const ElementSet diff = t ^ t2;
      std::vector<ElementSet> pairs;
      for (std::uint64_t m = c.classes_met(diff); m != 0; m &= m - 1)
        pairs.push_back(diff & c.class_set(std::countr_zero(m)));
      for (auto p : pairs) {
        bool ok = false;
        for (auto q : pairs)
          if (!ok && is_basis.count(t2 ^ (p | q))) ok = true;
        if (!ok) return false;
      }
    }
  return true;
}

}  // namespace mmlab

#endif  // MMLAB_CATALOG_HPP
