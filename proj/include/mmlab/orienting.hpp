#ifndef MMLAB_ORIENTING_HPP
#define MMLAB_ORIENTING_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mmlab/multimatroid.hpp"
#include "mmlab/polynomials.hpp"

namespace mmlab {

/// Z - T is tight, decided on Z's own rank oracle: at every near-transversal
/// S avoiding T exactly one element of the missing class (outside T) raises nullity.
inline bool minus_is_tight(const Multimatroid& z, ElementSet t) {
  const Carrier& c = z.carrier();
  const ElementSet allowed = c.ground() - t;
  for (int w = 0; w < c.order(); ++w) {
    const ElementSet opts = c.class_set(w) - t;
    bool ok = true;
    c.for_each_transversal_of(c.all_classes() & ~(std::uint64_t{1} << w), allowed, [&](ElementSet s) {
      if (!ok) return;
      const int n0 = z.nullity_unchecked(s);
      int raisers = 0;
      opts.for_each([&](int x) {
        if (z.nullity_unchecked(s.with(x)) != n0) ++raisers;
      });
      if (raisers != 1) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Ort(Z) by testing every transversal.
inline std::vector<ElementSet> ort(const Multimatroid& z, unsigned threads = 1) {
  require(z.carrier().nondegenerate(), ErrorCode::Degenerate, "orienting transversals need a nondegenerate multimatroid");
  check_bound(z.order(), limits().max_ort_order, "multimatroid order for orienting transversals");
  std::vector<ElementSet> all;
  z.carrier().for_each_transversal([&](ElementSet t) { all.push_back(t); });
  std::vector<char> keep(all.size(), 0);
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(all.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < all.size(); ++i) keep[i] = minus_is_tight(z, all[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < all.size(); i += threads) keep[i] = minus_is_tight(z, all[i]);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(all[i]);
  sort_canonical(out);
  return out;
}

/// Orienting transversals disjoint from T.
inline std::vector<ElementSet> e_t(const Multimatroid& z, ElementSet t, unsigned threads = 1) {
  require(z.carrier().is_transversal(t), ErrorCode::NotSubtransversal, "E_T needs a transversal");
  std::vector<ElementSet> out;
  for (auto y : ort(z, threads))
    if ((y & t).empty()) out.push_back(y);
  return out;
}

inline bool is_binary_tight3(const Multimatroid& z) {
  const auto k = z.carrier().uniform_k();
  if (z.order() > 0 && (!k || *k != 3)) return false;
  if (z.order() == 0) return true;
  return z.binary_sheltered() && is_tight(z, false).holds;
}

/// No circuit meets T in exactly one element. Cross-checked against the
/// tightness of Z - T and, for binary tight 3-matroids, the cycle parity test.
inline bool is_orienting(const Multimatroid& z, ElementSet t) {
  require(z.carrier().nondegenerate(), ErrorCode::Degenerate, "needs a nondegenerate multimatroid");
  require(z.carrier().is_transversal(t), ErrorCode::NotSubtransversal, "needs a transversal");
  require(is_tight(z, false).holds, ErrorCode::NotTight, "orienting test needs a tight multimatroid");
  bool by_circuits = true;
  for (auto c : circuits(z))
    if ((c & t).size() == 1) {
      by_circuits = false;
      break;
    }
  const bool by_tightness = minus_is_tight(z, t);
  require(by_circuits == by_tightness, ErrorCode::InternalInconsistency,
          "circuit test and tightness test disagree on an orienting transversal");
  const auto k = z.carrier().uniform_k();
  if (k && *k == 3 && z.binary_sheltered() && z.order() <= limits().max_cycle_order) {
    bool by_cycles = true;
    for (auto c : cycle_space_mm(z))
      if ((c & t).size() % 2 != 0) {
        by_cycles = false;
        break;
      }
    require(by_cycles == by_circuits, ErrorCode::InternalInconsistency, "cycle parity test disagrees");
  }
  return by_circuits;
}

/// Ort(Z) = T0 + CS(Z - T0) for binary tight 3-matroids.
inline std::vector<ElementSet> ort_fast(const Multimatroid& z, ElementSet t0) {
  require(z.carrier().is_transversal(t0), ErrorCode::NotSubtransversal, "T0 must be a transversal");
  require(is_binary_tight3(z), ErrorCode::NotBinaryTight3, "ort_fast needs a binary tight 3-matroid");
  require(minus_is_tight(z, t0), ErrorCode::NotOrienting, "T0 is not orienting");
  const Multimatroid rest = delete_elements(z, t0);
  std::vector<ElementSet> out;
  for (auto c : cycle_space_mm(rest))
    out.push_back(sum_subtransversals(z.carrier(), t0, detail::relabel_into(rest, c, z)));
  sort_canonical(out);
  return out;
}

struct EvalRecord {
  std::string name;
  Rational lhs;
  Rational rhs;
  std::optional<BigInt> odd_factor;
  bool pass = false;
};

struct EvalReport {
  int order = 0;
  std::size_t ort_size = 0;
  std::vector<EvalRecord> records;
  bool all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const EvalRecord& r) { return r.pass; });
  }
};

namespace detail {

inline WeightAssignment random_weights(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  WeightAssignment w;
  for (int i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    w.emplace_back(q);
  }
  return w;
}

/// Weights of Z carried over to a deletion-type restriction `sub`.
inline WeightAssignment restrict_weights(const Multimatroid& z, const WeightAssignment& w, const Multimatroid& sub) {
  WeightAssignment out;
  for (int e = 0; e < sub.size(); ++e) out.push_back(w[static_cast<std::size_t>(z.find_label(sub.label(e)))]);
  return out;
}

}  // namespace detail

/// Evaluations of the transition polynomial of a binary tight 3-matroid,
/// each computed directly and from Ort(Z).
inline EvalReport eval_suite(const Multimatroid& z, ElementSet t, std::uint64_t seed = 1) {
  check_bound(z.order(), 6, "multimatroid order for the evaluation suite");
  require(is_binary_tight3(z), ErrorCode::NotBinaryTight3, "evaluation suite needs a binary tight 3-matroid");
  require(z.carrier().is_transversal(t), ErrorCode::NotSubtransversal, "evaluation suite needs a transversal");
  const Carrier& c = z.carrier();
  const int l = z.order();
  const auto ys = ort(z);
  EvalReport rep;
  rep.order = l;
  rep.ort_size = ys.size();
  auto record = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    rep.records.push_back({std::move(name), lhs, rhs, std::nullopt, lhs == rhs});
  };
  std::mt19937_64 rng(seed);

  const IntPolynomial qz = q1(z);
  const Multimatroid zt = delete_elements(z, t);
  const IntPolynomial qzt = q1(zt);
  auto at = [](const IntPolynomial& p, long y) { return p.evaluate(Rational(y)); };

  // weighted value at y = 2 and y = 4 against products over classes outside Y
  {
    const WeightAssignment w = detail::random_weights(c.size(), rng);
    const RatPolynomial q = transition_poly(z, w);
    auto product_outside = [&](ElementSet covered) {
      Rational p = 1;
      for (int cls = 0; cls < l; ++cls) {
        Rational s = 0;
        (c.class_set(cls) - covered).for_each([&](int v) { s += *w[static_cast<std::size_t>(v)]; });
        p *= s;
      }
      return p;
    };
    Rational rhs1 = 0, rhs2 = 0;
    for (auto y1 : ys) {
      rhs1 += product_outside(y1);
      for (auto y2 : ys) rhs2 += product_outside(y1 | y2);
    }
    record("pow2_l1", q.evaluate(Rational(2)), rhs1);
    record("pow2_l2", q.evaluate(Rational(4)), rhs2);
  }
  // weighted value at 2 against siblings of each element of Y
  {
    const WeightAssignment w = detail::random_weights(c.size(), rng);
    Rational rhs = 0;
    for (auto y : ys) {
      Rational p = 1;
      y.for_each([&](int u) {
        Rational s = 0;
        c.class_set(c.class_of(u)).without(u).for_each([&](int v) { s += *w[static_cast<std::size_t>(v)]; });
        p *= s;
      });
      rhs += p;
    }
    record("weighted_at_2", transition_poly(z, w).evaluate(Rational(2)), rhs);
  }
  // Q1(Z; 2) from the size of Ort
  record("q1_at_2", at(qz, 2), Rational(BigInt(static_cast<long>(ys.size())) * qpow(2, l)));
  // Q1(Z - T; 2) from intersections with T
  {
    Rational rhs = 0;
    for (auto y : ys) rhs += qpow(2, (y & t).size());
    record("q1_minus_t_at_2", at(qzt, 2), rhs);
  }
  // signed sums over F in T of |Ort(Z|F)|, and the odd factor k
  {
    Rational rhs5 = 0;
    BigInt k = 0;
    for_each_subset(t, [&](ElementSet f) {
      const Multimatroid m = minor(z, f);
      const long o = static_cast<long>(ort(m).size());
      const int sign = f.size() % 2 == 0 ? 1 : -1;
      rhs5 += sign * o * qpow(2, t.size() - z.rank(f));
      const ElementSet rest = detail::relabel_into(z, t - f, m);
      k += sign * o * BigInt(qpow(2, m.rank(rest)).get_num());
    });
    record("signed_ort_sum", at(qzt, 2), rhs5);
    const Rational two_n = qpow(2, z.nullity(t));
    const Rational lhs = at(qzt, 2);
    EvalRecord r{"odd_factor", lhs, Rational(k) * two_n, k, false};
    const Rational at_minus2 = at(qzt, -2);
    r.pass = lhs == Rational(k) * two_n && lhs == Rational(k) * abs(at_minus2) && k % 2 != 0;
    rep.records.push_back(r);
  }
  // Q1(Z; 4) from pairs of orienting transversals
  {
    Rational rhs = 0;
    for (auto y1 : ys)
      for (auto y2 : ys) rhs += qpow(2, (y1 & y2).size());
    record("q1_at_4", at(qz, 4), rhs);
  }
  // Q1(Z; -4) from nullities of orienting transversals
  {
    Rational rhs = 0;
    for (auto y : ys) rhs += qpow(-2, z.nullity(y));
    if (l % 2 != 0) rhs = -rhs;
    record("q1_at_minus_4", at(qz, -4), rhs);
  }
  // Q(Z; x, y) = sum over Y of Q(Z - Y; x, y/2) at five even y
  {
    const WeightAssignment w = detail::random_weights(c.size(), rng);
    const RatPolynomial q = transition_poly(z, w);
    std::vector<RatPolynomial> parts;
    for (auto y : ys) {
      const Multimatroid zy = delete_elements(z, y);
      parts.push_back(transition_poly(zy, detail::restrict_weights(z, w, zy)));
    }
    std::uniform_int_distribution<int> pick(-6, 6);
    for (int i = 0; i < 5; ++i) {
      const long y = 2L * pick(rng);
      Rational rhs = 0;
      for (const auto& p : parts) rhs += p.evaluate(Rational(y / 2));
      record("halving_y=" + std::to_string(y), q.evaluate(Rational(y)), rhs);
    }
  }
  // Q1(Z - T; 1 - k) at k = 3
  {
    Rational rhs = qpow(-2, z.nullity(t));
    if (l % 2 != 0) rhs = -rhs;
    record("q1_minus_t_at_minus_2", at(qzt, -2), rhs);
  }
  return rep;
}

}  // namespace mmlab

#endif  // MMLAB_ORIENTING_HPP
