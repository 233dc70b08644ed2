#ifndef MMLAB_POLYNOMIALS_HPP
#define MMLAB_POLYNOMIALS_HPP

#include <optional>
#include <vector>

#include "mmlab/graph.hpp"
#include "mmlab/isotropic.hpp"
#include "mmlab/multimatroid.hpp"
#include "mmlab/polynomial.hpp"

namespace mmlab {

/// Weight per element; an empty optional marks a missing weight.
using WeightAssignment = std::vector<std::optional<Rational>>;

inline WeightAssignment uniform_weights(int n, const Rational& w) {
  return WeightAssignment(static_cast<std::size_t>(n), w);
}

/// Q(Z; w, y) = sum over transversals T of prod_{u in T} w(u) * y^{n(T)}.
inline RatPolynomial transition_poly(const Multimatroid& z, const WeightAssignment& w) {
  check_enumerable(z);
  require(static_cast<int>(w.size()) == z.size(), ErrorCode::IncompleteWeights, "one weight per element expected");
  for (std::size_t e = 0; e < w.size(); ++e)
    require(w[e].has_value(), ErrorCode::IncompleteWeights, "missing weight for element " + std::to_string(e));
  std::vector<Rational> by_nullity(static_cast<std::size_t>(z.order()) + 1, Rational(0));
  z.carrier().for_each_transversal([&](ElementSet t) {
    Rational p = 1;
    t.for_each([&](int e) { p *= *w[static_cast<std::size_t>(e)]; });
    by_nullity[static_cast<std::size_t>(z.nullity_unchecked(t))] += p;
  });
  return RatPolynomial(std::move(by_nullity));
}

/// Q(Z; w, y) evaluated at y, without building the polynomial.
inline Rational transition_value(const Multimatroid& z, const WeightAssignment& w, const Rational& y) {
  return transition_poly(z, w).evaluate(y);
}

/// Number of transversals of each nullity.
inline std::vector<BigInt> nullity_counts(const Multimatroid& z) {
  check_enumerable(z);
  std::vector<BigInt> counts(static_cast<std::size_t>(z.order()) + 1, BigInt(0));
  z.carrier().for_each_transversal([&](ElementSet t) { counts[static_cast<std::size_t>(z.nullity_unchecked(t))] += 1; });
  return counts;
}

/// Q1(Z; y) = sum over transversals of y^{n(T)}.
inline IntPolynomial q1(const Multimatroid& z) { return IntPolynomial(nullity_counts(z)); }

enum class ExpansionDirection { Minus, Plus };

namespace detail {

/// Elements of `target` carrying the labels of `s` in `source`.
inline ElementSet relabel_into(const Multimatroid& source, ElementSet s, const Multimatroid& target) {
  ElementSet out;
  s.for_each([&](int e) {
    const int i = target.find_label(source.label(e));
    require(i >= 0, ErrorCode::InternalInconsistency, "element lost while taking a minor");
    out.insert(i);
  });
  return out;
}

}  // namespace detail

/// The subset expansions over F in T:
///   minus: sum (-1)^|F| y^{n(F)} Q1(Z|F)           (equals Q1(Z - T))
///   plus:  sum y^{n(F)} Q1((Z|F) - (T \ F))          (equals Q1(Z))
inline IntPolynomial q1_expansion(const Multimatroid& z, ElementSet t, ExpansionDirection dir) {
  require(z.carrier().nondegenerate(), ErrorCode::Degenerate, "expansion needs a nondegenerate multimatroid");
  require(z.carrier().is_transversal(t), ErrorCode::NotSubtransversal, "expansion needs a transversal");
  check_enumerable(z);
  IntPolynomial out;
  for_each_subset(t, [&](ElementSet f) {
    const Multimatroid m = minor(z, f);
    const IntPolynomial shift = IntPolynomial::monomial(BigInt(1), static_cast<std::size_t>(z.nullity(f)));
    if (dir == ExpansionDirection::Minus) {
      const IntPolynomial term = shift * q1(m);
      if (f.size() % 2 == 0) out += term;
      else out -= term;
    } else {
      const Multimatroid rest = delete_elements(m, detail::relabel_into(z, t - f, m));
      out += shift * q1(rest);
    }
  });
  return out;
}

/// q(G; y) = sum over X of (y-1)^{n(A(G[X]))}.
inline IntPolynomial interlace(const Graph& g) {
  check_bound(g.order(), limits().max_interlace_vertices, "vertices for the interlace polynomial");
  std::vector<BigInt> counts(static_cast<std::size_t>(g.order()) + 1, BigInt(0));
  for_each_subset(g.vertices(), [&](ElementSet x) { counts[static_cast<std::size_t>(g.nullity_on(x))] += 1; });
  return IntPolynomial::from_shifted_counts(counts, BigInt(-1));
}

/// Q(G; y) = sum over Y in X of (y-2)^{n(A(G+Y)[X])}.
inline IntPolynomial global_interlace(const Graph& g) {
  check_bound(g.order(), limits().max_global_interlace_vertices, "vertices for the global interlace polynomial");
  std::vector<BigInt> counts(static_cast<std::size_t>(g.order()) + 1, BigInt(0));
  for_each_subset(g.vertices(), [&](ElementSet x) {
    for_each_subset(x, [&](ElementSet y) { counts[static_cast<std::size_t>(g.nullity_on(x, y))] += 1; });
  });
  return IntPolynomial::from_shifted_counts(counts, BigInt(-2));
}

/// b(G; y) = sum over Y of y^{n(A(G+Y))}.
inline IntPolynomial bracket(const Graph& g) {
  check_bound(g.order(), limits().max_interlace_vertices, "vertices for the bracket polynomial");
  std::vector<BigInt> counts(static_cast<std::size_t>(g.order()) + 1, BigInt(0));
  for_each_subset(g.vertices(), [&](ElementSet y) { counts[static_cast<std::size_t>(g.nullity_on(g.vertices(), y))] += 1; });
  return IntPolynomial(std::move(counts));
}

/// T(M; x, x) through Q1(Z_M; x - 1).
inline Rational tutte_diagonal(const Matroid& m, const Rational& x) {
  check_bound(m.size(), 10, "matroid size for the Tutte diagonal");
  const Multimatroid zm = z_matroid(standard_form(m));
  return q1(zm).evaluate(Rational(x - 1));
}

}  // namespace mmlab

#endif  // MMLAB_POLYNOMIALS_HPP
