#ifndef MMLAB_ISOTROPIC_HPP
#define MMLAB_ISOTROPIC_HPP

#include <vector>

#include "mmlab/algebra.hpp"
#include "mmlab/graph.hpp"
#include "mmlab/matroid.hpp"
#include "mmlab/multimatroid.hpp"

namespace mmlab {

/// Isotropic matroid [I | A | A+I] and the 3-matroid it shelters. Element
/// (v, i) of the multimatroid is column i*n + v of `isotropic`, i.e. slot i
/// of class v is phi_{i+1}(v).
struct IsotropicBuild {
  Field field = Field::GF2;
  FieldMatrix a;
  FieldMatrix isotropic;
  Multimatroid z;

  int vertices() const { return a.rows(); }
  int phi(int block, int v) const { return z.carrier().element(v, block - 1); }
  /// phi_block(X) for a vertex set X.
  ElementSet phi_set(int block, ElementSet x) const {
    ElementSet out;
    x.for_each([&](int v) { out.insert(phi(block, v)); });
    return out;
  }
  ElementSet block_transversal(int block) const { return phi_set(block, ElementSet::prefix(vertices())); }
};

inline bool is_symmetric(const FieldMatrix& a) { return a.rows() == a.cols() && a.transpose() == a; }
inline bool is_inv_symmetric(const FieldMatrix& a) { return a.rows() == a.cols() && inv_transpose(a) == a; }

namespace detail {

inline FieldMatrix isotropic_matrix(const FieldMatrix& a) {
  const int n = a.rows();
  const FieldMatrix i = FieldMatrix::identity(a.field(), n);
  return FieldMatrix::hconcat({i, a, a + i});
}

/// Column order that lists classes first, then slots.
inline std::vector<int> class_major_order(int n, int k) {
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < k; ++i) order.push_back(i * n + v);
  return order;
}

}  // namespace detail

/// Z_A for symmetric A over GF(2) or inv-symmetric A over GF(4). The raw A is
/// used as given; see normalize_diagonal for the zero-diagonal form.
inline IsotropicBuild isotropic_multimatroid(const FieldMatrix& a_in, Field field) {
  require(a_in.rows() == a_in.cols(), ErrorCode::InvalidArgument, "isotropic build needs a square matrix");
  require(a_in.field() == field || (a_in.field() == Field::GF2 && field == Field::GF4), ErrorCode::FieldMismatch,
          "matrix field differs from the requested field");
  const FieldMatrix a = a_in.lifted(field);
  if (field == Field::GF2) require(is_symmetric(a), ErrorCode::NotSymmetric, "A must be symmetric");
  else require(is_inv_symmetric(a), ErrorCode::NotInvSymmetric, "A must satisfy inv(A^T) = A");
  IsotropicBuild b;
  b.field = field;
  b.a = a;
  b.isotropic = detail::isotropic_matrix(a);
  const int n = a.rows();
  b.z = Multimatroid::sheltered(Carrier::uniform(n, 3), b.isotropic.select_columns(detail::class_major_order(n, 3)));
  if (n <= limits().max_order) {
    const Verdict mm = is_multimatroid(b.z);
    require(mm.holds, ErrorCode::InternalInconsistency, "isotropic build is not a multimatroid");
    const Verdict t = is_tight(b.z);
    require(t.holds, ErrorCode::InternalInconsistency, "isotropic build is not tight");
  }
  return b;
}

inline IsotropicBuild z_graph(const Graph& g) { return isotropic_multimatroid(g.adjacency(), Field::GF2); }

/// Zero-diagonal form of A. Swapping the phi_2 and phi_3 slots of class v
/// toggles A_vv, so Z_A equals Z_{A'} with those slots exchanged on `swapped`.
struct NormalizedDiagonal {
  FieldMatrix a;
  ElementSet swapped;
};

inline NormalizedDiagonal normalize_diagonal(const FieldMatrix& a) {
  NormalizedDiagonal out{a, {}};
  for (int v = 0; v < a.rows(); ++v) {
    const auto d = a.code(v, v);
    require(d <= 1, ErrorCode::NotInvSymmetric, "diagonal entries must be 0 or 1");
    if (d == 1) {
      out.a.set_code(v, v, 0);
      out.swapped.insert(v);
    }
  }
  return out;
}

/// The tight 3-matroid of a quaternary matroid M, with slots relabelled so
/// that slot 0 carries M*, slot 1 carries M and slot 2 the third block.
struct QuaternaryBuild {
  IsotropicBuild iso;     // built in ground order, slots in phi order
  Multimatroid z;         // slots (M*, M, T3)
  std::vector<int> basis; // ground elements forming the identity block
};

inline QuaternaryBuild z_quaternary(const Matroid& m) {
  require(m.is_represented(), ErrorCode::InvalidArgument, "a quaternary matroid needs a matrix");
  const int n = m.size();
  const auto e = m.matrix().lifted(Field::GF4).rref();
  std::vector<int> row_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) row_of[static_cast<std::size_t>(e.pivots[i])] = static_cast<int>(i);
  // A[b][x] = B[row(b)][x], A[x][b] = inv of that, everything else 0
  FieldMatrix a(Field::GF4, n, n);
  for (int b = 0; b < n; ++b) {
    const int r = row_of[static_cast<std::size_t>(b)];
    if (r < 0) continue;
    for (int x = 0; x < n; ++x) {
      if (row_of[static_cast<std::size_t>(x)] >= 0) continue;
      const auto v = e.reduced.code(r, x);
      a.set_code(b, x, v);
      a.set_code(x, b, gf4::conj(v));
    }
  }
  QuaternaryBuild q;
  q.basis = e.pivots;
  q.iso = isotropic_multimatroid(a, Field::GF4);
  // M* sits on phi_2 for basis elements and phi_1 otherwise; M the other way round
  std::vector<int> cols;
  const Carrier c = Carrier::uniform(n, 3);
  for (int v = 0; v < n; ++v) {
    const bool in_basis = row_of[static_cast<std::size_t>(v)] >= 0;
    const int dual_block = in_basis ? 2 : 1;
    const int primal_block = in_basis ? 1 : 2;
    cols.push_back(q.iso.phi(dual_block, v));
    cols.push_back(q.iso.phi(primal_block, v));
    cols.push_back(q.iso.phi(3, v));
  }
  q.z = Multimatroid::sheltered(c, q.iso.z.matrix().select_columns(cols));
  // verify Z - T3 = Z_M on every subtransversal
  ElementSet first_two;
  for (int v = 0; v < n; ++v) first_two |= c.class_set(v).without(c.element(v, 2));
  const Multimatroid minus = restrict_to(q.z, first_two);
  const Multimatroid zm = z_matroid(standard_form(m));
  require(same_structure(minus, zm), ErrorCode::ConstructionMismatch,
          "block construction does not restrict to Z_M on removing the third transversal");
  return q;
}

/// Nullity of the third-block restriction of Z_{M,3}: |E| - rank(A + I).
inline int bicycle_dimension(const Matroid& m) {
  const QuaternaryBuild q = z_quaternary(m);
  const ElementSet t3 = q.iso.block_transversal(3);
  return q.iso.z.nullity(t3);
}

/// Ort(Z_G) assembled from Eulerian induced subgraphs.
inline std::vector<ElementSet> ort_via_eulerian(const Graph& g) {
  require_loopless(g);
  check_bound(g.order(), limits().max_interlace_vertices, "vertices for Eulerian orienting sets");
  const Carrier c = Carrier::uniform(g.order(), 3);
  auto phi = [&](int block, ElementSet x) {
    ElementSet out;
    x.for_each([&](int v) { out.insert(c.element(v, block - 1)); });
    return out;
  };
  std::vector<ElementSet> out;
  for (auto x : eulerian_subsets(g)) {
    const auto p = neighborhood_parity(g, x);
    out.push_back(phi(1, x) | phi(2, p.odd) | phi(3, p.even));
  }
  sort_canonical(out);
  return out;
}

/// Cycle space of Z_G - phi_3(V) from the Eulerian side: phi_2(X) u phi_1(odd(X)).
inline std::vector<ElementSet> cycle_space_via_eulerian(const Graph& g) {
  require_loopless(g);
  const Carrier c = Carrier::uniform(g.order(), 2);
  std::vector<ElementSet> out;
  for (auto x : eulerian_subsets(g)) {
    const auto p = neighborhood_parity(g, x);
    ElementSet s;
    x.for_each([&](int v) { s.insert(c.element(v, 1)); });
    p.odd.for_each([&](int v) { s.insert(c.element(v, 0)); });
    out.push_back(s);
  }
  sort_canonical(out);
  return out;
}

/// n(A(G + X3)[X2 u X3]) for the transversal T of Z_G, checked against the
/// multimatroid nullity when `z` is supplied.
inline int graph_nullity_bridge(const Graph& g, ElementSet t, const Multimatroid* z = nullptr) {
  const Carrier c = Carrier::uniform(g.order(), 3);
  require(c.is_transversal(t), ErrorCode::NotSubtransversal, "bridge needs a transversal of Z_G");
  ElementSet x2, x3;
  t.for_each([&](int e) {
    if (c.slot_of(e) == 1) x2.insert(c.class_of(e));
    if (c.slot_of(e) == 2) x3.insert(c.class_of(e));
  });
  const int graph_side = g.nullity_on(x2 | x3, x3);
  if (z != nullptr)
    require(z->nullity(t) == graph_side, ErrorCode::InternalInconsistency,
            "graph-side nullity differs from the multimatroid nullity");
  return graph_side;
}

}  // namespace mmlab

#endif  // MMLAB_ISOTROPIC_HPP
