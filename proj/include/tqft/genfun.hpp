#pragma once
// Generating functions: of a rectangular matrix (sum of maximal minors with
// Grassmann monomials), of a single tetrahedron, of a manifold with
// triangulated boundary, and the raw state sum over tetrahedron functions.
//
// Conventions that fix all signs:
//   * matrix rows map to generators via the label's first integer field, and
//     monomials multiply in row order;
//   * inner rows of the invariant matrix sit below all boundary rows (edge
//     ids are assigned boundary-first), so the reordered determinants of the
//     inner-row generating function are plain canonical minors;
//   * iterated Berezin integrals take the differentials in reverse row
//     order, i.e. descending edge id integrates first.

#include <tqft/grassmann.hpp>
#include <tqft/torsion.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace tqft {

inline GeneratorId row_generator(const BasisLabel& l) { return static_cast<GeneratorId>(l.a); }

namespace detail {

// Visits all size-k index subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(const_cast<const std::vector<std::size_t>&>(idx));
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t i = j; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace detail

// Sum over all row subsets C with |C| = #cols of det A|_C times the product
// of the rows' generators in row order.
inline GrassmannElement genfun_matrix(const LabeledMatrix& A) {
  const std::vector<BasisLabel>& rows = A.row_labels();
  const std::vector<BasisLabel>& cols = A.col_labels();
  if (rows.size() < cols.size())
    throw input_error("generating function needs at least as many rows as columns");
  GrassmannElement out;
  detail::for_each_subset(rows.size(), cols.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<BasisLabel> sel;
    sel.reserve(idx.size());
    for (std::size_t i : idx) sel.push_back(rows[i]);
    Scalar d = A.select(sel, cols).determinant();
    if (d.is_zero()) return;
    GrassmannElement term = GrassmannElement::scalar(d);
    for (std::size_t i : idx) term = term * GrassmannElement::generator(row_generator(rows[i]));
    out += term;
  });
  return out;
}

// Generating function with a set of inner rows: sum over row subsets C
// containing all inner rows, with the inner rows moved to the bottom of each
// determinant (order preserved within both groups) and only the outer rows
// contributing generators.  Equals the iterated Berezin integral of
// genfun_matrix over the inner generators in reverse row order.
inline GrassmannElement genfun_inner(const LabeledMatrix& A,
                                     const std::vector<BasisLabel>& inner_rows) {
  const std::vector<BasisLabel>& rows = A.row_labels();
  const std::vector<BasisLabel>& cols = A.col_labels();
  if (rows.size() < cols.size())
    throw input_error("generating function needs at least as many rows as columns");
  std::vector<bool> is_inner(rows.size(), false);
  for (const BasisLabel& l : inner_rows) {
    auto it = std::find(rows.begin(), rows.end(), l);
    if (it == rows.end()) throw input_error("inner row is not a row of the matrix");
    is_inner[static_cast<std::size_t>(it - rows.begin())] = true;
  }
  std::vector<BasisLabel> outer, inner;
  for (std::size_t i = 0; i < rows.size(); ++i)
    (is_inner[i] ? inner : outer).push_back(rows[i]);
  if (inner.size() > cols.size()) return {};  // no subset of size #cols contains all inner rows

  GrassmannElement out;
  detail::for_each_subset(outer.size(), cols.size() - inner.size(),
                          [&](const std::vector<std::size_t>& idx) {
                            std::vector<BasisLabel> sel;
                            sel.reserve(cols.size());
                            for (std::size_t i : idx) sel.push_back(outer[i]);
                            sel.insert(sel.end(), inner.begin(), inner.end());
                            Scalar d = A.select(sel, cols).determinant();
                            if (d.is_zero()) return;
                            GrassmannElement term = GrassmannElement::scalar(d);
                            for (std::size_t i : idx)
                              term = term * GrassmannElement::generator(row_generator(outer[i]));
                            out += term;
                          });
  return out;
}

// The differential list realizing "reverse row order" for berezin_multi:
// descending along the rows, so the last row's generator integrates first.
inline std::vector<GeneratorId> reverse_row_generators(const std::vector<BasisLabel>& rows) {
  std::vector<GeneratorId> gens;
  gens.reserve(rows.size());
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) gens.push_back(row_generator(*it));
  return gens;
}

// Tetrahedron function of an ordered vertex quadruple: zeta values z[0..3]
// and one generator per vertex pair in the order (01,02,03,12,13,23):
//   z01 z23 (a01 + a23) - z02 z13 (a02 + a13) + z03 z12 (a03 + a12).
inline GrassmannElement tetrahedron_function(const std::array<Scalar, 4>& z,
                                             const std::array<GeneratorId, 6>& gen) {
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      if (z[static_cast<std::size_t>(p)] == z[static_cast<std::size_t>(q)])
        throw input_error("tetrahedron function needs distinct zeta values");
  auto zd = [&](int p, int q) {
    return z[static_cast<std::size_t>(p)] - z[static_cast<std::size_t>(q)];
  };
  auto a = [&](int p, int q) {
    return GrassmannElement::generator(gen[static_cast<std::size_t>(detail::pair_index(p, q))]);
  };
  GrassmannElement out;
  out += zd(0, 1) * zd(2, 3) * (a(0, 1) + a(2, 3));
  out -= zd(0, 2) * zd(1, 3) * (a(0, 2) + a(1, 3));
  out += zd(0, 3) * zd(1, 2) * (a(0, 3) + a(1, 2));
  return out;
}

// Tetrahedron function of a triangulation tetrahedron, in its listed vertex
// order, with edge-class ids as generators.
inline GrassmannElement tetrahedron_function(const Triangulation& t, int tet) {
  const auto& tv = t.tetrahedra()[static_cast<std::size_t>(tet)].vertices;
  std::array<Scalar, 4> z;
  for (int s = 0; s < 4; ++s)
    z[static_cast<std::size_t>(s)] = t.zeta(tv[static_cast<std::size_t>(s)]);
  std::array<GeneratorId, 6> gen{};
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      gen[static_cast<std::size_t>(detail::pair_index(p, q))] =
          static_cast<GeneratorId>(t.edge_at(tet, p, q));
  return tetrahedron_function(z, gen);
}

// Generating function over the boundary-edge generators whose coefficient at
// each admissible marked-set monomial is that marked set's invariant.
struct InvariantFunction {
  GrassmannElement fn;
  long degree = 0;                 // common monomial degree (the marked-set size)
  std::vector<int> boundary_edges; // generator universe, ascending edge id
};

inline InvariantFunction generating_function(const Triangulation& t) {
  if (t.boundary_components().empty())
    throw input_error("generating function requires a nonempty boundary");
  ChainSelection sel = standard_selection(t);
  BasedComplex c = build_complex(t, detail::first_marked(t));

  Scalar mf1 = c.f1.select(sel.alpha1, c.bases[0]).determinant();
  Scalar mf2 =
      c.f2.select(sel.alpha2, detail::complement(c.bases[1], sel.alpha1)).determinant();
  Scalar mf4 =
      c.f4.select(detail::complement(c.bases[4], sel.abar4), sel.abar3).determinant();
  Scalar mf5 = c.f5.select(c.bases[5], sel.abar4).determinant();
  if (mf2.is_zero() || mf4.is_zero())
    throw math_error("standard chain is degenerate for this triangulation");
  Scalar prefactor = mf1 * mf5 / (mf2 * mf4) / (Scalar(2) * inner_edge_weight(t));

  LabeledMatrix full = build_f3_full(t);
  std::vector<BasisLabel> rows = detail::complement(full.row_labels(), sel.abar3);
  std::vector<BasisLabel> cols = detail::complement(c.bases[2], sel.alpha2);
  LabeledMatrix ft3 = full.select(rows, cols);

  std::vector<BasisLabel> inner_rows;
  for (const BasisLabel& r : rows)
    if (t.edge(r.a).inner) inner_rows.push_back(r);

  InvariantFunction out;
  out.fn = prefactor * genfun_inner(ft3, inner_rows);
  out.degree = t.counts().marked_size;
  for (const EdgeClass& e : t.edges())
    if (!e.inner) out.boundary_edges.push_back(e.id);
  return out;
}

// Coefficient of the ascending monomial of a marked set in an invariant
// generating function.
inline Scalar marked_coefficient(const InvariantFunction& f, std::vector<int> marked) {
  std::sort(marked.begin(), marked.end());
  Monomial mono(marked.begin(), marked.end());
  return f.fn.coefficient(mono);
}

// Raw state sum: product of the tetrahedron functions in tetrahedron-index
// order, integrated over the inner-edge generators in reverse id order and
// divided by the product of squared inner edge lengths.
//
// Evaluated with each inner edge integrated right after its last incident
// tetrahedron has been multiplied in, which keeps intermediate elements
// small.  Tetrahedron functions are homogeneous of degree 1, so deferring an
// integration across the r remaining factors costs exactly (-1)^r, and
// reordering the integrations back to the reverse-id convention costs the
// parity of that permutation; both signs are accounted for below.
inline GrassmannElement state_sum(const Triangulation& t) {
  const std::size_t n = t.tetrahedra().size();
  std::vector<std::vector<GeneratorId>> batch(n);  // inner edges by last incident tet
  for (const EdgeClass& e : t.edges()) {
    if (!e.inner) continue;
    std::size_t last = 0;
    for (int slot : e.slots) last = std::max(last, static_cast<std::size_t>(slot) / 6);
    batch[last].push_back(static_cast<GeneratorId>(e.id));
  }
  for (auto& b : batch) std::sort(b.rbegin(), b.rend());

  GrassmannElement acc = GrassmannElement::scalar(Scalar(1));
  bool negate = false;
  std::vector<GeneratorId> applied;
  for (std::size_t k = 0; k < n; ++k) {
    acc = acc * tetrahedron_function(t, static_cast<int>(k));
    const std::size_t remaining = n - 1 - k;
    for (GeneratorId e : batch[k]) {
      acc = berezin(acc, e);
      if (remaining % 2) negate = !negate;
      applied.push_back(e);
    }
  }
  // Parity of the permutation taking the applied order to descending ids.
  for (std::size_t i = 0; i < applied.size(); ++i)
    for (std::size_t j = i + 1; j < applied.size(); ++j)
      if (applied[i] < applied[j]) negate = !negate;

  return (Scalar(negate ? -1 : 1) / inner_edge_weight(t)) * acc;
}

// Pentagon relation between tetrahedron functions on five vertices (numbered
// 0..4 with distinct zeta values, generator 5i+j on the pair i<j):
//   f_{0123} f_{4012} = (1/zeta_{34}^2) ∫ f_{0143} f_{1243} f_{2043} da_{34}.
inline bool pentagon_identity_holds(const std::array<Scalar, 5>& z) {
  auto gen = [](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<GeneratorId>(5 * i + j);
  };
  auto f = [&](int a, int b, int c, int d) {
    const std::array<int, 4> q = {a, b, c, d};
    std::array<Scalar, 4> zz;
    std::array<GeneratorId, 6> gg{};
    for (int p = 0; p < 4; ++p) zz[static_cast<std::size_t>(p)] = z[static_cast<std::size_t>(q[static_cast<std::size_t>(p)])];
    for (int p = 0; p < 4; ++p)
      for (int r = p + 1; r < 4; ++r)
        gg[static_cast<std::size_t>(detail::pair_index(p, r))] =
            gen(q[static_cast<std::size_t>(p)], q[static_cast<std::size_t>(r)]);
    return tetrahedron_function(zz, gg);
  };
  GrassmannElement lhs = f(0, 1, 2, 3) * f(4, 0, 1, 2);
  Scalar z34 = z[3] - z[4];
  GrassmannElement rhs = (Scalar(1) / (z34 * z34)) *
                         berezin(f(0, 1, 4, 3) * f(1, 2, 4, 3) * f(2, 0, 4, 3), gen(3, 4));
  return lhs == rhs;
}

}  // namespace tqft
