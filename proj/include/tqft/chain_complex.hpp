#pragma once
// The five-term based complex attached to a triangulation and a marked
// boundary-edge set D:
//
//   0 -> C^3 -f1-> C^{N'0+3m} -f2-> C^{N3} -f3-> C^{N'0+N3}
//                              -f4-> C^{2N'0+3m} -f5-> C^3 -> 0,
//
// with bases: Lie generators; inner-vertex dz plus boundary-component sways;
// tetrahedron dy; phi over inner edges and the marked boundary edges D
// (boundary rows precede inner rows); inner-vertex (alpha, beta) plus
// conjugate sways; dual Lie generators.

#include <tqft/labels.hpp>
#include <tqft/matrix.hpp>
#include <tqft/triangulation.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

namespace tqft {

struct BasedComplex {
  std::vector<int> marked;  // ordered marked boundary-edge ids (ascending)
  std::array<std::vector<BasisLabel>, 6> bases;
  LabeledMatrix f1, f2, f3, f4, f5;

  const LabeledMatrix& f(int i) const {
    switch (i) {
      case 1: return f1;
      case 2: return f2;
      case 3: return f3;
      case 4: return f4;
      case 5: return f5;
      default: throw input_error("matrix index out of range");
    }
  }
};

namespace detail {

inline std::vector<BasisLabel> basis_v0() {
  return {lie_gen(0), lie_gen(1), lie_gen(2)};
}

inline std::vector<BasisLabel> basis_v1(const Triangulation& t) {
  std::vector<BasisLabel> out;
  for (int id : t.inner_vertex_ids()) out.push_back(vertex_dz(id));
  for (int k = 0; k < static_cast<int>(t.boundary_components().size()); ++k)
    for (int x = 0; x < 3; ++x) out.push_back(sway(k, x));
  return out;
}

inline std::vector<BasisLabel> basis_v2(const Triangulation& t) {
  std::vector<BasisLabel> out;
  for (int i = 0; i < static_cast<int>(t.tetrahedra().size()); ++i) out.push_back(tet_dy(i));
  return out;
}

inline std::vector<BasisLabel> basis_v3(const Triangulation& t, const std::vector<int>& marked) {
  std::vector<int> ids = marked;
  for (const EdgeClass& e : t.edges())
    if (e.inner) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  std::vector<BasisLabel> out;
  for (int id : ids) out.push_back(edge_phi(id));
  return out;
}

inline std::vector<BasisLabel> basis_v4(const Triangulation& t) {
  std::vector<BasisLabel> out;
  for (int id : t.inner_vertex_ids()) {
    out.push_back(vertex_alpha(id));
    out.push_back(vertex_beta(id));
  }
  for (int k = 0; k < static_cast<int>(t.boundary_components().size()); ++k)
    for (int x = 0; x < 3; ++x) out.push_back(conj_sway(k, x));
  return out;
}

inline std::vector<BasisLabel> basis_v5() {
  return {lie_gen_dual(0), lie_gen_dual(1), lie_gen_dual(2)};
}

// The rigid-motion row (2*zeta, 1, -zeta^2) shared by f1 rows and the routing
// of boundary-vertex dz into sways.
inline std::array<Scalar, 3> motion_row(const Scalar& z) {
  return {Scalar(2) * z, Scalar(1), -z * z};
}

}  // namespace detail

inline LabeledMatrix build_f1(const Triangulation& t) {
  LabeledMatrix m(detail::basis_v1(t), detail::basis_v0());
  for (int id : t.inner_vertex_ids()) {
    auto row = detail::motion_row(t.zeta(id));
    for (int x = 0; x < 3; ++x) m.at(vertex_dz(id), lie_gen(x)) = row[static_cast<std::size_t>(x)];
  }
  for (int k = 0; k < static_cast<int>(t.boundary_components().size()); ++k)
    for (int x = 0; x < 3; ++x) m.at(sway(k, x), lie_gen(x)) = Scalar(1);
  return m;
}

inline LabeledMatrix build_f2(const Triangulation& t) {
  LabeledMatrix m(detail::basis_v2(t), detail::basis_v1(t));
  for (int ti = 0; ti < static_cast<int>(t.tetrahedra().size()); ++ti) {
    const auto& tv = t.tetrahedra()[static_cast<std::size_t>(ti)].vertices;
    for (int s = 0; s < 4; ++s) {
      int v = tv[static_cast<std::size_t>(s)];
      Scalar denom(1);
      for (int u = 0; u < 4; ++u)
        if (u != s) denom *= t.zeta(v) - t.zeta(tv[static_cast<std::size_t>(u)]);
      Scalar c = Scalar(-1) / denom;
      if (!t.is_boundary_vertex(v)) {
        m.at(tet_dy(ti), vertex_dz(v)) += c;
      } else {
        int k = t.boundary_component_of_vertex(v);
        auto row = detail::motion_row(t.zeta(v));
        for (int x = 0; x < 3; ++x) m.at(tet_dy(ti), sway(k, x)) += c * row[static_cast<std::size_t>(x)];
      }
    }
  }
  return m;
}

namespace detail {

inline LabeledMatrix build_f3_rows(const Triangulation& t, const std::vector<BasisLabel>& rows) {
  LabeledMatrix m(rows, basis_v2(t));
  for (const BasisLabel& r : rows) {
    for (const StarEntry& se : t.edge_star(r.a)) {
      Scalar zij = t.zeta(se.ijkl[0]) - t.zeta(se.ijkl[1]);
      Scalar zkl = t.zeta(se.ijkl[2]) - t.zeta(se.ijkl[3]);
      m.at(r, tet_dy(se.tet)) += zij * zkl;
    }
  }
  return m;
}

}  // namespace detail

inline LabeledMatrix build_f3(const Triangulation& t, const std::vector<int>& marked) {
  return detail::build_f3_rows(t, detail::basis_v3(t, marked));
}

// All-edge variant (every boundary edge plus every inner edge, in id order);
// its rows restrict to build_f3 for every choice of D.
inline LabeledMatrix build_f3_full(const Triangulation& t) {
  std::vector<BasisLabel> rows;
  for (const EdgeClass& e : t.edges()) rows.push_back(edge_phi(e.id));
  return detail::build_f3_rows(t, rows);
}

inline LabeledMatrix build_f4(const Triangulation& t, const std::vector<int>& marked) {
  LabeledMatrix m(detail::basis_v4(t), detail::basis_v3(t, marked));
  for (const BasisLabel& col : m.col_labels()) {
    const EdgeClass& e = t.edge(col.a);
    for (int end = 0; end < 2; ++end) {
      int v = end == 0 ? e.v0 : e.v1;
      int u = end == 0 ? e.v1 : e.v0;
      Scalar alpha(1);
      Scalar beta = Scalar(1) / (t.zeta(v) - t.zeta(u));
      if (!t.is_boundary_vertex(v)) {
        m.at(vertex_alpha(v), col) += alpha;
        m.at(vertex_beta(v), col) += beta;
      } else if (e.inner) {
        // Boundary-vertex auxiliaries collect inner incident edges only and
        // feed the conjugate sways of the vertex's component.
        int k = t.boundary_component_of_vertex(v);
        const Scalar& z = t.zeta(v);
        m.at(conj_sway(k, 0), col) += -alpha + Scalar(2) * z * beta;
        m.at(conj_sway(k, 1), col) += beta;
        m.at(conj_sway(k, 2), col) += z * alpha - z * z * beta;
      }
    }
  }
  return m;
}

inline LabeledMatrix build_f5(const Triangulation& t) {
  LabeledMatrix m(detail::basis_v5(), detail::basis_v4(t));
  for (int id : t.inner_vertex_ids()) {
    const Scalar& z = t.zeta(id);
    m.at(lie_gen_dual(0), vertex_alpha(id)) = Scalar(-1);
    m.at(lie_gen_dual(2), vertex_alpha(id)) = z;
    m.at(lie_gen_dual(0), vertex_beta(id)) = Scalar(2) * z;
    m.at(lie_gen_dual(1), vertex_beta(id)) = Scalar(1);
    m.at(lie_gen_dual(2), vertex_beta(id)) = -z * z;
  }
  for (int k = 0; k < static_cast<int>(t.boundary_components().size()); ++k)
    for (int x = 0; x < 3; ++x) m.at(lie_gen_dual(x), conj_sway(k, x)) = Scalar(1);
  return m;
}

// Normalizes and checks a marked-edge set: all distinct boundary edges with
// exactly #D = N'0 + N3 - N'1 members; returns the ids in ascending order.
inline std::vector<int> normalize_marked(const Triangulation& t, std::vector<int> marked) {
  Counts c = t.counts();
  std::sort(marked.begin(), marked.end());
  if (std::adjacent_find(marked.begin(), marked.end()) != marked.end())
    throw input_error("marked edge set contains a duplicate");
  for (int id : marked)
    if (t.edge(id).inner)
      throw input_error("marked edge " + std::to_string(id) + " is not a boundary edge");
  if (static_cast<long>(marked.size()) != c.marked_size)
    throw input_error("marked edge set must have exactly " + std::to_string(c.marked_size) +
                      " edges, got " + std::to_string(marked.size()));
  return marked;
}

inline BasedComplex build_complex(const Triangulation& t, std::vector<int> marked) {
  BasedComplex c;
  c.marked = normalize_marked(t, std::move(marked));
  c.bases = {detail::basis_v0(),        detail::basis_v1(t), detail::basis_v2(t),
             detail::basis_v3(t, c.marked), detail::basis_v4(t), detail::basis_v5()};
  c.f1 = build_f1(t);
  c.f2 = build_f2(t);
  c.f3 = build_f3(t, c.marked);
  c.f4 = build_f4(t, c.marked);
  c.f5 = build_f5(t);

  Counts n = t.counts();
  const std::array<long, 6> dims = {3,
                                    n.inner_vertices + 3 * n.boundary_components,
                                    n.tetrahedra,
                                    n.inner_vertices + n.tetrahedra,
                                    2 * n.inner_vertices + 3 * n.boundary_components,
                                    3};
  long chi = 0;
  for (int i = 0; i < 6; ++i) {
    if (static_cast<long>(c.bases[static_cast<std::size_t>(i)].size()) != dims[static_cast<std::size_t>(i)])
      throw math_error("chain space " + std::to_string(i) + " has wrong dimension");
    chi += (i % 2 ? -1 : 1) * dims[static_cast<std::size_t>(i)];
  }
  if (chi != 0) throw math_error("chain complex has nonzero Euler characteristic");
  return c;
}

// The four consecutive products f2 f1, f3 f2, f4 f3, f5 f4.
inline std::array<LabeledMatrix, 4> boundary_products(const BasedComplex& c) {
  return {LabeledMatrix::product(c.f2, c.f1), LabeledMatrix::product(c.f3, c.f2),
          LabeledMatrix::product(c.f4, c.f3), LabeledMatrix::product(c.f5, c.f4)};
}

inline bool is_complex(const BasedComplex& c) {
  for (const LabeledMatrix& p : boundary_products(c))
    if (!p.is_zero()) return false;
  return true;
}

// All admissible marked sets, in lexicographic order. Guarded by a cap since
// the count is binomial(#boundary edges, #D).
inline std::vector<std::vector<int>> all_marked_sets(const Triangulation& t,
                                                     std::size_t cap = 1u << 20) {
  Counts c = t.counts();
  std::vector<int> boundary_ids;
  for (const EdgeClass& e : t.edges())
    if (!e.inner) boundary_ids.push_back(e.id);
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (out.size() > cap) throw input_error("too many marked sets to enumerate");
    if (static_cast<long>(pick.size()) == c.marked_size) {
      out.push_back(pick);
      return;
    }
    long need = c.marked_size - static_cast<long>(pick.size());
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= boundary_ids.size(); ++i) {
      pick.push_back(boundary_ids[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace tqft
