#pragma once

// Basis labels for the chain-complex matrices.
//
// Rows and columns of every differential are addressed by typed labels rather
// than bare indices, and every ordered label list is sorted by the canonical
// order below.  The order is load-bearing: minor selections, generating-
// function row orders and hence all signs are pinned by it.
//
// Canonical order: kinds in the declaration order of LabelKind, then the two
// integer fields lexicographically.  The integer fields hold, per kind:
//
//   LieGen          a = coordinate (0,1,2)                 (da, db, dc)
//   VertexDz        a = vertex id                          (dz_v, inner v)
//   Sway            a = boundary component, b = coordinate (ds^a, ds^b, ds^c)
//   TetDy           a = tetrahedron index                  (dy_t)
//   EdgePhi         a = edge id                            (dphi_e)
//   VertexAlphaBeta a = vertex id, b = 0/1 for alpha/beta  (dalpha_v, dbeta_v)
//   ConjSway        a = boundary component, b = coordinate (dt-row images)
//   LieGenDual      a = coordinate                         (final target)
//
// Edge ids are assigned boundary-first by the triangulation, so EdgePhi order
// automatically lists boundary edges before inner ones.

#include <tqft/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace tqft {

enum class LabelKind : std::uint8_t {
  LieGen = 0,
  VertexDz,
  Sway,
  TetDy,
  EdgePhi,
  VertexAlphaBeta,
  ConjSway,
  LieGenDual,
};

struct BasisLabel {
  LabelKind kind{LabelKind::LieGen};
  std::int32_t a{0};
  std::int32_t b{0};

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

inline BasisLabel lie_gen(int coord) { return {LabelKind::LieGen, coord, 0}; }
inline BasisLabel vertex_dz(int vertex) { return {LabelKind::VertexDz, vertex, 0}; }
inline BasisLabel sway(int component, int coord) { return {LabelKind::Sway, component, coord}; }
inline BasisLabel tet_dy(int tet) { return {LabelKind::TetDy, tet, 0}; }
inline BasisLabel edge_phi(int edge) { return {LabelKind::EdgePhi, edge, 0}; }
inline BasisLabel vertex_alpha(int vertex) { return {LabelKind::VertexAlphaBeta, vertex, 0}; }
inline BasisLabel vertex_beta(int vertex) { return {LabelKind::VertexAlphaBeta, vertex, 1}; }
inline BasisLabel conj_sway(int component, int coord) {
  return {LabelKind::ConjSway, component, coord};
}
inline BasisLabel lie_gen_dual(int coord) { return {LabelKind::LieGenDual, coord, 0}; }

inline std::string to_string(const BasisLabel& l) {
  static const char* coords = "abc";
  const auto coord = [&](int i) { return std::string(1, coords[i >= 0 && i < 3 ? i : 2]); };
  switch (l.kind) {
    case LabelKind::LieGen: return "d" + coord(l.a);
    case LabelKind::VertexDz: return "dz[" + std::to_string(l.a) + "]";
    case LabelKind::Sway: return "ds" + std::to_string(l.a) + "." + coord(l.b);
    case LabelKind::TetDy: return "dy[" + std::to_string(l.a) + "]";
    case LabelKind::EdgePhi: return "dphi[" + std::to_string(l.a) + "]";
    case LabelKind::VertexAlphaBeta:
      return (l.b == 0 ? "dalpha[" : "dbeta[") + std::to_string(l.a) + "]";
    case LabelKind::ConjSway: return "dt" + std::to_string(l.a) + "." + coord(l.b);
    case LabelKind::LieGenDual: return "d" + coord(l.a) + "*";
  }
  return "?";
}

}  // namespace tqft
