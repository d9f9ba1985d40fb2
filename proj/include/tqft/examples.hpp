#pragma once
// Builtin example manifolds constructed directly: a single tetrahedron, the
// two-tetrahedron sphere, a two-tetrahedron ball ("pillow"), a 12-tetrahedron
// solid torus whose boundary torus has 4 vertices and 12 edges, a solid
// pretzel (two solid tori sharing one boundary triangle), and a spherical
// shell (sphere x interval) with two boundary components.

#include <tqft/triangulation.hpp>

#include <array>
#include <string>
#include <vector>

namespace tqft {

inline Triangulation example_tet() {
  std::vector<Vertex> vs = {{1, Scalar(0)}, {2, Scalar(1)}, {3, Scalar(3)}, {4, Scalar(7)}};
  std::vector<Tetrahedron> ts = {{"T1", {1, 2, 3, 4}}};
  return Triangulation(std::move(vs), std::move(ts), {});
}

// Two tetrahedra on the same four vertices with all four faces glued: S^3.
inline Triangulation example_s3() {
  std::vector<Vertex> vs = {{1, Scalar(0)}, {2, Scalar(1)}, {3, Scalar(3)}, {4, Scalar(7)}};
  std::vector<Tetrahedron> ts = {{"T1", {1, 2, 3, 4}}, {"T2", {2, 1, 3, 4}}};
  std::vector<FaceGluing> gs;
  gs.push_back(make_gluing(ts, "T1", {2, 3, 4}, "T2", {2, 3, 4}));
  gs.push_back(make_gluing(ts, "T1", {1, 3, 4}, "T2", {1, 3, 4}));
  gs.push_back(make_gluing(ts, "T1", {1, 2, 4}, "T2", {1, 2, 4}));
  gs.push_back(make_gluing(ts, "T1", {1, 2, 3}, "T2", {1, 2, 3}));
  return Triangulation(std::move(vs), std::move(ts), std::move(gs));
}

// Two tetrahedra glued along two faces: a ball whose boundary sphere has the
// four vertices, one inner edge (1,2), and two parallel boundary edges (3,4).
inline Triangulation example_pillow() {
  std::vector<Vertex> vs = {{1, Scalar(0)}, {2, Scalar(1)}, {3, Scalar(3)}, {4, Scalar(7)}};
  std::vector<Tetrahedron> ts = {{"T1", {1, 2, 3, 4}}, {"T2", {2, 1, 3, 4}}};
  std::vector<FaceGluing> gs;
  gs.push_back(make_gluing(ts, "T1", {1, 2, 3}, "T2", {1, 2, 3}));
  gs.push_back(make_gluing(ts, "T1", {1, 2, 4}, "T2", {1, 2, 4}));
  return Triangulation(std::move(vs), std::move(ts), std::move(gs));
}

namespace detail {

// Raw data of the 12-tetrahedron solid torus over vertices
// A=1, B=2, C=3, D=4 (boundary) and o=5, p=6 (inner).
inline void solid_torus_data(std::vector<Vertex>& vs, std::vector<Tetrahedron>& ts,
                             std::vector<FaceGluing>& gs) {
  vs = {{1, Scalar(0)},  {2, Scalar(1)},  {3, Scalar(3)},
        {4, Scalar(7)},  {5, Scalar(12)}, {6, Scalar(20)}};
  ts = {{"X1", {2, 1, 5, 4}},  {"X2", {1, 5, 4, 3}},  {"X3", {5, 4, 3, 6}},
        {"X4", {1, 2, 5, 3}},  {"X5", {2, 5, 3, 4}},  {"X6", {5, 3, 4, 6}},
        {"X7", {6, 4, 3, 5}},  {"X8", {4, 3, 5, 1}},  {"X9", {3, 5, 1, 2}},
        {"X10", {6, 3, 4, 5}}, {"X11", {3, 4, 5, 2}}, {"X12", {4, 5, 2, 1}}};
  auto g = [&](const std::string& a, std::array<int, 3> ids, const std::string& b) {
    gs.push_back(make_gluing(ts, a, ids, b, ids));
  };
  g("X1", {1, 5, 4}, "X2");
  g("X2", {5, 4, 3}, "X3");
  g("X4", {2, 5, 3}, "X5");
  g("X5", {5, 3, 4}, "X6");
  g("X2", {1, 5, 3}, "X4");
  g("X3", {5, 3, 6}, "X6");
  g("X1", {2, 5, 4}, "X5");
  g("X3", {5, 4, 6}, "X6");
  g("X3", {6, 4, 3}, "X7");
  g("X6", {3, 4, 6}, "X10");
  g("X7", {4, 3, 5}, "X8");
  g("X8", {3, 5, 1}, "X9");
  g("X10", {3, 4, 5}, "X11");
  g("X11", {4, 5, 2}, "X12");
  g("X7", {6, 3, 5}, "X10");
  g("X7", {6, 4, 5}, "X10");
  g("X9", {3, 5, 2}, "X11");
  g("X8", {4, 5, 1}, "X12");
  g("X9", {5, 1, 2}, "X4");
  g("X12", {5, 2, 1}, "X1");
}

}  // namespace detail

inline Triangulation example_solid_torus() {
  std::vector<Vertex> vs;
  std::vector<Tetrahedron> ts;
  std::vector<FaceGluing> gs;
  detail::solid_torus_data(vs, ts, gs);
  return orient_tetrahedra(std::move(vs), std::move(ts), std::move(gs));
}

// Two solid tori sharing one boundary triangle (A,B,C): a solid pretzel with
// a genus-2 boundary.
inline Triangulation example_pretzel() {
  std::vector<Vertex> vs, vs2;
  std::vector<Tetrahedron> ts, ts2;
  std::vector<FaceGluing> gs, gs2;
  detail::solid_torus_data(vs, ts, gs);
  detail::solid_torus_data(vs2, ts2, gs2);
  for (Tetrahedron& t : ts) t.id = "L" + t.id;
  for (FaceGluing& g : gs) {
    g.a.tet = "L" + g.a.tet;
    g.b.tet = "L" + g.b.tet;
  }
  // Second copy: keep A=1, B=2, C=3; remap D,o,p to 14, 15, 16.
  auto remap = [](int id) { return id >= 4 ? id + 10 : id; };
  for (Tetrahedron& t : ts2) {
    t.id = "R" + t.id;
    for (int& v : t.vertices) v = remap(v);
  }
  for (FaceGluing& g : gs2) {
    g.a.tet = "R" + g.a.tet;
    g.b.tet = "R" + g.b.tet;
    gs.push_back(g);
  }
  for (Tetrahedron& t : ts2) ts.push_back(t);
  vs.push_back({14, Scalar(30)});
  vs.push_back({15, Scalar(44)});
  vs.push_back({16, Scalar(65)});
  // Identify the boundary triangle (A,B,C) of the two copies.
  gs.push_back(make_gluing(ts, "LX4", {1, 2, 3}, "RX9", {1, 2, 3}));
  return orient_tetrahedra(std::move(vs), std::move(ts), std::move(gs));
}

// Spherical shell S^2 x [0,1]: one triangular prism over each face of a
// tetrahedral sphere, each prism cut into three tetrahedra. Inner sphere on
// vertices 1..4, outer sphere on 5..8 (vertex i' = i + 4).
inline Triangulation example_shell() {
  std::vector<Vertex> vs = {{1, Scalar(0)},  {2, Scalar(1)},  {3, Scalar(3)},  {4, Scalar(7)},
                            {5, Scalar(12)}, {6, Scalar(20)}, {7, Scalar(30)}, {8, Scalar(44)}};
  const std::array<std::array<int, 3>, 4> faces = {{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
  auto pname = [&](const std::array<int, 3>& f, int part) {
    return "P" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]) + "-" +
           std::to_string(part);
  };
  std::vector<Tetrahedron> ts;
  for (const auto& f : faces) {
    int i = f[0], j = f[1], k = f[2];
    ts.push_back({pname(f, 1), {i, j, k, k + 4}});
    ts.push_back({pname(f, 2), {i, j, k + 4, j + 4}});
    ts.push_back({pname(f, 3), {i, j + 4, k + 4, i + 4}});
  }
  std::vector<FaceGluing> gs;
  for (const auto& f : faces) {
    int i = f[0], j = f[1], k = f[2];
    gs.push_back(make_gluing(ts, pname(f, 1), {i, j, k + 4}, pname(f, 2), {i, j, k + 4}));
    gs.push_back(make_gluing(ts, pname(f, 2), {i, j + 4, k + 4}, pname(f, 3), {i, j + 4, k + 4}));
  }
  // Prism walls: for each sphere edge (a,b), the adjacent prisms share the
  // quad (a,b,a',b') cut along the diagonal (a,b') into triangles (a,b,b')
  // and (a,b',a'). Which prism part carries each triangle depends on where
  // the prism's third vertex c sits relative to a and b.
  for (std::size_t x = 0; x < faces.size(); ++x) {
    for (std::size_t y = x + 1; y < faces.size(); ++y) {
      std::vector<int> common;
      for (int v : faces[x])
        for (int w : faces[y])
          if (v == w) common.push_back(v);
      int a = common[0], b = common[1];
      auto third = [&](const std::array<int, 3>& f) {
        for (int v : f)
          if (v != a && v != b) return v;
        return -1;
      };
      auto part_lower = [&](const std::array<int, 3>& f) { return third(f) == f[2] ? 2 : 1; };
      auto part_upper = [&](const std::array<int, 3>& f) { return third(f) == f[0] ? 2 : 3; };
      gs.push_back(make_gluing(ts, pname(faces[x], part_lower(faces[x])), {a, b, b + 4},
                               pname(faces[y], part_lower(faces[y])), {a, b, b + 4}));
      gs.push_back(make_gluing(ts, pname(faces[x], part_upper(faces[x])), {a, b + 4, a + 4},
                               pname(faces[y], part_upper(faces[y])), {a, b + 4, a + 4}));
    }
  }
  return orient_tetrahedra(std::move(vs), std::move(ts), std::move(gs));
}

}  // namespace tqft
