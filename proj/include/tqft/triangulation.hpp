#pragma once
// Combinatorial model of a compact oriented triangulated 3-manifold with
// boundary: tetrahedra with ordered corner slots, explicit face gluings,
// derived edge classes (union-find over edge slots), boundary components,
// vertex-link manifold checks, edge-star walks, and JSON (de)serialization.
//
// Conventions:
//  - The listed vertex order of a tetrahedron is its positive orientation.
//  - A face is addressed by its "face slot" = 4*tet_index + opposite corner.
//  - Edge slots are 6*tet_index + pair_index with pairs enumerated
//    (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
//  - Edge classes receive canonical ids with boundary classes first, ordered
//    by (min endpoint id, max endpoint id, min member slot), inner after.

#include <tqft/rational.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tqft {

struct Vertex {
  int id = 0;
  Scalar zeta;
};

struct Tetrahedron {
  std::string id;
  std::array<int, 4> vertices{};  // global vertex ids; listed order = orientation
};

struct FaceSide {
  std::string tet;
  std::array<int, 3> slots{};  // corner slots 0..3; positional correspondence
};

struct FaceGluing {
  FaceSide a, b;
};

struct EdgeClass {
  int id = 0;
  int v0 = 0, v1 = 0;  // endpoint vertex ids, v0 < v1
  bool inner = false;
  std::vector<int> slots;  // member edge slots, sorted
};

struct StarEntry {
  int tet = 0;                // tetrahedron index
  std::array<int, 4> ijkl{};  // vertex ids; (i,j) spans the edge; even
                              // permutation of the tet's listed order
};

struct BoundaryComponent {
  std::vector<int> faces;     // face slots, sorted
  std::vector<int> vertices;  // vertex ids, sorted
  std::vector<int> edges;     // edge class ids, sorted
  long euler = 0;
};

struct Counts {
  long vertices = 0;             // N0
  long edges = 0;                // N1
  long tetrahedra = 0;           // N3
  long inner_vertices = 0;       // N'0
  long inner_edges = 0;          // N'1
  long boundary_components = 0;  // m
  long marked_size = 0;          // #D = N'0 + N3 - N'1
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int x, int y) { parent_[find(x)] = find(y); }

 private:
  std::vector<int> parent_;
};

inline constexpr std::array<std::array<int, 2>, 6> kEdgePairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int pair_index(int p, int q) {
  if (p > q) std::swap(p, q);
  for (int i = 0; i < 6; ++i)
    if (kEdgePairs[i][0] == p && kEdgePairs[i][1] == q) return i;
  throw input_error("invalid corner slot pair");
}

// Parity of a sequence of distinct ints relative to its sorted order.
template <std::size_t N>
int perm_parity(const std::array<int, N>& s) {
  int inv = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (s[i] > s[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

// Sign of the presentation (ordered corner-slot triple) of a face relative to
// the induced boundary orientation of the tetrahedron.
inline int face_presentation_sign(const std::array<int, 3>& slots) {
  int missing = 6 - slots[0] - slots[1] - slots[2];
  return perm_parity(slots) * ((missing % 2) ? -1 : 1);
}

}  // namespace detail

class Triangulation {
 public:
  Triangulation(std::vector<Vertex> vertices, std::vector<Tetrahedron> tets,
                std::vector<FaceGluing> gluings)
      : vertices_(std::move(vertices)),
        tets_(std::move(tets)),
        gluings_(std::move(gluings)) {
    analyze();
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Tetrahedron>& tetrahedra() const { return tets_; }
  const std::vector<FaceGluing>& gluings() const { return gluings_; }
  const std::vector<EdgeClass>& edges() const { return edges_; }
  const std::vector<BoundaryComponent>& boundary_components() const { return boundary_; }

  int vertex_index(int id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
      throw input_error("unknown vertex id " + std::to_string(id));
    return it->second;
  }
  int tet_index(const std::string& id) const {
    auto it = tet_index_.find(id);
    if (it == tet_index_.end()) throw input_error("unknown tetrahedron id " + id);
    return it->second;
  }
  const Scalar& zeta(int vertex_id) const { return vertices_[vertex_index(vertex_id)].zeta; }

  // zeta(v0) - zeta(v1) for the edge's canonically ordered endpoints.
  Scalar edge_zeta(int edge_id) const {
    const EdgeClass& e = edge(edge_id);
    return zeta(e.v0) - zeta(e.v1);
  }

  const EdgeClass& edge(int edge_id) const {
    if (edge_id < 0 || edge_id >= static_cast<int>(edges_.size()))
      throw input_error("unknown edge id " + std::to_string(edge_id));
    return edges_[static_cast<std::size_t>(edge_id)];
  }

  // Edge class at a tetrahedron's corner-slot pair.
  int edge_at(int tet_index, int slot_p, int slot_q) const {
    return slot_edge_[static_cast<std::size_t>(6 * tet_index + detail::pair_index(slot_p, slot_q))];
  }

  bool face_glued(int face_slot) const { return face_partner_[static_cast<std::size_t>(face_slot)] >= 0; }
  int face_partner(int face_slot) const { return face_partner_[static_cast<std::size_t>(face_slot)]; }
  // Corner-slot map into the partner tet (entries -1 for the opposite corner).
  const std::array<int, 4>& face_slot_map(int face_slot) const {
    return face_map_[static_cast<std::size_t>(face_slot)];
  }

  std::array<int, 3> face_vertex_ids(int face_slot) const {
    int t = face_slot / 4, f = face_slot % 4;
    std::array<int, 3> ids{};
    int k = 0;
    for (int s = 0; s < 4; ++s)
      if (s != f) ids[static_cast<std::size_t>(k++)] = tets_[static_cast<std::size_t>(t)].vertices[static_cast<std::size_t>(s)];
    return ids;
  }

  bool is_boundary_vertex(int vertex_id) const {
    return vertex_boundary_[static_cast<std::size_t>(vertex_index(vertex_id))] != 0;
  }
  // Index of the boundary component containing a boundary vertex, -1 if inner.
  int boundary_component_of_vertex(int vertex_id) const {
    for (std::size_t k = 0; k < boundary_.size(); ++k) {
      const auto& vs = boundary_[k].vertices;
      if (std::binary_search(vs.begin(), vs.end(), vertex_id)) return static_cast<int>(k);
    }
    return -1;
  }

  std::vector<int> inner_vertex_ids() const {
    std::vector<int> out;
    for (const Vertex& v : vertices_)
      if (!is_boundary_vertex(v.id)) out.push_back(v.id);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> boundary_face_slots() const {
    std::vector<int> out;
    for (int fs = 0; fs < 4 * static_cast<int>(tets_.size()); ++fs)
      if (!face_glued(fs)) out.push_back(fs);
    return out;
  }

  Counts counts() const {
    Counts c;
    c.vertices = static_cast<long>(vertices_.size());
    c.edges = static_cast<long>(edges_.size());
    c.tetrahedra = static_cast<long>(tets_.size());
    for (const Vertex& v : vertices_)
      if (!is_boundary_vertex(v.id)) ++c.inner_vertices;
    for (const EdgeClass& e : edges_)
      if (e.inner) ++c.inner_edges;
    c.boundary_components = static_cast<long>(boundary_.size());
    c.marked_size = c.inner_vertices + c.tetrahedra - c.inner_edges;
    return c;
  }

  // Ordered walk around an edge: cyclic for an inner edge, path order for a
  // boundary edge (from the smaller boundary face slot to the other end).
  std::vector<StarEntry> edge_star(int edge_id) const {
    const EdgeClass& e = edge(edge_id);
    // Adjacent faces of an edge slot: the two faces containing the edge.
    auto adjacent_faces = [&](int slot) {
      int t = slot / 6;
      auto pq = detail::kEdgePairs[static_cast<std::size_t>(slot % 6)];
      std::array<int, 2> fs{};
      int k = 0;
      for (int s = 0; s < 4; ++s)
        if (s != pq[0] && s != pq[1]) fs[static_cast<std::size_t>(k++)] = 4 * t + s;
      return fs;  // increasing order
    };

    int start_slot = -1, entry_face = -1;
    if (!e.inner) {
      // Start at the member adjacent to the smallest unglued face.
      int best_face = -1;
      for (int slot : e.slots) {
        for (int fs : adjacent_faces(slot)) {
          if (!face_glued(fs) && (best_face < 0 || fs < best_face)) {
            best_face = fs;
            start_slot = slot;
          }
        }
      }
      if (start_slot < 0)
        throw math_error("boundary edge without boundary face in its star");
      entry_face = best_face;
    } else {
      start_slot = e.slots.front();
      entry_face = -1;
    }

    std::vector<StarEntry> entries;
    std::set<int> visited;
    int slot = start_slot, in_face = entry_face;
    for (std::size_t step = 0; step < e.slots.size(); ++step) {
      if (!visited.insert(slot).second)
        throw math_error("malformed edge star: slot revisited for edge " + std::to_string(edge_id));
      entries.push_back(star_entry(e, slot));
      auto fs = adjacent_faces(slot);
      int exit_face;
      if (in_face < 0)
        exit_face = fs[0];  // deterministic first move for a cycle
      else
        exit_face = (fs[0] == in_face) ? fs[1] : fs[0];
      if (!face_glued(exit_face)) {
        if (step + 1 != e.slots.size())
          throw math_error("edge star of edge " + std::to_string(edge_id) +
                           " is not a single path");
        if (e.inner)
          throw math_error("inner edge " + std::to_string(edge_id) +
                           " has an unglued star face");
        return entries;
      }
      int pf = face_partner(exit_face);
      const auto& m = face_slot_map(exit_face);
      auto pq = detail::kEdgePairs[static_cast<std::size_t>(slot % 6)];
      slot = 6 * (pf / 4) + detail::pair_index(m[static_cast<std::size_t>(pq[0])],
                                               m[static_cast<std::size_t>(pq[1])]);
      in_face = pf;
    }
    // All members visited; a boundary path must have ended above.
    if (!e.inner)
      throw math_error("edge star of boundary edge " + std::to_string(edge_id) +
                       " closed into a cycle");
    if (slot != start_slot)
      throw math_error("edge star of inner edge " + std::to_string(edge_id) +
                       " does not close up");
    return entries;
  }

  // Full validation; throws input_error/math_error with diagnostics.
  Counts validate() const {
    check_orientations();
    check_connected();
    check_vertex_links();
    for (const EdgeClass& e : edges_) edge_star(e.id);  // walk-consistency
    check_boundary_components();
    return check_counts();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const Vertex& v : vertices_)
      j["vertices"].push_back({{"id", v.id}, {"zeta", to_string(v.zeta)}});
    j["tetrahedra"] = nlohmann::json::array();
    for (const Tetrahedron& t : tets_)
      j["tetrahedra"].push_back(
          {{"id", t.id},
           {"vertices", {t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]}}});
    j["gluings"] = nlohmann::json::array();
    for (const FaceGluing& g : gluings_)
      j["gluings"].push_back(
          {{"a", {{"tet", g.a.tet}, {"slots", {g.a.slots[0], g.a.slots[1], g.a.slots[2]}}}},
           {"b", {{"tet", g.b.tet}, {"slots", {g.b.slots[0], g.b.slots[1], g.b.slots[2]}}}}});
    return j;
  }

 private:
  StarEntry star_entry(const EdgeClass& e, int slot) const {
    int t = slot / 6;
    const auto& tv = tets_[static_cast<std::size_t>(t)].vertices;
    auto pq = detail::kEdgePairs[static_cast<std::size_t>(slot % 6)];
    int sp = -1, sq = -1;
    if (tv[static_cast<std::size_t>(pq[0])] == e.v0) {
      sp = pq[0];
      sq = pq[1];
    } else {
      sp = pq[1];
      sq = pq[0];
    }
    std::array<int, 2> rs{};
    int k = 0;
    for (int s = 0; s < 4; ++s)
      if (s != sp && s != sq) rs[static_cast<std::size_t>(k++)] = s;
    std::array<int, 4> perm = {sp, sq, rs[0], rs[1]};
    if (detail::perm_parity(perm) < 0) std::swap(perm[2], perm[3]);
    StarEntry se;
    se.tet = t;
    for (int x = 0; x < 4; ++x)
      se.ijkl[static_cast<std::size_t>(x)] = tv[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])];
    return se;
  }

  void analyze() {
    if (tets_.empty()) throw input_error("triangulation has no tetrahedra");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (!vertex_index_.emplace(vertices_[i].id, static_cast<int>(i)).second)
        throw input_error("duplicate vertex id " + std::to_string(vertices_[i].id));
    for (std::size_t i = 0; i < tets_.size(); ++i)
      if (!tet_index_.emplace(tets_[i].id, static_cast<int>(i)).second)
        throw input_error("duplicate tetrahedron id " + tets_[i].id);

    std::map<Scalar, int> zeta_seen;
    for (const Vertex& v : vertices_) {
      auto [it, fresh] = zeta_seen.emplace(v.zeta, v.id);
      if (!fresh)
        throw input_error("coincident coordinates: vertices " + std::to_string(it->second) +
                          " and " + std::to_string(v.id));
    }

    std::vector<char> used(vertices_.size(), 0);
    for (const Tetrahedron& t : tets_) {
      for (int s = 0; s < 4; ++s) {
        int idx = vertex_index(t.vertices[static_cast<std::size_t>(s)]);
        used[static_cast<std::size_t>(idx)] = 1;
        for (int u = s + 1; u < 4; ++u)
          if (t.vertices[static_cast<std::size_t>(s)] == t.vertices[static_cast<std::size_t>(u)])
            throw input_error("tetrahedron " + t.id + " repeats vertex " +
                              std::to_string(t.vertices[static_cast<std::size_t>(s)]));
      }
    }
    for (std::size_t i = 0; i < used.size(); ++i)
      if (!used[i])
        throw input_error("vertex " + std::to_string(vertices_[i].id) +
                          " belongs to no tetrahedron");

    const int nf = 4 * static_cast<int>(tets_.size());
    face_partner_.assign(static_cast<std::size_t>(nf), -1);
    face_map_.assign(static_cast<std::size_t>(nf), {-1, -1, -1, -1});
    detail::UnionFind edge_uf(6 * static_cast<int>(tets_.size()));

    for (const FaceGluing& g : gluings_) {
      int ta = tet_index(g.a.tet), tb = tet_index(g.b.tet);
      auto check_side = [&](const FaceSide& s) {
        std::array<int, 3> sl = s.slots;
        std::sort(sl.begin(), sl.end());
        if (sl[0] < 0 || sl[2] > 3 || sl[0] == sl[1] || sl[1] == sl[2])
          throw input_error("invalid corner slots in gluing of tetrahedron " + s.tet);
        return 6 - s.slots[0] - s.slots[1] - s.slots[2];  // opposite corner
      };
      int fa = 4 * ta + check_side(g.a);
      int fb = 4 * tb + check_side(g.b);
      if (fa == fb)
        throw input_error("face of tetrahedron " + g.a.tet + " glued to itself");
      for (int x = 0; x < 3; ++x) {
        int ia = tets_[static_cast<std::size_t>(ta)].vertices[static_cast<std::size_t>(g.a.slots[static_cast<std::size_t>(x)])];
        int ib = tets_[static_cast<std::size_t>(tb)].vertices[static_cast<std::size_t>(g.b.slots[static_cast<std::size_t>(x)])];
        if (ia != ib)
          throw input_error("gluing of tetrahedra " + g.a.tet + " and " + g.b.tet +
                            " matches distinct vertices " + std::to_string(ia) + " and " +
                            std::to_string(ib));
      }
      if (face_partner_[static_cast<std::size_t>(fa)] >= 0 || face_partner_[static_cast<std::size_t>(fb)] >= 0)
        throw input_error("face glued more than once (tetrahedra " + g.a.tet + ", " + g.b.tet + ")");
      face_partner_[static_cast<std::size_t>(fa)] = fb;
      face_partner_[static_cast<std::size_t>(fb)] = fa;
      for (int x = 0; x < 3; ++x) {
        face_map_[static_cast<std::size_t>(fa)][static_cast<std::size_t>(g.a.slots[static_cast<std::size_t>(x)])] = g.b.slots[static_cast<std::size_t>(x)];
        face_map_[static_cast<std::size_t>(fb)][static_cast<std::size_t>(g.b.slots[static_cast<std::size_t>(x)])] = g.a.slots[static_cast<std::size_t>(x)];
      }
      for (int x = 0; x < 3; ++x)
        for (int y = x + 1; y < 3; ++y)
          edge_uf.unite(6 * ta + detail::pair_index(g.a.slots[static_cast<std::size_t>(x)], g.a.slots[static_cast<std::size_t>(y)]),
                        6 * tb + detail::pair_index(g.b.slots[static_cast<std::size_t>(x)], g.b.slots[static_cast<std::size_t>(y)]));
    }

    // Collect edge classes.
    std::map<int, EdgeClass> by_root;
    for (int slot = 0; slot < 6 * static_cast<int>(tets_.size()); ++slot) {
      int root = edge_uf.find(slot);
      auto& ec = by_root[root];
      ec.slots.push_back(slot);
      const auto& tv = tets_[static_cast<std::size_t>(slot / 6)].vertices;
      auto pq = detail::kEdgePairs[static_cast<std::size_t>(slot % 6)];
      int a = tv[static_cast<std::size_t>(pq[0])], b = tv[static_cast<std::size_t>(pq[1])];
      if (a > b) std::swap(a, b);
      if (ec.slots.size() == 1) {
        ec.v0 = a;
        ec.v1 = b;
      } else if (ec.v0 != a || ec.v1 != b) {
        throw input_error("gluings identify edges with different endpoints");
      }
    }
    std::vector<EdgeClass> classes;
    classes.reserve(by_root.size());
    for (auto& [root, ec] : by_root) classes.push_back(std::move(ec));

    // Inner iff every adjacent face of every member slot is glued.
    for (EdgeClass& ec : classes) {
      ec.inner = true;
      for (int slot : ec.slots) {
        int t = slot / 6;
        auto pq = detail::kEdgePairs[static_cast<std::size_t>(slot % 6)];
        for (int s = 0; s < 4; ++s)
          if (s != pq[0] && s != pq[1] && !face_glued(4 * t + s)) ec.inner = false;
      }
    }
    std::sort(classes.begin(), classes.end(), [](const EdgeClass& x, const EdgeClass& y) {
      return std::tuple(x.inner, x.v0, x.v1, x.slots.front()) <
             std::tuple(y.inner, y.v0, y.v1, y.slots.front());
    });
    slot_edge_.assign(static_cast<std::size_t>(6 * tets_.size()), -1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      classes[i].id = static_cast<int>(i);
      for (int slot : classes[i].slots) slot_edge_[static_cast<std::size_t>(slot)] = static_cast<int>(i);
    }
    edges_ = std::move(classes);

    build_boundary_components();
  }

  void build_boundary_components() {
    const int nf = 4 * static_cast<int>(tets_.size());
    detail::UnionFind uf(nf);
    for (const EdgeClass& e : edges_) {
      if (e.inner) continue;
      int prev = -1;
      for (int slot : e.slots) {
        int t = slot / 6;
        auto pq = detail::kEdgePairs[static_cast<std::size_t>(slot % 6)];
        for (int s = 0; s < 4; ++s) {
          if (s == pq[0] || s == pq[1]) continue;
          int fs = 4 * t + s;
          if (face_glued(fs)) continue;
          if (prev >= 0) uf.unite(prev, fs);
          prev = fs;
        }
      }
    }
    std::map<int, BoundaryComponent> comps;  // keyed by root; map keeps smallest-face order below
    for (int fs = 0; fs < nf; ++fs)
      if (!face_glued(fs)) comps[uf.find(fs)].faces.push_back(fs);

    boundary_.clear();
    std::vector<std::pair<int, BoundaryComponent>> ordered;
    for (auto& [root, c] : comps) ordered.emplace_back(c.faces.front(), std::move(c));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    vertex_boundary_.assign(vertices_.size(), 0);
    for (auto& [minface, c] : ordered) {
      std::set<int> vs;
      std::set<int> es;
      for (int fs : c.faces) {
        for (int id : face_vertex_ids(fs)) vs.insert(id);
        int t = fs / 4, f = fs % 4;
        std::array<int, 3> corner{};
        int k = 0;
        for (int s = 0; s < 4; ++s)
          if (s != f) corner[static_cast<std::size_t>(k++)] = s;
        for (int x = 0; x < 3; ++x)
          for (int y = x + 1; y < 3; ++y)
            es.insert(edge_at(t, corner[static_cast<std::size_t>(x)], corner[static_cast<std::size_t>(y)]));
      }
      c.vertices.assign(vs.begin(), vs.end());
      c.edges.assign(es.begin(), es.end());
      c.euler = static_cast<long>(c.vertices.size()) - static_cast<long>(c.edges.size()) +
                static_cast<long>(c.faces.size());
      for (int id : c.vertices) vertex_boundary_[static_cast<std::size_t>(vertex_index(id))] = 1;
      boundary_.push_back(std::move(c));
    }
  }

  void check_orientations() const {
    for (const FaceGluing& g : gluings_) {
      int sa = detail::face_presentation_sign(g.a.slots);
      int sb = detail::face_presentation_sign(g.b.slots);
      if (sa * sb != -1)
        throw input_error("gluing of tetrahedra " + g.a.tet + " and " + g.b.tet +
                          " is not orientation-reversing");
    }
  }

  void check_connected() const {
    detail::UnionFind uf(static_cast<int>(tets_.size()));
    for (const FaceGluing& g : gluings_) uf.unite(tet_index(g.a.tet), tet_index(g.b.tet));
    int root = uf.find(0);
    for (int t = 1; t < static_cast<int>(tets_.size()); ++t)
      if (uf.find(t) != root) throw input_error("triangulation is not connected");
  }

  void check_vertex_links() const {
    for (const Vertex& v : vertices_) {
      std::vector<std::pair<int, int>> corners;  // (tet index, corner slot)
      for (std::size_t t = 0; t < tets_.size(); ++t)
        for (int s = 0; s < 4; ++s)
          if (tets_[t].vertices[static_cast<std::size_t>(s)] == v.id)
            corners.emplace_back(static_cast<int>(t), s);
      std::map<std::pair<int, int>, int> corner_idx;
      for (std::size_t i = 0; i < corners.size(); ++i) corner_idx[corners[i]] = static_cast<int>(i);

      long link_faces = static_cast<long>(corners.size());
      long link_edges = 0;
      bool has_boundary_link_edge = false;
      detail::UnionFind uf(static_cast<int>(corners.size()));
      for (const auto& [t, s] : corners) {
        for (int f = 0; f < 4; ++f) {
          if (f == s) continue;  // faces of t containing v
          int fs = 4 * t + f;
          if (!face_glued(fs)) {
            ++link_edges;
            has_boundary_link_edge = true;
            continue;
          }
          int pf = face_partner(fs);
          if (pf < fs) continue;  // count each glued link edge once
          ++link_edges;
          int ps = face_slot_map(fs)[static_cast<std::size_t>(s)];
          uf.unite(corner_idx.at({t, s}), corner_idx.at({pf / 4, ps}));
        }
      }
      long link_vertices = 0;
      for (const EdgeClass& e : edges_)
        if (e.v0 == v.id || e.v1 == v.id) ++link_vertices;

      int comps = 0;
      for (std::size_t i = 0; i < corners.size(); ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
      long chi = link_vertices - link_edges + link_faces;
      bool boundary = vertex_boundary_[static_cast<std::size_t>(vertex_index(v.id))] != 0;
      if (comps != 1)
        throw input_error("link of vertex " + std::to_string(v.id) + " is not connected");
      if (boundary != has_boundary_link_edge)
        throw input_error("inconsistent boundary status of vertex " + std::to_string(v.id));
      if (boundary && chi != 1)
        throw input_error("link of boundary vertex " + std::to_string(v.id) + " is not a disk");
      if (!boundary && chi != 2)
        throw input_error("link of inner vertex " + std::to_string(v.id) + " is not a sphere");
    }
  }

  void check_boundary_components() const {
    for (const BoundaryComponent& c : boundary_) {
      if (c.vertices.size() < 4)
        throw input_error("boundary component has fewer than 4 vertices");
      if (c.euler % 2 != 0 || c.euler > 2)
        throw math_error("boundary component has impossible Euler characteristic " +
                         std::to_string(c.euler));
    }
  }

  Counts check_counts() const {
    Counts c = counts();
    long glued_pairs = static_cast<long>(gluings_.size());
    long boundary_faces = 0;
    for (const BoundaryComponent& bc : boundary_) boundary_faces += static_cast<long>(bc.faces.size());
    if (2 * glued_pairs + boundary_faces != 4 * c.tetrahedra)
      throw math_error("face count identity violated");

    long lhs = c.inner_edges, mid = c.inner_vertices + c.tetrahedra, rhs = c.edges;
    if (!(lhs <= mid && mid <= rhs)) throw math_error("edge-count inequalities violated");
    if (c.boundary_components > 0 && !(lhs < mid && mid < rhs))
      throw math_error("edge-count inequalities not strict for nonempty boundary");
    if (c.boundary_components == 0 && !(lhs == mid && mid == rhs))
      throw math_error("edge-count equalities violated for closed manifold");

    long nb0 = 0, nb1 = 0;
    std::set<int> bverts;
    for (const BoundaryComponent& bc : boundary_) {
      for (int id : bc.vertices) bverts.insert(id);
      nb1 += static_cast<long>(bc.edges.size());
    }
    nb0 = static_cast<long>(bverts.size());
    if (2 * c.marked_size != nb1 - nb0)
      throw math_error("marked-edge count does not match boundary edge/vertex counts");
    return c;
  }

  std::vector<Vertex> vertices_;
  std::vector<Tetrahedron> tets_;
  std::vector<FaceGluing> gluings_;

  std::map<int, int> vertex_index_;
  std::map<std::string, int> tet_index_;
  std::vector<int> face_partner_;
  std::vector<std::array<int, 4>> face_map_;
  std::vector<int> slot_edge_;
  std::vector<EdgeClass> edges_;
  std::vector<BoundaryComponent> boundary_;
  std::vector<char> vertex_boundary_;
};

// Build a gluing from matched vertex-id triples (positional correspondence).
inline FaceGluing make_gluing(const std::vector<Tetrahedron>& tets, const std::string& tet_a,
                              const std::array<int, 3>& ids_a, const std::string& tet_b,
                              const std::array<int, 3>& ids_b) {
  auto side = [&](const std::string& tid, const std::array<int, 3>& ids) {
    const Tetrahedron* tet = nullptr;
    for (const Tetrahedron& t : tets)
      if (t.id == tid) tet = &t;
    if (!tet) throw input_error("unknown tetrahedron id " + tid);
    FaceSide s;
    s.tet = tid;
    for (int x = 0; x < 3; ++x) {
      int slot = -1;
      for (int c = 0; c < 4; ++c)
        if (tet->vertices[static_cast<std::size_t>(c)] == ids[static_cast<std::size_t>(x)]) slot = c;
      if (slot < 0)
        throw input_error("vertex " + std::to_string(ids[static_cast<std::size_t>(x)]) +
                          " not in tetrahedron " + tid);
      s.slots[static_cast<std::size_t>(x)] = slot;
    }
    return s;
  };
  return FaceGluing{side(tet_a, ids_a), side(tet_b, ids_b)};
}

// Flip tetrahedron orientations (swapping the last two listed vertices) along a
// spanning forest so that every gluing becomes orientation-reversing; throws if
// impossible (non-orientable input).
inline Triangulation orient_tetrahedra(std::vector<Vertex> vertices,
                                       std::vector<Tetrahedron> tets,
                                       std::vector<FaceGluing> gluings) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < tets.size(); ++i) index[tets[i].id] = static_cast<int>(i);
  std::vector<std::vector<std::pair<int, int>>> adj(tets.size());  // (gluing, neighbor)
  for (std::size_t g = 0; g < gluings.size(); ++g) {
    int ta = index.at(gluings[g].a.tet), tb = index.at(gluings[g].b.tet);
    adj[static_cast<std::size_t>(ta)].emplace_back(static_cast<int>(g), tb);
    adj[static_cast<std::size_t>(tb)].emplace_back(static_cast<int>(g), ta);
  }
  auto sign = [&](const FaceGluing& g) {
    return detail::face_presentation_sign(g.a.slots) * detail::face_presentation_sign(g.b.slots);
  };
  std::vector<int> flip(tets.size(), -1);
  for (std::size_t root = 0; root < tets.size(); ++root) {
    if (flip[root] >= 0) continue;
    flip[root] = 0;
    std::vector<int> queue = {static_cast<int>(root)};
    while (!queue.empty()) {
      int t = queue.back();
      queue.pop_back();
      for (auto [g, u] : adj[static_cast<std::size_t>(t)]) {
        int want = (sign(gluings[static_cast<std::size_t>(g)]) == 1) ? (1 - flip[static_cast<std::size_t>(t)])
                                                                     : flip[static_cast<std::size_t>(t)];
        // Self-gluings of a tet cannot be fixed by flipping it.
        if (u == t && sign(gluings[static_cast<std::size_t>(g)]) == 1)
          throw input_error("triangulation is not orientable");
        if (flip[static_cast<std::size_t>(u)] < 0) {
          flip[static_cast<std::size_t>(u)] = want;
          queue.push_back(u);
        } else if (flip[static_cast<std::size_t>(u)] != want) {
          throw input_error("triangulation is not orientable");
        }
      }
    }
  }
  for (std::size_t t = 0; t < tets.size(); ++t)
    if (flip[t]) std::swap(tets[t].vertices[2], tets[t].vertices[3]);
  auto remap_side = [&](FaceSide& s) {
    if (!flip[static_cast<std::size_t>(index.at(s.tet))]) return;
    for (int& slot : s.slots)
      if (slot >= 2) slot = 5 - slot;
  };
  for (FaceGluing& g : gluings) {
    remap_side(g.a);
    remap_side(g.b);
  }
  return Triangulation(std::move(vertices), std::move(tets), std::move(gluings));
}

inline Triangulation triangulation_from_json(const nlohmann::json& j) {
  try {
    std::vector<Vertex> vertices;
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.id = jv.at("id").get<int>();
      v.zeta = parse_scalar(jv.at("zeta").get<std::string>());
      vertices.push_back(std::move(v));
    }
    std::vector<Tetrahedron> tets;
    for (const auto& jt : j.at("tetrahedra")) {
      Tetrahedron t;
      if (jt.at("id").is_string())
        t.id = jt.at("id").get<std::string>();
      else
        t.id = std::to_string(jt.at("id").get<long>());
      const auto& vs = jt.at("vertices");
      if (!vs.is_array() || vs.size() != 4)
        throw input_error("tetrahedron " + t.id + " needs exactly 4 vertices");
      for (int s = 0; s < 4; ++s) t.vertices[static_cast<std::size_t>(s)] = vs.at(static_cast<std::size_t>(s)).get<int>();
      tets.push_back(std::move(t));
    }
    std::vector<FaceGluing> gluings;
    const auto& jg = j.at("gluings");
    if (jg.is_string()) {
      if (jg.get<std::string>() != "by-shared-faces")
        throw input_error("unknown gluing mode '" + jg.get<std::string>() + "'");
      std::map<std::array<int, 3>, std::vector<std::pair<std::size_t, int>>> shared;
      for (std::size_t t = 0; t < tets.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
          std::array<int, 3> ids{};
          int k = 0;
          for (int s = 0; s < 4; ++s)
            if (s != f) ids[static_cast<std::size_t>(k++)] = tets[t].vertices[static_cast<std::size_t>(s)];
          std::sort(ids.begin(), ids.end());
          shared[ids].emplace_back(t, f);
        }
      }
      for (const auto& [ids, faces] : shared) {
        if (faces.size() > 2)
          throw input_error("by-shared-faces is ambiguous: vertex triple (" +
                            std::to_string(ids[0]) + "," + std::to_string(ids[1]) + "," +
                            std::to_string(ids[2]) + ") appears on " +
                            std::to_string(faces.size()) + " faces");
        if (faces.size() != 2) continue;
        auto slots_sorted_by_id = [&](std::size_t t, int f) {
          std::array<std::pair<int, int>, 3> sv{};
          int k = 0;
          for (int s = 0; s < 4; ++s)
            if (s != f) sv[static_cast<std::size_t>(k++)] = {tets[t].vertices[static_cast<std::size_t>(s)], s};
          std::sort(sv.begin(), sv.end());
          return std::array<int, 3>{sv[0].second, sv[1].second, sv[2].second};
        };
        FaceGluing g;
        g.a.tet = tets[faces[0].first].id;
        g.a.slots = slots_sorted_by_id(faces[0].first, faces[0].second);
        g.b.tet = tets[faces[1].first].id;
        g.b.slots = slots_sorted_by_id(faces[1].first, faces[1].second);
        gluings.push_back(std::move(g));
      }
    } else {
      for (const auto& item : jg) {
        auto side = [&](const nlohmann::json& js) {
          FaceSide s;
          if (js.at("tet").is_string())
            s.tet = js.at("tet").get<std::string>();
          else
            s.tet = std::to_string(js.at("tet").get<long>());
          const auto& sl = js.at("slots");
          if (!sl.is_array() || sl.size() != 3)
            throw input_error("gluing side needs exactly 3 slots");
          for (int x = 0; x < 3; ++x) s.slots[static_cast<std::size_t>(x)] = sl.at(static_cast<std::size_t>(x)).get<int>();
          return s;
        };
        gluings.push_back(FaceGluing{side(item.at("a")), side(item.at("b"))});
      }
    }
    return Triangulation(std::move(vertices), std::move(tets), std::move(gluings));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed triangulation document: ") + e.what());
  }
}

}  // namespace tqft
