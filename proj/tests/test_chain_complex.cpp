// Tests for the five-term based complex: pinned entries of each differential
// on small triangulations, and the defining property (consecutive products
// vanish) across every admissible marked set on the small examples plus
// sampled marked sets on the larger ones.

#include <tqft/chain_complex.hpp>
#include <tqft/examples.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

namespace tqft {
namespace {

Scalar rat(const std::string& s) { return parse_scalar(s); }

std::vector<int> boundary_edge_ids(const Triangulation& t) {
  std::vector<int> out;
  for (const EdgeClass& e : t.edges())
    if (!e.inner) out.push_back(e.id);
  return out;
}

TEST(ChainComplex, LieAndSwayBlocks) {
  // Single tetrahedron: no inner vertices, one boundary component, so f1 is
  // the 3x3 identity on the sway block.
  Triangulation tet = example_tet();
  LabeledMatrix f1 = build_f1(tet);
  ASSERT_EQ(f1.row_labels().size(), 3u);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      EXPECT_EQ(f1.at(sway(0, x), lie_gen(y)), Scalar(x == y ? 1 : 0));

  // Closed sphere: one rigid-motion row per (inner) vertex.
  Triangulation s3 = example_s3();
  LabeledMatrix g1 = build_f1(s3);
  ASSERT_EQ(g1.row_labels().size(), 4u);
  EXPECT_EQ(g1.at(vertex_dz(1), lie_gen(0)), Scalar(0));
  EXPECT_EQ(g1.at(vertex_dz(1), lie_gen(1)), Scalar(1));
  EXPECT_EQ(g1.at(vertex_dz(1), lie_gen(2)), Scalar(0));
  EXPECT_EQ(g1.at(vertex_dz(3), lie_gen(0)), Scalar(6));
  EXPECT_EQ(g1.at(vertex_dz(3), lie_gen(1)), Scalar(1));
  EXPECT_EQ(g1.at(vertex_dz(3), lie_gen(2)), Scalar(-9));

  // Shell: two boundary components, identity block for each.
  Triangulation shell = example_shell();
  LabeledMatrix h1 = build_f1(shell);
  ASSERT_EQ(h1.row_labels().size(), 6u);
  for (int k = 0; k < 2; ++k)
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        EXPECT_EQ(h1.at(sway(k, x), lie_gen(y)), Scalar(x == y ? 1 : 0));
}

TEST(ChainComplex, TetCoefficientRows) {
  // Closed sphere, zeta = (0, 1, 3, 7): the coefficient of dz_v in a
  // tetrahedron row is -1 / prod_{u != v} (zeta_v - zeta_u); both tetrahedra
  // span the same vertex set and therefore carry the same row.
  Triangulation s3 = example_s3();
  LabeledMatrix f2 = build_f2(s3);
  for (int ti = 0; ti < 2; ++ti) {
    EXPECT_EQ(f2.at(tet_dy(ti), vertex_dz(1)), rat("1/21"));
    EXPECT_EQ(f2.at(tet_dy(ti), vertex_dz(2)), rat("-1/12"));
    EXPECT_EQ(f2.at(tet_dy(ti), vertex_dz(3)), rat("1/24"));
    EXPECT_EQ(f2.at(tet_dy(ti), vertex_dz(4)), rat("-1/168"));
  }

  // Single tetrahedron: every corner routes through the same sway triple and
  // the three weighted power sums cancel, so the row vanishes identically.
  Triangulation tet = example_tet();
  EXPECT_TRUE(build_f2(tet).is_zero());
}

TEST(ChainComplex, EdgeRowsPinned) {
  // Single tetrahedron, marked edge (1,2) (id 0): the lone star entry reads
  // zeta_12 * zeta_34 = (0-1)(3-7) = 4.
  Triangulation tet = example_tet();
  LabeledMatrix f3 = build_f3(tet, {0});
  ASSERT_EQ(f3.row_labels().size(), 1u);
  ASSERT_EQ(f3.col_labels().size(), 1u);
  EXPECT_EQ(f3.at(edge_phi(0), tet_dy(0)), Scalar(4));

  // Pillow: the inner edge (1,2) sees both tetrahedra, with opposite
  // orientations of the opposite edge (3,4).
  Triangulation pillow = example_pillow();
  const EdgeClass* inner = nullptr;
  for (const EdgeClass& e : pillow.edges())
    if (e.inner) inner = &e;
  ASSERT_NE(inner, nullptr);
  LabeledMatrix full = build_f3_full(pillow);
  EXPECT_EQ(full.at(edge_phi(inner->id), tet_dy(0)), Scalar(4));
  EXPECT_EQ(full.at(edge_phi(inner->id), tet_dy(1)), Scalar(-4));
}

TEST(ChainComplex, EdgeRowsMatchFullMatrix) {
  // build_f3 for any marked set is a row restriction of build_f3_full.
  Triangulation torus = example_solid_torus();
  LabeledMatrix full = build_f3_full(torus);
  std::vector<int> bdry = boundary_edge_ids(torus);
  std::vector<int> marked(bdry.begin(), bdry.begin() + 4);
  LabeledMatrix f3 = build_f3(torus, marked);
  for (const BasisLabel& r : f3.row_labels())
    for (const BasisLabel& c : f3.col_labels()) EXPECT_EQ(f3.at(r, c), full.at(r, c));
}

TEST(ChainComplex, MarkedColumnsOfF4Vanish) {
  Triangulation torus = example_solid_torus();
  std::vector<int> bdry = boundary_edge_ids(torus);
  std::vector<int> marked = {bdry[0], bdry[3], bdry[5], bdry[9]};
  LabeledMatrix f4 = build_f4(torus, marked);
  for (int id : marked)
    for (const BasisLabel& r : f4.row_labels()) EXPECT_EQ(f4.at(r, edge_phi(id)), Scalar(0));
  // Inner columns carry the endpoint data (1, 1/(zeta_v - zeta_u)).
  const EdgeClass* inner = nullptr;
  for (const EdgeClass& e : torus.edges())
    if (e.inner && !torus.is_boundary_vertex(e.v0) && !torus.is_boundary_vertex(e.v1)) inner = &e;
  if (inner) {
    EXPECT_EQ(f4.at(vertex_alpha(inner->v0), edge_phi(inner->id)), Scalar(1));
    EXPECT_EQ(f4.at(vertex_beta(inner->v0), edge_phi(inner->id)),
              Scalar(1) / (torus.zeta(inner->v0) - torus.zeta(inner->v1)));
  }
}

TEST(ChainComplex, VertexBlocksOfF5) {
  Triangulation s3 = example_s3();
  LabeledMatrix f5 = build_f5(s3);
  // zeta(2) = 1: alpha column (-1, 0, 1), beta column (2, 1, -1).
  EXPECT_EQ(f5.at(lie_gen_dual(0), vertex_alpha(2)), Scalar(-1));
  EXPECT_EQ(f5.at(lie_gen_dual(1), vertex_alpha(2)), Scalar(0));
  EXPECT_EQ(f5.at(lie_gen_dual(2), vertex_alpha(2)), Scalar(1));
  EXPECT_EQ(f5.at(lie_gen_dual(0), vertex_beta(2)), Scalar(2));
  EXPECT_EQ(f5.at(lie_gen_dual(1), vertex_beta(2)), Scalar(1));
  EXPECT_EQ(f5.at(lie_gen_dual(2), vertex_beta(2)), Scalar(-1));

  Triangulation shell = example_shell();
  LabeledMatrix g5 = build_f5(shell);
  for (int k = 0; k < 2; ++k)
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        EXPECT_EQ(g5.at(lie_gen_dual(x), conj_sway(k, y)), Scalar(x == y ? 1 : 0));
}

TEST(ChainComplex, ComplexPropertyExhaustiveSmall) {
  for (const Triangulation& t :
       {example_tet(), example_pillow(), example_s3(), example_shell()}) {
    std::vector<std::vector<int>> sets = all_marked_sets(t);
    for (const std::vector<int>& marked : sets) {
      BasedComplex c = build_complex(t, marked);
      EXPECT_TRUE(is_complex(c));
    }
  }
}

TEST(ChainComplex, ComplexPropertyTorusExhaustive) {
  Triangulation torus = example_solid_torus();
  std::vector<std::vector<int>> sets = all_marked_sets(torus);
  EXPECT_EQ(sets.size(), 495u);  // C(12, 4)
  for (const std::vector<int>& marked : sets) EXPECT_TRUE(is_complex(build_complex(torus, marked)));
}

TEST(ChainComplex, ComplexPropertyPretzelSampled) {
  Triangulation pretzel = example_pretzel();
  std::vector<int> bdry = boundary_edge_ids(pretzel);
  long need = pretzel.counts().marked_size;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> pool = bdry;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> marked(pool.begin(), pool.begin() + need);
    EXPECT_TRUE(is_complex(build_complex(pretzel, marked)));
  }
}

TEST(ChainComplex, FullEdgeMatrixAnnihilatesTetRows) {
  // The full edge matrix composed with the tetrahedron rows vanishes; the
  // marked-set complex property for f3 f2 is a row restriction of this.
  for (const Triangulation& t : {example_tet(), example_pillow(), example_s3(),
                                 example_solid_torus(), example_shell(), example_pretzel()}) {
    LabeledMatrix prod = LabeledMatrix::product(build_f3_full(t), build_f2(t));
    EXPECT_TRUE(prod.is_zero());
  }
}

TEST(ChainComplex, MarkedSetValidation) {
  Triangulation torus = example_solid_torus();
  std::vector<int> bdry = boundary_edge_ids(torus);
  EXPECT_THROW(build_complex(torus, {bdry[0], bdry[1], bdry[2]}), input_error);  // too few
  EXPECT_THROW(build_complex(torus, {bdry[0], bdry[0], bdry[1], bdry[2]}), input_error);
  int inner_id = -1;
  for (const EdgeClass& e : torus.edges())
    if (e.inner) inner_id = e.id;
  EXPECT_THROW(build_complex(torus, {bdry[0], bdry[1], bdry[2], inner_id}), input_error);
  // Order of the input does not matter; the stored set is ascending.
  BasedComplex c = build_complex(torus, {bdry[3], bdry[0], bdry[2], bdry[1]});
  EXPECT_TRUE(std::is_sorted(c.marked.begin(), c.marked.end()));
}

TEST(ChainComplex, MarkedEnumerationCounts) {
  EXPECT_EQ(all_marked_sets(example_tet()).size(), 6u);
  EXPECT_EQ(all_marked_sets(example_pillow()).size(), 6u);
  EXPECT_EQ(all_marked_sets(example_shell()).size(), 66u);
  // Closed manifold: the only marked set is empty.
  std::vector<std::vector<int>> closed = all_marked_sets(example_s3());
  ASSERT_EQ(closed.size(), 1u);
  EXPECT_TRUE(closed[0].empty());
  EXPECT_TRUE(is_complex(build_complex(example_s3(), {})));
}

TEST(ChainComplex, DimensionsFollowCounts) {
  for (const Triangulation& t : {example_tet(), example_solid_torus(), example_shell()}) {
    Counts n = t.counts();
    BasedComplex c = build_complex(t, all_marked_sets(t).front());
    EXPECT_EQ(static_cast<long>(c.bases[1].size()), n.inner_vertices + 3 * n.boundary_components);
    EXPECT_EQ(static_cast<long>(c.bases[2].size()), n.tetrahedra);
    EXPECT_EQ(static_cast<long>(c.bases[3].size()), n.inner_vertices + n.tetrahedra);
    EXPECT_EQ(static_cast<long>(c.bases[4].size()),
              2 * n.inner_vertices + 3 * n.boundary_components);
    // Marked rows precede inner rows in the edge basis.
    bool seen_inner = false;
    for (const BasisLabel& l : c.bases[3]) {
      bool is_marked = std::find(c.marked.begin(), c.marked.end(), l.a) != c.marked.end();
      if (!is_marked) seen_inner = true;
      EXPECT_FALSE(is_marked && seen_inner);
    }
  }
}

}  // namespace
}  // namespace tqft
