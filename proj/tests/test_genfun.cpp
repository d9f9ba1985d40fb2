// Tests for matrix generating functions, the tetrahedron function, the
// pentagon relation, the manifold generating function, and the state sum.
//
// Oracles: pinned hand values for tiny matrices; brute-force identities
// (Berezin form vs direct subset sum, concatenation vs product); the
// cross-module identity that generating-function coefficients equal the
// torsion invariants; and a naive state-sum evaluator checked against the
// incremental one.

#include <tqft/examples.hpp>
#include <tqft/genfun.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <vector>

namespace tqft {
namespace {

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar(num(rng)) / den(rng);
}

LabeledMatrix random_matrix(std::mt19937_64& rng, std::size_t nrows, std::size_t ncols,
                            int col_offset = 0) {
  std::vector<BasisLabel> rows, cols;
  for (std::size_t i = 0; i < nrows; ++i) rows.push_back(edge_phi(static_cast<int>(i + 1)));
  for (std::size_t j = 0; j < ncols; ++j)
    cols.push_back(tet_dy(col_offset + static_cast<int>(j)));
  LabeledMatrix m(rows, cols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = random_rational(rng);
  return m;
}

GrassmannElement naive_state_sum(const Triangulation& t) {
  GrassmannElement prod = GrassmannElement::scalar(Scalar(1));
  for (int i = 0; i < static_cast<int>(t.tetrahedra().size()); ++i)
    prod = prod * tetrahedron_function(t, i);
  std::vector<GeneratorId> inner;
  for (const EdgeClass& e : t.edges())
    if (e.inner) inner.push_back(static_cast<GeneratorId>(e.id));
  std::sort(inner.rbegin(), inner.rend());
  return (Scalar(1) / inner_edge_weight(t)) * berezin_multi(prod, inner);
}

TEST(Genfun, MatrixGenfunPinned) {
  // 1x1 [c] -> c a1.
  LabeledMatrix a({edge_phi(1)}, {tet_dy(0)});
  a.at(0, 0) = Scalar(5);
  EXPECT_EQ(genfun_matrix(a), Scalar(5) * GrassmannElement::generator(1));

  // 2x2 identity -> a1 a2.
  LabeledMatrix b({edge_phi(1), edge_phi(2)}, {tet_dy(0), tet_dy(1)});
  b.at(0, 0) = Scalar(1);
  b.at(1, 1) = Scalar(1);
  EXPECT_EQ(genfun_matrix(b),
            GrassmannElement::generator(1) * GrassmannElement::generator(2));

  // Column (p; q) -> p a1 + q a2.
  LabeledMatrix c({edge_phi(1), edge_phi(2)}, {tet_dy(0)});
  c.at(0, 0) = Scalar(3);
  c.at(1, 0) = Scalar(-7);
  EXPECT_EQ(genfun_matrix(c), Scalar(3) * GrassmannElement::generator(1) +
                                  Scalar(-7) * GrassmannElement::generator(2));

  // Fewer rows than columns is rejected.
  LabeledMatrix d({edge_phi(1)}, {tet_dy(0), tet_dy(1)});
  EXPECT_THROW(genfun_matrix(d), input_error);
}

TEST(Genfun, ConcatenationIsProduct) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(2, 6);
    const std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> kd(0, n);
    const std::size_t ka = std::min<std::size_t>(kd(rng), 3);
    const std::size_t kb = std::min<std::size_t>(kd(rng), n - ka);
    LabeledMatrix a = random_matrix(rng, n, ka, 0);
    LabeledMatrix b = random_matrix(rng, n, kb, static_cast<int>(ka));
    std::vector<BasisLabel> cols = a.col_labels();
    cols.insert(cols.end(), b.col_labels().begin(), b.col_labels().end());
    LabeledMatrix c(a.row_labels(), cols);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < ka; ++j) c.at(i, j) = a.at(i, j);
      for (std::size_t j = 0; j < kb; ++j) c.at(i, ka + j) = b.at(i, j);
    }
    EXPECT_EQ(genfun_matrix(c), genfun_matrix(a) * genfun_matrix(b));
  }
}

TEST(Genfun, InnerRowsEqualBerezinForm) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(1, 6);
    const std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> kd(0, std::min<std::size_t>(n, 3));
    const std::size_t k = kd(rng);
    LabeledMatrix a = random_matrix(rng, n, k);
    // Random subset of rows marked inner.
    std::vector<BasisLabel> inner;
    for (const BasisLabel& r : a.row_labels())
      if (rng() % 2 == 0) inner.push_back(r);
    GrassmannElement direct = genfun_inner(a, inner);
    GrassmannElement via_berezin =
        berezin_multi(genfun_matrix(a), reverse_row_generators(inner));
    EXPECT_EQ(direct, via_berezin);
  }
}

TEST(Genfun, TetFunctionPermutationParity) {
  const std::array<Scalar, 4> z = {Scalar(0), Scalar(1), Scalar(3), Scalar(7)};
  const std::array<GeneratorId, 6> gen = {1, 2, 3, 4, 5, 6};
  GrassmannElement base = tetrahedron_function(z, gen);
  EXPECT_EQ(base.term_count(), 6u);
  EXPECT_EQ(base.max_degree(), 1);

  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    int parity = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++parity;
    std::array<Scalar, 4> zp;
    std::array<GeneratorId, 6> gp{};
    for (int i = 0; i < 4; ++i)
      zp[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q)
        gp[static_cast<std::size_t>(detail::pair_index(p, q))] =
            gen[static_cast<std::size_t>(detail::pair_index(
                std::min(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(q)]),
                std::max(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(q)])))];
    GrassmannElement f = tetrahedron_function(zp, gp);
    EXPECT_EQ(f, parity % 2 ? -base : base);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Coincident zeta values are rejected.
  EXPECT_THROW(tetrahedron_function({Scalar(0), Scalar(0), Scalar(1), Scalar(2)}, gen),
               input_error);
}

TEST(Genfun, TetFunctionIsJacobianColumnGenfun) {
  Triangulation tet = example_tet();
  EXPECT_EQ(genfun_matrix(build_f3_full(tet)), tetrahedron_function(tet, 0));
}

TEST(Genfun, PentagonIdentity) {
  EXPECT_TRUE(pentagon_identity_holds(
      {Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4)}));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<Scalar, 5> z;
    do {
      for (auto& v : z) v = random_rational(rng);
      std::array<Scalar, 5> s = z;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) == s.end()) break;
    } while (true);
    EXPECT_TRUE(pentagon_identity_holds(z));
  }
}

TEST(Genfun, SingleTetGeneratingFunction) {
  Triangulation tet = example_tet();
  InvariantFunction f = generating_function(tet);
  EXPECT_EQ(f.degree, 1);
  EXPECT_EQ(Scalar(2) * f.fn, tetrahedron_function(tet, 0));
}

TEST(Genfun, CoefficientsMatchInvariantsPillow) {
  Triangulation pillow = example_pillow();
  InvariantFunction f = generating_function(pillow);
  ChainSelection sel = standard_selection(pillow);
  for (const std::vector<int>& marked : all_marked_sets(pillow))
    EXPECT_EQ(marked_coefficient(f, marked), invariant_marked(pillow, sel, marked));
}

TEST(Genfun, CoefficientsMatchInvariantsTorus) {
  Triangulation torus = example_solid_torus();
  InvariantFunction f = generating_function(torus);
  ChainSelection sel = standard_selection(torus);
  for (const std::vector<int>& marked : all_marked_sets(torus))
    EXPECT_EQ(marked_coefficient(f, marked), invariant_marked(torus, sel, marked));
}

TEST(Genfun, TorusFunctionShape) {
  Triangulation torus = example_solid_torus();
  InvariantFunction f = generating_function(torus);
  EXPECT_FALSE(f.fn.is_zero());
  EXPECT_TRUE(f.fn.is_homogeneous());
  EXPECT_EQ(f.fn.max_degree(), 4);
  EXPECT_EQ(f.degree, 4);
  std::set<GeneratorId> bdry(f.boundary_edges.begin(), f.boundary_edges.end());
  for (GeneratorId g : f.fn.generators()) EXPECT_TRUE(bdry.count(g));
}

TEST(Genfun, TorusMeridianPairs) {
  // The twelve boundary edges double each vertex pair; identifying the two
  // copies of a pair kills the function for exactly the two meridian pairs.
  Triangulation torus = example_solid_torus();
  InvariantFunction f = generating_function(torus);
  std::map<std::pair<int, int>, std::vector<int>> pairs;
  for (const EdgeClass& e : torus.edges())
    if (!e.inner) pairs[{e.v0, e.v1}].push_back(e.id);
  ASSERT_EQ(pairs.size(), 6u);
  int vanishing = 0;
  for (const auto& [vs, ids] : pairs) {
    ASSERT_EQ(ids.size(), 2u);
    GrassmannElement glued = identify_generators(f.fn, ids[1], ids[0]);
    if (glued.is_zero()) ++vanishing;
  }
  EXPECT_EQ(vanishing, 2);
}

TEST(Genfun, StateSumSingleTet) {
  Triangulation tet = example_tet();
  GrassmannElement s = state_sum(tet);
  EXPECT_EQ(s, tetrahedron_function(tet, 0));
  EXPECT_EQ(s, Scalar(2) * generating_function(tet).fn);
}

TEST(Genfun, StateSumPillowDoublesGeneratingFunction) {
  Triangulation pillow = example_pillow();
  GrassmannElement s = state_sum(pillow);
  EXPECT_EQ(s, naive_state_sum(pillow));
  EXPECT_TRUE(eq_up_to_sign(s, Scalar(2) * generating_function(pillow).fn));
}

TEST(Genfun, StateSumVanishesWithInnerVertices) {
  // The solid torus has two inner vertices, so its raw state sum vanishes.
  Triangulation torus = example_solid_torus();
  GrassmannElement s = state_sum(torus);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s, naive_state_sum(torus));
}

TEST(Genfun, StateSumVanishesWithTwoBoundaryComponents) {
  EXPECT_TRUE(state_sum(example_shell()).is_zero());
}

}  // namespace
}  // namespace tqft
