#pragma once
// Torsion of the five-term based complex and the derived boundary-edge
// invariant.
//
// A tau-chain picks a row subset alpha_i of each chain space; the torsion is
// the alternating product of the minors of f_i with rows alpha_i and columns
// complementary to alpha_{i-1}:
//
//   tau = mf1 * mf3 * mf5 / (mf2 * mf4).
//
// Up to sign, tau does not depend on the choice of nondegenerate chain.  The
// standard chain fixes the sign convention used everywhere else:
//
//   * with boundary: mf1 takes the sway rows of the first boundary component
//     and mf5 the matching conjugate-sway columns (both minors are 1);
//   * closed: mf1 takes the dz rows of the first face of tetrahedron 0, and
//     mf5 the columns {dalpha_i, dbeta_i, dalpha_j} of the smallest edge ij;
//   * mf2 rows and mf4 columns are chosen greedily in canonical order, and
//     depend only on the triangulation, never on the marked set;
//   * mf3 is the residual block, the only minor that sees the marked set.
//
// The invariant divides by twice the product of the squared inner edge
// lengths; a marked set whose residual minor vanishes gets invariant zero.

#include <tqft/chain_complex.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tqft {

struct TauChain {
  // alpha[0] is empty and alpha[5] is the full final basis; the interior
  // subsets are the free choices.  Each list is kept in canonical order.
  std::array<std::vector<BasisLabel>, 6> alpha;
};

// The marked-set-independent part of the standard chain.
struct ChainSelection {
  std::vector<BasisLabel> alpha1;  // rows of the first minor
  std::vector<BasisLabel> alpha2;  // tetrahedron rows of the second minor
  std::vector<BasisLabel> abar3;   // inner-edge columns of the fourth minor
  std::vector<BasisLabel> abar4;   // columns of the fifth minor
};

namespace detail {

inline std::vector<BasisLabel> complement(const std::vector<BasisLabel>& basis,
                                          std::vector<BasisLabel> taken) {
  std::sort(taken.begin(), taken.end());
  std::vector<BasisLabel> out;
  std::set_difference(basis.begin(), basis.end(), taken.begin(), taken.end(),
                      std::back_inserter(out));
  return out;
}

inline std::array<std::size_t, 6> chain_ranks(const BasedComplex& c) {
  std::array<std::size_t, 6> r{};
  r[1] = 3;
  for (int i = 2; i <= 5; ++i)
    r[static_cast<std::size_t>(i)] =
        c.bases[static_cast<std::size_t>(i - 1)].size() - r[static_cast<std::size_t>(i - 1)];
  if (r[5] != 3) throw math_error("chain ranks do not close up");
  return r;
}

// Any admissible marked set; used when only the marked-set-independent
// structure of the complex is needed.
inline std::vector<int> first_marked(const Triangulation& t) {
  Counts n = t.counts();
  std::vector<int> out;
  for (const EdgeClass& e : t.edges()) {
    if (static_cast<long>(out.size()) == n.marked_size) break;
    if (!e.inner) out.push_back(e.id);
  }
  return out;
}

}  // namespace detail

inline ChainSelection standard_selection(const Triangulation& t) {
  BasedComplex c = build_complex(t, detail::first_marked(t));
  auto ranks = detail::chain_ranks(c);
  ChainSelection s;

  if (!t.boundary_components().empty()) {
    for (int x = 0; x < 3; ++x) {
      s.alpha1.push_back(sway(0, x));
      s.abar4.push_back(conj_sway(0, x));
    }
  } else {
    std::array<int, 3> face = {t.tetrahedra()[0].vertices[0], t.tetrahedra()[0].vertices[1],
                               t.tetrahedra()[0].vertices[2]};
    std::sort(face.begin(), face.end());
    for (int v : face) s.alpha1.push_back(vertex_dz(v));
    const EdgeClass& e = t.edge(0);
    s.abar4 = {vertex_alpha(e.v0), vertex_beta(e.v0), vertex_alpha(e.v1)};
  }

  s.alpha2 = select_independent_rows(c.f2, c.bases[2],
                                     detail::complement(c.bases[1], s.alpha1), ranks[2]);
  std::sort(s.alpha2.begin(), s.alpha2.end());

  std::vector<BasisLabel> inner_cols;
  for (const EdgeClass& e : t.edges())
    if (e.inner) inner_cols.push_back(edge_phi(e.id));
  s.abar3 = select_independent_rows(c.f4.transpose(), inner_cols,
                                    detail::complement(c.bases[4], s.abar4), ranks[4]);
  std::sort(s.abar3.begin(), s.abar3.end());
  return s;
}

inline TauChain chain_for(const BasedComplex& c, const ChainSelection& s) {
  TauChain ch;
  ch.alpha[1] = s.alpha1;
  ch.alpha[2] = s.alpha2;
  ch.alpha[3] = detail::complement(c.bases[3], s.abar3);
  ch.alpha[4] = detail::complement(c.bases[4], s.abar4);
  ch.alpha[5] = c.bases[5];
  return ch;
}

// Evaluates the alternating product of minors; nullopt when some minor
// vanishes (a degenerate chain for this complex).
inline std::optional<Scalar> torsion_of_chain(const BasedComplex& c, const TauChain& ch) {
  Scalar num(1), den(1);
  for (int i = 1; i <= 5; ++i) {
    const auto& rows = ch.alpha[static_cast<std::size_t>(i)];
    std::vector<BasisLabel> cols =
        detail::complement(c.bases[static_cast<std::size_t>(i - 1)],
                           ch.alpha[static_cast<std::size_t>(i - 1)]);
    if (rows.size() != cols.size())
      throw input_error("tau-chain block " + std::to_string(i) + " is not square");
    Scalar d = c.f(i).select(rows, cols).determinant();
    if (d == 0) return std::nullopt;
    (i % 2 ? num : den) *= d;
  }
  return num / den;
}

inline Scalar torsion_marked(const Triangulation& t, const ChainSelection& s,
                             const std::vector<int>& marked) {
  BasedComplex c = build_complex(t, marked);
  std::optional<Scalar> tau = torsion_of_chain(c, chain_for(c, s));
  return tau ? *tau : Scalar(0);
}

// Product of squared inner edge lengths, the normalization under the torsion.
inline Scalar inner_edge_weight(const Triangulation& t) {
  Scalar w(1);
  for (const EdgeClass& e : t.edges())
    if (e.inner) w *= t.edge_zeta(e.id) * t.edge_zeta(e.id);
  return w;
}

inline Scalar invariant_marked(const Triangulation& t, const ChainSelection& s,
                               const std::vector<int>& marked) {
  return torsion_marked(t, s, marked) / (Scalar(2) * inner_edge_weight(t));
}

inline Scalar invariant_marked(const Triangulation& t, const std::vector<int>& marked) {
  return invariant_marked(t, standard_selection(t), marked);
}

// Uniform random nondegenerate chain, for checking chain independence of the
// torsion.  Rejection sampling; throws after `attempts` degenerate draws.
inline TauChain random_tau_chain(const BasedComplex& c, std::mt19937_64& rng, int attempts = 500) {
  auto ranks = detail::chain_ranks(c);
  auto sample = [&](const std::vector<BasisLabel>& basis, std::size_t k) {
    std::vector<BasisLabel> pool = basis;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  for (int trial = 0; trial < attempts; ++trial) {
    TauChain ch;
    for (int i = 1; i <= 4; ++i)
      ch.alpha[static_cast<std::size_t>(i)] =
          sample(c.bases[static_cast<std::size_t>(i)], ranks[static_cast<std::size_t>(i)]);
    ch.alpha[5] = c.bases[5];
    if (torsion_of_chain(c, ch)) return ch;
  }
  throw math_error("no nondegenerate tau-chain found by random sampling");
}

}  // namespace tqft
