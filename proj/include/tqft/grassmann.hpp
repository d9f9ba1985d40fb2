#pragma once

// Sparse Grassmann (exterior) algebra over exact rationals.
//
// An element is a finite signed sum of monomials a_{g1} a_{g2} ... a_{gk} in
// anticommuting generators indexed by integers.  Each monomial is stored as a
// strictly increasing generator list mapping to a nonzero coefficient, and
// terms are kept in graded-lexicographic order (degree first, then the id
// list), which fixes a canonical order for printing and serialization.
//
// Sign conventions:
//   * products pick up (-1)^inversions when the two sorted lists interleave;
//   * the Berezin integral of a monomial containing a_g anticommutes a_g to
//     the rightmost position and removes it, so a term of degree n with a_g
//     at sorted position p contributes the sign (-1)^(n-1-p);
//   * iterated integrals apply the listed generators left to right, i.e. the
//     first listed generator is the innermost integration.

#include <tqft/rational.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tqft {

using GeneratorId = std::int32_t;
using Monomial = std::vector<GeneratorId>;  // strictly increasing

struct GradedLexLess {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

class GrassmannElement {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexLess>;

  GrassmannElement() = default;

  static GrassmannElement scalar(Scalar c) {
    GrassmannElement x;
    if (!c.is_zero()) x.terms_.emplace(Monomial{}, std::move(c));
    return x;
  }

  static GrassmannElement generator(GeneratorId g) {
    GrassmannElement x;
    x.terms_.emplace(Monomial{g}, Scalar(1));
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Largest monomial degree present; -1 for the zero element.
  int max_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.size()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = terms_.begin()->first.size();
    return terms_.rbegin()->first.size() == d;  // graded order: extremes suffice
  }

  Scalar coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  std::set<GeneratorId> generators() const {
    std::set<GeneratorId> gens;
    for (const auto& [mono, c] : terms_) gens.insert(mono.begin(), mono.end());
    return gens;
  }

  void add_term(Monomial mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(mono), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GrassmannElement& operator+=(const GrassmannElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  GrassmannElement& operator-=(const GrassmannElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  GrassmannElement& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
    a += b;
    return a;
  }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
    a -= b;
    return a;
  }
  friend GrassmannElement operator-(GrassmannElement a) {
    for (auto& [mono, c] : a.terms_) c = -c;
    return a;
  }
  friend GrassmannElement operator*(GrassmannElement a, const Scalar& c) {
    a *= c;
    return a;
  }
  friend GrassmannElement operator*(const Scalar& c, GrassmannElement a) {
    a *= c;
    return a;
  }

  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement out;
    Monomial merged;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        int inversions = 0;
        if (!merge_monomials(ma, mb, merged, inversions)) continue;
        Scalar c = ca * cb;
        if (inversions & 1) c = -c;
        out.add_term(merged, c);
      }
    return out;
  }

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  // Merges two strictly increasing lists; false if they share a generator.
  // `inversions` counts pairs (x in a, y in b) with x > y.
  static bool merge_monomials(const Monomial& a, const Monomial& b, Monomial& out,
                              int& inversions) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) {
        out.push_back(a[i++]);
      } else {
        inversions += static_cast<int>(a.size() - i);
        out.push_back(b[j++]);
      }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return true;
  }

  TermMap terms_;
};

// Berezin integral in the single generator g: kills terms free of a_g, and for
// the rest anticommutes a_g to the rightmost slot and removes it.
inline GrassmannElement berezin(const GrassmannElement& x, GeneratorId g) {
  GrassmannElement out;
  for (const auto& [mono, c] : x.terms()) {
    const auto it = std::lower_bound(mono.begin(), mono.end(), g);
    if (it == mono.end() || *it != g) continue;
    const std::size_t pos = static_cast<std::size_t>(it - mono.begin());
    Monomial rest;
    rest.reserve(mono.size() - 1);
    rest.insert(rest.end(), mono.begin(), it);
    rest.insert(rest.end(), it + 1, mono.end());
    const std::size_t shifts = mono.size() - 1 - pos;
    out.add_term(std::move(rest), (shifts & 1) ? -c : c);
  }
  return out;
}

// Iterated Berezin integral; generators are applied left to right, so the
// first listed generator is the innermost integration.
inline GrassmannElement berezin_multi(GrassmannElement x, const std::vector<GeneratorId>& gens) {
  for (const GeneratorId g : gens) x = berezin(x, g);
  return x;
}

// Simultaneous generator substitution a_g := a_{map(g)} (identity off the
// map's domain).  Colliding images annihilate the affected terms.
inline GrassmannElement substitute_generators(const GrassmannElement& x,
                                              const std::map<GeneratorId, GeneratorId>& map) {
  GrassmannElement out;
  for (const auto& [mono, c] : x.terms()) {
    Monomial img(mono);
    for (GeneratorId& g : img) {
      auto it = map.find(g);
      if (it != map.end()) g = it->second;
    }
    // Insertion sort, counting the swaps that reorder the image list.
    int inversions = 0;
    bool dead = false;
    for (std::size_t i = 1; i < img.size() && !dead; ++i) {
      GeneratorId v = img[i];
      std::size_t j = i;
      while (j > 0 && img[j - 1] > v) {
        img[j] = img[j - 1];
        --j;
        ++inversions;
      }
      img[j] = v;
      if ((j > 0 && img[j - 1] == v) || (j + 1 < img.size() && img[j + 1] == v)) dead = true;
    }
    if (dead) continue;
    out.add_term(std::move(img), (inversions & 1) ? -c : c);
  }
  return out;
}

// a_from := a_to; terms containing both generators vanish.
inline GrassmannElement identify_generators(const GrassmannElement& x, GeneratorId from,
                                            GeneratorId to) {
  return substitute_generators(x, {{from, to}});
}

inline bool eq_up_to_sign(const GrassmannElement& a, const GrassmannElement& b) {
  return a == b || a == -b;
}

// Canonical text form: "0", or terms "c" / "c*a[g1]a[g2]..." joined by " + ",
// in graded-lexicographic order, with exact rational coefficients.
inline std::string to_string(const GrassmannElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (!mono.empty()) {
      out += "*";
      for (GeneratorId g : mono) out += "a[" + std::to_string(g) + "]";
    }
  }
  return out;
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace detail

// Parses the text form produced by to_string.  Accepts unsorted generator
// lists (signs are normalized by the algebra) and an optional coefficient.
inline GrassmannElement parse_grassmann(std::string_view s) {
  GrassmannElement out;
  std::size_t i = 0;
  detail::skip_ws(s, i);
  if (i == s.size()) throw input_error("empty element literal");
  bool first = true;
  while (i < s.size()) {
    if (!first) {
      if (s[i] != '+') throw input_error("expected '+' between terms");
      ++i;
      detail::skip_ws(s, i);
    }
    first = false;
    // Coefficient: signed rational literal, defaulting to 1 (or -1 after '-').
    Scalar coeff(1);
    bool have_coeff = false;
    if (i < s.size() && (s[i] == '-' || std::isdigit(static_cast<unsigned char>(s[i])))) {
      std::size_t j = i;
      if (s[j] == '-') ++j;
      std::size_t digits = j;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      if (j == digits) {
        if (s[i] == '-') {
          coeff = Scalar(-1);
          i = digits;
          detail::skip_ws(s, i);
        } else {
          throw input_error("dangling sign in element literal");
        }
      } else {
        coeff = parse_scalar(s.substr(i, j - i));
        i = j;
        have_coeff = true;
        detail::skip_ws(s, i);
      }
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) throw input_error("'*' without coefficient");
      ++i;
      detail::skip_ws(s, i);
    }
    // Generator factors.
    GrassmannElement term = GrassmannElement::scalar(coeff);
    bool have_gen = false;
    while (i < s.size() && s[i] == 'a') {
      ++i;
      if (i >= s.size() || s[i] != '[') throw input_error("expected '[' after generator");
      ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] != ']') ++j;
      if (j == s.size()) throw input_error("unterminated generator index");
      const std::string idx(s.substr(i, j - i));
      try {
        term = term * GrassmannElement::generator(static_cast<GeneratorId>(std::stol(idx)));
      } catch (const std::exception&) {
        throw input_error("malformed generator index: " + idx);
      }
      i = j + 1;
      detail::skip_ws(s, i);
      have_gen = true;
    }
    if (!have_coeff && !have_gen) throw input_error("malformed term in element literal");
    out += term;
    detail::skip_ws(s, i);
  }
  return out;
}

// JSON form: a list of terms {"edges": [g1, g2, ...], "coeff": "p/q"} in
// canonical order.  Generator ids are edge ids in every manifold context.
inline nlohmann::json to_json(const GrassmannElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, c] : x.terms()) {
    nlohmann::json t;
    t["edges"] = mono;
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

inline GrassmannElement grassmann_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw input_error("element JSON must be an array of terms");
  GrassmannElement out;
  for (const auto& t : j) {
    if (!t.contains("edges") || !t.contains("coeff"))
      throw input_error("element term needs 'edges' and 'coeff'");
    GrassmannElement term = GrassmannElement::scalar(parse_scalar(t["coeff"].get<std::string>()));
    for (const auto& g : t["edges"])
      term = term * GrassmannElement::generator(g.get<GeneratorId>());
    out += term;
  }
  return out;
}

}  // namespace tqft
