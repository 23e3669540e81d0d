// Crystallographic root systems: construction of the classical and
// exceptional families in their rational realizations, coroots, simple
// systems, exponents, the coroot lattice, and sub-root systems cut out by a
// subspace. Positive roots are indexed in ascending lexicographic order of
// their ambient coordinates; that ordering is part of the CLI contract.
#pragma once

#include "coxlen/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coxlen {

enum class Family { A, B, C, D, E, F, G };

struct ComponentSpec {
  Family family;
  int rank;
};

inline char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

inline std::optional<Family> family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

// Grammar: spec := component ('x' component)*, component := family rank,
// e.g. "A3", "B2", "A1xA2". Errors carry the offending position.
inline std::vector<ComponentSpec> parse_root_spec(const std::string& s) {
  std::vector<ComponentSpec> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error("root system spec '" + s + "': " + what + " at position " +
                std::to_string(pos));
  };
  while (true) {
    if (pos >= s.size()) fail("expected family letter");
    auto fam = family_from_char(s[pos]);
    if (!fam) fail(std::string("unknown family '") + s[pos] + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) fail("missing rank");
    int rank = std::stoi(s.substr(start, pos - start));
    out.push_back({*fam, rank});
    if (pos == s.size()) break;
    if (s[pos] != 'x') fail("expected 'x'");
    ++pos;
  }
  return out;
}

inline std::string spec_to_string(const std::vector<ComponentSpec>& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) s += 'x';
    s += family_char(spec[i].family);
    s += std::to_string(spec[i].rank);
  }
  return s;
}

inline Vec coroot_of(const Vec& alpha) {
  Rat n = inner(alpha, alpha);
  if (n == 0) throw Error("coroot of the zero vector");
  return scale(Rat(2) / n, alpha);
}

// Matrix of x -> x - <x,alpha> alpha^v, the orthogonal reflection fixing the
// hyperplane orthogonal to alpha.
inline Mat reflection_matrix_for(const Vec& alpha) {
  Vec av = coroot_of(alpha);
  std::size_t d = alpha.size();
  Mat m = Mat::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) -= av[i] * alpha[j];
  return m;
}

namespace detail {

inline void check_rank(Family f, int rank) {
  auto bad = [&](const std::string& why) {
    throw Error("root system " + std::string(1, family_char(f)) +
                std::to_string(rank) + ": " + why);
  };
  if (rank < 1) bad("rank must be positive");
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
      if (rank > 8) bad("rank above 8 is not supported");
      break;
    case Family::D:
      if (rank < 2) bad("family D requires rank at least 2");
      if (rank > 8) bad("rank above 8 is not supported");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) bad("family E exists for ranks 6, 7, 8");
      break;
    case Family::F:
      if (rank != 4) bad("family F exists for rank 4 only");
      break;
    case Family::G:
      if (rank != 2) bad("family G exists for rank 2 only");
      break;
  }
}

inline Vec unit(std::size_t dim, std::size_t i) {
  Vec v = zero_vec(dim);
  v[i] = 1;
  return v;
}

inline Vec unit_diff(std::size_t dim, std::size_t i, std::size_t j) {
  Vec v = zero_vec(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

inline std::pair<std::size_t, std::vector<Vec>> simple_roots_of(Family f,
                                                                int rank) {
  std::size_t n = static_cast<std::size_t>(rank);
  std::vector<Vec> s;
  switch (f) {
    case Family::A: {
      for (std::size_t i = 0; i < n; ++i) s.push_back(unit_diff(n + 1, i, i + 1));
      return {n + 1, s};
    }
    case Family::B: {
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(unit_diff(n, i, i + 1));
      s.push_back(unit(n, n - 1));
      return {n, s};
    }
    case Family::C: {
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(unit_diff(n, i, i + 1));
      s.push_back(scale(Rat(2), unit(n, n - 1)));
      return {n, s};
    }
    case Family::D: {
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(unit_diff(n, i, i + 1));
      Vec last = zero_vec(n);
      last[n - 2] = 1;
      last[n - 1] = 1;
      s.push_back(last);
      return {n, s};
    }
    case Family::E: {
      Vec a1 = zero_vec(8);
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (std::size_t i = 1; i < 7; ++i) a1[i] = Rat(-1, 2);
      Vec a2 = zero_vec(8);
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a1);
      s.push_back(a2);
      for (std::size_t i = 0; i + 2 < n; ++i) s.push_back(unit_diff(8, i + 1, i));
      return {8, s};
    }
    case Family::F: {
      s.push_back(unit_diff(4, 1, 2));
      s.push_back(unit_diff(4, 2, 3));
      s.push_back(unit(4, 3));
      Vec a4 = {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)};
      s.push_back(a4);
      return {4, s};
    }
    case Family::G: {
      s.push_back(Vec{Rat(1), Rat(-1), Rat(0)});
      s.push_back(Vec{Rat(-2), Rat(1), Rat(1)});
      return {3, s};
    }
  }
  throw Error("unreachable family");
}

inline std::vector<int> exponents_of(Family f, int rank) {
  std::vector<int> e;
  switch (f) {
    case Family::A:
      for (int i = 1; i <= rank; ++i) e.push_back(i);
      return e;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= rank; ++i) e.push_back(2 * i - 1);
      return e;
    case Family::D:
      for (int i = 1; i + 1 <= rank; ++i) e.push_back(2 * i - 1);
      e.push_back(rank - 1);
      return e;
    case Family::E:
      if (rank == 6) return {1, 4, 5, 7, 8, 11};
      if (rank == 7) return {1, 5, 7, 9, 11, 13, 17};
      return {1, 7, 11, 13, 17, 19, 23, 29};
    case Family::F:
      return {1, 5, 7, 11};
    case Family::G:
      return {1, 5};
  }
  throw Error("unreachable family");
}

inline std::size_t root_count_of(Family f, int rank) {
  std::size_t n = static_cast<std::size_t>(rank);
  switch (f) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  throw Error("unreachable family");
}

// Closure of the simple system under its own reflections; for a valid table
// this is exactly the W-orbit of the simple roots, i.e. all of the roots.
inline std::set<Vec> generate_roots(const std::vector<Vec>& simples,
                                    std::size_t expected) {
  std::set<Vec> roots(simples.begin(), simples.end());
  std::vector<Mat> refl;
  for (const Vec& a : simples) refl.push_back(reflection_matrix_for(a));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> snapshot(roots.begin(), roots.end());
    for (const Vec& r : snapshot)
      for (const Mat& m : refl)
        if (roots.insert(mat_vec(m, r)).second) grew = true;
    if (roots.size() > expected)
      throw Error("root generation overflow: table inconsistent");
  }
  if (roots.size() != expected)
    throw Error("root generation produced " + std::to_string(roots.size()) +
                " roots, expected " + std::to_string(expected));
  return roots;
}

}  // namespace detail

// A sub-root system Phi' = Phi intersected with a subspace, with a simple
// system chosen by a deterministic separating functional.
struct SubRootSystem {
  std::vector<Vec> roots;           // both signs, ascending lex
  std::vector<Vec> positive_roots;  // ascending lex
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
};

class RootSystem {
 public:
  static RootSystem build(const std::string& spec_string) {
    return build(parse_root_spec(spec_string));
  }

  static RootSystem build(const std::vector<ComponentSpec>& spec) {
    if (spec.empty()) throw Error("empty root system spec");
    if (spec.size() == 1) return build_irreducible(spec[0]);
    RootSystem rs;
    rs.spec_ = spec;
    for (const ComponentSpec& c : spec)
      rs.components_.push_back(build_irreducible(c));
    rs.ambient_dim_ = 0;
    rs.rank_ = 0;
    for (const RootSystem& c : rs.components_) {
      rs.component_ambient_offset_.push_back(rs.ambient_dim_);
      rs.component_rank_offset_.push_back(rs.rank_);
      rs.ambient_dim_ += c.ambient_dim_;
      rs.rank_ += c.rank_;
    }
    std::vector<Vec> positives;
    for (std::size_t j = 0; j < rs.components_.size(); ++j) {
      const RootSystem& c = rs.components_[j];
      int off = rs.component_ambient_offset_[j];
      for (const Vec& a : c.simple_roots_) rs.simple_roots_.push_back(rs.embed(a, off));
      for (const Vec& a : c.positive_roots_) positives.push_back(rs.embed(a, off));
      for (int e : c.exponents_) rs.exponents_.push_back(e);
    }
    std::sort(rs.exponents_.begin(), rs.exponents_.end());
    rs.finalize(std::move(positives));
    return rs;
  }

  const std::vector<ComponentSpec>& spec() const { return spec_; }
  std::string name() const { return spec_to_string(spec_); }
  int ambient_dim() const { return ambient_dim_; }
  int rank() const { return rank_; }

  const std::vector<Vec>& simple_roots() const { return simple_roots_; }
  const std::vector<Vec>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Vec>& positive_roots() const { return positive_roots_; }
  const std::vector<Vec>& positive_coroots() const { return positive_coroots_; }
  const std::vector<Vec>& roots() const { return roots_; }
  const std::vector<Vec>& coroots() const { return coroots_; }
  const std::vector<int>& exponents() const { return exponents_; }
  // Position of each simple root within the positive-root ordering.
  const std::vector<int>& simple_positive_indices() const {
    return simple_positive_indices_;
  }

  bool contains_root(const Vec& v) const { return root_set_.count(v) > 0; }

  const Mat& reflection_matrix(int positive_index) const {
    return reflection_mats_.at(static_cast<std::size_t>(positive_index));
  }

  std::optional<int> positive_index_of_matrix(const Mat& m) const {
    auto it = reflection_by_matrix_.find(m);
    if (it == reflection_by_matrix_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> positive_index_of_root(const Vec& alpha) const {
    auto it = positive_by_vector_.find(alpha);
    if (it == positive_by_vector_.end()) return std::nullopt;
    return it->second;
  }

  Vec lattice_to_ambient(const std::vector<long long>& coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(rank_))
      throw Error("lattice vector has " + std::to_string(coeffs.size()) +
                  " coordinates, expected " + std::to_string(rank_));
    Vec v = zero_vec(static_cast<std::size_t>(ambient_dim_));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      v = add(v, scale(Rat(coeffs[i]), simple_coroots_[i]));
    return v;
  }

  std::optional<std::vector<long long>> try_ambient_to_lattice(const Vec& v) const {
    Vec coords = mat_vec(lattice_pinv_, v);
    Vec back = mat_vec(simple_coroot_cols_, coords);
    if (back != v) return std::nullopt;
    std::vector<long long> out;
    out.reserve(coords.size());
    for (const Rat& c : coords) {
      if (!is_integer(c)) return std::nullopt;
      out.push_back(rat_to_long(c));
    }
    return out;
  }

  std::vector<long long> ambient_to_lattice(const Vec& v) const {
    auto r = try_ambient_to_lattice(v);
    if (!r) throw Error("vector is not in the coroot lattice");
    return *r;
  }

  std::size_t component_count() const {
    return components_.empty() ? 1 : components_.size();
  }
  const RootSystem& component(std::size_t j) const {
    if (components_.empty()) {
      if (j != 0) throw Error("component index out of range");
      return *this;
    }
    return components_.at(j);
  }
  int component_ambient_offset(std::size_t j) const {
    return components_.empty() ? 0 : component_ambient_offset_.at(j);
  }
  int component_rank_offset(std::size_t j) const {
    return components_.empty() ? 0 : component_rank_offset_.at(j);
  }
  int component_of_positive(int positive_index) const {
    return component_of_positive_.at(static_cast<std::size_t>(positive_index));
  }
  // Maps a component's local positive-root index to the product's index.
  const std::vector<int>& component_positive_map(std::size_t j) const {
    return component_positive_map_.at(j);
  }

 private:
  RootSystem() = default;

  Vec embed(const Vec& v, int offset) const {
    Vec out = zero_vec(static_cast<std::size_t>(ambient_dim_));
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
  }

  static RootSystem build_irreducible(const ComponentSpec& c) {
    detail::check_rank(c.family, c.rank);
    RootSystem rs;
    rs.spec_ = {c};
    auto [dim, simples] = detail::simple_roots_of(c.family, c.rank);
    rs.ambient_dim_ = static_cast<int>(dim);
    rs.rank_ = c.rank;
    rs.simple_roots_ = simples;
    rs.exponents_ = detail::exponents_of(c.family, c.rank);
    std::sort(rs.exponents_.begin(), rs.exponents_.end());
    std::set<Vec> all = detail::generate_roots(
        simples, detail::root_count_of(c.family, c.rank));

    Mat simple_cols = Mat::from_cols(simples);
    std::vector<Vec> positives;
    for (const Vec& r : all) {
      auto coeffs = solve(simple_cols, r);
      if (!coeffs) throw Error("root outside the simple-root span");
      bool nonneg = true, nonpos = true;
      for (const Rat& x : *coeffs) {
        if (!is_integer(x)) throw Error("non-integral simple-root coordinates");
        if (x > 0) nonpos = false;
        if (x < 0) nonneg = false;
      }
      if (nonneg == nonpos) throw Error("root with mixed-sign coordinates");
      if (nonneg) positives.push_back(r);
    }
    rs.finalize(std::move(positives));
    return rs;
  }

  void finalize(std::vector<Vec> positives) {
    std::sort(positives.begin(), positives.end());
    positive_roots_ = std::move(positives);
    for (const Vec& a : positive_roots_) positive_coroots_.push_back(coroot_of(a));
    for (const Vec& a : simple_roots_) simple_coroots_.push_back(coroot_of(a));
    roots_ = positive_roots_;
    coroots_ = positive_coroots_;
    for (std::size_t i = 0; i < positive_roots_.size(); ++i) {
      roots_.push_back(scale(Rat(-1), positive_roots_[i]));
      coroots_.push_back(scale(Rat(-1), positive_coroots_[i]));
    }
    root_set_ = std::set<Vec>(roots_.begin(), roots_.end());
    for (std::size_t i = 0; i < positive_roots_.size(); ++i)
      positive_by_vector_[positive_roots_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < positive_roots_.size(); ++i) {
      reflection_mats_.push_back(reflection_matrix_for(positive_roots_[i]));
      reflection_by_matrix_[reflection_mats_.back()] = static_cast<int>(i);
    }
    for (const Vec& a : simple_roots_) {
      auto idx = positive_index_of_root(a);
      if (!idx) throw Error("simple root missing from positive roots");
      simple_positive_indices_.push_back(*idx);
    }
    simple_coroot_cols_ = Mat::from_cols(simple_coroots_);
    lattice_pinv_ = pseudo_inverse(simple_coroot_cols_);

    component_of_positive_.assign(positive_roots_.size(), 0);
    if (!components_.empty()) {
      component_positive_map_.assign(components_.size(), {});
      for (std::size_t j = 0; j < components_.size(); ++j) {
        const RootSystem& c = components_[j];
        int off = component_ambient_offset_[j];
        for (const Vec& a : c.positive_roots_) {
          auto idx = positive_index_of_root(embed(a, off));
          if (!idx) throw Error("component root missing from product");
          component_positive_map_[j].push_back(*idx);
          component_of_positive_[static_cast<std::size_t>(*idx)] =
              static_cast<int>(j);
        }
      }
    }
  }

  std::vector<ComponentSpec> spec_;
  int ambient_dim_ = 0;
  int rank_ = 0;
  std::vector<Vec> simple_roots_, simple_coroots_;
  std::vector<Vec> positive_roots_, positive_coroots_;
  std::vector<Vec> roots_, coroots_;
  std::vector<int> exponents_;
  std::set<Vec> root_set_;
  std::map<Vec, int> positive_by_vector_;
  std::vector<Mat> reflection_mats_;
  std::map<Mat, int> reflection_by_matrix_;
  std::vector<int> simple_positive_indices_;
  Mat simple_coroot_cols_, lattice_pinv_;
  std::vector<RootSystem> components_;
  std::vector<int> component_ambient_offset_, component_rank_offset_;
  std::vector<int> component_of_positive_;
  std::vector<std::vector<int>> component_positive_map_;
};

namespace detail {

// Deterministic functional with nonzero, pairwise distinct values on the
// given roots: the lexicographically first small nonnegative integer vector,
// falling back to geometric weights (1, N, N^2, ...) which always separate
// a finite set eventually.
inline Vec separating_functional(const std::vector<Vec>& roots, std::size_t dim) {
  auto works = [&](const Vec& f) {
    std::set<Rat> seen;
    for (const Vec& r : roots) {
      Rat v = inner(f, r);
      if (v == 0) return false;
      if (!seen.insert(v).second) return false;
    }
    return true;
  };
  if (dim <= 5) {
    for (int m = 1; m <= 6; ++m) {
      std::vector<int> c(dim, 0);
      while (true) {
        bool has_max = false;
        for (int x : c)
          if (x == m) has_max = true;
        if (has_max) {
          Vec f(dim);
          for (std::size_t i = 0; i < dim; ++i) f[i] = c[i];
          if (works(f)) return f;
        }
        std::size_t i = dim;
        while (i > 0) {
          --i;
          if (c[i] < m) {
            ++c[i];
            for (std::size_t j = i + 1; j < dim; ++j) c[j] = 0;
            break;
          }
          if (i == 0) goto next_m;
        }
      }
    next_m:;
    }
  }
  for (Int n = 2;; ++n) {
    Vec f(dim);
    Rat w(1);
    for (std::size_t i = dim; i-- > 0;) {
      f[i] = w;
      w *= n;
    }
    if (works(f)) return f;
  }
}

}  // namespace detail

inline SubRootSystem sub_root_system(const RootSystem& phi,
                                     const std::vector<Vec>& subspace_basis) {
  for (const Vec& b : subspace_basis)
    if (!in_span(phi.simple_roots(), b))
      throw Error("subspace basis vector outside the root span");
  SubRootSystem out;
  for (const Vec& r : phi.roots())
    if (in_span(subspace_basis, r)) out.roots.push_back(r);
  std::sort(out.roots.begin(), out.roots.end());
  if (out.roots.empty()) return out;

  if (rank_of_vectors(out.roots) == static_cast<std::size_t>(phi.rank())) {
    out.positive_roots = phi.positive_roots();
    out.simple_roots = phi.simple_roots();
    out.simple_coroots = phi.simple_coroots();
    return out;
  }

  Vec f = detail::separating_functional(
      out.roots, static_cast<std::size_t>(phi.ambient_dim()));
  for (const Vec& r : out.roots)
    if (inner(f, r) > 0) out.positive_roots.push_back(r);
  std::set<Vec> pos(out.positive_roots.begin(), out.positive_roots.end());
  for (const Vec& a : out.positive_roots) {
    bool decomposable = false;
    for (const Vec& b : out.positive_roots) {
      if (b == a) continue;
      if (pos.count(sub(a, b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      out.simple_roots.push_back(a);
      out.simple_coroots.push_back(coroot_of(a));
    }
  }
  return out;
}

}  // namespace coxlen
