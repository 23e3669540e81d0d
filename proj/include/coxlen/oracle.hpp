// Independent verification machinery: finite group enumeration with Cayley
// graph distances, brute-force windowed searches for affine reflection
// factorizations and origin-moving words, length distribution polynomials,
// and small exhaustive experiments.
#pragma once

#include "coxlen/length.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace coxlen {

// Linear parts of every element of the finite reflection group, found by
// closing the simple reflections under multiplication. Index 0 is the
// identity.
struct FiniteGroupTable {
  std::vector<Mat> elements;
  std::map<Mat, int> index;
};

inline FiniteGroupTable enumerate_w0(const RootSystem& rs) {
  FiniteGroupTable t;
  std::size_t d = static_cast<std::size_t>(rs.ambient_dim());
  Mat id = Mat::identity(d);
  t.elements.push_back(id);
  t.index[id] = 0;
  std::vector<Mat> gens;
  for (int p : rs.simple_positive_indices())
    gens.push_back(rs.reflection_matrix(p));
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const Mat& g : gens) {
      Mat next = mat_mul(g, t.elements[static_cast<std::size_t>(cur)]);
      if (t.index.count(next)) continue;
      int id_next = static_cast<int>(t.elements.size());
      t.index[next] = id_next;
      t.elements.push_back(next);
      queue.push_back(id_next);
    }
  }
  return t;
}

// Word length over the full reflection alphabet, by breadth-first search.
inline std::vector<int> cayley_reflection_distances(const RootSystem& rs,
                                                    const FiniteGroupTable& t) {
  std::vector<Mat> refl;
  for (std::size_t p = 0; p < rs.positive_roots().size(); ++p)
    refl.push_back(rs.reflection_matrix(static_cast<int>(p)));
  std::vector<int> dist(t.elements.size(), -1);
  dist[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const Mat& r : refl) {
      Mat next = mat_mul(r, t.elements[static_cast<std::size_t>(cur)]);
      int id_next = t.index.at(next);
      if (dist[static_cast<std::size_t>(id_next)] >= 0) continue;
      dist[static_cast<std::size_t>(id_next)] =
          dist[static_cast<std::size_t>(cur)] + 1;
      queue.push_back(id_next);
    }
  }
  return dist;
}

// coeff[i] = number of elements of length i (equivalently, the coefficient
// of x^i).
using LengthPolynomial = std::vector<long long>;

inline LengthPolynomial poly_mul(const LengthPolynomial& a,
                                 const LengthPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  LengthPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// prod_i (1 + e_i x) over the exponents; the reflection length distribution
// of the finite group.
inline LengthPolynomial solomon_polynomial(const RootSystem& rs) {
  LengthPolynomial p{1};
  for (int e : rs.exponents()) p = poly_mul(p, LengthPolynomial{1, e});
  return p;
}

// Cheap sound lower bound used for search pruning: the dimension of the
// space spanned by the moved directions and the translation part, refined to
// 2 when that span is a line parallel to no coroot, then lifted to match the
// parity of the moved-space dimension.
inline int generic_lower(const RootSystem& rs, const AffineElement& e) {
  std::size_t d = e.m.rows();
  Mat diff = mat_sub(e.m, Mat::identity(d));
  detail::EchelonBasis span;
  for (std::size_t j = 0; j < d; ++j) span.add(diff.col(j));
  int carter = span.dim();
  if (!is_zero(e.tau)) span.add(e.tau);
  int t = span.dim();
  if (t == 0) return 0;
  int lower = t;
  if (t == 1 && !parallel_to_positive_coroot(rs, span.rows[0])) lower = 2;
  if ((lower - carter) % 2 != 0) ++lower;
  return lower;
}

namespace detail {

inline std::vector<std::pair<AffineReflection, AffineElement>> oracle_alphabet(
    const RootSystem& rs, int window) {
  std::vector<std::pair<AffineReflection, AffineElement>> letters;
  for (std::size_t p = 0; p < rs.positive_roots().size(); ++p)
    for (long long i = -window; i <= window; ++i) {
      AffineReflection r{static_cast<int>(p), i};
      letters.push_back({r, reflection_to_element(rs, r)});
    }
  return letters;
}

inline bool oracle_dfs(const RootSystem& rs,
                       const std::vector<std::pair<AffineReflection, AffineElement>>& letters,
                       int window, const AffineElement& residual, int remaining,
                       ReflectionWord& trail) {
  if (remaining == 0)
    return is_zero(residual.tau) && residual.m == Mat::identity(residual.m.rows());
  if (generic_lower(rs, residual) > remaining) return false;
  if (remaining == 1) {
    auto r = is_reflection(rs, residual);
    if (!r) return false;
    long long off = r->offset < 0 ? -r->offset : r->offset;
    if (off > window) return false;
    trail.push_back(*r);
    return true;
  }
  for (const auto& [letter, elem] : letters) {
    if (!trail.empty() && trail.back() == letter) continue;
    trail.push_back(letter);
    if (oracle_dfs(rs, letters, window, compose(elem, residual), remaining - 1,
                   trail))
      return true;
    trail.pop_back();
  }
  return false;
}

}  // namespace detail

// Iterative-deepening search for a shortest factorization of w into affine
// reflections with offsets in [-window, window]. Depths below the found
// length are refuted either by the elementary span/parity bound or by
// exhausting the alphabet, so a hit at depth d proves no windowed word is
// shorter. The result is marked exact (oracle-certified) when d meets the
// theoretical lower bound.
inline LengthReport oracle_affine_length(const RootSystem& rs,
                                         const AffineElement& w, int window,
                                         int max_len) {
  LengthReport theory = length_bounds(rs, w);
  for (int d = 0; d <= max_len; ++d) {
    ReflectionWord trail;
    auto letters = detail::oracle_alphabet(rs, window);
    if (!detail::oracle_dfs(rs, letters, window, w, d, trail)) continue;
    if (evaluate_word(rs, trail) != w)
      throw Error("internal: search trail does not evaluate to the element");
    if (d == theory.lower)
      return {d, d, true, Certificate::oracle_certified, trail};
    return {theory.lower, d, theory.lower == d, Certificate::bounds_only,
            trail};
  }
  return {theory.lower, std::nullopt, false, Certificate::bounds_only,
          std::nullopt};
}

namespace detail {

inline void all_minimal_dfs(const RootSystem& rs,
                            const std::vector<std::pair<AffineReflection, AffineElement>>& letters,
                            int window, const AffineElement& residual,
                            int remaining, ReflectionWord& trail,
                            std::vector<ReflectionWord>& out) {
  if (remaining == 0) {
    if (is_zero(residual.tau) && residual.m == Mat::identity(residual.m.rows()))
      out.push_back(trail);
    return;
  }
  if (generic_lower(rs, residual) > remaining) return;
  if (remaining == 1) {
    auto r = is_reflection(rs, residual);
    if (!r) return;
    long long off = r->offset < 0 ? -r->offset : r->offset;
    if (off > window) return;
    trail.push_back(*r);
    out.push_back(trail);
    trail.pop_back();
    return;
  }
  for (const auto& [letter, elem] : letters) {
    if (!trail.empty() && trail.back() == letter) continue;
    trail.push_back(letter);
    all_minimal_dfs(rs, letters, window, compose(elem, residual),
                    remaining - 1, trail, out);
    trail.pop_back();
  }
}

}  // namespace detail

// Every factorization of w of exactly the given length over the windowed
// alphabet, in lexicographic letter order. A minimal word never repeats a
// letter in adjacent positions, so the adjacent-duplicate skip loses nothing
// when length is the reflection length of w.
inline std::vector<ReflectionWord> oracle_all_minimal(const RootSystem& rs,
                                                      const AffineElement& w,
                                                      int window, int length) {
  std::vector<ReflectionWord> out;
  ReflectionWord trail;
  auto letters = detail::oracle_alphabet(rs, window);
  detail::all_minimal_dfs(rs, letters, window, w, length, trail, out);
  return out;
}

namespace detail {

inline bool moving_dfs(const RootSystem& rs, const Vec& x, const Vec& target,
                       int window, int remaining) {
  if (x == target) return true;
  if (remaining <= 0) return false;
  if (remaining == 1) {
    Vec gap = sub(target, x);
    for (std::size_t p = 0; p < rs.positive_roots().size(); ++p) {
      const Vec& alpha = rs.positive_roots()[p];
      Vec cov = coroot_of(alpha);
      std::size_t nz = 0;
      while (nz < cov.size() && cov[nz] == 0) ++nz;
      Rat c = gap[nz] / cov[nz];
      if (gap != scale(c, cov)) continue;
      Rat i = c + inner(x, alpha);
      if (!is_integer(i)) continue;
      Int off = rat_to_int(i);
      if (off < 0) off = -off;
      if (off <= window) return true;
    }
    return false;
  }
  for (std::size_t p = 0; p < rs.positive_roots().size(); ++p) {
    const Vec& alpha = rs.positive_roots()[p];
    for (long long i = -window; i <= window; ++i) {
      Vec y = apply_reflection(rs, {static_cast<int>(p), i}, x);
      if (y == x) continue;
      if (moving_dfs(rs, y, target, window, remaining - 1)) return true;
    }
  }
  return false;
}

}  // namespace detail

// Minimum number of affine reflections (offsets within the window) whose
// composite maps the origin to lambda; nullopt if none found up to max_len.
inline std::optional<int> oracle_min_moving_length(
    const RootSystem& rs, const std::vector<long long>& lambda, int window,
    int max_len) {
  Vec target = rs.lattice_to_ambient(lambda);
  Vec origin = zero_vec(static_cast<std::size_t>(rs.ambient_dim()));
  for (int d = 0; d <= max_len; ++d)
    if (detail::moving_dfs(rs, origin, target, window, d)) return d;
  return std::nullopt;
}

// Distribution of the reflection length over the coset of the translation by
// lambda: coeff[m] counts linear parts w with length(t_lambda w) = m. Every
// length is certified exact, retrying with a widened window when a search
// cannot close the gap between the bounds.
inline LengthPolynomial f_lambda_polynomial(const RootSystem& rs,
                                            const std::vector<long long>& lambda,
                                            int window, int window_retries = 4) {
  FiniteGroupTable table = enumerate_w0(rs);
  Vec tau = rs.lattice_to_ambient(lambda);
  int max_len = real_dimension(rs, lambda).k + rs.rank();
  LengthPolynomial poly;
  for (const Mat& m : table.elements) {
    AffineElement e{tau, m};
    LengthReport rep = length_bounds(rs, e);
    std::optional<int> len;
    if (rep.exact) {
      len = rep.lower;
    } else {
      for (int extra = 0; extra <= window_retries && !len; ++extra) {
        LengthReport found = oracle_affine_length(rs, e, window + extra, max_len);
        if (found.exact) len = *found.upper;
      }
    }
    if (!len)
      throw Error("length certification failed; increase the search window");
    if (static_cast<std::size_t>(*len) >= poly.size())
      poly.resize(static_cast<std::size_t>(*len) + 1, 0);
    ++poly[static_cast<std::size_t>(*len)];
  }
  return poly;
}

struct CensusRow {
  std::vector<long long> lambda;
  int k = 0;
  int lower = 0;
  std::optional<int> upper;
  Certificate certificate = Certificate::bounds_only;
  std::optional<int> oracle_length;
};

// Sweep of translations over the lattice box [-radius, radius]^rank:
// dimension, certified length bounds, and optionally an independent
// brute-force confirmation of each length.
inline std::vector<CensusRow> translation_census(const RootSystem& rs,
                                                 long long radius,
                                                 bool with_oracle = false,
                                                 int window = 4) {
  std::vector<CensusRow> rows;
  std::vector<long long> lambda(static_cast<std::size_t>(rs.rank()), -radius);
  for (;;) {
    CensusRow row;
    row.lambda = lambda;
    row.k = real_dimension(rs, lambda).k;
    LengthReport rep = length_bounds(rs, translation_element(rs, lambda));
    row.lower = rep.lower;
    row.upper = rep.upper;
    row.certificate = rep.certificate;
    if (with_oracle) {
      int cap = rep.upper ? *rep.upper : 2 * rs.rank();
      LengthReport found =
          oracle_affine_length(rs, translation_element(rs, lambda), window, cap);
      if (!found.upper)
        throw Error("census oracle found no factorization; widen the window");
      row.oracle_length = *found.upper;
    }
    rows.push_back(row);
    std::size_t j = 0;
    while (j < lambda.size() && lambda[j] == radius) lambda[j++] = -radius;
    if (j == lambda.size()) break;
    ++lambda[j];
  }
  return rows;
}

struct CrossingReport {
  long long total = 0;
  long long with_both_crossings = 0;
  long long coverage = 0;
};

// All shortest reflection factorizations of the rotation (in the rank-3
// simply-laced group on four coordinates) sending e1->e2->e3->e4->e1: how
// many there are, how many use both "crossing" reflections at once, and how
// many distinct reflections appear across all of them.
inline CrossingReport a3_crossing_obstruction() {
  RootSystem rs = RootSystem::build("A3");
  auto idx = [&](const Vec& root) {
    auto p = rs.positive_index_of_root(root);
    if (!p) throw Error("internal: missing root in the rank-3 system");
    return *p;
  };
  Vec e1{Rat(1), Rat(0), Rat(0), Rat(0)};
  Vec e2{Rat(0), Rat(1), Rat(0), Rat(0)};
  Vec e3{Rat(0), Rat(0), Rat(1), Rat(0)};
  Vec e4{Rat(0), Rat(0), Rat(0), Rat(1)};
  int r12 = idx(sub(e1, e2)), r23 = idx(sub(e2, e3)), r34 = idx(sub(e3, e4));
  int r13 = idx(sub(e1, e3)), r24 = idx(sub(e2, e4));
  ReflectionWord cycle{{r12, 0}, {r23, 0}, {r34, 0}};
  AffineElement w = evaluate_word(rs, cycle);
  int len = spherical_length(rs, w);
  std::vector<ReflectionWord> words = oracle_all_minimal(rs, w, 0, len);
  CrossingReport report;
  report.total = static_cast<long long>(words.size());
  std::set<int> seen;
  for (const ReflectionWord& word : words) {
    bool has13 = false, has24 = false;
    for (const AffineReflection& r : word) {
      seen.insert(r.root_index);
      if (r.root_index == r13) has13 = true;
      if (r.root_index == r24) has24 = true;
    }
    if (has13 && has24) ++report.with_both_crossings;
  }
  report.coverage = static_cast<long long>(seen.size());
  return report;
}

}  // namespace coxlen
