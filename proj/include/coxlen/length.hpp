// Reflection length machinery: the codimension formula for spherical
// elements, real and integral translation dimension with explicit witnesses,
// translation factorizations, rewriting of factorizations by adjacent
// conjugation, and certified lower/upper bounds for arbitrary elements.
#pragma once

#include "coxlen/affine.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace coxlen {

enum class Certificate {
  spherical_carter,
  translation_2k,
  linearly_independent_roots,
  oracle_certified,
  bounds_only,
};

inline std::string certificate_name(Certificate c) {
  switch (c) {
    case Certificate::spherical_carter: return "spherical-carter";
    case Certificate::translation_2k: return "translation-2k";
    case Certificate::linearly_independent_roots:
      return "linearly-independent-roots";
    case Certificate::oracle_certified: return "oracle-certified";
    case Certificate::bounds_only: return "bounds-only";
  }
  return "?";
}

// Exact value or interval for a reflection length. upper is absent when a
// windowed search exhausted its alphabet without finding any factorization.
struct LengthReport {
  int lower = 0;
  std::optional<int> upper;
  bool exact = false;
  Certificate certificate = Certificate::bounds_only;
  std::optional<ReflectionWord> witness;
};

struct DimensionWitness {
  int k = 0;
  std::vector<Vec> coroots;
  std::vector<long long> coefficients;
};

struct RealDimensionWitness {
  int k = 0;
  std::vector<int> coroot_indices;
  std::vector<Vec> coroots;
  Vec coefficients;
};

namespace detail {

// Incremental exact row basis; supports span membership and extension.
struct EchelonBasis {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  Vec residual(Vec v) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v[pivots[i]] != 0) v = sub(v, scale(v[pivots[i]], rows[i]));
    return v;
  }

  bool contains(const Vec& v) const { return is_zero(residual(v)); }

  bool add(const Vec& v) {
    Vec r = residual(v);
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) return false;
    rows.push_back(scale(Rat(1) / r[p], r));
    pivots.push_back(p);
    return true;
  }

  int dim() const { return static_cast<int>(rows.size()); }
};

// First (in ascending index order) linearly independent k-subset of the
// positive coroots whose span contains every target; nullopt if none exists.
inline bool cover_dfs(const RootSystem& rs, const std::vector<Vec>& targets,
                      int k, std::size_t start, EchelonBasis& basis,
                      std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == k) {
    for (const Vec& t : targets)
      if (!basis.contains(t)) return false;
    return true;
  }
  std::size_t total = rs.positive_coroots().size();
  std::size_t need = static_cast<std::size_t>(k) - chosen.size();
  for (std::size_t i = start; i + need <= total; ++i) {
    EchelonBasis saved = basis;
    if (!basis.add(rs.positive_coroots()[i])) {
      basis = saved;
      continue;
    }
    chosen.push_back(static_cast<int>(i));
    if (cover_dfs(rs, targets, k, i + 1, basis, chosen)) return true;
    chosen.pop_back();
    basis = saved;
  }
  return false;
}

inline std::optional<std::vector<int>> coroot_cover_at(
    const RootSystem& rs, const std::vector<Vec>& targets, int k) {
  EchelonBasis basis;
  std::vector<int> chosen;
  if (cover_dfs(rs, targets, k, 0, basis, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace detail

// Codimension of the fixed space; exact reflection length within W0.
inline int spherical_length(const RootSystem& rs, const AffineElement& w) {
  (void)rs;
  if (!is_zero(w.tau))
    throw Error("spherical length requires a zero translation part");
  return static_cast<int>(rank(mat_sub(w.m, Mat::identity(w.m.rows()))));
}

// Greedy minimal factorization of a spherical element: repeatedly split off
// the first positive root lying in the moved space, which drops the fixed
// codimension by one each step.
inline ReflectionWord carter_factorization(const RootSystem& rs,
                                           AffineElement w) {
  if (!is_zero(w.tau))
    throw Error("factorization of a non-spherical element by spherical rule");
  std::size_t d = w.m.rows();
  ReflectionWord word;
  while (true) {
    Mat diff = mat_sub(w.m, Mat::identity(d));
    detail::EchelonBasis moved;
    for (std::size_t j = 0; j < d; ++j) moved.add(diff.col(j));
    int r = moved.dim();
    if (r == 0) break;
    bool advanced = false;
    for (std::size_t p = 0; p < rs.positive_roots().size(); ++p) {
      if (!moved.contains(rs.positive_roots()[p])) continue;
      Mat next = mat_mul(rs.reflection_matrix(static_cast<int>(p)), w.m);
      if (static_cast<int>(rank(mat_sub(next, Mat::identity(d)))) != r - 1)
        continue;
      word.push_back({static_cast<int>(p), 0});
      w.m = next;
      advanced = true;
      break;
    }
    if (!advanced)
      throw Error("internal: no root reflection shortens the element");
  }
  return word;
}

// Minimal number of positive coroots spanning a subspace that contains
// lambda, with the first witness in index order.
inline RealDimensionWitness real_dimension(const RootSystem& rs,
                                           const std::vector<long long>& lambda) {
  RealDimensionWitness out;
  Vec target = rs.lattice_to_ambient(lambda);
  if (is_zero(target)) return out;
  for (int k = 1; k <= rs.rank(); ++k) {
    auto chosen = detail::coroot_cover_at(rs, {target}, k);
    if (!chosen) continue;
    out.k = k;
    out.coroot_indices = *chosen;
    for (int i : *chosen)
      out.coroots.push_back(rs.positive_coroots()[static_cast<std::size_t>(i)]);
    out.coefficients = *in_span(out.coroots, target);
    return out;
  }
  throw Error("internal: lattice vector outside the coroot span");
}

struct MinimalSubspace {
  std::vector<int> coroot_indices;  // first witness subset spanning this space
  Mat basis_rref;                   // canonical row space form
};

// Every minimal coroot subspace containing lambda, deduplicated by span.
inline std::vector<MinimalSubspace> minimal_subspaces(
    const RootSystem& rs, const std::vector<long long>& lambda) {
  std::vector<MinimalSubspace> out;
  int k = real_dimension(rs, lambda).k;
  if (k == 0) return out;
  Vec target = rs.lattice_to_ambient(lambda);
  std::set<Mat> seen;
  std::vector<int> chosen;
  std::vector<Vec> vecs;
  auto rec = [&](auto&& self, std::size_t start, detail::EchelonBasis& basis) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      if (!basis.contains(target)) return;
      Mat m = Mat::from_rows(vecs);
      auto pivots = row_echelon(m);
      Mat key(pivots.size(), m.cols());
      for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) key(i, j) = m(i, j);
      if (seen.insert(key).second) out.push_back({chosen, key});
      return;
    }
    std::size_t total = rs.positive_coroots().size();
    std::size_t need = static_cast<std::size_t>(k) - chosen.size();
    for (std::size_t i = start; i + need <= total; ++i) {
      detail::EchelonBasis saved = basis;
      if (!basis.add(rs.positive_coroots()[i])) {
        basis = saved;
        continue;
      }
      chosen.push_back(static_cast<int>(i));
      vecs.push_back(rs.positive_coroots()[i]);
      self(self, i + 1, basis);
      chosen.pop_back();
      vecs.pop_back();
      basis = saved;
    }
  };
  detail::EchelonBasis basis;
  rec(rec, 0, basis);
  return out;
}

// Integer-coefficient expression of lambda over the simple coroots of the
// minimal sub-root system, with exactly real_dimension(lambda).k summands.
inline DimensionWitness integral_expression(const RootSystem& rs,
                                            const std::vector<long long>& lambda) {
  auto rd = real_dimension(rs, lambda);
  DimensionWitness out;
  out.k = rd.k;
  if (rd.k == 0) return out;
  Vec target = rs.lattice_to_ambient(lambda);
  std::vector<Vec> basis;
  if (rd.k == rs.rank()) {
    basis = rs.simple_coroots();
  } else {
    basis = sub_root_system(rs, rd.coroots).simple_coroots;
  }
  if (static_cast<int>(basis.size()) != rd.k)
    throw Error("internal: sub-system simple rank differs from dimension");
  auto coeffs = in_span(basis, target);
  if (!coeffs) throw Error("internal: lambda escaped its minimal subspace");
  for (const Rat& c : *coeffs) {
    if (!is_integer(c))
      throw Error("internal: non-integral coefficient in minimal expression");
    if (c == 0)
      throw Error("internal: zero coefficient contradicts minimality");
    out.coefficients.push_back(rat_to_long(c));
  }
  out.coroots = basis;
  // The sub-system's own positivity may disagree with the parent's; report
  // each summand over the positive representative.
  for (std::size_t i = 0; i < out.coroots.size(); ++i) {
    Vec negated = scale(Rat(-1), out.coroots[i]);
    for (const Vec& pos : rs.positive_coroots())
      if (pos == negated) {
        out.coroots[i] = negated;
        out.coefficients[i] = -out.coefficients[i];
        break;
      }
  }
  return out;
}

// Word r_{a1,c1} r_{a1,0} r_{a2,c2} r_{a2,0} ... of length 2k evaluating to
// the translation by lambda.
inline ReflectionWord factor_translation(const RootSystem& rs,
                                         const std::vector<long long>& lambda) {
  auto iw = integral_expression(rs, lambda);
  ReflectionWord word;
  for (std::size_t i = 0; i < iw.coroots.size(); ++i) {
    Vec root = coroot_of(iw.coroots[i]);
    long long c = iw.coefficients[i];
    auto idx = rs.positive_index_of_root(root);
    if (!idx) {
      idx = rs.positive_index_of_root(scale(Rat(-1), root));
      c = -c;
    }
    if (!idx) throw Error("internal: witness coroot has no matching root");
    word.push_back({*idx, c});
    word.push_back({*idx, 0});
  }
  if (evaluate_word(rs, word) != translation_element(rs, lambda))
    throw Error("internal: translation factorization does not evaluate back");
  return word;
}

inline LengthReport translation_length(const RootSystem& rs,
                                       const std::vector<long long>& lambda) {
  ReflectionWord word = factor_translation(rs, lambda);
  int len = static_cast<int>(word.size());
  return {len, len, true, Certificate::translation_2k, word};
}

enum class Side { front, back };

// a b a as a canonical reflection; conjugation keeps words inside R.
inline AffineReflection conjugate_reflection(const RootSystem& rs,
                                             const AffineReflection& a,
                                             const AffineReflection& b) {
  AffineElement ea = reflection_to_element(rs, a);
  AffineElement e = compose(ea, compose(reflection_to_element(rs, b), ea));
  auto r = is_reflection(rs, e);
  if (!r) throw Error("internal: conjugate fell outside the reflections");
  return *r;
}

// Same length, same evaluation; the selected letters appear verbatim and in
// order as the first (side=front) or last (side=back) letters. Letters they
// pass across get conjugated.
inline ReflectionWord rewrite_factorization(const RootSystem& rs,
                                            const ReflectionWord& word,
                                            const std::vector<std::size_t>& positions,
                                            Side side) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= word.size())
      throw Error("rewrite position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw Error("rewrite positions must be strictly increasing");
  }
  struct Item {
    AffineReflection r;
    bool sel;
  };
  std::vector<Item> items;
  for (const AffineReflection& r : word) items.push_back({r, false});
  for (std::size_t p : positions) items[p].sel = true;
  std::size_t n = items.size();
  if (side == Side::back) {
    for (std::size_t placed = 0; placed < positions.size(); ++placed) {
      std::size_t j = n - placed;
      do {
        --j;
      } while (!items[j].sel);
      while (j + 1 < n - placed) {
        AffineReflection a = items[j].r;
        items[j] = {conjugate_reflection(rs, a, items[j + 1].r),
                    items[j + 1].sel};
        items[j + 1] = {a, true};
        ++j;
      }
    }
  } else {
    for (std::size_t placed = 0; placed < positions.size(); ++placed) {
      std::size_t j = placed;
      while (!items[j].sel) ++j;
      while (j > placed) {
        AffineReflection a = items[j].r;
        items[j] = {conjugate_reflection(rs, a, items[j - 1].r),
                    items[j - 1].sel};
        items[j - 1] = {a, true};
        --j;
      }
    }
  }
  ReflectionWord out;
  for (const Item& it : items) out.push_back(it.r);
  if (evaluate_word(rs, out) != evaluate_word(rs, word))
    throw Error("internal: rewriting changed the evaluation");
  return out;
}

struct MoveOrigin {
  AffineElement element;
  ReflectionWord letters;  // k letters, one per witness coroot
};

// Element u with u(0) = lambda and reflection length exactly k: rewrite the
// translation factorization so its k origin-fixing letters sit at the back,
// then drop them.
inline MoveOrigin move_origin_element(const RootSystem& rs,
                                      const std::vector<long long>& lambda) {
  ReflectionWord word = factor_translation(rs, lambda);
  std::vector<std::size_t> zeros;
  for (std::size_t i = 1; i < word.size(); i += 2) zeros.push_back(i);
  ReflectionWord moved = rewrite_factorization(rs, word, zeros, Side::back);
  ReflectionWord head(moved.begin(),
                      moved.begin() + static_cast<std::ptrdiff_t>(word.size() / 2));
  AffineElement u = evaluate_word(rs, head);
  if (apply_element(u, zero_vec(static_cast<std::size_t>(rs.ambient_dim()))) !=
      rs.lattice_to_ambient(lambda))
    throw Error("internal: origin-moving element misses lambda");
  return {u, head};
}

// Exact length when the letters' roots are linearly independent.
inline std::optional<int> lin_ind_length(const RootSystem& rs,
                                         const ReflectionWord& word) {
  std::vector<Vec> roots;
  for (const AffineReflection& r : word)
    roots.push_back(rs.positive_roots()[static_cast<std::size_t>(r.root_index)]);
  if (rank_of_vectors(roots) == roots.size())
    return static_cast<int>(roots.size());
  return std::nullopt;
}

inline bool parallel_to_positive_coroot(const RootSystem& rs, const Vec& v) {
  for (const Vec& c : rs.positive_coroots()) {
    bool par = true;
    for (std::size_t i = 0; i < v.size() && par; ++i)
      for (std::size_t j = i + 1; j < v.size() && par; ++j)
        if (v[i] * c[j] != v[j] * c[i]) par = false;
    if (par) return true;
  }
  return false;
}

// Minimal dimension of a coroot subspace containing both the moved space of
// the linear part and the translation vector. Any factorization's roots span
// such a subspace, so this bounds the length from below. Falls back to the
// plain span dimension for systems too large to search.
inline int min_coroot_cover(const RootSystem& rs, const AffineElement& w) {
  std::size_t d = w.m.rows();
  Mat diff = mat_sub(w.m, Mat::identity(d));
  detail::EchelonBasis span;
  std::vector<Vec> targets;
  for (std::size_t j = 0; j < d; ++j) {
    Vec c = diff.col(j);
    if (span.add(c)) targets.push_back(c);
  }
  if (!is_zero(w.tau) && span.add(w.tau)) targets.push_back(w.tau);
  if (targets.empty()) return 0;
  int t_dim = static_cast<int>(targets.size());
  if (rs.positive_roots().size() > 30) {
    if (t_dim == 1 && !parallel_to_positive_coroot(rs, targets[0])) return 2;
    return t_dim;
  }
  for (int k = t_dim; k <= rs.rank(); ++k)
    if (detail::coroot_cover_at(rs, targets, k)) return k;
  throw Error("internal: moved space escapes the coroot span");
}

// Sum of per-factor reports for an element of a product group.
inline LengthReport reducible_length(const std::vector<LengthReport>& reports) {
  LengthReport out{0, 0, true, Certificate::bounds_only, ReflectionWord{}};
  bool first = true;
  for (const LengthReport& r : reports) {
    out.lower += r.lower;
    if (out.upper && r.upper)
      *out.upper += *r.upper;
    else
      out.upper = std::nullopt;
    if (out.witness && r.witness)
      out.witness->insert(out.witness->end(), r.witness->begin(),
                          r.witness->end());
    else
      out.witness = std::nullopt;
    if (first) {
      out.certificate = r.certificate;
      first = false;
    } else if (out.certificate != r.certificate) {
      out.certificate = Certificate::bounds_only;
    }
  }
  out.exact = out.upper && out.lower == *out.upper;
  return out;
}

// Certified interval (often exact) for the reflection length of w.
// Routing: spherical elements get the codimension formula, translations get
// the doubled dimension, products split per component, and the generic case
// combines the coroot-cover lower bound (parity-corrected) with the witness
// built from an origin-moving element and a minimal spherical factorization
// of the remainder.
inline LengthReport length_bounds(const RootSystem& rs, const AffineElement& w) {
  if (rs.component_count() > 1) {
    std::vector<LengthReport> reports;
    for (std::size_t j = 0; j < rs.component_count(); ++j) {
      LengthReport r = length_bounds(rs.component(j), component_element(rs, w, j));
      if (r.witness) {
        const std::vector<int>& map = rs.component_positive_map(j);
        for (AffineReflection& letter : *r.witness)
          letter.root_index = map[static_cast<std::size_t>(letter.root_index)];
      }
      reports.push_back(std::move(r));
    }
    return reducible_length(reports);
  }

  std::size_t d = w.m.rows();
  bool spherical = is_zero(w.tau);
  bool translation = w.m == Mat::identity(d);
  if (spherical) {
    ReflectionWord word = carter_factorization(rs, w);
    int c = static_cast<int>(word.size());
    return {c, c, true, Certificate::spherical_carter, word};
  }
  if (translation) return translation_length(rs, translation_lattice(rs, w));

  std::vector<long long> lambda = translation_lattice(rs, w);
  MoveOrigin mo = move_origin_element(rs, lambda);
  AffineElement v0 = compose(inverse(mo.element), w);
  if (!is_zero(v0.tau))
    throw Error("internal: origin-moving quotient is not spherical");
  ReflectionWord tail = carter_factorization(rs, v0);
  ReflectionWord witness = mo.letters;
  witness.insert(witness.end(), tail.begin(), tail.end());
  int upper = static_cast<int>(witness.size());

  int lower = min_coroot_cover(rs, w);
  int carter = static_cast<int>(rank(mat_sub(w.m, Mat::identity(d))));
  if ((lower - carter) % 2 != 0) ++lower;
  if (lower > upper) throw Error("internal: crossed length bounds");

  if (auto exact = lin_ind_length(rs, witness))
    return {*exact, *exact, true, Certificate::linearly_independent_roots,
            witness};
  return {lower, upper, lower == upper, Certificate::bounds_only, witness};
}

}  // namespace coxlen
