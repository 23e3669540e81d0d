// Elements of the affine group W = W0 x| T as exact affine isometries
// x -> Mx + tau. The pair (tau, M) is the normal form t_lambda w0: M is the
// image under the projection onto W0 and tau is the image of the origin.
// Reflection words multiply right-to-left, in function composition order.
#pragma once

#include "coxlen/root_system.hpp"

#include <optional>
#include <vector>

namespace coxlen {

// r_{alpha,i} for a positive root alpha, canonical under r_{-a,-i} = r_{a,i}.
struct AffineReflection {
  int root_index;    // into positive_roots()
  long long offset;  // the i of the fixed hyperplane <x,alpha> = i

  friend bool operator==(const AffineReflection& a, const AffineReflection& b) {
    return a.root_index == b.root_index && a.offset == b.offset;
  }
  friend bool operator!=(const AffineReflection& a, const AffineReflection& b) {
    return !(a == b);
  }
  friend bool operator<(const AffineReflection& a, const AffineReflection& b) {
    if (a.root_index != b.root_index) return a.root_index < b.root_index;
    return a.offset < b.offset;
  }
};

using ReflectionWord = std::vector<AffineReflection>;

struct AffineElement {
  Vec tau;  // translation part, ambient coordinates of lambda
  Mat m;    // linear part, orthogonal and permuting the roots

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.tau == b.tau && a.m == b.m;
  }
  friend bool operator!=(const AffineElement& a, const AffineElement& b) {
    return !(a == b);
  }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.m < b.m;
  }
};

inline AffineElement identity_element(const RootSystem& rs) {
  std::size_t d = static_cast<std::size_t>(rs.ambient_dim());
  return {zero_vec(d), Mat::identity(d)};
}

inline Vec apply_reflection(const RootSystem& rs, const AffineReflection& r,
                            const Vec& x) {
  const Vec& alpha = rs.positive_roots()[static_cast<std::size_t>(r.root_index)];
  const Vec& av = rs.positive_coroots()[static_cast<std::size_t>(r.root_index)];
  Rat c = inner(x, alpha) - Rat(r.offset);
  return sub(x, scale(c, av));
}

inline AffineElement reflection_to_element(const RootSystem& rs,
                                           const AffineReflection& r) {
  const Vec& av = rs.positive_coroots()[static_cast<std::size_t>(r.root_index)];
  return {scale(Rat(r.offset), av), rs.reflection_matrix(r.root_index)};
}

inline Vec apply_element(const AffineElement& w, const Vec& x) {
  return add(mat_vec(w.m, x), w.tau);
}

inline AffineElement compose(const AffineElement& u, const AffineElement& v) {
  return {add(mat_vec(u.m, v.tau), u.tau), mat_mul(u.m, v.m)};
}

inline AffineElement inverse(const AffineElement& w) {
  Mat mt = transpose(w.m);
  return {scale(Rat(-1), mat_vec(mt, w.tau)), mt};
}

inline AffineElement project(const AffineElement& w) {
  return {zero_vec(w.tau.size()), w.m};
}

inline AffineElement translation_element(const RootSystem& rs,
                                         const std::vector<long long>& coeffs) {
  return {rs.lattice_to_ambient(coeffs),
          Mat::identity(static_cast<std::size_t>(rs.ambient_dim()))};
}

// The lambda of the normal form, in simple-coroot coordinates.
inline std::vector<long long> translation_lattice(const RootSystem& rs,
                                                  const AffineElement& w) {
  return rs.ambient_to_lattice(w.tau);
}

// Validated constructor for elements built from raw data.
inline AffineElement make_element(const RootSystem& rs, const Vec& tau,
                                  const Mat& m) {
  std::size_t d = static_cast<std::size_t>(rs.ambient_dim());
  if (tau.size() != d || m.rows() != d || m.cols() != d)
    throw Error("element data does not match the ambient dimension");
  if (mat_mul(transpose(m), m) != Mat::identity(d))
    throw Error("linear part is not orthogonal");
  for (const Vec& a : rs.positive_roots())
    if (!rs.contains_root(mat_vec(m, a)))
      throw Error("linear part does not permute the root system");
  if (!rs.try_ambient_to_lattice(tau))
    throw Error("translation part is not in the coroot lattice");
  return {tau, m};
}

inline AffineElement evaluate_word(const RootSystem& rs,
                                   const ReflectionWord& word) {
  AffineElement acc = identity_element(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = compose(reflection_to_element(rs, *it), acc);
  return acc;
}

// Canonical (alpha, i) if w = r_{alpha,i}, otherwise absent. The linear part
// must be a root reflection and the translation an integer multiple of the
// matching coroot.
inline std::optional<AffineReflection> is_reflection(const RootSystem& rs,
                                                     const AffineElement& w) {
  auto idx = rs.positive_index_of_matrix(w.m);
  if (!idx) return std::nullopt;
  const Vec& av = rs.positive_coroots()[static_cast<std::size_t>(*idx)];
  std::size_t j = 0;
  while (j < av.size() && av[j] == 0) ++j;
  Rat c = w.tau[j] / av[j];
  if (!is_integer(c)) return std::nullopt;
  if (scale(c, av) != w.tau) return std::nullopt;
  return AffineReflection{*idx, rat_to_long(c)};
}

// Block of a product element living in one irreducible component.
inline AffineElement component_element(const RootSystem& rs,
                                       const AffineElement& w, std::size_t j) {
  const RootSystem& c = rs.component(j);
  if (rs.component_count() == 1) return w;
  std::size_t off = static_cast<std::size_t>(rs.component_ambient_offset(j));
  std::size_t d = static_cast<std::size_t>(c.ambient_dim());
  std::size_t full = static_cast<std::size_t>(rs.ambient_dim());
  Mat block(d, d);
  for (std::size_t r = 0; r < full; ++r)
    for (std::size_t s = 0; s < full; ++s) {
      bool rin = r >= off && r < off + d;
      bool sin = s >= off && s < off + d;
      if (rin && sin)
        block(r - off, s - off) = w.m(r, s);
      else if (rin != sin && w.m(r, s) != 0)
        throw Error("element does not decompose across components");
    }
  Vec tau(d);
  for (std::size_t i = 0; i < d; ++i) tau[i] = w.tau[off + i];
  return {tau, block};
}

}  // namespace coxlen
