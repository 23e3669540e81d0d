// Dense exact linear algebra over Q: vectors, matrices, Gaussian elimination
// with exact pivots, rank, span membership, linear solves. Dimensions in this
// library are small (ambient rank at most 9), so no pivoting strategy beyond
// "first nonzero" is needed for correctness or speed.
#pragma once

#include "coxlen/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace coxlen {

using Vec = std::vector<Rat>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Rat inner(const Vec& a, const Vec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
  }

  static Mat from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Vec col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

inline Mat transpose(const Mat& m) {
  Mat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
  Vec r(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

inline Mat mat_add(const Mat& a, const Mat& b) {
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

// Row-reduces m in place to row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_echelon(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return row_echelon(m).size(); }

inline std::size_t rank_of_vectors(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return rank(Mat::from_rows(vs));
}

// Solves a * x = b exactly; nullopt when inconsistent. With multiple
// solutions, free variables are set to zero.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = row_echelon(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

// Coefficients c with sum c_i * basis_i = target, or nullopt.
inline std::optional<Vec> in_span(const std::vector<Vec>& basis,
                                  const Vec& target) {
  if (basis.empty()) {
    if (is_zero(target)) return Vec();
    return std::nullopt;
  }
  return solve(Mat::from_cols(basis), target);
}

inline Rat det(Mat m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  Rat d(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
      d = -d;
    }
    d *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

// Left inverse (A^T A)^{-1} A^T of a full-column-rank matrix; maps ambient
// coordinates back to coordinates in the columns of a.
inline Mat pseudo_inverse(const Mat& a) {
  Mat at = transpose(a);
  Mat ata = mat_mul(at, a);
  std::size_t n = ata.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = ata(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_echelon(aug);
  if (pivots.size() != n)
    throw Error("pseudo_inverse: columns not independent");
  for (std::size_t p : pivots)
    if (p >= n) throw Error("pseudo_inverse: columns not independent");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return mat_mul(inv, at);
}

}  // namespace coxlen
