#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace mwa {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec scaled(const Vec& a, double s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline Vec negated(const Vec& a) { return scaled(a, -1.0); }

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vec& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

inline double norm1(const Vec& a) {
  double s = 0.0;
  for (double x : a) s += std::abs(x);
  return s;
}

// z-component of the 2D cross product a x b.
inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Dense row-major square matrix, used for rotation operators.
class Matrix {
public:
  Matrix() : n_(0) {}
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  Vec apply(const Vec& v) const {
    Vec r(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  // For orthogonal matrices this is the inverse action.
  Vec apply_transposed(const Vec& v) const {
    Vec r(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
      double s = 0.0;
      for (int i = 0; i < n_; ++i) s += (*this)(i, j) * v[i];
      r[j] = s;
    }
    return r;
  }

  Matrix multiply(const Matrix& rhs) const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        double v = (*this)(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < n_; ++j) r(i, j) += v * rhs(k, j);
      }
    return r;
  }

private:
  int n_;
  std::vector<double> a_;
};

}  // namespace mwa
