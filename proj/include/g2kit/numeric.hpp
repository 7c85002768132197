#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "g2kit/errors.hpp"

namespace g2kit {

using Rational = boost::multiprecision::mpq_rational;

// Float tolerance hierarchy. Classification is the loosest because it feeds
// discrete decisions.
namespace tol {
inline constexpr double equality = 1e-9;
inline constexpr double residual = 1e-8;
inline constexpr double spectrum = 1e-7;
inline constexpr double ambiguous = 1e-6;
}  // namespace tol

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(double x, double tolerance) { return std::abs(x) <= tolerance; }
  static double to_double(double x) { return x; }
  static double magnitude(double x) { return std::abs(x); }
  static std::optional<double> sqrt(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
  }
  static std::string to_string(double x) { return std::to_string(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool is_zero(const Rational& x, double /*tolerance*/) { return x == 0; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static double magnitude(const Rational& x) { return std::abs(to_double(x)); }
  // Square root if x is the square of a rational, otherwise nothing.
  static std::optional<Rational> sqrt(const Rational& x) {
    using boost::multiprecision::mpz_int;
    if (x < 0) return std::nullopt;
    mpz_int num = boost::multiprecision::numerator(x);
    mpz_int den = boost::multiprecision::denominator(x);
    mpz_int rn = boost::multiprecision::sqrt(num);
    mpz_int rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
  }
  static std::string to_string(const Rational& x) { return x.str(); }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <class T>
bool near_zero(const T& x, double tolerance = tol::equality) {
  return ScalarTraits<T>::is_zero(x, tolerance);
}

template <class T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

/// Element of a quadratic extension L = k(i) with i^2 = -1, stored as re + im*i.
template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return {re, -im}; }
  T norm2() const { return re * re + im * im; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T n = b.norm2();
    if (near_zero(n, 0.0)) throw Error(ErrorKind::DivisionByZero, "complex division by zero");
    Complex p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class T>
bool near_zero(const Complex<T>& z, double tolerance = tol::equality) {
  return near_zero(z.re, tolerance) && near_zero(z.im, tolerance);
}

template <class T>
double magnitude(const T& x) {
  return ScalarTraits<T>::magnitude(x);
}

template <class T>
double magnitude(const Complex<T>& z) {
  return std::hypot(to_double(z.re), to_double(z.im));
}

/// Dense row-major matrix over a field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x = x * s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::InvalidInput, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const noexcept { return data_; }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::InvalidInput, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
double max_abs(const Matrix<T>& m) {
  double best = 0.0;
  for (const auto& x : m.data()) best = std::max(best, magnitude(x));
  return best;
}

template <class T>
double frobenius_norm(const Matrix<T>& m) {
  double s = 0.0;
  for (const auto& x : m.data()) {
    double a = magnitude(x);
    s += a * a;
  }
  return std::sqrt(s);
}

/// Largest entrywise difference; zero on the exact backend means equality.
template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  return max_abs(a - b);
}

/// In-place reduced row echelon form. Returns the pivot columns.
/// On the float backend a pivot is accepted when it exceeds relative_tol * max|M|
/// (partial pivoting by column); the exact backend accepts any nonzero pivot.
template <class T>
std::vector<std::size_t> reduce_row_echelon_abs(Matrix<T>& m, double threshold) {
  if constexpr (is_exact_v<T>) threshold = 0.0;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t best = m.rows();
    double best_mag = threshold;
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if constexpr (is_exact_v<T>) {
        if (m(r, c) != 0) {
          best = r;
          break;
        }
      } else {
        double mag = magnitude(m(r, c));
        if (mag > best_mag) {
          best_mag = mag;
          best = r;
        }
      }
    }
    if (best == m.rows()) continue;
    if (best != pivot_row) {
      auto a = m.row(best);
      auto b = m.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    T inv = T(1) / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) = m(pivot_row, k) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      T f = m(r, c);
      if (f == T(0)) continue;
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(pivot_row, k);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

template <class T>
std::vector<std::size_t> reduce_row_echelon(Matrix<T>& m, double relative_tol = tol::equality) {
  return reduce_row_echelon_abs(m, relative_tol * std::max(max_abs(m), 1e-300));
}

template <class T>
std::size_t rank(Matrix<T> m, double relative_tol = tol::equality) {
  return reduce_row_echelon(m, relative_tol).size();
}

/// Basis of {v : M v = 0}, one vector per free column of the echelon form.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, double relative_tol = tol::equality) {
  auto pivots = reduce_row_echelon(m, relative_tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Nullspace with an absolute pivot threshold (float backend); useful when M may be
/// entirely roundoff, e.g. t - I for t close to the identity.
template <class T>
std::vector<std::vector<T>> nullspace_absolute(Matrix<T> m, double threshold) {
  const double rel = threshold / std::max(max_abs(m), 1e-300);
  return nullspace(std::move(m), rel);
}

/// Solves A X = B for square invertible A.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows())
    throw Error(ErrorKind::InvalidInput, "solve: shape mismatch");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  // Pivot threshold relative to A only; B may be arbitrarily scaled.
  const double amax = max_abs(a);
  auto pivots = reduce_row_echelon(aug, is_exact_v<T> ? 0.0 : tol::equality * amax / std::max(max_abs(aug), 1e-300));
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorKind::SingularMatrix, "solve: matrix is singular");
  Matrix<T> x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, n + c);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

template <class T, class U>
Matrix<U> convert_matrix(const Matrix<T>& m, U (*fn)(const T&)) {
  Matrix<U> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = fn(m(r, c));
  return out;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  return convert_matrix<Rational, double>(m, [](const Rational& x) { return x.convert_to<double>(); });
}

}  // namespace g2kit
