#pragma once

// Reference computations that share no code with the library: an explicit
// quaternion-pair product, Eigen SVD nullspaces, and Eigen eigen/exp routines.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

namespace oracle {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

// Hamilton product with i = e1, j = e2, k = e3.
inline std::array<double, 4> qmul(const std::array<double, 4>& p, const std::array<double, 4>& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline std::array<double, 4> qconj(const std::array<double, 4>& p) { return {p[0], -p[1], -p[2], -p[3]}; }

// x = (a, b) with a = x0..x3 and b = x4..x7 (e4 = (0, 1)):
// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
inline Vec8 omul(const Vec8& x, const Vec8& y) {
  std::array<double, 4> a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  std::array<double, 4> c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  auto ac = qmul(a, c), db = qmul(qconj(d), b), da = qmul(d, a), bc = qmul(b, qconj(c));
  Vec8 out;
  for (int i = 0; i < 4; ++i) {
    out[i] = ac[i] - db[i];
    out[4 + i] = da[i] + bc[i];
  }
  return out;
}

inline Vec8 e(int i) {
  Vec8 v = Vec8::Zero();
  v[i] = 1.0;
  return v;
}

inline Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double rel = 1e-9) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = rel * std::max(1.0, s.size() ? s[0] : 0.0);
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

// Der(O) from the Leibniz rule on basis pairs, unknown D(r, c) at 8r + c.
inline std::vector<Mat8> derivations() {
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(512, 64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Vec8 p = omul(e(i), e(j));
      for (int out = 0; out < 8; ++out) {
        const int row = 64 * i + 8 * j + out;
        for (int m = 0; m < 8; ++m) {
          sys(row, 8 * out + m) += p[m];
          sys(row, 8 * m + i) -= omul(e(m), e(j))[out];
          sys(row, 8 * m + j) -= omul(e(i), e(m))[out];
        }
      }
    }
  Eigen::MatrixXd k = nullspace(sys);
  std::vector<Mat8> out;
  for (int c = 0; c < k.cols(); ++c) {
    Mat8 d;
    for (int r = 0; r < 8; ++r)
      for (int s = 0; s < 8; ++s) d(r, s) = k(8 * r + s, c);
    out.push_back(d);
  }
  return out;
}

// dim {D in Der : tD = Dt}.
inline int centralizer_dim(const Mat8& t) {
  static const auto der = derivations();
  Eigen::MatrixXd sys(64, der.size());
  for (std::size_t k = 0; k < der.size(); ++k) {
    Mat8 c = t * der[k] - der[k] * t;
    sys.col(k) = Eigen::Map<const Eigen::VectorXd>(c.data(), 64);
  }
  return static_cast<int>(nullspace(sys, 1e-8).cols());
}

// For t in SU(3) with restriction diag(z): 2 from the Cartan, one per ordered pair of
// equal eigenvalues (roots of SU(3)), two per eigenvalue 1 (the short roots).
inline int weight_count_dim(const std::array<std::complex<double>, 3>& z, double tol = 1e-9) {
  int dim = 2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && std::abs(z[i] - z[j]) < tol) ++dim;
  for (const auto& w : z)
    if (std::abs(w - 1.0) < tol) dim += 2;
  return dim;
}

// Roots of X^3 + a2 X^2 + a1 X + a0 as eigenvalues of the companion matrix.
inline std::array<std::complex<double>, 3> companion_roots(std::complex<double> a2, std::complex<double> a1,
                                                            std::complex<double> a0) {
  Eigen::Matrix3cd c = Eigen::Matrix3cd::Zero();
  c(1, 0) = 1.0;
  c(2, 1) = 1.0;
  c(0, 2) = -a0;
  c(1, 2) = -a1;
  c(2, 2) = -a2;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(c);
  return {es.eigenvalues()[0], es.eigenvalues()[1], es.eigenvalues()[2]};
}

inline Eigen::Matrix3cd eigen3(const std::array<std::array<std::complex<double>, 3>, 3>& rows) {
  Eigen::Matrix3cd m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = rows[r][c];
  return m;
}

inline Mat8 expm(const Mat8& a) { return a.exp(); }

// Dimension of the smallest subalgebra containing 1 and the seeds, by brute-force span growth.
inline int closure_dim(std::vector<Vec8> seeds) {
  std::vector<Vec8> span{e(0)};
  auto rank = [](const std::vector<Vec8>& v) {
    Eigen::MatrixXd m(8, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m.col(i) = v[i];
    return static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(m).setThreshold(1e-9).rank());
  };
  for (auto& s : seeds) span.push_back(s);
  int r = rank(span);
  for (;;) {
    std::vector<Vec8> grown = span;
    for (const auto& x : span)
      for (const auto& y : span) grown.push_back(omul(x, y));
    int r2 = rank(grown);
    if (r2 == r) return r;
    r = r2;
    span = grown;
  }
}

}  // namespace oracle
