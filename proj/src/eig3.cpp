#include "g2kit/eig3.hpp"

#include <cmath>

namespace g2kit {

namespace {

using Mat3 = std::array<std::array<cplx, 3>, 3>;
using Vec3 = std::array<cplx, 3>;

Mat3 to_std(const Matrix<Complex<double>>& a) {
  if (a.rows() != 3 || a.cols() != 3) throw Error(ErrorKind::InvalidInput, "expected a 3x3 matrix");
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = {a(r, c).re, a(r, c).im};
  return m;
}

cplx det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Gaussian elimination with partial pivoting; tiny pivots are replaced so that a
// shift sitting exactly on an eigenvalue still produces a (huge) solution.
Vec3 solve3(Mat3 m, Vec3 b) {
  double scale = 0.0;
  for (auto& row : m)
    for (auto& x : row) scale = std::max(scale, std::abs(x));
  const double floor = std::max(scale, 1.0) * 1e-15;
  for (int k = 0; k < 3; ++k) {
    int p = k;
    for (int r = k + 1; r < 3; ++r)
      if (std::abs(m[r][k]) > std::abs(m[p][k])) p = r;
    std::swap(m[k], m[p]);
    std::swap(b[k], b[p]);
    if (std::abs(m[k][k]) < floor) m[k][k] = floor;
    for (int r = k + 1; r < 3; ++r) {
      cplx f = m[r][k] / m[k][k];
      for (int c = k; c < 3; ++c) m[r][c] -= f * m[k][c];
      b[r] -= f * b[k];
    }
  }
  Vec3 x;
  for (int k = 2; k >= 0; --k) {
    cplx s = b[k];
    for (int c = k + 1; c < 3; ++c) s -= m[k][c] * x[c];
    x[k] = s / m[k][k];
  }
  return x;
}

double vnorm(const Vec3& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2])); }

Vec3 matvec(const Mat3& m, const Vec3& v) {
  Vec3 out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r] += m[r][c] * v[c];
  return out;
}

// Start vector with generic components so no eigenvector is orthogonal to it in practice.
constexpr Vec3 kStart{cplx{0.8017837257372732, 0.0}, cplx{0.31, 0.2672612419124244},
                      cplx{-0.1336306209562122, 0.4}};

struct Refined {
  cplx lambda;
  Vec3 vector;
  double residual;
};

Refined inverse_iteration(const Mat3& a, cplx lambda) {
  Vec3 x = kStart;
  double n = vnorm(x);
  for (auto& v : x) v /= n;
  cplx estimate = lambda;
  for (int it = 0; it < 4; ++it) {
    Mat3 shifted = a;
    for (int k = 0; k < 3; ++k) shifted[k][k] -= lambda;
    x = solve3(shifted, x);
    n = vnorm(x);
    for (auto& v : x) v /= n;
  }
  Vec3 ax = matvec(a, x);
  estimate = std::conj(x[0]) * ax[0] + std::conj(x[1]) * ax[1] + std::conj(x[2]) * ax[2];
  Vec3 r;
  for (int k = 0; k < 3; ++k) r[k] = ax[k] - estimate * x[k];
  return {estimate, x, vnorm(r)};
}

}  // namespace

Matrix<Complex<double>> to_complex_matrix(const std::array<std::array<cplx, 3>, 3>& rows) {
  Matrix<Complex<double>> m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = Complex<double>(rows[r][c].real(), rows[r][c].imag());
  return m;
}

std::array<cplx, 3> characteristic_coefficients(const Matrix<Complex<double>>& a) {
  Mat3 m = to_std(a);
  cplx trace = m[0][0] + m[1][1] + m[2][2];
  cplx minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  return {-trace, minors, -det3(m)};
}

Spectrum cubic_roots(const std::array<cplx, 3>& coeffs) {
  const auto [a2, a1, a0] = coeffs;
  // X = Y - a2/3 gives Y^3 + pY + q = 0.
  const cplx shift = -a2 / 3.0;
  const cplx p = a1 - a2 * a2 / 3.0;
  const cplx q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // Pick the branch that avoids cancellation.
  cplx w = -q / 2.0 + disc;
  if (std::abs(-q / 2.0 - disc) > std::abs(w)) w = -q / 2.0 - disc;
  const cplx omega{-0.5, std::sqrt(3.0) / 2.0};
  Spectrum roots;
  if (std::abs(w) == 0.0) {
    roots = {shift, shift, shift};
  } else {
    const cplx u = std::pow(w, 1.0 / 3.0);
    const cplx v = -p / (3.0 * u);
    cplx uk = u, vk = v;
    for (int k = 0; k < 3; ++k) {
      roots[k] = uk + vk + shift;
      uk *= omega;
      vk *= std::conj(omega);
    }
  }
  for (auto& x : roots) {
    cplx f = ((x + a2) * x + a1) * x + a0;
    cplx df = (3.0 * x + 2.0 * a2) * x + a1;
    if (std::abs(df) > 1e-12) x -= f / df;
  }
  return roots;
}

Spectrum eig3_unit(const Matrix<Complex<double>>& a) {
  const Mat3 m = to_std(a);
  Spectrum roots = cubic_roots(characteristic_coefficients(a));
  double scale = 0.0;
  for (auto& row : m)
    for (auto& x : row) scale = std::max(scale, std::abs(x));
  for (auto& lambda : roots) {
    Refined r = inverse_iteration(m, lambda);
    if (!(r.residual <= 1e-9 * std::max(scale, 1.0)))
      throw Error(ErrorKind::SolverFailure, "eigenvalue refinement did not converge");
    lambda = r.lambda;
  }
  // The refined roots must still form the same multiset as the characteristic polynomial.
  const cplx trace = m[0][0] + m[1][1] + m[2][2];
  const cplx det = det3(m);
  if (std::abs(roots[0] + roots[1] + roots[2] - trace) > 1e-8 * std::max(scale, 1.0) ||
      std::abs(roots[0] * roots[1] * roots[2] - det) > 1e-8 * std::max(scale * scale * scale, 1.0))
    throw Error(ErrorKind::SolverFailure, "refined eigenvalues lost a root");
  return roots;
}

std::array<cplx, 3> eigenvector3(const Matrix<Complex<double>>& a, cplx lambda) {
  Refined r = inverse_iteration(to_std(a), lambda);
  return r.vector;
}

}  // namespace g2kit
