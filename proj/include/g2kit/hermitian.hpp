#pragma once

#include <array>

#include "g2kit/automorphism.hpp"
#include "g2kit/numeric.hpp"
#include "g2kit/octonion.hpp"
#include "g2kit/rng.hpp"

namespace g2kit {

/// The hermitian space (L-perp, h) over a quadratic subalgebra L = span{1, gamma} with
/// gamma^2 = -1, in the left L-module basis (a, b, ab). Elements of L are Complex<T>
/// values re + im*gamma acting by left multiplication.
///
/// h(x, y) = B(x, y) - gamma B(gamma x, y) (the halved-polarization form of
/// N(x,y) + c^-1 gamma N(gamma x, y) after normalizing gamma). It is L-linear in the
/// first argument and conjugate-linear in the second, so the restriction matrices
/// (columns = images of a, b, ab) satisfy A^T H conj(A) = H.
template <class T>
class HermitianSpace {
 public:
  static HermitianSpace build(const Subalgebra<T>& l, const Octonion<T>& a, const Octonion<T>& b) {
    if (l.dim() != 2) throw Error(ErrorKind::BadBasisPosition, "L must be a quadratic subalgebra");
    const auto& alg = l.algebra();
    const Octonion<T>& raw = l.basis()[1];
    T n = alg->norm(raw);
    if (!(n > T(0))) throw Error(ErrorKind::DegenerateForm, "L is not a field extension with gamma^2 < 0");
    auto root = ScalarTraits<T>::sqrt(n);
    if (!root) throw Error(ErrorKind::BadBasisPosition, "norm of the generator of L is not a square in k");
    Octonion<T> gamma = raw * (T(1) / *root);

    const double loose = is_exact_v<T> ? 0.0 : tol::residual;
    auto in_complement = [&](const Octonion<T>& x) {
      return near_zero(alg->bilinear(x, Octonion<T>::unit()), loose * std::max(1.0, x.max_abs())) &&
             near_zero(alg->bilinear(x, gamma), loose * std::max(1.0, x.max_abs()));
    };
    if (!in_complement(a)) throw Error(ErrorKind::BadBasisPosition, "a must lie in L-perp");
    if (near_zero(alg->norm(a), loose)) throw Error(ErrorKind::BadBasisPosition, "a has zero norm");
    const Subalgebra<T> q = double_subalgebra(l, a);
    for (const auto& e : q.basis())
      if (!near_zero(alg->bilinear(b, e), loose * std::max(1.0, b.max_abs())))
        throw Error(ErrorKind::BadBasisPosition, "b must be orthogonal to L + La");
    if (near_zero(alg->norm(b), loose)) throw Error(ErrorKind::BadBasisPosition, "b has zero norm");

    HermitianSpace s(l, gamma, {a, b, alg->multiply(a, b)});
    for (std::size_t i = 0; i < 3; ++i) {
      if (!in_complement(alg->multiply(gamma, s.basis_[i])))
        throw Error(ErrorKind::BadBasisPosition, "L-perp is not closed under left multiplication by L");
      s.h_diag_[i] = s.h(s.basis_[i], s.basis_[i]);
      if (!near_zero(s.h_diag_[i].im, loose) || near_zero(s.h_diag_[i].re, loose))
        throw Error(ErrorKind::DegenerateForm, "hermitian form is degenerate on the chosen basis");
    }
    return s;
  }

  /// L = span{1, e1}, a = e2, b = e4 on the given algebra.
  static HermitianSpace standard(const AlgebraPtr<T>& alg) {
    return build(default_quadratic(alg), Octonion<T>::basis(2), Octonion<T>::basis(4));
  }

  const Subalgebra<T>& quadratic() const noexcept { return l_; }
  const Octonion<T>& gamma() const noexcept { return gamma_; }
  const std::array<Octonion<T>, 3>& basis() const noexcept { return basis_; }
  const AlgebraPtr<T>& algebra() const noexcept { return l_.algebra(); }

  /// Diagonal Gram matrix H = diag(h(a,a), h(b,b), h(ab,ab)).
  Matrix<Complex<T>> gram() const {
    Matrix<Complex<T>> g(3, 3);
    for (std::size_t i = 0; i < 3; ++i) g(i, i) = h_diag_[i];
    return g;
  }

  bool in_complement(const Octonion<T>& x) const {
    const auto& alg = *algebra();
    const double loose = is_exact_v<T> ? 0.0 : tol::residual * std::max(1.0, x.max_abs());
    return near_zero(alg.bilinear(x, Octonion<T>::unit()), loose) && near_zero(alg.bilinear(x, gamma_), loose);
  }

  Complex<T> h(const Octonion<T>& x, const Octonion<T>& y) const {
    const auto& alg = *algebra();
    return {alg.bilinear(x, y), -alg.bilinear(alg.multiply(gamma_, x), y)};
  }

  /// h with the precondition x, y in L-perp checked.
  Complex<T> h_eval(const Octonion<T>& x, const Octonion<T>& y) const {
    if (!in_complement(x) || !in_complement(y))
      throw Error(ErrorKind::NotInComplement, "h is only defined on L-perp");
    return h(x, y);
  }

  /// Left multiplication by alpha = re + im*gamma.
  Octonion<T> scale(const Complex<T>& alpha, const Octonion<T>& x) const {
    return x * alpha.re + algebra()->multiply(gamma_, x) * alpha.im;
  }

  /// L-coordinates of x in L-perp with respect to (a, b, ab).
  std::array<Complex<T>, 3> coordinates(const Octonion<T>& x) const {
    std::array<Complex<T>, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = h(x, basis_[i]) / h_diag_[i];
    return out;
  }

  Octonion<T> from_coordinates(const std::array<Complex<T>, 3>& alpha) const {
    Octonion<T> x;
    for (std::size_t i = 0; i < 3; ++i) x += scale(alpha[i], basis_[i]);
    return x;
  }

 private:
  HermitianSpace(Subalgebra<T> l, Octonion<T> gamma, std::array<Octonion<T>, 3> basis)
      : l_(std::move(l)), gamma_(std::move(gamma)), basis_(std::move(basis)) {}

  Subalgebra<T> l_;
  Octonion<T> gamma_;
  std::array<Octonion<T>, 3> basis_;
  std::array<Complex<T>, 3> h_diag_;
};

template <class T>
Complex<T> det3(const Matrix<Complex<T>>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class T>
Matrix<Complex<T>> conjugated(const Matrix<Complex<T>>& m) {
  Matrix<Complex<T>> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).conj();
  return out;
}

/// Largest deviation from det(A) = 1 and A^T H conj(A) = H.
template <class T>
double special_unitary_residual(const Matrix<Complex<T>>& a, const Matrix<Complex<T>>& h) {
  if (a.rows() != 3 || a.cols() != 3) throw Error(ErrorKind::NotSpecialUnitary, "expected a 3x3 matrix");
  double unitary = max_abs(a.transposed() * h * conjugated(a) - h);
  double det = magnitude(det3(a) - Complex<T>(T(1)));
  return std::max(unitary, det);
}

template <class T>
bool is_special_unitary(const Matrix<Complex<T>>& a, const Matrix<Complex<T>>& h) {
  if (a.rows() != 3 || a.cols() != 3) return false;
  if constexpr (is_exact_v<T>) {
    return a.transposed() * h * conjugated(a) == h && det3(a) == Complex<T>(T(1));
  } else {
    double unitary = max_abs(a.transposed() * h * conjugated(a) - h);
    double det = magnitude(det3(a) - Complex<T>(T(1)));
    return unitary <= tol::residual && det <= tol::equality;
  }
}

/// A matrix certified to lie in SU(H) for a given hermitian space.
template <class T>
class SU3Matrix {
 public:
  SU3Matrix(Matrix<Complex<T>> a, const HermitianSpace<T>& space) : a_(std::move(a)) {
    if (!is_special_unitary(a_, space.gram()))
      throw Error(ErrorKind::NotSpecialUnitary, "matrix is not in SU(H)");
  }

  const Matrix<Complex<T>>& matrix() const noexcept { return a_; }

 private:
  Matrix<Complex<T>> a_;
};

/// Matrix of t restricted to L-perp; t must fix L pointwise.
template <class T>
SU3Matrix<T> aut_to_su3(const HermitianSpace<T>& space, const AutMatrix<T>& t) {
  detail::require_same_algebra(space.algebra(), t.algebra());
  const double loose = is_exact_v<T> ? 0.0 : tol::residual;
  if (!approx_equal(t.apply(space.gamma()), space.gamma(), loose))
    throw Error(ErrorKind::NotFixingL, "automorphism does not fix L pointwise");
  Matrix<Complex<T>> a(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    auto coords = space.coordinates(t.apply(space.basis()[j]));
    for (std::size_t i = 0; i < 3; ++i) a(i, j) = coords[i];
  }
  return SU3Matrix<T>(std::move(a), space);
}

/// The unique automorphism fixing L pointwise whose restriction to L-perp is A.
template <class T>
AutMatrix<T> su3_to_aut(const HermitianSpace<T>& space, const SU3Matrix<T>& su) {
  const auto& alg = space.algebra();
  const auto& a = su.matrix();
  const Complex<T> gamma_unit(T(0), T(1));
  std::vector<Octonion<T>> src{Octonion<T>::unit(), space.gamma()};
  std::vector<Octonion<T>> img{Octonion<T>::unit(), space.gamma()};
  for (std::size_t j = 0; j < 3; ++j) {
    for (const auto& alpha : {Complex<T>(T(1)), gamma_unit}) {
      src.push_back(space.scale(alpha, space.basis()[j]));
      std::array<Complex<T>, 3> coords;
      for (std::size_t i = 0; i < 3; ++i) coords[i] = alpha * a(i, j);
      img.push_back(space.from_coordinates(coords));
    }
  }
  try {
    return certify(alg, detail::map_from_images(src, img));
  } catch (const NotAutomorphismError& e) {
    throw Error(ErrorKind::CertificationFailure, std::string("su3_to_aut: ") + e.what());
  }
}

template <class T>
AutMatrix<T> su3_to_aut(const HermitianSpace<T>& space, const Matrix<Complex<T>>& a) {
  return su3_to_aut(space, SU3Matrix<T>(a, space));
}

/// Diagonal matrix diag(z0, z1, z2).
template <class T>
Matrix<Complex<T>> diagonal3(const Complex<T>& z0, const Complex<T>& z1, const Complex<T>& z2) {
  Matrix<Complex<T>> m(3, 3);
  m(0, 0) = z0;
  m(1, 1) = z1;
  m(2, 2) = z2;
  return m;
}

/// B = [[-1,0,0],[0,0,1],[0,1,0]], which satisfies AB = B conj(A) for A = diag(1, z, conj z).
template <class T>
Matrix<Complex<T>> intertwiner() {
  Matrix<Complex<T>> b(3, 3);
  b(0, 0) = Complex<T>(T(-1));
  b(1, 2) = Complex<T>(T(1));
  b(2, 1) = Complex<T>(T(1));
  return b;
}

/// The unit complex number exp(i * angle).
inline Complex<double> unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Random element of SU(3) (H = I): Gram-Schmidt on Gaussian-like columns, then the
/// last column is rotated to make det = 1.
Matrix<Complex<double>> random_special_unitary(Xorshift64Star& rng);

}  // namespace g2kit
