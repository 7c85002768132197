#pragma once

#include <vector>

#include "g2kit/numeric.hpp"
#include "g2kit/octonion.hpp"

namespace g2kit {

template <class T>
class AutMatrix;

template <class T>
AutMatrix<T> certify(const AlgebraPtr<T>& alg, const Matrix<T>& m);

/// An element of G2 = Aut(O): an 8x8 matrix acting on coordinates (columns are the
/// images of e0..e7). Instances exist only after certification.
template <class T>
class AutMatrix {
 public:
  const Matrix<T>& matrix() const noexcept { return m_; }
  const AlgebraPtr<T>& algebra() const noexcept { return alg_; }
  bool certified() const noexcept { return true; }

  Octonion<T> apply(const Octonion<T>& x) const {
    Octonion<T> out;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) {
        if (x.c[c] == T(0)) continue;
        out.c[r] += m_(r, c) * x.c[c];
      }
    return out;
  }

  static AutMatrix identity(const AlgebraPtr<T>& alg) { return AutMatrix(Matrix<T>::identity(8), alg); }

 private:
  AutMatrix(Matrix<T> m, AlgebraPtr<T> alg) : m_(std::move(m)), alg_(std::move(alg)) {}

  friend AutMatrix certify<T>(const AlgebraPtr<T>& alg, const Matrix<T>& m);
  template <class U>
  friend AutMatrix<U> compose(const AutMatrix<U>& g, const AutMatrix<U>& t);
  template <class U>
  friend AutMatrix<U> inverse(const AutMatrix<U>& t);

  Matrix<T> m_;
  AlgebraPtr<T> alg_;
};

namespace detail {

template <class T>
double certification_tolerance() {
  return is_exact_v<T> ? 0.0 : tol::residual;
}

/// Matrix of the linear map sending src[k] to img[k] (src must be a basis).
template <class T>
Matrix<T> map_from_images(const std::vector<Octonion<T>>& src, const std::vector<Octonion<T>>& img) {
  Matrix<T> s(8, 8), m(8, 8);
  for (std::size_t k = 0; k < 8; ++k)
    for (std::size_t r = 0; r < 8; ++r) {
      s(r, k) = src[k].c[r];
      m(r, k) = img[k].c[r];
    }
  // M S = I_img  =>  S^T M^T = I_img^T
  return solve(s.transposed(), m.transposed()).transposed();
}

template <class T>
void require_same_algebra(const AlgebraPtr<T>& a, const AlgebraPtr<T>& b) {
  if (!a->same_as(*b)) throw Error(ErrorKind::ContextMismatch, "operands live in different algebras");
}

}  // namespace detail

/// Certifies m as an automorphism: m(1) = 1 and m(e_i e_j) = m(e_i) m(e_j) for all basis pairs.
template <class T>
AutMatrix<T> certify(const AlgebraPtr<T>& alg, const Matrix<T>& m) {
  if (m.rows() != 8 || m.cols() != 8) throw Error(ErrorKind::InvalidInput, "automorphism must be 8x8");
  const double tolerance = detail::certification_tolerance<T>();
  const AutMatrix<T> t(m, alg);
  {
    Octonion<T> one = t.apply(Octonion<T>::unit());
    double res = (one - Octonion<T>::unit()).max_abs();
    if (!approx_equal(one, Octonion<T>::unit(), tolerance)) throw NotAutomorphismError(0, 0, res);
  }
  std::array<Octonion<T>, 8> images;
  for (std::size_t i = 0; i < 8; ++i) images[i] = Octonion<T>::from_span(m.column(i));
  const double scale = std::max(1.0, max_abs(m));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      Octonion<T> lhs = images[alg->index(i, j)] * alg->coefficient(i, j);
      Octonion<T> rhs = alg->multiply(images[i], images[j]);
      if (!approx_equal(lhs, rhs, tolerance * scale * scale))
        throw NotAutomorphismError(static_cast<int>(i), static_cast<int>(j), (lhs - rhs).max_abs());
    }
  }
  return t;
}

template <class T>
AutMatrix<T> compose(const AutMatrix<T>& g, const AutMatrix<T>& t) {
  detail::require_same_algebra(g.algebra(), t.algebra());
  return AutMatrix<T>(g.matrix() * t.matrix(), g.algebra());
}

template <class T>
AutMatrix<T> inverse(const AutMatrix<T>& t) {
  return AutMatrix<T>(inverse(t.matrix()), t.algebra());
}

template <class T>
double commutator_residual(const AutMatrix<T>& g, const AutMatrix<T>& t) {
  detail::require_same_algebra(g.algebra(), t.algebra());
  return max_abs(g.matrix() * t.matrix() - t.matrix() * g.matrix());
}

/// gt == tg, exactly or within 1e-8.
template <class T>
bool commutes(const AutMatrix<T>& g, const AutMatrix<T>& t) {
  detail::require_same_algebra(g.algebra(), t.algebra());
  Matrix<T> d = g.matrix() * t.matrix() - t.matrix() * g.matrix();
  if constexpr (is_exact_v<T>) {
    for (const auto& x : d.data())
      if (x != 0) return false;
    return true;
  } else {
    return max_abs(d) <= tol::residual;
  }
}

template <class T>
bool approx_equal(const AutMatrix<T>& a, const AutMatrix<T>& b) {
  if constexpr (is_exact_v<T>) {
    return a.matrix() == b.matrix();
  } else {
    return max_abs_diff(a.matrix(), b.matrix()) <= tol::residual;
  }
}

/// The fixed-point subalgebra {x : t(x) = x} with an orthogonal basis starting at 1.
template <class T>
Subalgebra<T> fixed_subalgebra(const AutMatrix<T>& t) {
  const auto& alg = t.algebra();
  Matrix<T> shifted = t.matrix() - Matrix<T>::identity(8);
  auto kernel = is_exact_v<T> ? nullspace(shifted) : nullspace_absolute(shifted, tol::residual);
  std::vector<Octonion<T>> basis{Octonion<T>::unit()};
  for (const auto& v : kernel) {
    auto r = detail::orthogonalize(*alg, Octonion<T>::from_span(v), basis);
    if (r) basis.push_back(*r);
  }
  return Subalgebra<T>::from_orthogonal_basis(alg, std::move(basis));
}

/// An element of a quaternion subalgebra Q.
template <class T>
class QuaternionPoint {
 public:
  QuaternionPoint(Octonion<T> value, Subalgebra<T> host) : value_(std::move(value)), host_(std::move(host)) {
    if (host_.dim() != 4) throw Error(ErrorKind::InvalidInput, "quaternion host must have dimension 4");
    if (!host_.contains(value_, is_exact_v<T> ? 0.0 : tol::residual))
      throw Error(ErrorKind::NotInSubalgebra, "point does not lie in its quaternion host");
  }

  const Octonion<T>& value() const noexcept { return value_; }
  const Subalgebra<T>& host() const noexcept { return host_; }

 private:
  Octonion<T> value_;
  Subalgebra<T> host_;
};

namespace detail {

template <class T>
void require_quaternion_doubling(const Subalgebra<T>& q, const Octonion<T>& b) {
  if (q.dim() != 4) throw Error(ErrorKind::InvalidInput, "expected a quaternion subalgebra");
  const auto& alg = *q.algebra();
  const double loose = is_exact_v<T> ? 0.0 : tol::residual;
  if (near_zero(alg.norm(b), loose)) throw Error(ErrorKind::NormZero, "doubling element has zero norm");
  for (const auto& e : q.basis())
    if (!near_zero(alg.bilinear(b, e), loose * std::max(1.0, b.max_abs())))
      throw Error(ErrorKind::NotOrthogonal, "doubling element is not orthogonal to Q");
}

template <class T>
void require_same_host(const QuaternionPoint<T>& p, const Subalgebra<T>& q) {
  if (!q.contains(p.value(), is_exact_v<T> ? 0.0 : tol::residual))
    throw Error(ErrorKind::NotInSubalgebra, "point does not lie in Q");
}

/// Builds the automorphism x + yb -> f(x) + g(y) b from its action on the Q basis.
template <class T, class F, class G>
AutMatrix<T> from_doubling(const Subalgebra<T>& q, const Octonion<T>& b, F&& on_first, G&& on_second) {
  const auto& alg = q.algebra();
  std::vector<Octonion<T>> src, img;
  for (const auto& e : q.basis()) {
    src.push_back(e);
    img.push_back(on_first(e));
  }
  for (const auto& e : q.basis()) {
    src.push_back(alg->multiply(e, b));
    img.push_back(alg->multiply(on_second(e), b));
  }
  return certify(alg, map_from_images(src, img));
}

}  // namespace detail

/// R_p: x + yb -> x + (py)b for p of norm 1 in Q; fixes Q pointwise.
template <class T>
AutMatrix<T> make_rp(const Subalgebra<T>& q, const Octonion<T>& b, const QuaternionPoint<T>& p) {
  detail::require_quaternion_doubling(q, b);
  detail::require_same_host(p, q);
  const auto& alg = *q.algebra();
  if (!near_zero(alg.norm(p.value()) - T(1), is_exact_v<T> ? 0.0 : tol::equality))
    throw Error(ErrorKind::NormNotOne, "R_p needs N(p) = 1");
  return detail::from_doubling(
      q, b, [](const Octonion<T>& x) { return x; },
      [&](const Octonion<T>& y) { return alg.multiply(p.value(), y); });
}

/// Lift of the inner automorphism x -> c x c^-1 of Q: x + yb -> cxc^-1 + (cyc^-1) b.
template <class T>
AutMatrix<T> make_inner_ext(const Subalgebra<T>& q, const Octonion<T>& b, const QuaternionPoint<T>& c) {
  detail::require_quaternion_doubling(q, b);
  detail::require_same_host(c, q);
  const auto& alg = *q.algebra();
  if (near_zero(alg.norm(c.value()), is_exact_v<T> ? 0.0 : tol::equality))
    throw Error(ErrorKind::NormZero, "conjugating element has zero norm");
  const Octonion<T> cinv = alg.inverse(c.value());
  auto conj = [&](const Octonion<T>& x) { return alg.multiply(alg.multiply(c.value(), x), cinv); };
  return detail::from_doubling(q, b, conj, conj);
}

/// The involution rho lifting the conjugation of L: fixes 1, a, b, ab and negates
/// gamma, gamma a, gamma b, gamma(ab), where gamma spans the trace-zero part of L.
template <class T>
AutMatrix<T> make_rho(const Subalgebra<T>& l, const Octonion<T>& a, const Octonion<T>& b) {
  if (l.dim() != 2) throw Error(ErrorKind::InvalidInput, "rho needs a quadratic subalgebra");
  const auto& alg = l.algebra();
  const Subalgebra<T> q = double_subalgebra(l, a);
  detail::require_quaternion_doubling(q, b);
  const Octonion<T>& gamma = l.basis()[1];
  const Octonion<T> ab = alg->multiply(a, b);
  std::vector<Octonion<T>> src, img;
  for (const auto& v : {Octonion<T>::unit(), a, b, ab}) {
    src.push_back(v);
    img.push_back(v);
    Octonion<T> gv = alg->multiply(gamma, v);
    src.push_back(gv);
    img.push_back(-gv);
  }
  return certify(alg, detail::map_from_images(src, img));
}

}  // namespace g2kit
