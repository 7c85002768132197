#pragma once

#include <vector>

#include "g2kit/automorphism.hpp"

namespace g2kit {

/// Isomorphism of composition subalgebras. Row i of `map` holds the coordinates of the
/// image of source.basis()[i] in target.basis().
template <class T>
class SubalgebraIso {
 public:
  SubalgebraIso(Subalgebra<T> source, Subalgebra<T> target, Matrix<T> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    validate();
  }

  const Subalgebra<T>& source() const noexcept { return source_; }
  const Subalgebra<T>& target() const noexcept { return target_; }
  const Matrix<T>& map() const noexcept { return map_; }

  Octonion<T> image(std::size_t i) const {
    Octonion<T> x;
    for (std::size_t j = 0; j < target_.dim(); ++j) x += target_.basis()[j] * map_(i, j);
    return x;
  }

  std::vector<Octonion<T>> images() const {
    std::vector<Octonion<T>> out;
    for (std::size_t i = 0; i < source_.dim(); ++i) out.push_back(image(i));
    return out;
  }

 private:
  void validate() const {
    const std::size_t d = source_.dim();
    if (target_.dim() != d || map_.rows() != d || map_.cols() != d)
      throw Error(ErrorKind::InvalidIso, "source, target and map dimensions differ");
    if (!source_.algebra()->same_as(*target_.algebra()))
      throw Error(ErrorKind::ContextMismatch, "source and target live in different algebras");
    const auto& alg = *source_.algebra();
    const double loose = is_exact_v<T> ? 0.0 : tol::residual;
    const auto img = images();
    if (!approx_equal(img[0], Octonion<T>::unit(), loose)) throw Error(ErrorKind::InvalidIso, "1 must map to 1");
    for (std::size_t i = 0; i < d; ++i) {
      if (!near_zero(alg.norm(img[i]) - alg.norm(source_.basis()[i]), loose * std::max(1.0, img[i].max_abs())))
        throw Error(ErrorKind::InvalidIso, "map does not preserve the norm");
      for (std::size_t j = 0; j < d; ++j) {
        // phi(s_i s_j) = phi(s_i) phi(s_j), with s_i s_j expanded in the source basis.
        auto coords = source_.coordinates(alg.multiply(source_.basis()[i], source_.basis()[j]));
        Octonion<T> lhs;
        for (std::size_t k = 0; k < d; ++k) lhs += img[k] * coords[k];
        Octonion<T> rhs = alg.multiply(img[i], img[j]);
        if (!approx_equal(lhs, rhs, loose * std::max(1.0, rhs.max_abs())))
          throw Error(ErrorKind::InvalidIso, "map is not multiplicative on the source basis");
      }
    }
  }

  Subalgebra<T> source_;
  Subalgebra<T> target_;
  Matrix<T> map_;
};

namespace detail {

/// Rescales v to norm n, or returns nullopt when the factor is not in k.
template <class T>
std::optional<Octonion<T>> rescale_to_norm(const Algebra<T>& alg, const Octonion<T>& v, const T& n) {
  T nv = alg.norm(v);
  if (near_zero(nv, 0.0)) return std::nullopt;
  T ratio = n / nv;
  if (!(ratio > T(0))) return std::nullopt;
  auto s = ScalarTraits<T>::sqrt(ratio);
  if (!s) return std::nullopt;
  return v * *s;
}

/// Doubles (src, img) pairs until they span O, then certifies the linear extension.
template <class T>
AutMatrix<T> extend_pairs(Subalgebra<T> source, Subalgebra<T> target, std::vector<Octonion<T>> src,
                          std::vector<Octonion<T>> img) {
  const auto& alg = source.algebra();
  const double loose = is_exact_v<T> ? 0.0 : tol::residual;
  while (source.dim() < 8) {
    const Octonion<T> a = orthogonal_complement(source)[0];
    const T na = alg->norm(a);
    std::optional<Octonion<T>> a_prime;
    for (const auto& v : orthogonal_complement(target))
      if ((a_prime = rescale_to_norm(*alg, v, na))) break;
    if (!a_prime) throw Error(ErrorKind::NormNotRepresented, "no complement vector of the target has a matching norm");
    for (const auto& e : target.basis())
      if (!near_zero(alg->bilinear(*a_prime, e), loose))
        throw Error(ErrorKind::CertificationFailure, "doubling element left the target complement");
    const std::size_t n = src.size();
    for (std::size_t i = 0; i < n; ++i) {
      src.push_back(alg->multiply(src[i], a));
      img.push_back(alg->multiply(img[i], *a_prime));
    }
    source = double_subalgebra(source, a);
    target = double_subalgebra(target, *a_prime);
  }
  try {
    return certify(alg, map_from_images(src, img));
  } catch (const NotAutomorphismError& e) {
    throw Error(ErrorKind::CertificationFailure, std::string("extension: ") + e.what());
  }
}

/// Fixes the sign so that the first nonzero coordinate is positive.
template <class T>
Octonion<T> positive_sign(const Octonion<T>& x) {
  for (const auto& c : x.c) {
    if (near_zero(c, is_exact_v<T> ? 0.0 : tol::residual)) continue;
    return c > T(0) ? x : -x;
  }
  return x;
}

}  // namespace detail

/// Automorphism of O restricting to iso on its source (Skolem-Noether for composition
/// subalgebras): double source and target by complement vectors of equal norm.
template <class T>
AutMatrix<T> extend_isomorphism(const SubalgebraIso<T>& iso) {
  return detail::extend_pairs(iso.source(), iso.target(), iso.source().basis(), iso.images());
}

/// Automorphism phi with phi(D) = D', from matching orthogonal trace-zero generators of
/// equal norm (u -> +-u' scaled, first nonzero coordinate positive).
template <class T>
AutMatrix<T> conjugating_element(const Subalgebra<T>& d, const Subalgebra<T>& d_prime) {
  if (d.dim() != d_prime.dim()) throw Error(ErrorKind::NotIsomorphic, "subalgebras have different dimensions");
  const auto& alg = d.algebra();
  detail::require_same_algebra(alg, d_prime.algebra());
  if (d.dim() == 8) return AutMatrix<T>::identity(alg);

  std::vector<Octonion<T>> src{Octonion<T>::unit()}, img{Octonion<T>::unit()};
  const std::size_t gens = d.dim() == 4 ? 2 : d.dim() == 2 ? 1 : 0;
  for (std::size_t k = 1; k <= gens; ++k) {
    const Octonion<T>& u = d.basis()[k];
    auto v = detail::rescale_to_norm(*alg, d_prime.basis()[k], alg->norm(u));
    if (!v) throw Error(ErrorKind::NotIsomorphic, "generator norms differ by a non-square factor");
    src.push_back(u);
    img.push_back(detail::positive_sign(*v));
  }
  if (gens == 2) {
    src.push_back(alg->multiply(src[1], src[2]));
    img.push_back(alg->multiply(img[1], img[2]));
  }
  auto basis_of = [&](const std::vector<Octonion<T>>& v) {
    std::vector<Octonion<T>> b{Octonion<T>::unit()};
    for (std::size_t i = 1; i < v.size(); ++i) b.push_back(v[i]);
    return Subalgebra<T>::from_orthogonal_basis(alg, std::move(b));
  };
  return detail::extend_pairs(basis_of(src), basis_of(img), src, img);
}

/// The element g with g R_p g^-1 = t_prime, where t_prime fixes Q' pointwise and its
/// quaternion parameter has the same trace as p (the centralizers are then conjugate by g).
template <class T>
AutMatrix<T> centralizer_conjugator(const Subalgebra<T>& q, const Octonion<T>& b, const QuaternionPoint<T>& p,
                                    const AutMatrix<T>& t_prime, const Subalgebra<T>& q_prime) {
  const auto& alg = *q.algebra();
  detail::require_quaternion_doubling(q, b);
  const AutMatrix<T> phi = conjugating_element(q, q_prime);
  const AutMatrix<T> t2 = compose(inverse(phi), compose(t_prime, phi));
  // t2 fixes Q pointwise, so t2 = R_{p2} with p2 = t2(b) conj(b) / N(b).
  const Octonion<T> p2 = alg.multiply(t2.apply(b), alg.conjugate(b)) * (T(1) / alg.norm(b));
  const double loose = is_exact_v<T> ? 0.0 : tol::residual;
  if (!q.contains(p2, loose)) throw Error(ErrorKind::NotIsomorphic, "t' does not fix the image quaternion algebra");
  if (!near_zero(p2.c[0] - p.value().c[0], loose))
    throw Error(ErrorKind::NotIsomorphic, "p and the parameter of t' have different traces");

  const Octonion<T> u = p.value() - Octonion<T>::unit() * p.value().c[0];
  const Octonion<T> v = p2 - Octonion<T>::unit() * p2.c[0];
  // c = N(u) - v u sends u to v under conjugation; for v = -u use a pure element orthogonal to u.
  Octonion<T> c = Octonion<T>::unit() * alg.norm(u) - alg.multiply(v, u);
  if (near_zero(alg.norm(c), loose)) {
    std::vector<Octonion<T>> family{Octonion<T>::unit(), u};
    for (const auto& e : q.pure_basis())
      if (auto r = detail::orthogonalize(alg, e, family)) {
        c = *r;
        break;
      }
  }
  return compose(phi, make_inner_ext(q, b, QuaternionPoint<T>(c, q)));
}

}  // namespace g2kit
