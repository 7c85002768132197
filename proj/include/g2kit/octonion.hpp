#pragma once

#include <array>
#include <bit>
#include <optional>
#include <cmath>
#include <memory>
#include <span>
#include <vector>

#include "g2kit/numeric.hpp"

namespace g2kit {

/// Element of the octonion algebra in the standard basis e0 = 1, e1, ..., e7 with
/// e3 = e1e2, e5 = e1e4, e6 = e2e4, e7 = e3e4.
template <class T>
struct Octonion {
  std::array<T, 8> c{};

  Octonion() {
    for (auto& x : c) x = T(0);
  }
  explicit Octonion(const std::array<T, 8>& coords) : c(coords) {}

  static Octonion unit() { return basis(0); }
  static Octonion basis(std::size_t i) {
    Octonion o;
    o.c[i] = T(1);
    return o;
  }
  static Octonion from_span(std::span<const T> v) {
    Octonion o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = v[i];
    return o;
  }

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  const T& real() const { return c[0]; }

  Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  Octonion& operator*=(const T& s) {
    for (auto& x : c) x = x * s;
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend Octonion operator*(Octonion a, const T& s) { return a *= s; }
  friend Octonion operator*(const T& s, Octonion a) { return a *= s; }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }

  std::vector<T> to_vector() const { return {c.begin(), c.end()}; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : c) m = std::max(m, magnitude(x));
    return m;
  }
};

template <class T>
bool near_zero(const Octonion<T>& x, double tolerance = tol::equality) {
  for (const auto& v : x.c)
    if (!near_zero(v, tolerance)) return false;
  return true;
}

template <class T>
bool approx_equal(const Octonion<T>& a, const Octonion<T>& b, double tolerance = tol::equality) {
  return near_zero(a - b, tolerance);
}

inline Octonion<double> to_double(const Octonion<Rational>& x) {
  Octonion<double> out;
  for (std::size_t i = 0; i < 8; ++i) out.c[i] = to_double(x.c[i]);
  return out;
}

/// Octonion algebra obtained by three Cayley-Dickson doublings of the base field with
/// parameters (c1, c2, c3): (a,b)(c,d) = (ac + lambda*conj(d)b, da + b*conj(c)).
/// The compact preset is (-1, -1, -1). The multiplication table is derived once.
template <class T>
class Algebra {
 public:
  explicit Algebra(const std::array<T, 3>& params) : params_(params) {
    for (const auto& p : params_)
      if (p == T(0)) throw Error(ErrorKind::InvalidInput, "doubling parameters must be nonzero");
    build_table();
  }

  static std::shared_ptr<const Algebra> compact() {
    static const auto instance = std::make_shared<const Algebra>(std::array<T, 3>{T(-1), T(-1), T(-1)});
    return instance;
  }

  const std::array<T, 3>& params() const noexcept { return params_; }
  bool is_compact() const { return params_[0] == T(-1) && params_[1] == T(-1) && params_[2] == T(-1); }
  bool same_as(const Algebra& other) const { return this == &other || params_ == other.params_; }

  /// e_i e_j = coefficient(i, j) * e_index(i, j).
  const T& coefficient(std::size_t i, std::size_t j) const { return table_[i][j].coef; }
  std::size_t index(std::size_t i, std::size_t j) const { return table_[i][j].index; }

  Octonion<T> multiply(const Octonion<T>& x, const Octonion<T>& y) const {
    Octonion<T> out;
    for (std::size_t i = 0; i < 8; ++i) {
      if (x.c[i] == T(0)) continue;
      for (std::size_t j = 0; j < 8; ++j) {
        if (y.c[j] == T(0)) continue;
        const Term& t = table_[i][j];
        out.c[t.index] += t.coef * x.c[i] * y.c[j];
      }
    }
    return out;
  }

  Octonion<T> conjugate(const Octonion<T>& x) const {
    Octonion<T> out = -x;
    out.c[0] = x.c[0];
    return out;
  }

  /// N(x) = x * conj(x); diagonal in the standard basis.
  T norm(const Octonion<T>& x) const {
    T s(0);
    for (std::size_t i = 0; i < 8; ++i) s += weights_[i] * x.c[i] * x.c[i];
    return s;
  }

  /// Halved polarization (N(x+y) - N(x) - N(y)) / 2, so the compact basis is orthonormal.
  T bilinear(const Octonion<T>& x, const Octonion<T>& y) const {
    T s(0);
    for (std::size_t i = 0; i < 8; ++i) s += weights_[i] * x.c[i] * y.c[i];
    return s;
  }

  T trace(const Octonion<T>& x) const { return T(2) * x.c[0]; }

  Octonion<T> inverse(const Octonion<T>& x) const {
    T n = norm(x);
    if (near_zero(n, 0.0)) throw Error(ErrorKind::DivisionByZero, "inverse of a norm-zero element");
    return conjugate(x) * (T(1) / n);
  }

  /// Norms of the standard basis vectors.
  const std::array<T, 8>& weights() const noexcept { return weights_; }

 private:
  struct Term {
    T coef{0};
    std::size_t index = 0;
  };

  static std::vector<T> cd_conj(std::span<const T> x) {
    std::vector<T> out(x.begin(), x.end());
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return out;
  }

  std::vector<T> cd_product(std::span<const T> x, std::span<const T> y) const {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    const T& lambda = params_[std::countr_zero(h)];
    auto a = x.subspan(0, h), b = x.subspan(h);
    auto c = y.subspan(0, h), d = y.subspan(h);
    auto dbar = cd_conj(d);
    auto cbar = cd_conj(c);
    auto ac = cd_product(a, c);
    auto db = cd_product(dbar, b);
    auto da = cd_product(d, a);
    auto bc = cd_product(b, cbar);
    std::vector<T> out(n);
    for (std::size_t k = 0; k < h; ++k) {
      out[k] = ac[k] + lambda * db[k];
      out[h + k] = da[k] + bc[k];
    }
    return out;
  }

  void build_table() {
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        auto ei = Octonion<T>::basis(i).to_vector();
        auto ej = Octonion<T>::basis(j).to_vector();
        auto p = cd_product(ei, ej);
        std::size_t nonzero = 0;
        for (std::size_t k = 0; k < 8; ++k) {
          if (p[k] != T(0)) {
            table_[i][j] = Term{p[k], k};
            ++nonzero;
          }
        }
        if (nonzero != 1) throw Error(ErrorKind::InvalidInput, "basis product is not a monomial");
      }
    }
    for (std::size_t i = 0; i < 8; ++i) {
      // e_i conj(e_i) = N(e_i) * 1
      auto ei = Octonion<T>::basis(i);
      weights_[i] = multiply(ei, conjugate(ei)).c[0];
    }
  }

  std::array<T, 3> params_;
  std::array<std::array<Term, 8>, 8> table_{};
  std::array<T, 8> weights_{};
};

template <class T>
using AlgebraPtr = std::shared_ptr<const Algebra<T>>;

namespace detail {

inline double independence_tol() { return tol::residual; }

/// Removes the components of x along an orthogonal family. Returns the residual
/// when it is nonzero (relative to x on the float backend); float residuals are
/// normalized to unit norm.
template <class T>
std::optional<Octonion<T>> orthogonalize(const Algebra<T>& alg, const Octonion<T>& x,
                                         const std::vector<Octonion<T>>& family) {
  Octonion<T> r = x;
  for (const auto& f : family) {
    T nf = alg.norm(f);
    r -= f * (alg.bilinear(r, f) / nf);
  }
  if constexpr (is_exact_v<T>) {
    if (near_zero(r)) return std::nullopt;
    return r;
  } else {
    double nx = std::sqrt(std::abs(alg.norm(x)));
    double nr = std::sqrt(std::abs(alg.norm(r)));
    if (nr <= independence_tol() * std::max(nx, 1e-300)) return std::nullopt;
    // Second pass restores orthogonality lost to cancellation.
    for (const auto& f : family) r -= f * (alg.bilinear(r, f) / alg.norm(f));
    nr = std::sqrt(std::abs(alg.norm(r)));
    return r * (1.0 / nr);
  }
}

}  // namespace detail

/// Composition subalgebra given by an orthogonal basis whose first vector is 1.
template <class T>
class Subalgebra {
 public:
  /// Validates orthogonality, nondegeneracy, closure, and the dimension.
  static Subalgebra from_orthogonal_basis(AlgebraPtr<T> alg, std::vector<Octonion<T>> basis) {
    Subalgebra s(std::move(alg), std::move(basis));
    s.validate();
    return s;
  }

  const std::vector<Octonion<T>>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const AlgebraPtr<T>& algebra() const noexcept { return alg_; }

  /// Orthogonal projection onto the span.
  Octonion<T> project(const Octonion<T>& x) const {
    Octonion<T> p;
    for (const auto& b : basis_) p += b * (alg_->bilinear(x, b) / alg_->norm(b));
    return p;
  }

  /// Coordinates of x along the basis (valid when x lies in the span).
  std::vector<T> coordinates(const Octonion<T>& x) const {
    std::vector<T> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.push_back(alg_->bilinear(x, b) / alg_->norm(b));
    return out;
  }

  bool contains(const Octonion<T>& x, double tolerance = tol::equality) const {
    Octonion<T> r = x - project(x);
    if constexpr (is_exact_v<T>) {
      return near_zero(r);
    } else {
      return r.max_abs() <= tolerance * std::max(1.0, x.max_abs());
    }
  }

  /// Trace-zero part of the basis (all vectors after 1).
  std::vector<Octonion<T>> pure_basis() const { return {basis_.begin() + 1, basis_.end()}; }

 private:
  Subalgebra(AlgebraPtr<T> alg, std::vector<Octonion<T>> basis)
      : alg_(std::move(alg)), basis_(std::move(basis)) {}

  void validate() const {
    const std::size_t d = basis_.size();
    if (d != 1 && d != 2 && d != 4 && d != 8)
      throw Error(ErrorKind::NotComposition, "dimension " + std::to_string(d) + " is not 1, 2, 4 or 8");
    const double loose = is_exact_v<T> ? 0.0 : tol::residual;
    if (!approx_equal(basis_[0], Octonion<T>::unit(), loose))
      throw Error(ErrorKind::NotComposition, "first basis vector must be 1");
    for (std::size_t i = 0; i < d; ++i) {
      T ni = alg_->norm(basis_[i]);
      if (near_zero(ni, loose)) throw Error(ErrorKind::NotComposition, "degenerate norm form on subalgebra");
      for (std::size_t j = i + 1; j < d; ++j)
        if (!near_zero(alg_->bilinear(basis_[i], basis_[j]), loose))
          throw Error(ErrorKind::NotComposition, "basis is not orthogonal");
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!contains(alg_->multiply(basis_[i], basis_[j]), loose))
          throw Error(ErrorKind::NotComposition, "span is not closed under multiplication");
  }

  AlgebraPtr<T> alg_;
  std::vector<Octonion<T>> basis_;
};

/// Smallest subalgebra containing 1 and the seeds, with a Gram-Schmidt basis built
/// in deterministic order (1, then seeds, then products in basis-index order).
template <class T>
Subalgebra<T> generate_subalgebra(const AlgebraPtr<T>& alg, const std::vector<Octonion<T>>& seeds) {
  if (seeds.empty()) throw Error(ErrorKind::InvalidInput, "generate_subalgebra needs at least one seed");
  std::vector<Octonion<T>> basis{Octonion<T>::unit()};
  auto add = [&](const Octonion<T>& x) {
    if (basis.size() >= 8) return false;
    auto r = detail::orthogonalize(*alg, x, basis);
    if (!r) return false;
    if (near_zero(alg->norm(*r), is_exact_v<T> ? 0.0 : tol::residual))
      throw Error(ErrorKind::NotComposition, "closure contains an isotropic direction");
    basis.push_back(*r);
    return true;
  };
  for (const auto& s : seeds) add(s);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = basis.size();
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j)
        if (add(alg->multiply(basis[i], basis[j]))) grew = true;
  }
  return Subalgebra<T>::from_orthogonal_basis(alg, std::move(basis));
}

/// Orthogonal basis of D-perp, built by Gram-Schmidt over e0..e7 in index order.
template <class T>
std::vector<Octonion<T>> orthogonal_complement(const Subalgebra<T>& d) {
  const auto& alg = *d.algebra();
  std::vector<Octonion<T>> family = d.basis();
  std::vector<Octonion<T>> out;
  for (std::size_t i = 0; i < 8 && family.size() < 8; ++i) {
    auto r = detail::orthogonalize(alg, Octonion<T>::basis(i), family);
    if (!r) continue;
    family.push_back(*r);
    out.push_back(*r);
  }
  return out;
}

/// D + D a for a in D-perp with N(a) != 0.
template <class T>
Subalgebra<T> double_subalgebra(const Subalgebra<T>& d, const Octonion<T>& a) {
  const auto& alg = d.algebra();
  if (2 * d.dim() > 8) throw Error(ErrorKind::DimensionOverflow, "cannot double the full algebra");
  const double loose = is_exact_v<T> ? 0.0 : tol::residual;
  if (near_zero(alg->norm(a), loose)) throw Error(ErrorKind::NormZero, "doubling element has zero norm");
  for (const auto& b : d.basis())
    if (!near_zero(alg->bilinear(a, b), loose * std::max(1.0, a.max_abs())))
      throw Error(ErrorKind::NotOrthogonal, "doubling element is not orthogonal to the subalgebra");
  std::vector<Octonion<T>> basis = d.basis();
  for (const auto& b : d.basis()) basis.push_back(alg->multiply(b, a));
  return Subalgebra<T>::from_orthogonal_basis(alg, std::move(basis));
}

/// The quadratic subalgebra span{1, e1} and quaternion subalgebra span{1, e1, e2, e3}
/// used as the standing choices on the compact preset.
template <class T>
Subalgebra<T> default_quadratic(const AlgebraPtr<T>& alg) {
  return Subalgebra<T>::from_orthogonal_basis(alg, {Octonion<T>::unit(), Octonion<T>::basis(1)});
}

template <class T>
Subalgebra<T> default_quaternion(const AlgebraPtr<T>& alg) {
  return Subalgebra<T>::from_orthogonal_basis(
      alg, {Octonion<T>::unit(), Octonion<T>::basis(1), Octonion<T>::basis(2), Octonion<T>::basis(3)});
}

}  // namespace g2kit
