#pragma once

#include <cstdint>
#include <vector>

#include "g2kit/automorphism.hpp"
#include "g2kit/numeric.hpp"
#include "g2kit/octonion.hpp"
#include "g2kit/rng.hpp"

namespace g2kit {

/// Linear map D with D(xy) = D(x)y + xD(y); columns are D(e0)..D(e7).
template <class T>
struct Derivation {
  Matrix<T> d;
  AlgebraPtr<T> algebra;
};

/// The 512 x 64 Leibniz system in the unknowns D(r, c) (row-major, index 8r + c).
template <class T>
Matrix<T> leibniz_system(const Algebra<T>& alg) {
  Matrix<T> sys(512, 64);
  auto unknown = [](std::size_t r, std::size_t c) { return 8 * r + c; };
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t out = 0; out < 8; ++out) {
        const std::size_t row = 64 * i + 8 * j + out;
        sys(row, unknown(out, alg.index(i, j))) += alg.coefficient(i, j);
        for (std::size_t m = 0; m < 8; ++m) {
          if (alg.index(m, j) == out) sys(row, unknown(m, i)) -= alg.coefficient(m, j);
          if (alg.index(i, m) == out) sys(row, unknown(m, j)) -= alg.coefficient(i, m);
        }
      }
  return sys;
}

/// Basis of Der(O) as the nullspace of the Leibniz system (14 elements on the compact preset).
template <class T>
std::vector<Derivation<T>> derivation_basis(const AlgebraPtr<T>& alg) {
  auto kernel = nullspace(leibniz_system(*alg));
  std::vector<Derivation<T>> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    Matrix<T> d(8, 8);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) d(r, c) = v[8 * r + c];
    out.push_back({std::move(d), alg});
  }
  return out;
}

/// Largest Leibniz-rule defect over basis pairs; zero for a derivation.
template <class T>
double leibniz_residual(const Algebra<T>& alg, const Matrix<T>& d) {
  auto apply = [&](const Octonion<T>& x) { return Octonion<T>::from_span(d * std::span<const T>(x.c)); };
  double worst = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      auto ei = Octonion<T>::basis(i), ej = Octonion<T>::basis(j);
      auto lhs = apply(alg.multiply(ei, ej));
      auto rhs = alg.multiply(apply(ei), ej) + alg.multiply(ei, apply(ej));
      worst = std::max(worst, (lhs - rhs).max_abs());
    }
  return worst;
}

/// Derivation basis of the compact preset computed exactly once and converted to double.
const std::vector<Matrix<double>>& compact_derivations_float();
const std::vector<Matrix<Rational>>& compact_derivations_exact();

namespace detail {

/// Nullity of the linear map x -> sum_k x_k f(D_k), with f(D_k) flattened to columns.
template <class T, class F>
std::size_t commutant_nullity(const std::vector<Matrix<T>>& basis, F&& image) {
  if (basis.empty()) return 0;
  Matrix<T> first = image(basis[0]);
  const std::size_t len = first.rows() * first.cols();
  Matrix<T> sys(len, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Matrix<T> c = k == 0 ? first : image(basis[k]);
    for (std::size_t e = 0; e < len; ++e) sys(e, k) = c.data()[e];
  }
  if constexpr (is_exact_v<T>) {
    return basis.size() - rank(sys);
  } else {
    return basis.size() - reduce_row_echelon_abs(sys, tol::residual).size();
  }
}

template <class T>
std::vector<Matrix<T>> derivation_matrices(const AlgebraPtr<T>& alg) {
  if (alg->is_compact()) {
    if constexpr (is_exact_v<T>) {
      return compact_derivations_exact();
    } else {
      return compact_derivations_float();
    }
  }
  std::vector<Matrix<T>> out;
  for (auto& d : derivation_basis(alg)) out.push_back(std::move(d.d));
  return out;
}

}  // namespace detail

/// dim {D in Der(O) : tD = Dt}, the Lie-algebra dimension of the centralizer of t.
template <class T>
std::size_t centralizer_dimension(const AutMatrix<T>& t) {
  const auto basis = detail::derivation_matrices(t.algebra());
  const Matrix<T>& m = t.matrix();
  return detail::commutant_nullity(basis, [&](const Matrix<T>& d) { return m * d - d * m; });
}

/// dim {D in Der(O) : D(S) is contained in S}, the Lie-algebra dimension of G(O, S).
template <class T>
std::size_t stabilizer_dimension(const Subalgebra<T>& s) {
  const auto basis = detail::derivation_matrices(s.algebra());
  const auto complement = orthogonal_complement(s);
  // Components B(D(s_i), c_j) must vanish.
  const auto& alg = *s.algebra();
  return detail::commutant_nullity(basis, [&](const Matrix<T>& d) {
    Matrix<T> block(s.dim(), complement.size());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      auto image = Octonion<T>::from_span(d * std::span<const T>(s.basis()[i].c));
      for (std::size_t j = 0; j < complement.size(); ++j) block(i, j) = alg.bilinear(image, complement[j]);
    }
    return block;
  });
}

/// exp(scale * d) by scaling and squaring; the result must certify within 1e-8.
AutMatrix<double> exponentiate(const Derivation<double>& d, double scale);

/// Deterministic function of the seed: product of three exponentials of pseudo-random
/// derivations. Full support on G2, not Haar-uniform.
AutMatrix<double> sample_automorphism(std::uint64_t seed);

/// Random element of Der(O) (compact preset) with coefficients uniform in [-1, 1].
Derivation<double> random_derivation(Xorshift64Star& rng);

}  // namespace g2kit
