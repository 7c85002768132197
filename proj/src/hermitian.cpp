#include "g2kit/hermitian.hpp"

namespace g2kit {

Matrix<Complex<double>> random_special_unitary(Xorshift64Star& rng) {
  using C = Complex<double>;
  Matrix<C> q(3, 3);
  for (std::size_t col = 0; col < 3; ++col) {
    std::array<C, 3> v;
    for (auto& z : v) z = C(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    // Two Gram-Schmidt passes against the earlier columns.
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < col; ++k) {
        C dot;
        for (std::size_t i = 0; i < 3; ++i) dot += q(i, k).conj() * v[i];
        for (std::size_t i = 0; i < 3; ++i) v[i] -= dot * q(i, k);
      }
    double n = 0.0;
    for (const auto& z : v) n += z.norm2();
    n = std::sqrt(n);
    if (n < 1e-6) throw Error(ErrorKind::SolverFailure, "degenerate random column");
    for (std::size_t i = 0; i < 3; ++i) q(i, col) = v[i] / C(n);
  }
  // det q is a unit complex number; divide the last column by it.
  C d = det3(q);
  for (std::size_t i = 0; i < 3; ++i) q(i, 2) = q(i, 2) / d;
  return q;
}

}  // namespace g2kit
