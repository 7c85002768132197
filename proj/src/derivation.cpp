#include "g2kit/derivation.hpp"

#include <cmath>

namespace g2kit {

const std::vector<Matrix<Rational>>& compact_derivations_exact() {
  static const std::vector<Matrix<Rational>> basis = [] {
    std::vector<Matrix<Rational>> out;
    for (auto& d : derivation_basis(Algebra<Rational>::compact())) out.push_back(std::move(d.d));
    return out;
  }();
  return basis;
}

const std::vector<Matrix<double>>& compact_derivations_float() {
  static const std::vector<Matrix<double>> basis = [] {
    std::vector<Matrix<double>> out;
    for (const auto& d : compact_derivations_exact()) out.push_back(to_double(d));
    return out;
  }();
  return basis;
}

AutMatrix<double> exponentiate(const Derivation<double>& d, double scale) {
  Matrix<double> a = d.d * scale;
  double norm = 0.0;
  for (std::size_t r = 0; r < 8; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < 8; ++c) row += std::abs(a(r, c));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  a *= std::ldexp(1.0, -squarings);

  Matrix<double> sum = Matrix<double>::identity(8);
  Matrix<double> term = Matrix<double>::identity(8);
  for (int n = 1; n < 60; ++n) {
    term = term * a;
    term *= 1.0 / n;
    sum += term;
    if (max_abs(term) < 1e-16) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;

  try {
    return certify(d.algebra, sum);
  } catch (const NotAutomorphismError& e) {
    throw Error(ErrorKind::CertificationFailure, std::string("exponential failed certification: ") + e.what());
  }
}

Derivation<double> random_derivation(Xorshift64Star& rng) {
  const auto& basis = compact_derivations_float();
  Matrix<double> d(8, 8);
  for (const auto& b : basis) d += b * rng.uniform(-1.0, 1.0);
  return {std::move(d), Algebra<double>::compact()};
}

AutMatrix<double> sample_automorphism(std::uint64_t seed) {
  Xorshift64Star rng(seed);
  auto result = AutMatrix<double>::identity(Algebra<double>::compact());
  for (int k = 0; k < 3; ++k) {
    Derivation<double> d = random_derivation(rng);
    double scale = rng.uniform(0.0, 4.0);
    result = compose(result, exponentiate(d, scale));
  }
  return result;
}

}  // namespace g2kit
