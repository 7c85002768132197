#include "g2kit/verify.hpp"

#include "g2kit/hermitian.hpp"

namespace g2kit {

InvolutionReport verify_involution_centralizer(std::size_t trials, std::uint64_t seed) {
  const auto alg = Algebra<Rational>::compact();
  const Subalgebra<Rational> q = default_quaternion(alg);
  const Octonion<Rational> b = Octonion<Rational>::basis(4);
  const AutMatrix<Rational> t = make_rp(q, b, QuaternionPoint<Rational>(Octonion<Rational>::unit() * Rational(-1), q));

  InvolutionReport r;
  r.trials = trials;
  Xorshift64Star rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const auto p1 = random_unit_quaternion(q, rng);
    const auto c1 = random_element(q, rng);
    if (commutes(make_rp(q, b, QuaternionPoint<Rational>(p1, q)), t)) ++r.rp_commuting;
    if (commutes(make_inner_ext(q, b, QuaternionPoint<Rational>(c1, q)), t)) ++r.inner_commuting;
  }

  using C = Complex<Rational>;
  const auto space = HermitianSpace<Rational>::standard(alg);
  const auto u2ext = su3_to_aut(space, diagonal3<Rational>(C(1), C(-1), C(-1)));
  const auto rho = make_rho(default_quadratic(alg), Octonion<Rational>::basis(2), b);
  r.rho_centralizes_u2ext = commutes(rho, u2ext);

  r.measured_dim = centralizer_dimension(t);
  r.expected_dim = 4;  // the U(2) x| Z/2 row of the orbit table
  r.stabilizer_dim = stabilizer_dimension(q);
  return r;
}

AutMatrix<double> random_fixing_element(const Subalgebra<double>& d, Xorshift64Star& rng) {
  const auto& alg = d.algebra();
  switch (d.dim()) {
    case 8:
      return AutMatrix<double>::identity(alg);
    case 4: {
      const Octonion<double> b = orthogonal_complement(d)[0];
      return make_rp(d, b, QuaternionPoint<double>(random_unit_quaternion(d, rng), d));
    }
    case 2: {
      const Octonion<double> a = orthogonal_complement(d)[0];
      const Octonion<double> b = orthogonal_complement(double_subalgebra(d, a))[0];
      const auto space = HermitianSpace<double>::build(d, a, b);
      return su3_to_aut(space, random_special_unitary(rng));
    }
    default:
      return sample_automorphism(rng.next());
  }
}

}  // namespace g2kit
