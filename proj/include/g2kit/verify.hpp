#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "g2kit/automorphism.hpp"
#include "g2kit/derivation.hpp"
#include "g2kit/rng.hpp"

namespace g2kit {

template <class T>
T random_scalar(Xorshift64Star& rng) {
  if constexpr (is_exact_v<T>) {
    return rng.small_rational();
  } else {
    return rng.uniform(-1.0, 1.0);
  }
}

template <class T>
Octonion<T> random_octonion(Xorshift64Star& rng) {
  Octonion<T> x;
  for (auto& c : x.c) c = random_scalar<T>(rng);
  return x;
}

/// Random element of the span of a subalgebra, never zero.
template <class T>
Octonion<T> random_element(const Subalgebra<T>& s, Xorshift64Star& rng) {
  for (;;) {
    Octonion<T> x;
    for (const auto& e : s.basis()) x += e * random_scalar<T>(rng);
    if (!near_zero(s.algebra()->norm(x), is_exact_v<T> ? 0.0 : 1e-6)) return x;
  }
}

/// Norm-one element of a quaternion subalgebra by the Cayley transform (1 + u)(1 - u)^-1
/// of a pure u; exact on the rational backend.
template <class T>
Octonion<T> random_unit_quaternion(const Subalgebra<T>& q, Xorshift64Star& rng) {
  const auto& alg = *q.algebra();
  Octonion<T> u;
  for (const auto& e : q.pure_basis()) u += e * random_scalar<T>(rng);
  const Octonion<T> one = Octonion<T>::unit();
  return alg.multiply(one + u, alg.inverse(one - u));
}

struct AxiomCounts {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct AxiomReport {
  std::string backend;
  std::size_t trials = 0;
  AxiomCounts norm_multiplicativity, left_alternative, right_alternative, moufang, conjugation;
  double worst_relative_residual = 0.0;
  std::optional<std::string> first_failure;

  bool passed() const { return !first_failure.has_value(); }
};

/// Property suite of the composition-algebra axioms over random pairs and triples:
/// exact equality on the rational backend, relative error 1e-9 on floats.
template <class T>
AxiomReport check_axioms(const AlgebraPtr<T>& alg, std::size_t trials, std::uint64_t seed) {
  AxiomReport r;
  r.backend = ScalarTraits<T>::name;
  r.trials = trials;
  Xorshift64Star rng(seed);
  auto check = [&](AxiomCounts& counts, const char* name, std::size_t trial, const Octonion<T>& lhs,
                   const Octonion<T>& rhs, double scale) {
    ++counts.checked;
    double res = (lhs - rhs).max_abs() / std::max(scale, 1.0);
    bool ok;
    if constexpr (is_exact_v<T>) {
      ok = lhs == rhs;
    } else {
      r.worst_relative_residual = std::max(r.worst_relative_residual, res);
      ok = res <= tol::equality;
    }
    if (!ok) {
      ++counts.failed;
      if (!r.first_failure) r.first_failure = std::string(name) + " fails at trial " + std::to_string(trial);
    }
  };
  const auto& a = *alg;
  for (std::size_t i = 0; i < trials; ++i) {
    const Octonion<T> x = random_octonion<T>(rng), y = random_octonion<T>(rng), z = random_octonion<T>(rng);
    const double s2 = x.max_abs() * y.max_abs();
    const double s3 = s2 * std::max(x.max_abs(), z.max_abs()) * x.max_abs();
    const Octonion<T> xy = a.multiply(x, y);
    Octonion<T> nxy, nn;
    nxy.c[0] = a.norm(xy);
    nn.c[0] = a.norm(x) * a.norm(y);
    check(r.norm_multiplicativity, "norm multiplicativity", i, nxy, nn, s2 * s2);
    check(r.left_alternative, "left alternative law", i, a.multiply(x, xy), a.multiply(a.multiply(x, x), y),
          s2 * x.max_abs());
    check(r.right_alternative, "right alternative law", i, a.multiply(a.multiply(y, x), x),
          a.multiply(y, a.multiply(x, x)), s2 * x.max_abs());
    check(r.moufang, "Moufang identity", i, a.multiply(xy, a.multiply(z, x)),
          a.multiply(x, a.multiply(a.multiply(y, z), x)), s3);
    check(r.conjugation, "conjugation anti-automorphism", i, a.conjugate(xy),
          a.multiply(a.conjugate(y), a.conjugate(x)), s2);
  }
  return r;
}

template <class T>
struct RpTrial {
  Octonion<T> p1, c1;
  bool commutes = false;
  bool member = false;
};

template <class T>
struct RpReport {
  Octonion<T> p;
  std::size_t trials = 0;
  std::size_t commuting = 0;
  std::size_t non_commuting = 0;
  std::size_t disagreements = 0;
  std::optional<RpTrial<T>> first_disagreement;

  bool both_outcomes() const { return commuting > 0 && non_commuting > 0; }
  bool passed() const { return disagreements == 0 && (trials < 50 || both_outcomes()); }
};

/// One trial of the R_p centralizer lemma: does R_{p1} o I~_{c1} commute with R_p, and
/// is p1 c1 in k(p)?
template <class T>
RpTrial<T> rp_trial(const Subalgebra<T>& q, const Octonion<T>& b, const AutMatrix<T>& rp,
                    const Subalgebra<T>& kp, const Octonion<T>& p1, const Octonion<T>& c1) {
  const AutMatrix<T> g = compose(make_rp(q, b, QuaternionPoint<T>(p1, q)), make_inner_ext(q, b, QuaternionPoint<T>(c1, q)));
  RpTrial<T> t{p1, c1, commutes(g, rp), kp.contains(q.algebra()->multiply(p1, c1), is_exact_v<T> ? 0.0 : tol::residual)};
  return t;
}

/// Randomized check of Z_G(R_p) = {R_{p1} I~_{c1} : p1 c1 in k(p)} over Q = span{1,e1,e2,e3},
/// b = e4. Half of the trials draw c1 = p1^-1 l with l in k(p), so both outcomes occur.
template <class T>
RpReport<T> verify_rp_centralizer(const AlgebraPtr<T>& alg, const Octonion<T>& p, std::size_t trials,
                                  std::uint64_t seed) {
  const Subalgebra<T> q = default_quaternion(alg);
  const Octonion<T> b = Octonion<T>::basis(4);
  const QuaternionPoint<T> point(p, q);
  if (near_zero(p - Octonion<T>::unit() * p.c[0], 0.0))
    throw Error(ErrorKind::InvalidInput, "p must not be a scalar");
  const AutMatrix<T> rp = make_rp(q, b, point);
  const Subalgebra<T> kp = generate_subalgebra(alg, {p});

  RpReport<T> r;
  r.p = p;
  r.trials = trials;
  Xorshift64Star rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const Octonion<T> p1 = random_unit_quaternion(q, rng);
    Octonion<T> c1;
    if (rng.integer(0, 1) == 0) {
      c1 = alg->multiply(alg->inverse(p1), random_element(kp, rng));
    } else {
      c1 = random_element(q, rng);
    }
    RpTrial<T> t = rp_trial(q, b, rp, kp, p1, c1);
    (t.commutes ? r.commuting : r.non_commuting) += 1;
    if (t.commutes != t.member) {
      ++r.disagreements;
      if (!r.first_disagreement) r.first_disagreement = t;
    }
  }
  return r;
}

struct InvolutionReport {
  std::size_t trials = 0;
  std::size_t rp_commuting = 0;
  std::size_t inner_commuting = 0;
  bool rho_centralizes_u2ext = false;
  std::size_t measured_dim = 0;
  std::size_t expected_dim = 0;
  std::size_t stabilizer_dim = 0;

  bool commutation_passed() const {
    return rp_commuting == trials && inner_commuting == trials && rho_centralizes_u2ext;
  }
  bool passed() const { return commutation_passed() && measured_dim == expected_dim; }
};

/// Exact check that G(O, Q) centralizes t = R_{-1}, that rho centralizes diag(1, -1, -1),
/// and the dimension of Z_G(R_{-1}) against the tabulated U(2) x| Z/2 value.
InvolutionReport verify_involution_centralizer(std::size_t trials, std::uint64_t seed);

/// Random element of G(O/D) for a subalgebra D of the compact preset: su3_to_aut of a
/// random SU(3) matrix when dim D = 2, R_p with random unit p when dim D = 4.
AutMatrix<double> random_fixing_element(const Subalgebra<double>& d, Xorshift64Star& rng);

}  // namespace g2kit
