#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <numbers>

#include "g2kit/orbit.hpp"
#include "g2kit/verify.hpp"
#include "helpers.hpp"

using namespace g2kit;
using testing::e;
using testing::q;

namespace {

std::array<std::complex<double>, 3> diag_of(const Matrix<Complex<double>>& a) {
  return {cplx(a(0, 0).re, a(0, 0).im), cplx(a(1, 1).re, a(1, 1).im), cplx(a(2, 2).re, a(2, 2).im)};
}

AutMatrix<double> conjugate(const AutMatrix<double>& g, const AutMatrix<double>& t) {
  return compose(g, compose(t, inverse(g)));
}

}  // namespace

TEST_CASE("type lookup") {
  CHECK(expected_dim(OrbitType::Identity) == 14);
  CHECK(expected_dim(OrbitType::SU3Type) == 8);
  CHECK(expected_dim(OrbitType::U2Type) == 4);
  CHECK(expected_dim(OrbitType::U2Ext) == 4);
  CHECK(expected_dim(OrbitType::TorusExt) == 2);
  CHECK(expected_dim(OrbitType::StronglyRegular) == 2);
  CHECK(expected_components(OrbitType::U2Ext) == 2);
  CHECK(expected_components(OrbitType::TorusExt) == 2);
  CHECK(expected_components(OrbitType::U2Type) == 1);
  for (OrbitType t : kTableOrder) CHECK(parse_orbit_type(to_string(t)) == t);
  CHECK_FALSE(parse_orbit_type("Torus").has_value());
}

TEST_CASE("spectrum decisions") {
  const double tol = 1e-7;
  auto w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  auto z = std::polar(1.0, 0.9);
  CHECK(classify_spectrum({cplx(1), cplx(1), cplx(1)}, tol) == OrbitType::Identity);
  CHECK(classify_spectrum({w, w, w}, tol) == OrbitType::SU3Type);
  CHECK(classify_spectrum({cplx(1), cplx(-1), cplx(-1)}, tol) == OrbitType::U2Ext);
  CHECK(classify_spectrum({z, z, std::conj(z * z)}, tol) == OrbitType::U2Type);
  CHECK(classify_spectrum({cplx(1), z, std::conj(z)}, tol) == OrbitType::TorusExt);
  CHECK(classify_spectrum({std::polar(1.0, 0.3), std::polar(1.0, 0.5), std::polar(1.0, -0.8)}, tol) ==
        OrbitType::StronglyRegular);
  // +-i are admissible torus parameters for the classifier
  CHECK(classify_spectrum({cplx(1), cplx(0, 1), cplx(0, -1)}, tol) == OrbitType::TorusExt);
}

TEST_CASE("near-boundary spectra are ambiguous, not silently decided") {
  const double tol = 1e-7;
  auto z = std::polar(1.0, 0.9);
  auto kind = [&](const Spectrum& s) {
    try {
      classify_spectrum(s, tol);
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind({z, z * std::polar(1.0, 5e-7), std::conj(z * z)}) == ErrorKind::AmbiguousSpectrum);
  CHECK(kind({std::polar(1.0, 3e-7), z, std::conj(z)}) == ErrorKind::AmbiguousSpectrum);
  // just inside the tolerance is equal, well outside is distinct
  CHECK(classify_spectrum({z, z * std::polar(1.0, 5e-8), std::conj(z * z)}, tol) == OrbitType::U2Type);
  CHECK(classify_spectrum({z, z * std::polar(1.0, 5e-6), std::conj(z * z) * std::polar(1.0, -5e-6)}, tol) ==
        OrbitType::StronglyRegular);
}

TEST_CASE("classify recovers every representative") {
  for (OrbitType type : kTableOrder) {
    auto r = classify(representative(type));
    INFO(to_string(type));
    CHECK(r.type == type);
    CHECK(r.witness.has_value() == (expected_components(type) == 2));
  }
}

TEST_CASE("spectra of the representatives") {
  for (OrbitType type : kTableOrder) {
    auto want = diag_of(representative_matrix(type, default_theta(), default_phi()));
    auto got = classify(representative(type)).spectrum;
    for (const auto& z : want) {
      double best = 1e9;
      for (const auto& g : got) best = std::min(best, std::abs(g - z));
      CHECK(best < 1e-7);
    }
  }
}

TEST_CASE("measured centralizer dimensions of the table rows, from the weight-count oracle") {
  // Frozen from oracle::weight_count_dim on the representative diagonals.
  const std::array<int, 6> frozen{14, 2, 4, 4, 6, 8};
  for (std::size_t i = 0; i < kTableOrder.size(); ++i) {
    auto diag = diag_of(representative_matrix(kTableOrder[i], default_theta(), default_phi()));
    CHECK(oracle::weight_count_dim(diag) == frozen[i]);
    CHECK(static_cast<int>(classify(representative(kTableOrder[i])).measured_dim) == frozen[i]);
  }
}

TEST_CASE("table rows whose measurement matches the lookup") {
  auto rows = table_report(default_theta(), default_phi(), 1e-7);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.report.type == r.row);
    CHECK(r.report.witness.has_value() == r.witness_expected());
  }
  CHECK(rows[0].passes());
  CHECK(rows[1].passes());
  CHECK(rows[3].passes());
  CHECK(rows[5].passes());
}

TEST_CASE("witnesses are involutions commuting with t and conjugating L") {
  for (OrbitType type : {OrbitType::TorusExt, OrbitType::U2Ext}) {
    auto t = representative(type);
    auto r = classify(t);
    REQUIRE(r.witness);
    const auto& g = *r.witness;
    CHECK(commutes(g, t));
    CHECK(approx_equal(compose(g, g), AutMatrix<double>::identity(t.algebra())));
    CHECK(fixed_subalgebra(g).dim() == 4);
  }
}

TEST_CASE("classification is conjugation invariant") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = sample_automorphism(1000 + seed);
    auto t = representative(kTableOrder[seed % 6]);
    auto r1 = classify(t), r2 = classify(conjugate(g, t));
    CHECK(r1.type == r2.type);
    CHECK(r1.measured_dim == r2.measured_dim);
    CHECK(r1.fixed_dim == r2.fixed_dim);
    CHECK(r2.witness.has_value() == r1.witness.has_value());
  }
}

TEST_CASE("conjugated torus elements with other parameters") {
  Xorshift64Star rng(41);
  auto alg = Algebra<double>::compact();
  auto space = HermitianSpace<double>::standard(alg);
  for (int t = 0; t < 20; ++t) {
    const double th = rng.uniform(0.2, 3.0);
    auto u = random_special_unitary(rng);
    auto a = u * diagonal3(Complex<double>(1.0), unit_phase(th), unit_phase(-th));
    Matrix<Complex<double>> uh(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) uh(r, c) = u(c, r).conj();
    auto report = classify(su3_to_aut(space, a * uh));
    CHECK(report.type == OrbitType::TorusExt);
    CHECK(report.fixed_dim == 4);
  }
}

TEST_CASE("spectrum and fixed-subalgebra coherence on random elements") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = classify(sample_automorphism(seed));
    CHECK(r.fixed_dim == 2);
    for (const auto& z : r.spectrum) CHECK(std::abs(z - 1.0) > 1e-6);
    CHECK(r.measured_dim == 2);
  }
}

TEST_CASE("R_{-1} and R_p classify as the Z/2 types") {
  auto alg = Algebra<double>::compact();
  auto qd = default_quaternion(alg);
  auto r1 = make_rp(qd, e<double>(4), QuaternionPoint<double>(e<double>(0) * -1.0, qd));
  CHECK(classify(r1).type == OrbitType::U2Ext);
  auto p = e<double>(0) * 0.6 + e<double>(2) * 0.8;
  CHECK(classify(make_rp(qd, e<double>(4), QuaternionPoint<double>(p, qd))).type == OrbitType::TorusExt);
}

TEST_CASE("tolerance override from the environment") {
  ::setenv("G2KIT_TOLERANCE", "1e-5", 1);
  CHECK(classification_tolerance() == 1e-5);
  ::setenv("G2KIT_TOLERANCE", "abc", 1);
  CHECK_THROWS_AS(classification_tolerance(), Error);
  ::unsetenv("G2KIT_TOLERANCE");
  CHECK(classification_tolerance() == 1e-7);
}

TEST_CASE("R_p centralizer lemma") {
  auto alg = Algebra<Rational>::compact();
  auto qd = default_quaternion(alg);
  auto b = e<Rational>(4);
  auto p = e<Rational>(0) * q(3, 5) + e<Rational>(1) * q(4, 5);
  auto rp = make_rp(qd, b, QuaternionPoint<Rational>(p, qd));
  auto kp = generate_subalgebra(alg, {p});
  auto same = rp_trial(qd, b, rp, kp, p, e<Rational>(0));
  CHECK(same.commutes);
  CHECK(same.member);
  auto off = rp_trial(qd, b, rp, kp, e<Rational>(0), e<Rational>(2));
  CHECK_FALSE(off.commutes);
  CHECK_FALSE(off.member);

  auto report = verify_rp_centralizer(alg, p, 200, 7);
  CHECK(report.disagreements == 0);
  CHECK(report.both_outcomes());
  auto fl = verify_rp_centralizer(Algebra<double>::compact(), to_double(p), 200, 7);
  CHECK(fl.passed());
}

TEST_CASE("involution centralizer") {
  auto r = verify_involution_centralizer(20, 1);
  CHECK(r.commutation_passed());
  // Z_G(R_-1) = G(O, Q) ~ SO(4)
  CHECK(r.measured_dim == 6);
  CHECK(r.stabilizer_dim == 6);
}
