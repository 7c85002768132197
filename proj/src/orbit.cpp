#include "g2kit/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "g2kit/derivation.hpp"

namespace g2kit {

namespace {

struct TypeInfo {
  OrbitType type;
  std::string_view name;
  int dim;
  int components;
  std::string_view label;
};

constexpr std::array<TypeInfo, 6> kTypes{{
    {OrbitType::Identity, "Identity", 14, 1, "I"},
    {OrbitType::SU3Type, "SU3Type", 8, 1, "diag(w, w, w); w != 1, w^3 = 1"},
    {OrbitType::U2Type, "U2Type", 4, 1, "diag(e^{-2it}, e^{it}, e^{it}); e^{3it} != 1"},
    {OrbitType::U2Ext, "U2Ext", 4, 2, "diag(1, -1, -1)"},
    {OrbitType::TorusExt, "TorusExt", 2, 2, "diag(1, e^{it}, e^{-it}); e^{it} != +-1"},
    {OrbitType::StronglyRegular, "StronglyRegular", 2, 1, "diag(e^{-i(t+f)}, e^{it}, e^{if})"},
}};

const TypeInfo& info(OrbitType type) {
  return *std::find_if(kTypes.begin(), kTypes.end(), [&](const TypeInfo& i) { return i.type == type; });
}

// Equality decision with a no-man's-land between tol and 10 tol.
bool same(cplx x, cplx y, double tolerance) {
  double d = std::abs(x - y);
  if (d <= tolerance) return true;
  if (d <= 10.0 * tolerance)
    throw Error(ErrorKind::AmbiguousSpectrum,
                "eigenvalues are " + std::to_string(d) + " apart, inside the ambiguity band");
  return false;
}

bool is_one(cplx x, double tolerance) { return same(x, cplx(1.0, 0.0), tolerance); }

Subalgebra<double> quadratic_of(const AlgebraPtr<double>& alg, const Octonion<double>& gamma) {
  return Subalgebra<double>::from_orthogonal_basis(alg, {Octonion<double>::unit(), gamma});
}

}  // namespace

std::string_view to_string(OrbitType type) { return info(type).name; }

std::optional<OrbitType> parse_orbit_type(std::string_view name) {
  for (const auto& i : kTypes)
    if (i.name == name) return i.type;
  return std::nullopt;
}

int expected_dim(OrbitType type) { return info(type).dim; }
int expected_components(OrbitType type) { return info(type).components; }
std::string_view representative_label(OrbitType type) { return info(type).label; }

double default_theta() { return 2.0 * std::numbers::pi / 5.0; }
double default_phi() { return 2.0 * std::numbers::pi / 7.0; }

double classification_tolerance() {
  const char* env = std::getenv("G2KIT_TOLERANCE");
  if (env == nullptr || *env == '\0') return tol::spectrum;
  char* end = nullptr;
  double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0) || !std::isfinite(value))
    throw Error(ErrorKind::InvalidInput, std::string("G2KIT_TOLERANCE is not a positive number: ") + env);
  return value;
}

OrbitType classify_spectrum(const Spectrum& s, double tolerance) {
  const bool e01 = same(s[0], s[1], tolerance);
  const bool e02 = same(s[0], s[2], tolerance);
  const bool e12 = same(s[1], s[2], tolerance);
  const int pairs = int(e01) + int(e02) + int(e12);
  if (pairs == 3) {
    if (is_one(s[0], tolerance)) return OrbitType::Identity;
    if (std::abs(s[0] * s[0] * s[0] - 1.0) > 10.0 * tolerance)
      throw Error(ErrorKind::SolverFailure, "triple eigenvalue is not a cube root of unity");
    return OrbitType::SU3Type;
  }
  if (pairs == 2) throw Error(ErrorKind::AmbiguousSpectrum, "eigenvalue equality is not transitive at this tolerance");
  if (pairs == 1) {
    cplx alpha = e12 ? s[0] : e02 ? s[1] : s[2];
    cplx beta = e12 ? s[1] : s[0];
    const bool alpha_one = is_one(alpha, tolerance);
    const bool beta_one = is_one(beta, tolerance);
    if (alpha_one && same(beta, cplx(-1.0, 0.0), tolerance)) return OrbitType::U2Ext;
    if (!alpha_one && !beta_one) return OrbitType::U2Type;
    throw Error(ErrorKind::SolverFailure, "spectrum {1, 1, b} with b != 1 violates det = 1");
  }
  for (const auto& z : s)
    if (is_one(z, tolerance)) return OrbitType::TorusExt;
  return OrbitType::StronglyRegular;
}

AutMatrix<double> disconnecting_witness(const AutMatrix<double>& t, const Subalgebra<double>& fixed,
                                        const Spectrum& spectrum, double tolerance) {
  if (fixed.dim() != 4) throw Error(ErrorKind::InvalidInput, "witness needs a fixed quaternion subalgebra");
  const auto& alg = t.algebra();
  const Octonion<double>& gamma = fixed.basis()[1];
  const Octonion<double>& a = fixed.basis()[2];
  const Subalgebra<double> l = quadratic_of(alg, gamma);
  const Octonion<double> b0 = orthogonal_complement(fixed)[0];
  const auto space0 = HermitianSpace<double>::build(l, a, b0);
  const Matrix<Complex<double>> a0 = aut_to_su3(space0, t).matrix();

  // The eigenvalue farthest from 1 spans the (b, ab) block; its eigenvector gives b.
  cplx alpha = *std::max_element(spectrum.begin(), spectrum.end(),
                                 [](cplx x, cplx y) { return std::abs(x - 1.0) < std::abs(y - 1.0); });
  auto w = eigenvector3(a0, alpha);
  w[0] = 0.0;
  double n = std::sqrt(std::norm(w[1]) + std::norm(w[2]));
  if (n < 0.5) throw Error(ErrorKind::SolverFailure, "eigenvector has no component orthogonal to a");
  Octonion<double> b = space0.from_coordinates({Complex<double>{0.0, 0.0}, Complex<double>{w[1].real() / n, w[1].imag() / n},
                                                Complex<double>{w[2].real() / n, w[2].imag() / n}});
  b = b * (1.0 / std::sqrt(alg->norm(b)));

  const auto space = HermitianSpace<double>::build(l, a, b);
  const AutMatrix<double> g = compose(su3_to_aut(space, intertwiner<double>()), make_rho(l, a, b));
  if (!commutes(g, t)) throw Error(ErrorKind::CertificationFailure, "witness does not commute with t");
  if (!approx_equal(compose(g, g), AutMatrix<double>::identity(alg)))
    throw Error(ErrorKind::CertificationFailure, "witness is not an involution");
  if (!approx_equal(g.apply(gamma), -gamma, tol::residual))
    throw Error(ErrorKind::CertificationFailure, "witness does not act on L by conjugation");
  (void)tolerance;
  return g;
}

ClassificationReport classify(const AutMatrix<double>& t, double tolerance) {
  const auto& alg = t.algebra();
  if (!alg->is_compact()) throw Error(ErrorKind::InvalidInput, "classification needs the compact preset");
  const Subalgebra<double> fixed = fixed_subalgebra(t);

  ClassificationReport report{OrbitType::Identity, {cplx(1.0), cplx(1.0), cplx(1.0)}, fixed.dim(), 0, std::nullopt};
  if (fixed.dim() == 8) {
    report.measured_dim = centralizer_dimension(t);
    return report;
  }

  const Subalgebra<double> l = quadratic_of(alg, fixed.basis()[1]);
  const Octonion<double> a = orthogonal_complement(l)[0];
  const Octonion<double> b = orthogonal_complement(double_subalgebra(l, a))[0];
  const auto space = HermitianSpace<double>::build(l, a, b);
  Spectrum spectrum = eig3_unit(aut_to_su3(space, t).matrix());
  std::sort(spectrum.begin(), spectrum.end(), [](cplx x, cplx y) { return std::arg(x) < std::arg(y); });

  report.type = classify_spectrum(spectrum, tolerance);
  report.spectrum = spectrum;
  const bool one_in_spectrum = report.type == OrbitType::U2Ext || report.type == OrbitType::TorusExt;
  if (report.type == OrbitType::Identity || one_in_spectrum != (fixed.dim() == 4))
    throw Error(ErrorKind::AmbiguousSpectrum, "spectrum and fixed subalgebra disagree about eigenvalue 1");

  report.measured_dim = centralizer_dimension(t);
  if (expected_components(report.type) == 2) report.witness = disconnecting_witness(t, fixed, spectrum, tolerance);
  return report;
}

Matrix<Complex<double>> representative_matrix(OrbitType type, double theta, double phi) {
  auto e = [](double angle) { return unit_phase(angle); };
  const Complex<double> one(1.0);
  switch (type) {
    case OrbitType::Identity:
      return diagonal3(one, one, one);
    case OrbitType::SU3Type: {
      auto w = e(2.0 * std::numbers::pi / 3.0);
      return diagonal3(w, w, w);
    }
    case OrbitType::U2Type:
      return diagonal3(e(-2.0 * theta), e(theta), e(theta));
    case OrbitType::U2Ext:
      return diagonal3(one, Complex<double>(-1.0), Complex<double>(-1.0));
    case OrbitType::TorusExt:
      return diagonal3(one, e(theta), e(-theta));
    case OrbitType::StronglyRegular:
      return diagonal3(e(-(theta + phi)), e(theta), e(phi));
  }
  throw Error(ErrorKind::InvalidInput, "unknown orbit type");
}

AutMatrix<double> representative(OrbitType type, double theta, double phi) {
  const auto alg = Algebra<double>::compact();
  if (type == OrbitType::Identity) return AutMatrix<double>::identity(alg);
  return su3_to_aut(HermitianSpace<double>::standard(alg), representative_matrix(type, theta, phi));
}

std::vector<TableRow> table_report(double theta, double phi, double tolerance) {
  std::vector<TableRow> rows;
  for (OrbitType type : kTableOrder) rows.push_back({type, classify(representative(type, theta, phi), tolerance)});
  return rows;
}

}  // namespace g2kit
