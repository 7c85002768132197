#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2kit/automorphism.hpp"
#include "g2kit/eig3.hpp"
#include "g2kit/hermitian.hpp"

namespace g2kit {

enum class OrbitType { Identity, SU3Type, U2Type, U2Ext, TorusExt, StronglyRegular };

/// Row order of the orbit-type table.
inline constexpr std::array<OrbitType, 6> kTableOrder{OrbitType::Identity,  OrbitType::StronglyRegular,
                                                      OrbitType::TorusExt,  OrbitType::U2Type,
                                                      OrbitType::U2Ext,     OrbitType::SU3Type};

std::string_view to_string(OrbitType type);
std::optional<OrbitType> parse_orbit_type(std::string_view name);

/// Tabulated centralizer dimension and component count of each type.
int expected_dim(OrbitType type);
int expected_components(OrbitType type);

/// Parameters of the representatives: theta = 2pi/5, phi = 2pi/7.
double default_theta();
double default_phi();

/// 1e-7 unless G2KIT_TOLERANCE is set; AmbiguousSpectrum is raised within 10x of it.
double classification_tolerance();

struct ClassificationReport {
  OrbitType type;
  Spectrum spectrum;  // sorted by argument
  std::size_t fixed_dim = 0;
  std::size_t measured_dim = 0;
  std::optional<AutMatrix<double>> witness;  // g = su3_to_aut(B) o rho, for the two Z/2 types

  int expected_dim() const { return g2kit::expected_dim(type); }
  int expected_components() const { return g2kit::expected_components(type); }
  bool dims_agree() const { return static_cast<int>(measured_dim) == expected_dim(); }
};

/// Orbit type of a compact-G2 element, with measured centralizer dimension.
ClassificationReport classify(const AutMatrix<double>& t, double tolerance);
inline ClassificationReport classify(const AutMatrix<double>& t) { return classify(t, classification_tolerance()); }

/// Spectrum multiset decision alone (no fixed-subalgebra data).
OrbitType classify_spectrum(const Spectrum& spectrum, double tolerance);

/// Restriction matrix of the table representative, over the standard hermitian space.
Matrix<Complex<double>> representative_matrix(OrbitType type, double theta, double phi);
AutMatrix<double> representative(OrbitType type, double theta, double phi);
inline AutMatrix<double> representative(OrbitType type) {
  return representative(type, default_theta(), default_phi());
}

/// The representative's first-column label, e.g. "diag(1, e^{it}, e^{-it})".
std::string_view representative_label(OrbitType type);

struct TableRow {
  OrbitType row;
  ClassificationReport report;

  bool witness_expected() const { return expected_components(row) == 2; }
  bool passes() const {
    return report.type == row && report.dims_agree() && report.witness.has_value() == witness_expected();
  }
};

std::vector<TableRow> table_report(double theta, double phi, double tolerance);

/// The Z/2 witness for t with spectrum {1, alpha, conj alpha}: commutes with t and
/// does not fix the quadratic subalgebra L of t pointwise.
AutMatrix<double> disconnecting_witness(const AutMatrix<double>& t, const Subalgebra<double>& fixed,
                                        const Spectrum& spectrum, double tolerance);

}  // namespace g2kit
