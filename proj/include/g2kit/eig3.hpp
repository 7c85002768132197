#pragma once

#include <array>
#include <complex>

#include "g2kit/numeric.hpp"

namespace g2kit {

using cplx = std::complex<double>;
using Spectrum = std::array<cplx, 3>;

/// Coefficients (a2, a1, a0) of det(XI - A) = X^3 + a2 X^2 + a1 X + a0.
std::array<cplx, 3> characteristic_coefficients(const Matrix<Complex<double>>& a);

/// Roots of X^3 + a2 X^2 + a1 X + a0 by Cardano's formula, one Newton step per root.
Spectrum cubic_roots(const std::array<cplx, 3>& coeffs);

/// Eigenvalues of a 3x3 complex matrix (intended: special unitary). Cardano roots are
/// polished by Newton and then refined by inverse iteration with a Rayleigh quotient,
/// which keeps double roots of a normal matrix accurate to roundoff.
/// Throws SolverFailure when the refinement does not converge.
Spectrum eig3_unit(const Matrix<Complex<double>>& a);

/// Unit eigenvector for an eigenvalue estimate (inverse iteration from a fixed start).
std::array<cplx, 3> eigenvector3(const Matrix<Complex<double>>& a, cplx lambda);

Matrix<Complex<double>> to_complex_matrix(const std::array<std::array<cplx, 3>, 3>& rows);

}  // namespace g2kit
