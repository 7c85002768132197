#pragma once

#include <string>
#include <vector>

#include "g2kit/automorphism.hpp"
#include "g2kit/eig3.hpp"
#include "json.hpp"
#include "g2kit/orbit.hpp"
#include "g2kit/skolem_noether.hpp"

namespace g2kit::json_io {

using nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

template <class T>
ordered_json scalar(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.str();
  } else {
    return x;
  }
}

/// Numbers are accepted on both backends; "p/q" strings only on the exact one.
template <class T>
T parse_scalar(const ordered_json& j) {
  if constexpr (is_exact_v<T>) {
    if (j.is_string()) {
      try {
        return Rational(j.get<std::string>());
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "not a rational: " + j.get<std::string>());
      }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return Rational(j.get<double>());
  } else {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
      try {
        return to_double(Rational(j.get<std::string>()));
      } catch (const std::exception&) {
      }
    }
  }
  throw Error(ErrorKind::InvalidInput, "expected a scalar, got " + j.dump());
}

template <class T>
ordered_json octonion(const Octonion<T>& x) {
  ordered_json out = ordered_json::array();
  for (const auto& c : x.c) out.push_back(scalar(c));
  return out;
}

template <class T>
Octonion<T> parse_octonion(const ordered_json& j) {
  if (!j.is_array() || j.size() != 8) throw Error(ErrorKind::InvalidInput, "octonion must be an array of 8 scalars");
  Octonion<T> x;
  for (std::size_t i = 0; i < 8; ++i) x.c[i] = parse_scalar<T>(j[i]);
  return x;
}

template <class T>
ordered_json matrix(const Matrix<T>& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class T>
Matrix<T> parse_matrix(const ordered_json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw Error(ErrorKind::InvalidInput, "matrix has the wrong number of rows");
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw Error(ErrorKind::InvalidInput, "matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar<T>(j[r][c]);
  }
  return m;
}

inline ordered_json complex_number(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

template <class T>
ordered_json su3(const Matrix<Complex<T>>& a) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(ordered_json::array({scalar(a(r, c).re), scalar(a(r, c).im)}));
    out.push_back(std::move(row));
  }
  return out;
}

/// 3x3 array of [re, im] pairs.
template <class T>
Matrix<Complex<T>> parse_su3(const ordered_json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::InvalidInput, "SU(3) matrix must have 3 rows");
  Matrix<Complex<T>> a(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw Error(ErrorKind::InvalidInput, "SU(3) rows must have 3 entries");
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& z = j[r][c];
      if (!z.is_array() || z.size() != 2) throw Error(ErrorKind::InvalidInput, "SU(3) entries are [re, im] pairs");
      a(r, c) = Complex<T>(parse_scalar<T>(z[0]), parse_scalar<T>(z[1]));
    }
  }
  return a;
}

inline bool looks_like_su3(const ordered_json& j) {
  return j.is_array() && j.size() == 3 && j[0].is_array() && j[0].size() == 3 && j[0][0].is_array();
}

template <class T>
ordered_json context(const Algebra<T>& alg) {
  ordered_json params = ordered_json::array();
  for (const auto& p : alg.params()) params.push_back(scalar(p));
  return {{"params", params}, {"backend", ScalarTraits<T>::name}};
}

template <class T>
AlgebraPtr<T> parse_context(const ordered_json& j) {
  if (!j.contains("context")) return Algebra<T>::compact();
  const auto& ctx = j.at("context");
  if (ctx.contains("backend") && ctx.at("backend") != ScalarTraits<T>::name)
    throw Error(ErrorKind::ContextMismatch, "input backend differs from --backend");
  if (!ctx.contains("params")) return Algebra<T>::compact();
  const auto& p = ctx.at("params");
  if (!p.is_array() || p.size() != 3) throw Error(ErrorKind::InvalidInput, "params must hold three scalars");
  std::array<T, 3> params{parse_scalar<T>(p[0]), parse_scalar<T>(p[1]), parse_scalar<T>(p[2])};
  auto alg = std::make_shared<const Algebra<T>>(params);
  return alg->is_compact() ? Algebra<T>::compact() : alg;
}

template <class T>
ordered_json automorphism(const AutMatrix<T>& t) {
  return {{"context", context(*t.algebra())}, {"matrix", matrix(t.matrix())}, {"certified", t.certified()}};
}

/// An element is {"matrix": 8x8} (an automorphism, certified on load) or {"matrix": 3x3
/// of [re, im]} / {"su3": ...} (a restriction matrix over the standard hermitian space).
template <class T>
AutMatrix<T> parse_element(const ordered_json& j) {
  const AlgebraPtr<T> alg = parse_context<T>(j);
  const ordered_json* body = &j;
  if (j.is_object()) {
    if (j.contains("su3")) {
      body = &j.at("su3");
    } else if (j.contains("matrix")) {
      body = &j.at("matrix");
    } else {
      throw Error(ErrorKind::InvalidInput, "element needs a \"matrix\" or \"su3\" field");
    }
  }
  if (looks_like_su3(*body)) return su3_to_aut(HermitianSpace<T>::standard(alg), parse_su3<T>(*body));
  return certify(alg, parse_matrix<T>(*body, 8, 8));
}

inline ordered_json spectrum(const Spectrum& s) {
  ordered_json out = ordered_json::array();
  for (const auto& z : s) out.push_back(complex_number(z));
  return out;
}

inline ordered_json classification(const ClassificationReport& r) {
  ordered_json out;
  out["type"] = std::string(to_string(r.type));
  out["spectrum"] = spectrum(r.spectrum);
  out["fixed_dim"] = r.fixed_dim;
  out["measured_dim"] = r.measured_dim;
  out["expected_dim"] = r.expected_dim();
  out["expected_components"] = r.expected_components();
  out["witness"] = r.witness ? matrix(r.witness->matrix()) : ordered_json(nullptr);
  return out;
}

template <class T>
ordered_json iso(const SubalgebraIso<T>& i) {
  ordered_json src = ordered_json::array(), tgt = ordered_json::array();
  for (const auto& e : i.source().basis()) src.push_back(octonion(e));
  for (const auto& e : i.target().basis()) tgt.push_back(octonion(e));
  return {{"source_basis", src}, {"target_basis", tgt}, {"map", matrix(i.map())}};
}

/// Bases must be orthogonal and start with 1; row i of "map" gives the image of
/// source_basis[i] in target_basis coordinates.
template <class T>
SubalgebraIso<T> parse_iso(const ordered_json& j) {
  const AlgebraPtr<T> alg = parse_context<T>(j);
  auto basis = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorKind::InvalidInput, std::string("missing ") + key);
    std::vector<Octonion<T>> out;
    for (const auto& e : j.at(key)) out.push_back(parse_octonion<T>(e));
    return Subalgebra<T>::from_orthogonal_basis(alg, std::move(out));
  };
  Subalgebra<T> source = basis("source_basis");
  Subalgebra<T> target = basis("target_basis");
  if (!j.contains("map")) throw Error(ErrorKind::InvalidInput, "missing map");
  Matrix<T> m = parse_matrix<T>(j.at("map"), source.dim(), source.dim());
  return SubalgebraIso<T>(std::move(source), std::move(target), std::move(m));
}

}  // namespace g2kit::json_io
