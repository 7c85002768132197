#pragma once

#include "g2kit/octonion.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Vec8 to_eigen(const g2kit::Octonion<double>& x) {
  oracle::Vec8 v;
  for (int i = 0; i < 8; ++i) v[i] = x.c[i];
  return v;
}

inline oracle::Mat8 to_eigen(const g2kit::Matrix<double>& m) {
  oracle::Mat8 out;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out(r, c) = m(r, c);
  return out;
}

template <class T>
g2kit::Octonion<T> e(std::size_t i) {
  return g2kit::Octonion<T>::basis(i);
}

inline g2kit::Rational q(long n, long d = 1) { return g2kit::Rational(n, d); }

}  // namespace testing
