#pragma once

#include <random>

#include "octic/families.hpp"

namespace testing_util {

using namespace octic;

inline QuadInt q(const QuadField& f, long a, long b = 0) { return QuadInt(f, a, b); }

inline QPoly qpoly(const QuadField& f, std::vector<QuadInt> cs) { return QPoly(f.zero(), std::move(cs)); }

inline QuadInt random_quad(const QuadField& f, std::mt19937_64& rng, long r) {
  std::uniform_int_distribution<long> dist(-r, r);
  long a = dist(rng);
  long b = dist(rng);
  return QuadInt(f, a, b);
}

inline ZPoly random_zpoly(std::mt19937_64& rng, int deg, long r, bool monic) {
  std::uniform_int_distribution<long> dist(-r, r);
  std::vector<long> cs(deg + 1);
  for (auto& c : cs) c = dist(rng);
  if (monic) cs[deg] = 1;
  while (cs[deg] == 0) cs[deg] = dist(rng);
  return zpoly(cs);
}

// Determinant by cofactor expansion; independent of Berkowitz.
template <class C>
C laplace_det(const Matrix<C>& m, const C& zero) {
  const int n = m.rows;
  if (n == 0) return one_like(zero);
  if (n == 1) return m(0, 0);
  C acc = zero;
  for (int j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<C> minor(n - 1, n - 1, zero);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    }
    C term = m(0, j) * laplace_det(minor, zero);
    if (j % 2) acc = acc - term;
    else acc = acc + term;
  }
  return acc;
}

}  // namespace testing_util
