#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace octic;
using testing_util::laplace_det;
using testing_util::q;
using testing_util::random_zpoly;

TEST_CASE("evaluate compose map") {
  CHECK(evaluate(zpoly({1, 0, 1}), BigInt(2)) == 5);
  CHECK(compose(zpoly({0, 0, 1}), zpoly({1, 1})) == zpoly({1, 2, 1}));
  const auto& g = make_field(1, BasisKind::Sqrt);
  QPoly p(g.zero(), {q(g, 1, 1), g.zero(), g.one()});
  CHECK(conj_coeffs(p) == QPoly(g.zero(), {q(g, 1, -1), g.zero(), g.one()}));
  CHECK(derivative(zpoly({5, 3, 0, 2})) == zpoly({3, 0, 6}));
  CHECK(zpoly({0, 0}).degree() == -1);
  CHECK(zpoly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(zpoly({-2, 1}), zpoly({-5, 1})) == -3);
  CHECK(resultant(zpoly({1, 0, 1}), zpoly({1, 0, 1})) == 0);
  CHECK(resultant(zpoly({-2, 0, 1}), zpoly({-3, 0, 1})) == 1);
  CHECK(resultant(zpoly({3}), zpoly({1, 1, 1})) == 9);
  CHECK_THROWS_AS(resultant(zpoly({}), zpoly({1, 1})), Error);
}

TEST_CASE("discriminant examples") {
  // b^2 - 4c
  for (long b = -5; b <= 5; ++b)
    for (long c = -5; c <= 5; ++c) CHECK(discriminant(zpoly({c, b, 1})) == b * b - 4 * c);
  const auto& g = make_field(1, BasisKind::Sqrt);
  QPoly d4(g.zero(), {g.one(), g.zero(), q(g, 0, -2), g.zero(), g.one()});
  CHECK(discriminant(d4) == q(g, 1024));
  ZPoly cubic = zpoly({-1, 1}) * zpoly({-2, 1}) * zpoly({-3, 1});
  CHECK(discriminant(cubic) == 4);
  CHECK_THROWS_AS(discriminant(zpoly({1, 1, 2})), Error);
}

TEST_CASE("resultant against Laplace Sylvester oracle") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 150; ++k) {
    int m = 1 + static_cast<int>(rng() % 4);
    int n = 1 + static_cast<int>(rng() % 4);
    ZPoly p = random_zpoly(rng, m, 6, k % 3 == 0);
    ZPoly r = random_zpoly(rng, n, 6, k % 3 == 1);
    CHECK(resultant(p, r) == laplace_det(sylvester_matrix(p, r), BigInt(0)));
  }
  const auto& g = make_field(1, BasisKind::Sqrt);
  for (int k = 0; k < 60; ++k) {
    std::vector<QuadInt> a, b;
    for (int i = 0; i < 4; ++i) a.push_back(testing_util::random_quad(g, rng, 4));
    for (int i = 0; i < 3; ++i) b.push_back(testing_util::random_quad(g, rng, 4));
    if (k % 2) a.back() = g.one();
    if (a.back().is_zero() || b.back().is_zero()) continue;
    QPoly p(g.zero(), a), r(g.zero(), b);
    CHECK(resultant(p, r) == laplace_det(sylvester_matrix(p, r), g.zero()));
  }
}

TEST_CASE("resultant properties") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    int m = 1 + static_cast<int>(rng() % 4);
    int n = 1 + static_cast<int>(rng() % 4);
    ZPoly p = random_zpoly(rng, m, 5, true);
    ZPoly a = random_zpoly(rng, n, 5, true);
    ZPoly b = random_zpoly(rng, 1 + static_cast<int>(rng() % 3), 5, true);
    BigInt sign = ((m * n) % 2) ? -1 : 1;
    CHECK(resultant(p, a) == sign * resultant(a, p));
    CHECK(resultant(p, a * b) == resultant(p, a) * resultant(p, b));
  }
}

TEST_CASE("discriminant translation invariance") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 60; ++k) {
    ZPoly p = random_zpoly(rng, 2 + static_cast<int>(rng() % 4), 6, true);
    long c = static_cast<long>(rng() % 11) - 5;
    CHECK(discriminant(compose(p, zpoly({-c, 1}))) == discriminant(p));
  }
  const auto& g = make_field(1, BasisKind::Sqrt);
  for (int k = 0; k < 30; ++k) {
    std::vector<QuadInt> cs;
    for (int i = 0; i < 4; ++i) cs.push_back(testing_util::random_quad(g, rng, 3));
    cs.push_back(g.one());
    QPoly p(g.zero(), cs);
    auto c = testing_util::random_quad(g, rng, 3);
    QPoly shift(g.zero(), {-c, g.one()});
    CHECK(discriminant(compose(p, shift)) == discriminant(p));
  }
}

TEST_CASE("Berkowitz charpoly agrees with Laplace det of xI - M") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 40; ++k) {
    int n = 1 + static_cast<int>(rng() % 5);
    Matrix<BigInt> M(n, n, BigInt(0));
    for (auto& e : M.data) e = static_cast<long>(rng() % 13) - 6;
    ZPoly cp = charpoly_berkowitz(M, BigInt(0));
    CHECK(cp.degree() == n);
    for (long x = -3; x <= 3; ++x) {
      Matrix<BigInt> A(n, n, BigInt(0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = (i == j ? BigInt(x) : BigInt(0)) - M(i, j);
      CHECK(evaluate(cp, BigInt(x)) == laplace_det(A, BigInt(0)));
    }
  }
}

TEST_CASE("nested coefficient ring") {
  const auto& g = make_field(1, BasisKind::Sqrt);
  QPoly a2 = QPoly::x(g.zero());
  UPoly<QPoly> p(QPoly(g.zero()), {a2 * a2, QPoly::constant(g.one())});
  UPoly<QPoly> r(QPoly(g.zero()), {QPoly::constant(q(g, 1)), QPoly::constant(g.one()) * QPoly::constant(g.one())});
  // Res(x + a^2, x + 1) = 1 - a^2 up to orientation
  QPoly res = resultant(p, r);
  CHECK(evaluate(res, q(g, 3)) == resultant(UPoly<QuadInt>(g.zero(), {q(g, 9), g.one()}),
                                            UPoly<QuadInt>(g.zero(), {g.one(), g.one()})));
}

TEST_CASE("integer_root_search examples") {
  CHECK(integer_root_search(zpoly({1, 0, 17}), 1) == std::vector<BigInt>{0});
  CHECK(integer_root_search(zpoly({32, 0, 16}), 1).empty());
  std::vector<BigInt> cs(17, BigInt(0));
  cs[0] = -65536;
  cs[16] = 1;
  CHECK(integer_root_search(ZPoly(BigInt(0), cs), 0) == std::vector<BigInt>{-2, 2});
  CHECK(integer_root_search(zpoly({16, -8, 1}), 1) == std::vector<BigInt>{3, 5});
}

// Integer roots of q: 0 if q(0) = 0, otherwise divisors of the lowest
// nonzero coefficient (rational root theorem), tested directly.
std::vector<BigInt> divisor_oracle(const ZPoly& p, const BigInt& target) {
  ZPoly q = p - ZPoly::constant(target);
  std::set<BigInt> roots;
  int k = 0;
  while (k <= q.degree() && q[k] == 0) ++k;
  if (k > 0) roots.insert(0);
  BigInt c = abs(q[k]);
  for (BigInt e = 1; e * e <= c; ++e) {
    if (c % e != 0) continue;
    for (const BigInt& r : {e, BigInt(c / e)})
      for (const BigInt& s : {r, BigInt(-r)})
        if (evaluate(q, s) == 0) roots.insert(s);
  }
  return {roots.begin(), roots.end()};
}

TEST_CASE("integer_root_search against independent oracles") {
  std::mt19937_64 rng(17);
  int with_roots = 0;
  for (int k = 0; k < 200; ++k) {
    int deg = 1 + static_cast<int>(rng() % 5);
    ZPoly p = zpoly({static_cast<long>(rng() % 5) + 1});
    for (int i = 0; i < deg; ++i) {
      if (rng() % 2) p = p * zpoly({-(static_cast<long>(rng() % 41) - 20), 1});
      else p = p * zpoly({static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) - 2, 1});
    }
    if (p.degree() < 1) continue;
    long target = static_cast<long>(rng() % 5) - 2;
    auto got = integer_root_search(p, target);
    CHECK(got == divisor_oracle(p, target));
    if (!got.empty()) ++with_roots;
    // Plain scan of a window as a second check.
    std::vector<BigInt> scan;
    for (long a = -300; a <= 300; ++a)
      if (evaluate(p, BigInt(a)) == target) scan.push_back(a);
    std::vector<BigInt> inside;
    for (const auto& r : got)
      if (abs(r) <= 300) inside.push_back(r);
    CHECK(inside == scan);
  }
  CHECK(with_roots > 30);
}

TEST_CASE("integer_root_search on a large-coefficient polynomial") {
  BigInt big = pow(BigInt(10), 60) + 7;
  ZPoly p = zpoly({1, -1}) * ZPoly(BigInt(0), {BigInt(-big), BigInt(1)}) * zpoly({3, 0, 1});
  auto roots = integer_root_search(p, 0);
  CHECK(roots == std::vector<BigInt>{1, big});
}
