#include "octic/polyarith.hpp"

#include <set>

namespace octic {

ZPoly zpoly(std::vector<long> coeffs) {
  std::vector<BigInt> cs;
  cs.reserve(coeffs.size());
  for (long c : coeffs) cs.emplace_back(c);
  return ZPoly(BigInt(0), std::move(cs));
}

BigInt cauchy_bound(const ZPoly& p) {
  const BigInt lc = abs(p.lead());
  BigInt mx = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt c = abs(p[i]);
    if (c > mx) mx = c;
  }
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lc.get_mpz_t());
  return q + 2;
}

namespace {

int sign_at(const ZPoly& p, const BigInt& a) { return sgn(evaluate(p, a)); }

// A superset of { floor(r) : r real root of p }, all inside [-bound, bound].
std::set<BigInt> root_floors(const ZPoly& p, const BigInt& bound) {
  if (p.degree() <= 0) return {};
  std::set<BigInt> crit = root_floors(derivative(p), bound);
  std::set<BigInt> out = crit;
  // p is monotone on each run [lo, hi]: between consecutive critical floors
  // f < f' the run is [f + 1, f'], no derivative root lies strictly inside.
  std::vector<std::pair<BigInt, BigInt>> runs;
  BigInt lo = -bound;
  for (const BigInt& f : crit) {
    if (lo <= f) runs.emplace_back(lo, f);
    lo = f + 1;
  }
  if (lo <= bound) runs.emplace_back(lo, bound);
  for (const auto& [a, b] : runs) {
    const int sa = sign_at(p, a);
    const int sb = sign_at(p, b);
    if (sa == 0) out.insert(a);
    if (sb == 0) out.insert(b);
    if (sa == 0 || sb == 0 || sa == sb) continue;
    // Largest x in [a, b) with sign(p(x)) == sa; the root lies in (x, x+1].
    BigInt l = a, h = b;
    while (h - l > 1) {
      BigInt mid = l + (h - l) / 2;
      if (sign_at(p, mid) == sa) {
        l = mid;
      } else {
        h = mid;
      }
    }
    out.insert(l);
    if (sign_at(p, h) == 0) out.insert(h);
  }
  return out;
}

}  // namespace

std::vector<BigInt> integer_root_search(const ZPoly& p, const BigInt& target) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "integer_root_search needs a nonconstant polynomial");
  ZPoly q = p - ZPoly::constant(target);
  const BigInt bound = cauchy_bound(q);
  std::set<BigInt> found;
  for (const BigInt& f : root_floors(q, bound)) {
    for (const BigInt& a : {f, BigInt(f + 1)}) {
      if (sgn(evaluate(q, a)) == 0) found.insert(a);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace octic
