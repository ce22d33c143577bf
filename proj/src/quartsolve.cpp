#include "octic/quartsolve.hpp"

#include <algorithm>
#include <set>

#include "octic/parallel.hpp"

namespace octic {

QuadInt BinaryCubic::operator()(const QuadInt& u, const QuadInt& v) const {
  const QuadInt u2 = u * u;
  const QuadInt v2 = v * v;
  return c[0] * u2 * u + c[1] * u2 * v + c[2] * u * v2 + c[3] * v2 * v;
}

QuadInt TernaryQuadratic::operator()(const QuadInt& x, const QuadInt& y, const QuadInt& z) const {
  return xx * x * x + yy * y * y + zz * z * z + xy * x * y + xz * x * z + yz * y * z;
}

ResolventForms resolvent_forms(const QPoly& g) {
  if (g.degree() != 4 || !g.is_monic()) throw Error(ErrorKind::NotMonic, "resolvent forms need a monic quartic");
  const QuadField& f = g.zero().field();
  const QuadInt& a1 = g[3];
  const QuadInt& a2 = g[2];
  const QuadInt& a3 = g[1];
  const QuadInt& a4 = g[0];
  const QuadInt one = f.one();
  const QuadInt two = f.from_int(2);
  const QuadInt four = f.from_int(4);
  ResolventForms r{
      BinaryCubic{{one, -a2, a1 * a3 - four * a4, four * a2 * a4 - a3 * a3 - a1 * a1 * a4}},
      TernaryQuadratic{one, a2, a2 * a2 - a1 * a3 + a4, -a1, a1 * a1 - two * a2, a3 - a1 * a2},
      TernaryQuadratic{f.zero(), one, a2, f.zero(), -one, -a1},
  };
  return r;
}

QuadInt index_form_eval(const ResolventForms& forms, const QuadInt& X, const QuadInt& Y, const QuadInt& Z) {
  return forms.F(forms.Q1(X, Y, Z), forms.Q2(X, Y, Z));
}

SplitCubic split_biquadratic(const QPoly& g) {
  if (g.degree() != 4 || !g.is_monic() || !g[1].is_zero() || !g[3].is_zero()) {
    throw Error(ErrorKind::NotSplit, "resolvent split needs g = x^4 + a2 x^2 + a4");
  }
  const QuadField& f = g.zero().field();
  auto s = exact_sqrt(g[0]);
  if (!s) throw Error(ErrorKind::NotSplit, "constant term " + g[0].to_string() + " is not a square");
  const QuadInt two_s = f.from_int(2) * *s;
  return SplitCubic{{LinearForm{f.one(), -g[2]}, LinearForm{f.one(), -two_s}, LinearForm{f.one(), two_s}}};
}

namespace {

BinaryCubic expand(const SplitCubic& split) {
  const auto& [l1, l2, l3] = split.factors;
  const QuadInt& a1 = l1.u_coef;
  const QuadInt& b1 = l1.v_coef;
  const QuadInt& a2 = l2.u_coef;
  const QuadInt& b2 = l2.v_coef;
  const QuadInt& a3 = l3.u_coef;
  const QuadInt& b3 = l3.v_coef;
  return BinaryCubic{{a1 * a2 * a3, a1 * a2 * b3 + a1 * b2 * a3 + b1 * a2 * a3,
                      a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3, b1 * b2 * b3}};
}

}  // namespace

std::vector<UVSolution> solve_uv_split(const ResolventForms& forms, const SplitCubic& split, const QuadField& field) {
  const BinaryCubic product = expand(split);
  for (std::size_t i = 0; i < 4; ++i) {
    if (product.c[i] != forms.F.c[i]) throw Error(ErrorKind::NotSplit, "linear factors do not multiply to F");
  }
  // Pick two factors with independent coefficient vectors.
  int first = -1, second = -1;
  for (int i = 0; i < 3 && first < 0; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto& li = split.factors[static_cast<std::size_t>(i)];
      const auto& lj = split.factors[static_cast<std::size_t>(j)];
      if (!(li.u_coef * lj.v_coef - lj.u_coef * li.v_coef).is_zero()) {
        first = i;
        second = j;
        break;
      }
    }
  }
  if (first < 0) throw Error(ErrorKind::NotSplit, "linear factors are dependent");
  const LinearForm& l1 = split.factors[static_cast<std::size_t>(first)];
  const LinearForm& l2 = split.factors[static_cast<std::size_t>(second)];
  const LinearForm& l3 = split.factors[static_cast<std::size_t>(3 - first - second)];
  const QuadInt det = l1.u_coef * l2.v_coef - l2.u_coef * l1.v_coef;

  std::vector<UVSolution> out;
  for (const QuadInt& e1 : field.units()) {
    for (const QuadInt& e2 : field.units()) {
      QuadInt U = field.zero(), V = field.zero();
      try {
        U = exact_div(e1 * l2.v_coef - e2 * l1.v_coef, det);
        V = exact_div(l1.u_coef * e2 - l2.u_coef * e1, det);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotDivisible) continue;
        throw;
      }
      if (!l3(U, V).is_unit()) continue;
      out.push_back(UVSolution{U, V, forms.F(U, V)});
    }
  }
  std::sort(out.begin(), out.end(), [](const UVSolution& x, const UVSolution& y) {
    if (x.V != y.V) return x.V < y.V;
    return x.U < y.U;
  });
  return out;
}

namespace {

const QuadField& gaussian() { return make_field(1, BasisKind::Sqrt); }

void require_gaussian(const QuadInt& x) {
  if (&x.field() != &gaussian()) throw Error(ErrorKind::FieldMismatch, "D4 machinery lives in Z[i]");
}

bool in_box(const QuadInt& x, long bound) { return abs(x.a()) <= bound && abs(x.b()) <= bound; }

bool in_quarter_plane(const QuadInt& x) { return sgn(x.a()) > 0 && sgn(x.b()) >= 0; }

}  // namespace

std::array<QuadInt, 3> parametrize_d4(const QuadInt& P, const QuadInt& Q, const BigInt& T) {
  require_gaussian(P);
  require_gaussian(Q);
  const QuadInt two_i_t2(gaussian(), 0, 2 * T * T);
  const QuadInt Q2 = Q * Q;
  return {P * P - two_i_t2 * Q2, P * Q, Q2};
}

QuadInt d4_thue_form(const QuadInt& P, const QuadInt& Q, const BigInt& T) {
  require_gaussian(P);
  require_gaussian(Q);
  const QuadInt two_i_t2(gaussian(), 0, 2 * T * T);
  const QuadInt P2 = P * P;
  const QuadInt Q2 = Q * Q;
  return P2 * P2 - two_i_t2 * P2 * Q2 + Q2 * Q2;
}

std::pair<QuadInt, QuadInt> canonical_pair(const QuadInt& P, const QuadInt& Q) {
  const QuadField& f = P.field();
  const QuadInt& key = Q.is_zero() ? P : Q;
  if (key.is_zero()) return {P, Q};
  for (const QuadInt& u : f.units()) {
    if (in_quarter_plane(u * key)) return {u * P, u * Q};
  }
  return {P, Q};
}

std::vector<ThueSolution> thue_bounded_search(const BigInt& T, long bound, unsigned jobs) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be >= 1");
  const QuadField& f = gaussian();
  std::vector<QuadInt> qs{f.zero()};
  for (long a = 1; a <= bound; ++a) {
    for (long b = 0; b <= bound; ++b) qs.emplace_back(f, a, b);
  }
  const QuadInt i_t2(f, 0, T * T);
  const BigInt t4p1 = T * T * T * T + 1;

  std::vector<std::vector<ThueSolution>> per_q(qs.size());
  parallel_for(qs.size(), jobs, [&](std::size_t idx) {
    const QuadInt& Q = qs[idx];
    const QuadInt Q2 = Q * Q;
    const QuadInt Q4 = Q2 * Q2;
    std::set<std::pair<QuadInt, QuadInt>> seen;
    for (const QuadInt& eps : f.units()) {
      // With S = P^2: S^2 - 2iT^2 Q^2 S + Q^4 - eps = 0, so
      // S = iT^2 Q^2 +- r where r^2 = eps - (T^4 + 1) Q^4.
      auto r = exact_sqrt(eps - Q4 * t4p1);
      if (!r) continue;
      for (const QuadInt& root : {*r, QuadInt(-*r)}) {
        auto P0 = exact_sqrt(i_t2 * Q2 + root);
        if (!P0) continue;
        for (const QuadInt& P : {*P0, QuadInt(-*P0)}) {
          if (!in_box(P, bound)) continue;
          if (d4_thue_form(P, Q, T) != eps) throw Error(ErrorKind::Internal, "Thue solve produced a non-solution");
          auto canon = canonical_pair(P, Q);
          if (seen.insert(canon).second) per_q[idx].push_back(ThueSolution{canon.first, canon.second, eps});
        }
      }
    }
  });

  std::vector<ThueSolution> out;
  for (auto& v : per_q) {
    for (auto& s : v) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ThueSolution& x, const ThueSolution& y) {
    if (x.Q != y.Q) return x.Q < y.Q;
    return x.P < y.P;
  });
  return out;
}

}  // namespace octic
