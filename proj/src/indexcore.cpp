#include "octic/indexcore.hpp"

namespace octic {

std::string OcticElement::to_string() const {
  return "(" + A.to_string() + "; " + X.to_string() + ", " + Y.to_string() + ", " + Z.to_string() + ")";
}

bool has_small_factor(const QPoly& g, long box) {
  const QuadField& f = g.zero().field();
  for (long a = -box; a <= box; ++a) {
    for (long b = -box; b <= box; ++b) {
      if (evaluate(g, QuadInt(f, a, b)).is_zero()) return true;
    }
  }
  if (g.degree() == 4 && g[1].is_zero() && g[3].is_zero()) {
    // x^4 + p x^2 + q
    const QuadInt& p = g[2];
    const QuadInt& q = g[0];
    // (x^2 - r)(x^2 - s): p^2 - 4q is a square and the roots are integral.
    QuadInt four = f.from_int(4);
    if (auto s = exact_sqrt(p * p - four * q)) {
      QuadInt num = -p + *s;
      try {
        exact_div(num, f.from_int(2));
        return true;
      } catch (const Error&) {
      }
    }
    // (x^2 + c x + b)(x^2 - c x + b) with b^2 = q and c^2 = 2b - p.
    if (auto b = exact_sqrt(q)) {
      for (const QuadInt& bb : {*b, QuadInt(-*b)}) {
        if (exact_sqrt(f.from_int(2) * bb - p)) return true;
      }
    }
  }
  return false;
}

RelQuarticOrder::RelQuarticOrder(QPoly g)
    : field_(&g.zero().field()), g_(std::move(g)), rel_disc_(field_->zero()) {
  if (g_.degree() != 4) throw Error(ErrorKind::InvalidArgument, "relative defining polynomial must be quartic");
  if (!g_.is_monic()) throw Error(ErrorKind::NotMonic, "relative defining polynomial must be monic");
  if (has_small_factor(g_)) throw Error(ErrorKind::InvalidFamily, "defining polynomial is reducible over Z_M");
  rel_disc_ = discriminant(g_);
  if (rel_disc_.is_zero()) throw Error(ErrorKind::InvalidFamily, "defining polynomial has a repeated factor");
  abs_disc_ = rel_disc_.norm() * pow(BigInt(field_->discriminant()), 4);
}

QPoly conj_coeffs(const QPoly& p) {
  return map_coeffs(p, p.zero(), [](const QuadInt& c) { return c.conj(); });
}

UPoly<QPoly> conj_coeffs(const UPoly<QPoly>& p) {
  return map_coeffs(p, p.zero(), [](const QPoly& c) { return conj_coeffs(c); });
}

QPoly rel_char_poly(const RelQuarticOrder& order, const OcticElement& e) {
  return element_char_poly(order.g(), std::array<QuadInt, 4>{e.A, e.X, e.Y, e.Z});
}

BigInt rel_index(const RelQuarticOrder& order, const OcticElement& elem) {
  const QPoly h = rel_char_poly(order, elem);
  const BigInt num = discriminant(h).norm();
  if (sgn(num) == 0) throw Error(ErrorKind::NotPrimitive, elem.to_string() + " does not generate K over M");
  const BigInt den = order.rel_disc().norm();
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorKind::InexactSqrt, "N(disc h) not divisible by N(disc g)");
  }
  auto r = exact_isqrt(BigInt(num / den));
  if (!r) throw Error(ErrorKind::InexactSqrt, "relative index quotient is not a square");
  return *r;
}

namespace {

// Res(h, conj h) as a rational integer; zero for non-generators of K/Q.
BigInt conj_resultant(const QPoly& h) {
  const QuadInt r = resultant(h, conj_coeffs(h));
  if (!r.is_rational()) throw Error(ErrorKind::Internal, "Res(h, conj h) is not rational: " + r.to_string());
  return r.a();
}

BigInt divide_by_dm2(const BigInt& value, const QuadField& f) {
  const BigInt dm2 = BigInt(f.discriminant()) * f.discriminant();
  if (!mpz_divisible_p(value.get_mpz_t(), dm2.get_mpz_t())) {
    throw Error(ErrorKind::InexactDivision, "Res(h, conj h) not divisible by D_M^2");
  }
  return value / dm2;
}

}  // namespace

BigInt j_value(const RelQuarticOrder& order, const OcticElement& elem) {
  const BigInt r = conj_resultant(rel_char_poly(order, elem));
  if (sgn(r) == 0) throw Error(ErrorKind::NotPrimitiveAbs, elem.to_string() + " does not generate K over Q");
  return abs(divide_by_dm2(r, order.field()));
}

ZPoly rational_part(const QPoly& p) {
  return map_coeffs(p, BigInt(0), [](const QuadInt& c) {
    if (!c.is_rational()) throw Error(ErrorKind::NonIntegerCoefficients, "coefficient " + c.to_string());
    return c.a();
  });
}

IndexReport index_report(const RelQuarticOrder& order, const OcticElement& elem) {
  IndexReport rep;
  const QPoly h = rel_char_poly(order, elem);
  const QuadInt dh = discriminant(h);
  if (dh.is_zero()) return rep;
  rep.primitive_rel = true;
  rep.rel_index = rel_index(order, elem);
  const BigInt r = conj_resultant(h);
  if (sgn(r) == 0) return rep;
  rep.primitive_abs = true;
  rep.j_value = abs(divide_by_dm2(r, order.field()));
  rep.abs_index = rep.rel_index * rep.j_value;

  // Direct check: D(alpha) = disc of the absolute characteristic polynomial.
  const ZPoly absolute = rational_part(h * conj_coeffs(h));
  const BigInt lhs = rep.abs_index * rep.abs_index * abs(order.abs_disc());
  const BigInt rhs = abs(discriminant(absolute));
  if (lhs != rhs) {
    throw Error(ErrorKind::Internal, "index factorization mismatch for " + elem.to_string() + ": " +
                                         to_string(lhs) + " != " + to_string(rhs));
  }
  return rep;
}

IndexReport abs_index(const RelQuarticOrder& order, const OcticElement& elem) {
  IndexReport rep = index_report(order, elem);
  if (!rep.primitive_rel) throw Error(ErrorKind::NotPrimitive, elem.to_string() + " does not generate K over M");
  return rep;
}

DiscRelation disc_relation(const RelQuarticOrder& order) {
  const QuadField& f = order.field();
  const QPoly& g = order.g();
  DiscRelation out;

  // Tr_{K/M}(xi^s) for s = 0..6 as traces of multiplication matrices.
  std::vector<QuadInt> rel_trace;
  for (int s = 0; s <= 6; ++s) {
    Matrix<QuadInt> M = multiplication_matrix(g, QPoly::monomial(f.zero(), s, f.one()));
    QuadInt t = f.zero();
    for (int i = 0; i < 4; ++i) t += M(i, i);
    rel_trace.push_back(t);
  }
  // Z-basis b_{a,j} = mu_a xi^j, mu_0 = 1, mu_1 = w.
  const std::array<QuadInt, 2> mu{f.one(), f.w()};
  Matrix<BigInt> gram(8, 8, BigInt(0));
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      const QuadInt coef = mu[static_cast<std::size_t>(p / 4)] * mu[static_cast<std::size_t>(q / 4)];
      gram(p, q) = (coef * rel_trace[static_cast<std::size_t>(p % 4 + q % 4)]).trace();
    }
  }
  out.gram_disc = determinant(gram, BigInt(0));
  out.formula_disc = order.abs_disc();
  // xi itself may lie in a quartic subfield (g over Q); xi + w has the same
  // relative index and generates K over Q in that case.
  OcticElement theta = OcticElement::xi(f);
  const IndexReport plain = index_report(order, theta);
  out.theta_shifted = !plain.primitive_abs;
  if (out.theta_shifted) theta = theta.translated(f.w());
  const QPoly h = rel_char_poly(order, theta);
  out.octic_disc = discriminant(rational_part(h * conj_coeffs(h)));
  out.j_theta = j_value(order, theta);
  out.holds = out.gram_disc == out.formula_disc && out.octic_disc == out.j_theta * out.j_theta * out.formula_disc;
  return out;
}

bool check_disc_relation(const RelQuarticOrder& order) { return disc_relation(order).holds; }

bool are_equivalent(const OcticElement& e1, const OcticElement& e2, Equivalence mode) {
  const QuadField& f = e1.X.field();
  const std::vector<QuadInt> scalars =
      mode == Equivalence::Abs ? std::vector<QuadInt>{f.one(), -f.one()} : f.units();
  for (const QuadInt& u : scalars) {
    if (e1.X != u * e2.X || e1.Y != u * e2.Y || e1.Z != u * e2.Z) continue;
    if (mode == Equivalence::Rel) return true;
    // A-part difference must be a rational integer.
    if ((e1.A - u * e2.A).is_rational()) return true;
  }
  return false;
}

}  // namespace octic
