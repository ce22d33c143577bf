#pragma once

// Relative and absolute indices of elements of an order O = Z_M[xi], where
// xi is a root of a monic quartic g over the ring of integers of an
// imaginary quadratic field M. Every product over conjugates is an exact
// resultant or norm; nothing is evaluated numerically.

#include <array>

#include "octic/polyarith.hpp"
#include "octic/quadring.hpp"

namespace octic {

using QPoly = UPoly<QuadInt>;

// Coordinates of alpha = A + X xi + Y xi^2 + Z xi^3.
struct OcticElement {
  QuadInt A, X, Y, Z;

  static OcticElement xi(const QuadField& f) { return {f.zero(), f.one(), f.zero(), f.zero()}; }
  OcticElement scaled(const QuadInt& u) const { return {A * u, X * u, Y * u, Z * u}; }
  OcticElement translated(const QuadInt& c) const { return {A + c, X, Y, Z}; }
  std::string to_string() const;
};

class RelQuarticOrder {
 public:
  // g must be monic of degree 4 over Z_M. Throws NotMonic / InvalidArgument,
  // and InvalidFamily if the irreducibility sanity check finds a factor.
  explicit RelQuarticOrder(QPoly g);

  const QuadField& field() const { return *field_; }
  const QPoly& g() const { return g_; }
  // D_{O/M} = disc(g)
  const QuadInt& rel_disc() const { return rel_disc_; }
  // D_O = N(D_{O/M}) * D_M^4
  const BigInt& abs_disc() const { return abs_disc_; }

 private:
  const QuadField* field_;
  QPoly g_;
  QuadInt rel_disc_;
  BigInt abs_disc_;
};

// Does g have a root in Z_M with both coordinates of absolute value <= box,
// or (for g = x^4 + p x^2 + q) a quadratic factor over Z_M?
bool has_small_factor(const QPoly& g, long box = 3);

// Characteristic polynomial of alpha over M: Res_y(g(y), x - alpha(y)),
// monic of degree 4. Generic in the coefficient ring so that the same code
// runs concretely (C = QuadInt) and symbolically in a2 (C = UPoly<QuadInt>).
template <class C>
UPoly<C> element_char_poly(const UPoly<C>& g, const std::array<C, 4>& coords) {
  std::vector<C> cs(coords.begin(), coords.end());
  return char_poly_mod(g, UPoly<C>(g.zero(), std::move(cs)));
}

// Coefficientwise conjugation of a polynomial over Z_M (or over Z_M[a2]).
QPoly conj_coeffs(const QPoly& p);
UPoly<QPoly> conj_coeffs(const UPoly<QPoly>& p);

QPoly rel_char_poly(const RelQuarticOrder& order, const OcticElement& elem);

// I_{O/M}(alpha) = sqrt(|N(disc h)| / |N(disc g)|). Throws NotPrimitive
// when disc h = 0 and InexactSqrt if the quotient is not a square.
BigInt rel_index(const RelQuarticOrder& order, const OcticElement& elem);

// J(alpha) = |Res(h, conj h)| / D_M^2. Throws NotPrimitiveAbs when the
// resultant vanishes.
BigInt j_value(const RelQuarticOrder& order, const OcticElement& elem);

struct IndexReport {
  BigInt rel_index = 0;
  BigInt j_value = 0;
  BigInt abs_index = 0;
  bool primitive_rel = false;
  bool primitive_abs = false;
};

// All three indices. I_O = I_{O/M} * J is cross-checked against
// I_O^2 |D_O| = |disc(h * conj h)|; a mismatch is an Internal error.
// Non-primitive elements give a report with the flags cleared and zeros.
IndexReport index_report(const RelQuarticOrder& order, const OcticElement& elem);

// Same as index_report, but throws NotPrimitive for elements that do not
// generate K over M.
IndexReport abs_index(const RelQuarticOrder& order, const OcticElement& elem);

struct DiscRelation {
  BigInt gram_disc;     // det(Tr_{K/Q}(b_i b_j)) over the Z-basis {mu_a xi^j}
  BigInt formula_disc;  // N(disc g) * D_M^4
  // theta = xi, or xi + w when xi is not primitive over Q
  BigInt octic_disc;    // D(theta) = disc of the absolute charpoly h * conj h
  BigInt j_theta;       // J(theta), so octic_disc = j_theta^2 * D_O
  bool theta_shifted = false;
  bool holds = false;
};

DiscRelation disc_relation(const RelQuarticOrder& order);
bool check_disc_relation(const RelQuarticOrder& order);

enum class Equivalence { Abs, Rel };

// ABS: e1 = +-e2 + c with c in Z. REL: e1 = eps e2 + C with eps a unit of M
// and C in Z_M.
bool are_equivalent(const OcticElement& e1, const OcticElement& e2, Equivalence mode);

// Integer polynomial from a polynomial over Z_M whose coefficients are all
// rational; throws NonIntegerCoefficients otherwise.
ZPoly rational_part(const QPoly& p);

}  // namespace octic
