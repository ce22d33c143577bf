#pragma once

// Resolvent forms of a relative quartic and the solution machinery for
// the D4 family: the split cubic F(U, V) = unit, the parametrization of
// Q0 = 0, and a bounded search for the quartic relative Thue equation.

#include <array>
#include <vector>

#include "octic/indexcore.hpp"

namespace octic {

// c[0] U^3 + c[1] U^2 V + c[2] U V^2 + c[3] V^3
struct BinaryCubic {
  std::array<QuadInt, 4> c;
  QuadInt operator()(const QuadInt& u, const QuadInt& v) const;
};

// xx X^2 + yy Y^2 + zz Z^2 + xy XY + xz XZ + yz YZ
struct TernaryQuadratic {
  QuadInt xx, yy, zz, xy, xz, yz;
  QuadInt operator()(const QuadInt& x, const QuadInt& y, const QuadInt& z) const;
};

// For g = x^4 + a1 x^3 + a2 x^2 + a3 x + a4 the relative index form of
// X xi + Y xi^2 + Z xi^3 factors as F(Q1(X,Y,Z), Q2(X,Y,Z)), with
//   F  = U^3 - a2 U^2 V + (a1 a3 - 4 a4) U V^2 + (4 a2 a4 - a3^2 - a1^2 a4) V^3,
//   Q1 = X^2 - a1 XY + a2 Y^2 + (a1^2 - 2 a2) XZ + (a3 - a1 a2) YZ
//        + (a2^2 - a1 a3 + a4) Z^2,
//   Q2 = Y^2 - XZ - a1 YZ + a2 Z^2,
// so that disc(h) = disc(g) * F(Q1, Q2)^2.
//
// For g = x^4 - 2iT^2 x^2 + 1 this F is (U + 2iT^2 V)(U - 2V)(U + 2V). The
// variant (U - 2iT^2 V)(U - 2V)(U + 2V) agrees with it on V = 0 only and
// breaks the index-form identity for general V.
struct ResolventForms {
  BinaryCubic F;
  TernaryQuadratic Q1;
  TernaryQuadratic Q2;
};

ResolventForms resolvent_forms(const QPoly& g);

// F(Q1(X,Y,Z), Q2(X,Y,Z))
QuadInt index_form_eval(const ResolventForms& forms, const QuadInt& X, const QuadInt& Y, const QuadInt& Z);

// u_coef U + v_coef V
struct LinearForm {
  QuadInt u_coef;
  QuadInt v_coef;
  QuadInt operator()(const QuadInt& u, const QuadInt& v) const { return u_coef * u + v_coef * v; }
};

struct SplitCubic {
  std::array<LinearForm, 3> factors;
};

// For biquadratic g = x^4 + a2 x^2 + a4 with a4 = s^2 a square in Z_M:
// F = (U - a2 V)(U - 2sV)(U + 2sV). Throws NotSplit otherwise.
SplitCubic split_biquadratic(const QPoly& g);

struct UVSolution {
  QuadInt U, V, eps;
};

// All (U, V) in Z_M^2 with every linear factor of F a unit. Each pair of
// factor values (eps1, eps2) determines (U, V) by a 2x2 exact solve; the
// third factor is then checked. Verifies the split against forms.F.
std::vector<UVSolution> solve_uv_split(const ResolventForms& forms, const SplitCubic& split, const QuadField& field);

// (X, Y, Z) = (P^2 - 2iT^2 Q^2, PQ, Q^2) over Z[i].
std::array<QuadInt, 3> parametrize_d4(const QuadInt& P, const QuadInt& Q, const BigInt& T);

// P^4 - 2iT^2 P^2 Q^2 + Q^4
QuadInt d4_thue_form(const QuadInt& P, const QuadInt& Q, const BigInt& T);

struct ThueSolution {
  QuadInt P, Q;
  QuadInt unit;  // value of the form
};

// Representative of (P, Q) under simultaneous unit scaling: Q = 0 forces
// P = 1 up to units; otherwise Q is rotated into {Re > 0, Im >= 0}.
std::pair<QuadInt, QuadInt> canonical_pair(const QuadInt& P, const QuadInt& Q);

// All (P, Q) in Z[i]^2 with coordinates bounded by `bound` in absolute value
// whose D4 Thue form value is a unit, one per unit-scaling class, sorted.
// For each Q in a quarter plane the equation is a quadratic in P^2 and is
// solved exactly, which covers every P of the box. `jobs` workers split the
// Q range; the merge is deterministic.
std::vector<ThueSolution> thue_bounded_search(const BigInt& T, long bound, unsigned jobs = 1);

}  // namespace octic
