#pragma once

// Exact arithmetic in the ring of integers of an imaginary quadratic field
// M = Q(i*sqrt(d)). Elements are written a + b*w where w is the second
// integral basis element: w = i*sqrt(d) (SQRT basis, d = 1, 2 mod 4) or
// w = (1 + i*sqrt(d))/2 (HALF basis, d = 3 mod 4).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octic/bigint.hpp"

namespace octic {

enum class BasisKind { Sqrt, Half };

const char* to_string(BasisKind kind);

class QuadInt;

// Immutable field descriptor. Instances are interned by make_field, so two
// descriptors are equal iff they are the same object.
class QuadField {
 public:
  long d() const noexcept { return d_; }
  BasisKind basis() const noexcept { return basis_; }
  // Field discriminant D_M: -4d (SQRT) or -d (HALF).
  long discriminant() const noexcept { return disc_; }
  // w^2 = w2_const + w2_lin * w
  long w2_const() const noexcept { return w2_const_; }
  long w2_lin() const noexcept { return w2_lin_; }

  const std::vector<QuadInt>& units() const { return units_; }
  // Units modulo {+1,-1}: one representative per pair {u, -u}.
  std::vector<QuadInt> units_mod_sign() const;

  QuadInt zero() const;
  QuadInt one() const;
  QuadInt w() const;
  QuadInt from_int(const BigInt& a) const;

  std::string name() const;

  QuadField(const QuadField&) = delete;
  QuadField& operator=(const QuadField&) = delete;

 private:
  friend const QuadField& make_field(long d, BasisKind kind);
  QuadField(long d, BasisKind kind);

  long d_;
  BasisKind basis_;
  long disc_;
  long w2_const_;
  long w2_lin_;
  std::vector<QuadInt> units_;
};

// Throws NonSquarefree or BasisMismatch.
const QuadField& make_field(long d, BasisKind kind);

// Field with the basis shape the ring of integers requires for d.
const QuadField& natural_field(long d);

class QuadInt {
 public:
  explicit QuadInt(const QuadField& field, BigInt a = 0, BigInt b = 0)
      : field_(&field), a_(std::move(a)), b_(std::move(b)) {}

  const QuadField& field() const noexcept { return *field_; }
  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_unit() const;

  QuadInt conj() const;
  BigInt norm() const;
  BigInt trace() const;

  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
  friend QuadInt operator-(const QuadInt& x) { return QuadInt(*x.field_, -x.a_, -x.b_); }
  friend QuadInt operator*(const QuadInt& x, const BigInt& k) { return QuadInt(*x.field_, x.a_ * k, x.b_ * k); }
  friend QuadInt operator*(const BigInt& k, const QuadInt& x) { return x * k; }
  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }
  // Total order on coordinates (for deterministic sorting, not an ordering of M).
  friend bool operator<(const QuadInt& x, const QuadInt& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  // Canonical text "a+b*w" / "a-b*w".
  std::string to_string() const;
  // Accepts "a", "a+b*w", "a-b*w", "a+-b*w", "b*w", "-w", "w".
  static QuadInt parse(const QuadField& field, std::string_view text);

 private:
  void check_field(const QuadInt& o) const;

  const QuadField* field_;
  BigInt a_;
  BigInt b_;
};

std::pair<BigInt, BigInt> norm_trace(const QuadInt& x);

// x / y in Z_M; throws NotDivisible when y does not divide x (or y = 0).
QuadInt exact_div(const QuadInt& x, const QuadInt& y);

// s with s*s == x, or nullopt when x is not a square in Z_M.
std::optional<QuadInt> exact_sqrt(const QuadInt& x);

QuadInt pow(const QuadInt& x, unsigned long e);

// Coefficient contract.
inline QuadInt zero_like(const QuadInt& x) { return x.field().zero(); }
inline QuadInt one_like(const QuadInt& x) { return x.field().one(); }
inline QuadInt from_int_like(long k, const QuadInt& x) { return x.field().from_int(k); }
inline bool is_zero(const QuadInt& x) { return x.is_zero(); }
inline bool same_structure(const QuadInt& x, const QuadInt& y) { return &x.field() == &y.field(); }
inline std::string coeff_string(const QuadInt& x) { return x.to_string(); }
inline QuadInt conj(const QuadInt& x) { return x.conj(); }

}  // namespace octic
