#include "octic/quadring.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "octic/error.hpp"

namespace octic {

const char* to_string(BasisKind kind) { return kind == BasisKind::Sqrt ? "SQRT" : "HALF"; }

namespace {

bool squarefree(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

QuadField::QuadField(long d, BasisKind kind) : d_(d), basis_(kind) {
  if (kind == BasisKind::Sqrt) {
    disc_ = -4 * d;
    w2_const_ = -d;
    w2_lin_ = 0;
  } else {
    disc_ = -d;
    w2_const_ = -(1 + d) / 4;
    w2_lin_ = 1;
  }
  units_.emplace_back(*this, 1, 0);
  units_.emplace_back(*this, -1, 0);
  if (d == 1) {
    units_.emplace_back(*this, 0, 1);
    units_.emplace_back(*this, 0, -1);
  } else if (d == 3) {
    // w is a primitive sixth root of unity; w - 1 = w^2.
    units_.emplace_back(*this, 0, 1);
    units_.emplace_back(*this, 0, -1);
    units_.emplace_back(*this, -1, 1);
    units_.emplace_back(*this, 1, -1);
  }
}

std::vector<QuadInt> QuadField::units_mod_sign() const {
  std::vector<QuadInt> out;
  for (std::size_t i = 0; i < units_.size(); i += 2) out.push_back(units_[i]);
  return out;
}

QuadInt QuadField::zero() const { return QuadInt(*this, 0, 0); }
QuadInt QuadField::one() const { return QuadInt(*this, 1, 0); }
QuadInt QuadField::w() const { return QuadInt(*this, 0, 1); }
QuadInt QuadField::from_int(const BigInt& a) const { return QuadInt(*this, a, 0); }

std::string QuadField::name() const {
  return "Q(i*sqrt(" + std::to_string(d_) + "))/" + to_string(basis_);
}

const QuadField& make_field(long d, BasisKind kind) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be a positive integer");
  if (!squarefree(d)) throw Error(ErrorKind::NonSquarefree, "d = " + std::to_string(d));
  const bool three_mod_four = d % 4 == 3;
  if (kind == BasisKind::Half && !three_mod_four) {
    throw Error(ErrorKind::BasisMismatch, "HALF basis requires d = 3 mod 4, got d = " + std::to_string(d));
  }
  if (kind == BasisKind::Sqrt && three_mod_four) {
    throw Error(ErrorKind::BasisMismatch, "SQRT basis requires d = 1, 2 mod 4, got d = " + std::to_string(d));
  }
  static std::mutex mutex;
  static std::map<std::pair<long, BasisKind>, std::unique_ptr<QuadField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[{d, kind}];
  if (!slot) slot = std::unique_ptr<QuadField>(new QuadField(d, kind));
  return *slot;
}

const QuadField& natural_field(long d) {
  return make_field(d, d % 4 == 3 ? BasisKind::Half : BasisKind::Sqrt);
}

void QuadInt::check_field(const QuadInt& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorKind::FieldMismatch, field_->name() + " vs " + o.field_->name());
  }
}

bool QuadInt::is_unit() const { return norm() == 1; }

QuadInt QuadInt::conj() const {
  if (field_->basis() == BasisKind::Sqrt) return QuadInt(*field_, a_, -b_);
  // conj(w) = 1 - w
  return QuadInt(*field_, a_ + b_, -b_);
}

BigInt QuadInt::norm() const {
  if (field_->basis() == BasisKind::Sqrt) return a_ * a_ + field_->d() * (b_ * b_);
  return a_ * a_ + a_ * b_ + ((1 + field_->d()) / 4) * (b_ * b_);
}

BigInt QuadInt::trace() const {
  if (field_->basis() == BasisKind::Sqrt) return 2 * a_;
  return 2 * a_ + b_;
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  check_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
  check_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  check_field(o);
  // (a + b w)(c + e w) = ac + (ae + bc) w + be w^2
  BigInt be = b_ * o.b_;
  BigInt a = a_ * o.a_ + field_->w2_const() * be;
  BigInt b = a_ * o.b_ + b_ * o.a_;
  if (field_->w2_lin() != 0) b += be;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QuadInt::to_string() const {
  std::string out = octic::to_string(a_);
  if (sgn(b_) < 0) {
    out += "-" + octic::to_string(BigInt(-b_));
  } else {
    out += "+" + octic::to_string(b_);
  }
  return out + "*w";
}

QuadInt QuadInt::parse(const QuadField& field, std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  auto fail = [&]() { return Error(ErrorKind::ParseError, "bad element '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  std::size_t wpos = s.find('w');
  if (wpos == std::string::npos) return QuadInt(field, parse_bigint(s), 0);
  if (wpos + 1 != s.size()) throw fail();
  // Split "<a><sign><b>*w" at the last sign not at position 0 and not
  // directly after another sign.
  std::string head = s.substr(0, wpos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '+' && head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  std::string a_part = split == std::string::npos ? "0" : head.substr(0, split);
  std::string b_part = split == std::string::npos ? head : head.substr(split);
  if (!b_part.empty() && b_part[0] == '+') b_part.erase(0, 1);
  if (b_part.empty() || b_part == "+") b_part = "1";
  if (b_part == "-") b_part = "-1";
  if (b_part.size() >= 2 && b_part[0] == '-' && b_part[1] == '-') throw fail();
  if (b_part.size() >= 2 && b_part[0] == '-' && b_part[1] == '+') throw fail();
  try {
    return QuadInt(field, parse_bigint(a_part), parse_bigint(b_part));
  } catch (const Error&) {
    throw fail();
  }
}

std::pair<BigInt, BigInt> norm_trace(const QuadInt& x) { return {x.norm(), x.trace()}; }

QuadInt exact_div(const QuadInt& x, const QuadInt& y) {
  if (&x.field() != &y.field()) throw Error(ErrorKind::FieldMismatch, "exact_div");
  if (y.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
  QuadInt num = x * y.conj();
  BigInt n = y.norm();
  if (!mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t())) {
    throw Error(ErrorKind::NotDivisible, x.to_string() + " / " + y.to_string());
  }
  BigInt a, b;
  mpz_divexact(a.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
  return QuadInt(x.field(), a, b);
}

std::optional<QuadInt> exact_sqrt(const QuadInt& x) {
  const QuadField& f = x.field();
  if (x.is_zero()) return f.zero();
  auto n = exact_isqrt(x.norm());
  if (!n) return std::nullopt;
  const long d = f.d();
  // Work in coordinates u + v*i*sqrt(d) scaled by `den` (1 for SQRT, 2 for HALF):
  // x = (u + v i sqrt d)/den, s = (p + q i sqrt d)/den.
  BigInt u, v;
  BigInt pp, qq;  // p^2 and q^2
  if (f.basis() == BasisKind::Sqrt) {
    u = x.a();
    v = x.b();
    // p^2 - d q^2 = u, p^2 + d q^2 = n
    BigInt s = u + *n;
    if (!mpz_divisible_ui_p(s.get_mpz_t(), 2)) return std::nullopt;
    pp = s / 2;
    BigInt t = *n - u;
    if (!mpz_divisible_ui_p(t.get_mpz_t(), 2 * d)) return std::nullopt;
    qq = t / (2 * d);
  } else {
    u = 2 * x.a() + x.b();
    v = x.b();
    // p^2 - d q^2 = 2u, p^2 + d q^2 = 4n
    pp = 2 * *n + u;
    BigInt t = 2 * *n - u;
    if (!mpz_divisible_ui_p(t.get_mpz_t(), d)) return std::nullopt;
    qq = t / d;
  }
  auto p = exact_isqrt(pp);
  auto q = exact_isqrt(qq);
  if (!p || !q) return std::nullopt;
  for (int sign : {1, -1}) {
    BigInt qs = sign * *q;
    QuadInt cand = f.zero();
    if (f.basis() == BasisKind::Sqrt) {
      cand = QuadInt(f, *p, qs);
    } else {
      BigInt diff = *p - qs;
      if (!mpz_divisible_ui_p(diff.get_mpz_t(), 2)) continue;
      cand = QuadInt(f, diff / 2, qs);
    }
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

QuadInt pow(const QuadInt& x, unsigned long e) {
  QuadInt result = x.field().one();
  QuadInt base = x;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace octic
