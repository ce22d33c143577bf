#pragma once

// Univariate polynomials over an exact coefficient structure C.
//
// C only has to provide +, -, *, unary -, == and the free functions
// zero_like, one_like, from_int_like, is_zero and same_structure. Nothing in
// here divides coefficients, so C may itself be a polynomial ring (the J
// computation runs over "polynomials in a2 with Z_M coefficients").

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "octic/bigint.hpp"
#include "octic/error.hpp"

namespace octic {

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

template <class C>
class UPoly {
 public:
  // Zero polynomial over the structure of `zero`.
  explicit UPoly(const C& zero) : zero_(zero_like(zero)) {}
  UPoly(const C& zero, std::vector<C> coeffs) : zero_(zero_like(zero)), coeffs_(std::move(coeffs)) {
    for (const C& c : coeffs_) check(c);
    trim();
  }

  static UPoly constant(const C& c) { return UPoly(c, std::vector<C>{c}); }
  // x^k with unit coefficient.
  static UPoly monomial(const C& like, int k, const C& coeff) {
    std::vector<C> cs(static_cast<std::size_t>(k) + 1, zero_like(like));
    cs[static_cast<std::size_t>(k)] = coeff;
    return UPoly(like, std::move(cs));
  }
  static UPoly x(const C& like) { return monomial(like, 1, one_like(like)); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const C& zero() const { return zero_; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  // Coefficient of x^i (zero beyond the degree).
  const C& operator[](int i) const {
    if (i < 0 || i > degree()) return zero_;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const C& lead() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == one_like(zero_); }

  UPoly& operator+=(const UPoly& o) {
    check(o.zero_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    check(o.zero_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly p, const UPoly& q) { return p += q; }
  friend UPoly operator-(UPoly p, const UPoly& q) { return p -= q; }
  friend UPoly operator-(const UPoly& p) {
    UPoly r(p.zero_);
    r.coeffs_.reserve(p.coeffs_.size());
    for (const C& c : p.coeffs_) r.coeffs_.push_back(-c);
    return r;
  }
  friend UPoly operator*(const UPoly& p, const UPoly& q) {
    p.check(q.zero_);
    UPoly r(p.zero_);
    if (p.is_zero() || q.is_zero()) return r;
    r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, p.zero_);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(p.coeffs_[i])) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        if (detail::coeff_is_zero(q.coeffs_[j])) continue;
        C t = p.coeffs_[i] * q.coeffs_[j];
        r.coeffs_[i + j] += t;
      }
    }
    r.trim();
    return r;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  // Scalar multiple.
  friend UPoly operator*(const UPoly& p, const C& c) {
    p.check(c);
    UPoly r(p.zero_);
    for (const C& a : p.coeffs_) r.coeffs_.push_back(a * c);
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& p, const UPoly& q) {
    return same_structure(p.zero_, q.zero_) && p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const UPoly& p, const UPoly& q) { return !(p == q); }

 private:
  void check(const C& c) const {
    if (!same_structure(zero_, c)) throw Error(ErrorKind::StructureMismatch, "coefficient structures differ");
  }
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  C zero_;
  std::vector<C> coeffs_;
};

// Coefficient contract for nested polynomial coefficients.
template <class C>
UPoly<C> zero_like(const UPoly<C>& p) { return UPoly<C>(p.zero()); }
template <class C>
UPoly<C> one_like(const UPoly<C>& p) { return UPoly<C>::constant(one_like(p.zero())); }
template <class C>
UPoly<C> from_int_like(long k, const UPoly<C>& p) { return UPoly<C>::constant(from_int_like(k, p.zero())); }
template <class C>
bool is_zero(const UPoly<C>& p) { return p.is_zero(); }
template <class C>
bool same_structure(const UPoly<C>& p, const UPoly<C>& q) { return same_structure(p.zero(), q.zero()); }

template <class C>
std::string coeff_string(const UPoly<C>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += coeff_string(p.coeffs()[i]);
  }
  return out + "]";
}

template <class C>
C power(const C& x, unsigned long e) {
  C result = one_like(x);
  C base = x;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class C>
C evaluate(const UPoly<C>& p, const C& at) {
  C acc = p.zero();
  for (int i = p.degree(); i >= 0; --i) acc = acc * at + p[i];
  return acc;
}

// p(q(x))
template <class C>
UPoly<C> compose(const UPoly<C>& p, const UPoly<C>& q) {
  UPoly<C> acc(p.zero());
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + UPoly<C>::constant(p[i]);
  return acc;
}

template <class C>
UPoly<C> derivative(const UPoly<C>& p) {
  std::vector<C> cs;
  for (int i = 1; i <= p.degree(); ++i) cs.push_back(p[i] * from_int_like(i, p.zero()));
  return UPoly<C>(p.zero(), std::move(cs));
}

template <class D, class C, class F>
UPoly<D> map_coeffs(const UPoly<C>& p, const D& zero, F&& f) {
  std::vector<D> cs;
  cs.reserve(p.coeffs().size());
  for (const C& c : p.coeffs()) cs.push_back(f(c));
  return UPoly<D>(zero, std::move(cs));
}

// Remainder of p modulo a monic polynomial m (division-free).
template <class C>
UPoly<C> rem_monic(const UPoly<C>& p, const UPoly<C>& m) {
  if (!m.is_monic()) throw Error(ErrorKind::NotMonic, "rem_monic needs a monic modulus");
  const int n = m.degree();
  std::vector<C> r = p.coeffs();
  for (int k = static_cast<int>(r.size()) - 1; k >= n; --k) {
    C c = r[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    for (int j = 0; j < n; ++j) {
      C t = c * m[j];
      r[static_cast<std::size_t>(k - n + j)] -= t;
    }
    r[static_cast<std::size_t>(k)] = p.zero();
  }
  return UPoly<C>(p.zero(), std::move(r));
}

template <class C>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<C> data;

  Matrix(int r, int c, const C& zero) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), zero) {}
  C& operator()(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  const C& operator()(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
};

// Characteristic polynomial det(x I - M) by Berkowitz's division-free
// algorithm. Returned constant term first, monic of degree n.
template <class C>
UPoly<C> charpoly_berkowitz(const Matrix<C>& M, const C& zero) {
  const int n = M.rows;
  const C one = one_like(zero);
  if (n == 0) return UPoly<C>::constant(one);
  // vec holds coefficients highest-first of the charpoly of the leading
  // r x r principal submatrix.
  std::vector<C> vec{one, -M(0, 0)};
  for (int r = 1; r < n; ++r) {
    // Submatrix A = M[0..r-1][0..r-1], row R = M[r][0..r-1],
    // column Ccol = M[0..r-1][r], corner a = M[r][r].
    // Toeplitz column: [1, -a, -R C, -R A C, ..., -R A^{r-1} C]
    std::vector<C> toe;
    toe.reserve(static_cast<std::size_t>(r) + 2);
    toe.push_back(one);
    toe.push_back(-M(r, r));
    std::vector<C> col(static_cast<std::size_t>(r), zero);
    for (int i = 0; i < r; ++i) col[static_cast<std::size_t>(i)] = M(i, r);
    for (int k = 0; k < r; ++k) {
      C s = zero;
      for (int j = 0; j < r; ++j) {
        if (is_zero(M(r, j)) || is_zero(col[static_cast<std::size_t>(j)])) continue;
        C t = M(r, j) * col[static_cast<std::size_t>(j)];
        s += t;
      }
      toe.push_back(-s);
      if (k + 1 < r) {
        std::vector<C> next(static_cast<std::size_t>(r), zero);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) {
            if (is_zero(M(i, j)) || is_zero(col[static_cast<std::size_t>(j)])) continue;
            C t = M(i, j) * col[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] += t;
          }
        }
        col = std::move(next);
      }
    }
    // new = Toeplitz(toe) (size (r+2) x (r+1), lower triangular) * vec
    std::vector<C> next(static_cast<std::size_t>(r) + 2, zero);
    for (int i = 0; i < r + 2; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) {
        const C& tij = toe[static_cast<std::size_t>(i - j)];
        const C& vj = vec[static_cast<std::size_t>(j)];
        if (is_zero(tij) || is_zero(vj)) continue;
        C t = tij * vj;
        next[static_cast<std::size_t>(i)] += t;
      }
    }
    vec = std::move(next);
  }
  std::reverse(vec.begin(), vec.end());
  return UPoly<C>(zero, std::move(vec));
}

template <class C>
C determinant(const Matrix<C>& M, const C& zero) {
  UPoly<C> cp = charpoly_berkowitz(M, zero);
  C c0 = cp[0];
  return (M.rows % 2 == 0) ? c0 : C(-c0);
}

// Matrix of multiplication by `a` on R[x]/(m) in the basis 1, x, ..., x^{n-1}
// (column j holds the coordinates of a*x^j mod m).
template <class C>
Matrix<C> multiplication_matrix(const UPoly<C>& m, const UPoly<C>& a) {
  const int n = m.degree();
  Matrix<C> M(n, n, m.zero());
  UPoly<C> cur = rem_monic(a, m);
  const UPoly<C> x = UPoly<C>::x(m.zero());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) M(i, j) = cur[i];
    if (j + 1 < n) cur = rem_monic(cur * x, m);
  }
  return M;
}

// Characteristic polynomial over R of the class of `a` in R[x]/(m), i.e.
// Res_y(m(y), x - a(y)) for monic m.
template <class C>
UPoly<C> char_poly_mod(const UPoly<C>& m, const UPoly<C>& a) {
  return charpoly_berkowitz(multiplication_matrix(m, a), m.zero());
}

template <class C>
Matrix<C> sylvester_matrix(const UPoly<C>& p, const UPoly<C>& q) {
  const int m = p.degree();
  const int n = q.degree();
  Matrix<C> S(m + n, m + n, p.zero());
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) S(r, r + k) = p[m - k];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) S(n + r, r + k) = q[n - k];
  }
  return S;
}

// Res(p, q) = lc(p)^deg q * lc(q)^deg p * prod (alpha_i - beta_j).
// Monic arguments use the norm form det(q mod p); otherwise the Sylvester
// determinant, in both cases via the division-free characteristic polynomial.
template <class C>
C resultant(const UPoly<C>& p, const UPoly<C>& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with 0");
  if (!same_structure(p.zero(), q.zero())) throw Error(ErrorKind::StructureMismatch, "resultant");
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0) return power(p[0], static_cast<unsigned long>(n));
  if (n == 0) return power(q[0], static_cast<unsigned long>(m));
  if (p.is_monic()) return determinant(multiplication_matrix(p, q), p.zero());
  if (q.is_monic()) {
    C r = determinant(multiplication_matrix(q, p), p.zero());
    return ((m * n) % 2 == 0) ? r : C(-r);
  }
  return determinant(sylvester_matrix(p, q), p.zero());
}

// (-1)^{n(n-1)/2} Res(p, p') for monic p of degree >= 2.
template <class C>
C discriminant(const UPoly<C>& p) {
  if (p.degree() < 2) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 2");
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "discriminant is only defined for monic input");
  const int n = p.degree();
  C r = resultant(p, derivative(p));
  return ((n * (n - 1) / 2) % 2 == 0) ? r : C(-r);
}

using ZPoly = UPoly<BigInt>;

ZPoly zpoly(std::vector<long> coeffs);

// All integers a with p(a) == target. Real roots of p - target are isolated
// by exact sign bisection on monotone runs (recursing through derivatives),
// and integers next to each isolated root are tested exactly.
std::vector<BigInt> integer_root_search(const ZPoly& p, const BigInt& target);

// Cauchy bound: every real root of p lies in (-B, B).
BigInt cauchy_bound(const ZPoly& p);

}  // namespace octic
