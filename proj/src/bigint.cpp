#include "octic/bigint.hpp"

#include "octic/error.hpp"

namespace octic {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquarefree: return "NonSquarefree";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotPrimitiveAbs: return "NotPrimitiveAbs";
    case ErrorKind::InexactSqrt: return "InexactSqrt";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::CompositeNeedsIngest: return "CompositeNeedsIngest";
    case ErrorKind::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::CandidateMismatch: return "CandidateMismatch";
    case ErrorKind::RelIndexNotOne: return "RelIndexNotOne";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty integer");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::optional<BigInt> exact_isqrt(const BigInt& x) {
  if (sgn(x) < 0) return std::nullopt;
  BigInt r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace octic
