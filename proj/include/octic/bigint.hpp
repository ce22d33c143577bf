#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace octic {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& x);

// Exact square root of a nonnegative integer, or nullopt if x is not a square.
std::optional<BigInt> exact_isqrt(const BigInt& x);

BigInt pow(const BigInt& base, unsigned long exp);

// Coefficient contract for BigInt (found by ordinary lookup from the
// polynomial templates; the other coefficient types are found via ADL).
inline BigInt zero_like(const BigInt&) { return 0; }
inline BigInt one_like(const BigInt&) { return 1; }
inline BigInt from_int_like(long k, const BigInt&) { return k; }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool same_structure(const BigInt&, const BigInt&) { return true; }
inline std::string coeff_string(const BigInt& x) { return to_string(x); }

}  // namespace octic
