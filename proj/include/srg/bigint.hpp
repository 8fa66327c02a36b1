#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace srg {

using BigInt = mpz_class;

BigInt to_big(std::int64_t v);
BigInt to_big(std::uint64_t v);

/// Floor of the square root of a nonnegative integer (exact).
BigInt isqrt(const BigInt& v);

/// True iff v >= 0 and v = t*t for some integer t.
bool is_perfect_square(const BigInt& v);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);

/// Residue in [0, m) for any sign of v.
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

std::string to_string(const BigInt& v);

}  // namespace srg
