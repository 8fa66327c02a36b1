#pragma once

#include <compare>
#include <string>

#include "srg/bigint.hpp"

namespace srg {

/**
 * Exact element (a + b*sqrt(d)) / den of a real quadratic field.
 *
 * Canonical form:
 *   - den > 0 and gcd(a, b, den) = 1;
 *   - d is square-free (the largest square factor is moved into b);
 *   - rational values have b = 0 and d = 0.
 * Two values are equal iff their canonical forms are structurally equal.
 *
 * Arithmetic between two irrational values requires a common radicand;
 * mixing radicands throws std::domain_error.
 */
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(BigInt a, BigInt b, BigInt d, BigInt den = 2);

    static QuadraticNumber integer(BigInt v);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& d() const { return d_; }
    const BigInt& den() const { return den_; }

    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && den_ == 1; }

    /// Integer value; throws std::domain_error unless is_integer().
    BigInt to_integer() const;

    /// -1, 0 or +1 according to the sign of the real value.
    int sign() const;

    /// Value as a string such as "-2", "3/2" or "(-1+sqrt(5))/2".
    std::string to_string() const;

    /// Numerically approximate value; for display and test oracles only.
    double approx() const;

    QuadraticNumber operator-() const;
    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
    friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);

private:
    void canonicalize();

    BigInt a_{0};
    BigInt b_{0};
    BigInt d_{0};
    BigInt den_{1};
};

QuadraticNumber pow(const QuadraticNumber& base, unsigned long exponent);

/// Splits d >= 1 as t*t*e with e square-free; returns {t, e}.
std::pair<BigInt, BigInt> split_square_factor(const BigInt& d);

}  // namespace srg
