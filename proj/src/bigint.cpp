#include "srg/bigint.hpp"

#include <stdexcept>

namespace srg {

BigInt to_big(std::int64_t v) {
    BigInt out;
    // mpz_set_si takes a long, which is 64-bit on every platform we target.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return out;
}

BigInt to_big(std::uint64_t v) {
    BigInt out;
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
    return out;
}

BigInt isqrt(const BigInt& v) {
    if (sgn(v) < 0) {
        throw std::domain_error("isqrt of a negative integer");
    }
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return root;
}

bool is_perfect_square(const BigInt& v) {
    return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), to_big(m).get_mpz_t());
    return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

}  // namespace srg
