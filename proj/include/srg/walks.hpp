#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "srg/bigint.hpp"
#include "srg/core.hpp"
#include "srg/quadratic.hpp"

namespace srg {

/// Closed-walk counts c_0..c_L defined by the recurrence
///   c_l = mu n k^(l-2) + (lambda - mu) c_(l-1) + (k - mu) c_(l-2),  c_0 = n, c_1 = 0.
struct WalkTable {
    SrgParams params;
    std::vector<BigInt> counts;
};

struct PrimeResidue {
    std::uint64_t prime = 0;
    std::uint64_t residue = 0;

    friend bool operator==(const PrimeResidue&, const PrimeResidue&) = default;
};

struct DivisibilityReport {
    SrgParams params;
    std::vector<std::uint64_t> checked_primes;
    std::optional<PrimeResidue> first_violation;
    bool all_pass = true;
};

struct Case2Aux {
    /// 2^p x_p = sum_{i=0}^{(p-1)/2} C(p, 2i) (4 mu + 1)^i
    BigInt scaled;
    /// 2^p x_p = 1 (mod p)
    bool scaled_is_one_mod_p = false;
    /// 4 mu x_p = (2 mu)^p - c_p
    bool matches_walk_count = false;
};

class InfeasibleParams : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class NotOddPrime : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class NonIntegralResult : public std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultPrimeCap = 1000;

/// Sieve of Eratosthenes; ascending primes <= bound.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
bool is_prime(std::uint64_t v);

WalkTable walk_counts(const SrgParams& p, std::size_t max_len);

/// k^l + m1 r1^l + m2 r2^l evaluated exactly. Throws InfeasibleParams if the
/// spectrum does not exist.
BigInt walk_count_closed_form(const SrgParams& p, unsigned long len);

/// r1^l + r2^l in quadratic-field arithmetic.
QuadraticNumber eigen_power_sum(const Spectrum& s, unsigned long len);

/// r1^l + r2^l via p_l = (lambda-mu) p_(l-1) + (k-mu) p_(l-2), p_0 = 2, p_1 = lambda-mu.
BigInt eigen_power_sum_recurrence(const SrgParams& p, unsigned long len);

/// c_l for the conference tuple (4mu+1, 2mu, mu-1, mu) from the binomial
/// expansion, scaled by 2^l. Requires mu >= 1.
BigInt conference_walk_count(std::int64_t mu, unsigned long len);

/// c_l mod m, evaluated entirely in residues. Requires m >= 2.
std::uint64_t walk_count_mod(const SrgParams& p, std::uint64_t len, std::uint64_t modulus);

/// Checks p | c_p for every prime p <= primes_up_to.
DivisibilityReport check_prime_divisibility(const SrgParams& p, std::uint64_t primes_up_to);

/// Auxiliary sum of the conference case for an odd prime p. Throws NotOddPrime.
Case2Aux case2_aux(std::int64_t mu, std::uint64_t p);

}  // namespace srg
