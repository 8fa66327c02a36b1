#include "srg/walks.hpp"

#include <string>

namespace srg {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

WalkTable walk_counts(const SrgParams& p, std::size_t max_len) {
    WalkTable table{p, {}};
    table.counts.reserve(max_len + 1);
    const BigInt n = to_big(p.n), k = to_big(p.k);
    const BigInt a = to_big(p.lambda) - to_big(p.mu);
    const BigInt b = k - to_big(p.mu);
    const BigInt mu_n = to_big(p.mu) * n;

    table.counts.push_back(n);
    if (max_len >= 1) table.counts.push_back(0);
    BigInt k_pow = 1;  // k^(l-2)
    for (std::size_t l = 2; l <= max_len; ++l) {
        const auto& c = table.counts;
        table.counts.push_back(mu_n * k_pow + a * c[l - 1] + b * c[l - 2]);
        k_pow *= k;
    }
    return table;
}

QuadraticNumber eigen_power_sum(const Spectrum& s, unsigned long len) {
    return pow(s.r1, len) + pow(s.r2, len);
}

BigInt eigen_power_sum_recurrence(const SrgParams& p, unsigned long len) {
    const BigInt a = to_big(p.lambda) - to_big(p.mu);
    const BigInt b = to_big(p.k) - to_big(p.mu);
    BigInt prev = 2;
    if (len == 0) return prev;
    BigInt cur = a;
    for (unsigned long l = 2; l <= len; ++l) {
        BigInt next = a * cur + b * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt walk_count_closed_form(const SrgParams& p, unsigned long len) {
    Spectrum s;
    try {
        s = spectrum(p);
    } catch (const SpectrumError& e) {
        throw InfeasibleParams(e.what());
    }
    const BigInt k_term = pow(to_big(p.k), len);
    if (!s.conference) {
        return k_term + s.m1 * pow(s.r1.to_integer(), len) + s.m2 * pow(s.r2.to_integer(), len);
    }
    // m1 = m2, so only the symmetric power sum is needed.
    const QuadraticNumber total =
        QuadraticNumber::integer(k_term) + QuadraticNumber::integer(s.m1) * eigen_power_sum(s, len);
    if (!total.is_integer()) {
        throw NonIntegralResult("closed form is not an integer for " + p.to_string() + ": " +
                                total.to_string());
    }
    return total.to_integer();
}

BigInt conference_walk_count(std::int64_t mu, unsigned long len) {
    if (mu < 1) {
        throw std::invalid_argument("conference_walk_count requires mu >= 1");
    }
    const BigInt m = to_big(mu);
    const BigInt base = 4 * m + 1;
    BigInt sum = 0;
    for (unsigned long i = 0; 2 * i <= len; ++i) {
        sum += binomial(len, 2 * i) * pow(base, i);
    }
    const BigInt scale = pow(BigInt(2), len);
    BigInt numerator = pow(2 * m, len) * scale;
    if (len % 2 == 0) {
        numerator += 4 * m * sum;
    } else {
        numerator -= 4 * m * sum;
    }
    if (!mpz_divisible_p(numerator.get_mpz_t(), scale.get_mpz_t())) {
        throw NonIntegralResult("conference walk count not divisible by 2^" +
                                std::to_string(len));
    }
    return numerator / scale;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(x) * y % m);
}

std::uint64_t addmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(x) + y) % m);
}

std::uint64_t signed_residue(std::int64_t v, std::uint64_t m) {
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t walk_count_mod(const SrgParams& p, std::uint64_t len, std::uint64_t modulus) {
    if (modulus < 2) {
        throw std::invalid_argument("walk_count_mod requires modulus >= 2");
    }
    const std::uint64_t m = modulus;
    const std::uint64_t n = signed_residue(p.n, m);
    if (len == 0) return n;
    if (len == 1) return 0;
    const std::uint64_t k = signed_residue(p.k, m);
    const std::uint64_t a = signed_residue(p.lambda - p.mu, m);
    const std::uint64_t b = signed_residue(p.k - p.mu, m);
    const std::uint64_t mu_n = mulmod(signed_residue(p.mu, m), n, m);

    std::uint64_t prev = n, cur = 0, k_pow = 1 % m;
    for (std::uint64_t l = 2; l <= len; ++l) {
        std::uint64_t next = mulmod(mu_n, k_pow, m);
        next = addmod(next, mulmod(a, cur, m), m);
        next = addmod(next, mulmod(b, prev, m), m);
        prev = cur;
        cur = next;
        k_pow = mulmod(k_pow, k, m);
    }
    return cur;
}

DivisibilityReport check_prime_divisibility(const SrgParams& p, std::uint64_t bound) {
    if (bound < 2) {
        throw std::invalid_argument("check_prime_divisibility requires a prime bound >= 2");
    }
    DivisibilityReport report;
    report.params = p;
    report.checked_primes = primes_up_to(bound);
    for (std::uint64_t prime : report.checked_primes) {
        const std::uint64_t residue = walk_count_mod(p, prime, prime);
        if (residue != 0) {
            report.first_violation = PrimeResidue{prime, residue};
            break;
        }
    }
    report.all_pass = !report.first_violation.has_value();
    return report;
}

Case2Aux case2_aux(std::int64_t mu, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) {
        throw NotOddPrime(std::to_string(p) + " is not an odd prime");
    }
    if (mu < 1) {
        throw std::invalid_argument("case2_aux requires mu >= 1");
    }
    const BigInt m = to_big(mu);
    const BigInt base = 4 * m + 1;
    Case2Aux out;
    for (std::uint64_t i = 0; i <= (p - 1) / 2; ++i) {
        out.scaled += binomial(p, 2 * i) * pow(base, i);
    }
    out.scaled_is_one_mod_p = mod_u64(out.scaled, p) == 1;

    const BigInt scale = pow(BigInt(2), p);
    const BigInt four_mu_scaled = 4 * m * out.scaled;
    if (!mpz_divisible_p(four_mu_scaled.get_mpz_t(), scale.get_mpz_t())) {
        throw NonIntegralResult("4 mu x_p is not an integer for mu=" + std::to_string(mu) +
                                ", p=" + std::to_string(p));
    }
    const BigInt four_mu_x = four_mu_scaled / scale;
    out.matches_walk_count = four_mu_x == pow(2 * m, p) - conference_walk_count(mu, p);
    return out;
}

}  // namespace srg
