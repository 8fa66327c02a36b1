#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "srg/core.hpp"

namespace srg {

struct ScanRecord {
    SrgParams params;
    FeasibilityReport report;
    /// (n, n-1-k, n-2-2k+mu, n-2k+lambda) when every entry is nonnegative.
    std::optional<SrgParams> complement_params;
};

struct Violation {
    SrgParams params;
    std::uint64_t prime = 0;
    std::uint64_t residue = 0;
};

struct VerificationReport {
    std::int64_t n_max = 0;
    std::uint64_t p_max = 0;
    std::uint64_t tuples_checked = 0;
    std::uint64_t prime_checks = 0;
    std::vector<Violation> violations;
    std::chrono::duration<double> elapsed{0};
};

std::optional<SrgParams> complement_params(const SrgParams& p);

/// All feasible tuples with 2 <= n <= n_max in lexicographic order. For each
/// (n, k, lambda) with 1 <= k <= n-2 and 0 <= lambda <= k, mu is the exact
/// quotient k(k-1-lambda)/(n-1-k) when it exists and is nonnegative. Work is
/// split by n across `jobs` threads; output does not depend on `jobs`.
std::vector<ScanRecord> enumerate_feasible(std::int64_t n_max, unsigned jobs = 1);

/// Checks p | c_p for every feasible tuple with n <= n_max and prime p <= p_max.
VerificationReport verify_theorem3(std::int64_t n_max, std::uint64_t p_max, unsigned jobs = 1);

}  // namespace srg
