#include "srg/scan.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "srg/walks.hpp"

namespace srg {

std::optional<SrgParams> complement_params(const SrgParams& p) {
    SrgParams c{p.n, p.n - 1 - p.k, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
    if (!c.nonnegative()) return std::nullopt;
    return c;
}

namespace {

std::vector<ScanRecord> scan_vertex_count(std::int64_t n) {
    std::vector<ScanRecord> out;
    for (std::int64_t k = 1; k <= n - 2; ++k) {
        const std::int64_t non_neighbours = n - 1 - k;
        for (std::int64_t lambda = 0; lambda <= k; ++lambda) {
            const std::int64_t rhs = k * (k - 1 - lambda);
            if (rhs < 0 || rhs % non_neighbours != 0) continue;
            const SrgParams p{n, k, lambda, rhs / non_neighbours};
            FeasibilityReport report = feasibility(p);
            if (report.feasible) {
                out.push_back({p, std::move(report), complement_params(p)});
            }
        }
    }
    return out;
}

// Runs fn(n) for n in [2, n_max] on `jobs` threads; results indexed by n.
template <typename Result, typename Fn>
std::vector<Result> run_per_n(std::int64_t n_max, unsigned jobs, Fn fn) {
    std::vector<Result> results(static_cast<std::size_t>(std::max<std::int64_t>(n_max + 1, 0)));
    std::atomic<std::int64_t> next{2};
    auto worker = [&] {
        for (std::int64_t n = next++; n <= n_max; n = next++) results[n] = fn(n);
    };
    jobs = std::max(1U, jobs);
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    return results;
}

}  // namespace

std::vector<ScanRecord> enumerate_feasible(std::int64_t n_max, unsigned jobs) {
    if (n_max < 2) {
        throw std::invalid_argument("enumerate_feasible requires n_max >= 2");
    }
    auto per_n = run_per_n<std::vector<ScanRecord>>(n_max, jobs, scan_vertex_count);
    std::vector<ScanRecord> out;
    for (auto& chunk : per_n) {
        std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
    }
    return out;
}

VerificationReport verify_theorem3(std::int64_t n_max, std::uint64_t p_max, unsigned jobs) {
    if (n_max < 2 || p_max < 2) {
        throw std::invalid_argument("verify_theorem3 requires n_max >= 2 and p_max >= 2");
    }
    const auto started = std::chrono::steady_clock::now();
    const std::vector<std::uint64_t> primes = primes_up_to(p_max);

    struct Chunk {
        std::uint64_t tuples = 0;
        std::uint64_t checks = 0;
        std::vector<Violation> violations;
    };
    auto per_n = run_per_n<Chunk>(n_max, jobs, [&](std::int64_t n) {
        Chunk chunk;
        for (const ScanRecord& rec : scan_vertex_count(n)) {
            ++chunk.tuples;
            for (std::uint64_t prime : primes) {
                ++chunk.checks;
                const std::uint64_t residue = walk_count_mod(rec.params, prime, prime);
                if (residue != 0) chunk.violations.push_back({rec.params, prime, residue});
            }
        }
        return chunk;
    });

    VerificationReport report;
    report.n_max = n_max;
    report.p_max = p_max;
    for (auto& chunk : per_n) {
        report.tuples_checked += chunk.tuples;
        report.prime_checks += chunk.checks;
        for (auto& v : chunk.violations) report.violations.push_back(v);
    }
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

}  // namespace srg
