#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "srg/scan.hpp"
#include "srg/walks.hpp"

using namespace srg;

namespace {

std::vector<SrgParams> params_of(const std::vector<ScanRecord>& records) {
    std::vector<SrgParams> out;
    for (const auto& r : records) out.push_back(r.params);
    return out;
}

bool contains(const std::vector<SrgParams>& v, const SrgParams& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("enumerate_feasible fixtures") {
    const std::vector<SrgParams> expected{{4, 1, 0, 0}, {4, 2, 0, 2}, {5, 2, 0, 1}};
    CHECK(params_of(enumerate_feasible(5)) == expected);
    CHECK(oracle::naive_scan(5) == expected);

    CHECK(enumerate_feasible(3).empty());
    CHECK(enumerate_feasible(2).empty());
    CHECK(check_integrality({3, 1, 0, 0}) == IntegralityVerdict::FailParity);

    const auto ten = params_of(enumerate_feasible(10));
    CHECK(ten == oracle::naive_scan(10));
    CHECK(contains(ten, {9, 4, 1, 2}));
    CHECK(contains(ten, {10, 3, 0, 1}));
    CHECK(contains(ten, {10, 6, 3, 4}));

    CHECK_THROWS_AS(enumerate_feasible(1), std::invalid_argument);
}

TEST_CASE("records carry reports and complements") {
    for (const ScanRecord& r : enumerate_feasible(20)) {
        CHECK(r.report.feasible);
        CHECK(r.report.spectrum.has_value());
        CHECK(r.report.params == r.params);
    }
    const auto petersen = complement_params({10, 3, 0, 1});
    REQUIRE(petersen);
    CHECK(*petersen == SrgParams{10, 6, 3, 4});
    CHECK(*complement_params({4, 1, 0, 0}) == SrgParams{4, 2, 0, 2});
    CHECK_FALSE(complement_params({10, 6, 0, 0}).has_value());
}

TEST_CASE("pruned scan equals the naive quadruple loop for n_max <= 30") {
    const auto pruned = params_of(enumerate_feasible(30));
    CHECK(pruned == oracle::naive_scan(30));
    for (std::int64_t n_max = 2; n_max <= 30; ++n_max) {
        const auto naive = oracle::naive_scan(n_max);
        std::vector<SrgParams> prefix;
        std::copy_if(pruned.begin(), pruned.end(), std::back_inserter(prefix),
                     [&](const SrgParams& p) { return p.n <= n_max; });
        CHECK(prefix == naive);
    }
}

TEST_CASE("pruned scan equals the library predicate applied to every tuple") {
    std::vector<SrgParams> naive;
    for (std::int64_t n = 2; n <= 25; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            for (std::int64_t l = 0; l <= n; ++l)
                for (std::int64_t m = 0; m <= n; ++m)
                    if (feasibility({n, k, l, m}).feasible) naive.push_back({n, k, l, m});
    CHECK(params_of(enumerate_feasible(25)) == naive);
}

TEST_CASE("complement closure") {
    for (const ScanRecord& r : enumerate_feasible(100)) {
        if (!r.complement_params || !check_bounds(*r.complement_params)) continue;
        CAPTURE(r.params.to_string());
        CHECK(feasibility(*r.complement_params).feasible);
    }
}

TEST_CASE("deterministic across worker counts") {
    const auto one = params_of(enumerate_feasible(80, 1));
    CHECK(params_of(enumerate_feasible(80, 3)) == one);
    CHECK(params_of(enumerate_feasible(80, 8)) == one);
    CHECK(std::is_sorted(one.begin(), one.end()));
}

TEST_CASE("known parameter sets appear") {
    const auto fifty = params_of(enumerate_feasible(50));
    for (SrgParams p : {SrgParams{10, 3, 0, 1}, SrgParams{13, 6, 2, 3}, SrgParams{16, 6, 2, 2},
                        SrgParams{50, 7, 0, 1}}) {
        CHECK(contains(fifty, p));
    }
}

TEST_CASE("verify_theorem3") {
    VerificationReport r = verify_theorem3(5, 13);
    CHECK(r.violations.empty());
    CHECK(r.tuples_checked == 3);
    CHECK(r.prime_checks == 3 * 6);

    r = verify_theorem3(2, 2);
    CHECK(r.tuples_checked == 0);
    CHECK(r.violations.empty());

    r = verify_theorem3(50, 53, 2);
    CHECK(r.violations.empty());
    CHECK(r.tuples_checked == enumerate_feasible(50).size());

    CHECK_THROWS_AS(verify_theorem3(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem3(5, 1), std::invalid_argument);
}

TEST_CASE("verify_theorem3 agrees with exact walk tables") {
    const auto primes = primes_up_to(13);
    for (const ScanRecord& rec : enumerate_feasible(5)) {
        const WalkTable t = walk_counts(rec.params, 13);
        for (std::uint64_t p : primes) CHECK(mod_u64(t.counts[p], p) == 0);
    }
}
