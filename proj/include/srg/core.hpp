#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "srg/bigint.hpp"
#include "srg/quadratic.hpp"

namespace srg {

/// Candidate parameter tuple (n, k, lambda, mu). Carries no feasibility claim.
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    friend auto operator<=>(const SrgParams&, const SrgParams&) = default;

    bool nonnegative() const { return n >= 0 && k >= 0 && lambda >= 0 && mu >= 0; }
    std::string to_string() const;
};

enum class IntegralityVerdict {
    PassIntegerEigenvalues,
    PassConference,
    FailIrrational,
    FailNotDivisible,
    FailParity,
    FailNegativeMultiplicity,
    FailZeroDiscriminant,
    FailNegativeDiscriminant,
};

/// Stable identifier, e.g. "pass-conference" or "fail-irrational".
std::string_view to_string(IntegralityVerdict v);
bool is_pass(IntegralityVerdict v);

/// Restricted eigenvalues and their multiplicities. m1 pairs with r1 (the larger).
struct Spectrum {
    BigInt disc;
    QuadraticNumber r1;
    QuadraticNumber r2;
    BigInt m1;
    BigInt m2;
    bool conference = false;
};

enum class SpectrumErrorKind {
    PreconditionFailed,
    NegativeDiscriminant,
    ZeroDiscriminantNonConference,
    ZeroDiscriminantConference,
    IrrationalMultiplicity,
    NonIntegralMultiplicity,
    NegativeMultiplicity,
};

class SpectrumError : public std::runtime_error {
public:
    SpectrumError(SpectrumErrorKind kind, std::optional<IntegralityVerdict> verdict,
                  const std::string& what)
        : std::runtime_error(what), kind_(kind), verdict_(verdict) {}

    SpectrumErrorKind kind() const { return kind_; }
    /// Integrality verdict for the violated clause; empty for PreconditionFailed.
    std::optional<IntegralityVerdict> verdict() const { return verdict_; }

private:
    SpectrumErrorKind kind_;
    std::optional<IntegralityVerdict> verdict_;
};

struct FeasibilityReport {
    SrgParams params;
    bool bounds_ok = false;
    bool identity_ok = false;
    IntegralityVerdict integrality = IntegralityVerdict::FailNegativeDiscriminant;
    std::optional<Spectrum> spectrum;
    bool feasible = false;
    /// Informational only; never affects `feasible`.
    bool mu_at_most_k = false;
};

/// 0 < k < n - 1.
bool check_bounds(const SrgParams& p);

/// (n - 1 - k) * mu == k * (k - 1 - lambda), in signed arithmetic.
bool check_identity(const SrgParams& p);

/// (lambda - mu)^2 + 4 (k - mu); may be negative.
BigInt discriminant(const SrgParams& p);

/// (n - 1)(lambda - mu) + 2k, the numerator of the multiplicity formula.
BigInt multiplicity_numerator(const SrgParams& p);

/// True iff the multiplicity numerator vanishes. Throws std::logic_error if the
/// tuple also satisfies the bounds and identity but not mu - lambda = 1,
/// n = 2k + 1, k = 2 mu.
bool is_conference(const SrgParams& p);

/// Exact spectrum. Requires check_bounds and check_identity; otherwise throws
/// SpectrumError(PreconditionFailed). Throws SpectrumError naming the violated
/// clause when the multiplicities are not nonnegative integers.
Spectrum spectrum(const SrgParams& p);

/// Total: one verdict for every nonnegative tuple, regardless of bounds/identity.
IntegralityVerdict check_integrality(const SrgParams& p);

/// Evaluates bounds, identity and integrality. The spectrum is attached iff
/// the integrality verdict is a pass.
FeasibilityReport feasibility(const SrgParams& p);

}  // namespace srg
