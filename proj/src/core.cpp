#include "srg/core.hpp"

#include <sstream>
#include <utility>
#include <variant>

namespace srg {

std::string SrgParams::to_string() const {
    std::ostringstream os;
    os << '(' << n << ',' << k << ',' << lambda << ',' << mu << ')';
    return os.str();
}

std::string_view to_string(IntegralityVerdict v) {
    switch (v) {
        case IntegralityVerdict::PassIntegerEigenvalues: return "pass-integer-eigenvalues";
        case IntegralityVerdict::PassConference: return "pass-conference";
        case IntegralityVerdict::FailIrrational: return "fail-irrational";
        case IntegralityVerdict::FailNotDivisible: return "fail-not-divisible";
        case IntegralityVerdict::FailParity: return "fail-parity";
        case IntegralityVerdict::FailNegativeMultiplicity:
            return "fail-negative-or-nonintegral-multiplicity";
        case IntegralityVerdict::FailZeroDiscriminant: return "fail-zero-discriminant";
        case IntegralityVerdict::FailNegativeDiscriminant: return "fail-negative-discriminant";
    }
    return "unknown";
}

bool is_pass(IntegralityVerdict v) {
    return v == IntegralityVerdict::PassIntegerEigenvalues ||
           v == IntegralityVerdict::PassConference;
}

bool check_bounds(const SrgParams& p) { return 0 < p.k && p.k < p.n - 1; }

bool check_identity(const SrgParams& p) {
    const BigInt n = to_big(p.n), k = to_big(p.k), lambda = to_big(p.lambda), mu = to_big(p.mu);
    return (n - 1 - k) * mu == k * (k - 1 - lambda);
}

BigInt discriminant(const SrgParams& p) {
    const BigInt diff = to_big(p.lambda) - to_big(p.mu);
    return diff * diff + 4 * (to_big(p.k) - to_big(p.mu));
}

BigInt multiplicity_numerator(const SrgParams& p) {
    return (to_big(p.n) - 1) * (to_big(p.lambda) - to_big(p.mu)) + 2 * to_big(p.k);
}

bool is_conference(const SrgParams& p) {
    if (multiplicity_numerator(p) != 0) {
        return false;
    }
    if (check_bounds(p) && check_identity(p)) {
        const bool consistent =
            p.mu - p.lambda == 1 && p.n == 2 * p.k + 1 && p.k == 2 * p.mu;
        if (!consistent) {
            throw std::logic_error("conference tuple " + p.to_string() +
                                   " violates mu-lambda=1, n=2k+1, k=2mu");
        }
    }
    return true;
}

namespace {

using Evaluation = std::variant<Spectrum, SpectrumError>;

SpectrumError fail(SpectrumErrorKind kind, IntegralityVerdict verdict, const SrgParams& p,
                   const std::string& why) {
    return SpectrumError(kind, verdict, p.to_string() + ": " + why);
}

void assert_spectrum_identities(const SrgParams& p, const Spectrum& s) {
    const auto integer = [](std::int64_t v) { return QuadraticNumber::integer(to_big(v)); };
    const QuadraticNumber m1 = QuadraticNumber::integer(s.m1);
    const QuadraticNumber m2 = QuadraticNumber::integer(s.m2);
    const bool ok = 1 + s.m1 + s.m2 == to_big(p.n) && s.r1 >= s.r2 &&
                    s.r1 + s.r2 == integer(p.lambda - p.mu) &&
                    s.r1 * s.r2 == integer(p.mu - p.k) &&
                    integer(p.k) + m1 * s.r1 + m2 * s.r2 == QuadraticNumber{};
    if (!ok) {
        throw std::logic_error("spectrum identities fail for " + p.to_string());
    }
}

// Evaluates the multiplicity formulas for any tuple; bounds and identity are
// not consulted.
Evaluation evaluate(const SrgParams& p) {
    const BigInt disc = discriminant(p);
    const BigInt num = multiplicity_numerator(p);
    const BigInt diff = to_big(p.lambda) - to_big(p.mu);
    const BigInt n_minus_1 = to_big(p.n) - 1;

    if (sgn(disc) < 0) {
        return fail(SpectrumErrorKind::NegativeDiscriminant,
                    IntegralityVerdict::FailNegativeDiscriminant, p,
                    "discriminant " + disc.get_str() + " < 0, square root is not real");
    }
    if (disc == 0) {
        if (num != 0) {
            return fail(SpectrumErrorKind::ZeroDiscriminantNonConference,
                        IntegralityVerdict::FailZeroDiscriminant, p,
                        "zero discriminant divides a nonzero numerator");
        }
        return fail(SpectrumErrorKind::ZeroDiscriminantConference,
                    IntegralityVerdict::FailZeroDiscriminant, p,
                    "zero discriminant, eigenvalues coincide");
    }

    Spectrum s;
    s.disc = disc;
    s.conference = num == 0;

    if (s.conference) {
        if (n_minus_1 % 2 != 0) {
            return fail(SpectrumErrorKind::NonIntegralMultiplicity,
                        IntegralityVerdict::FailNotDivisible, p,
                        "conference multiplicity (n-1)/2 is not an integer");
        }
        s.m1 = n_minus_1 / 2;
        s.m2 = s.m1;
        s.r1 = QuadraticNumber(diff, 1, disc, 2);
        s.r2 = QuadraticNumber(diff, -1, disc, 2);
        assert_spectrum_identities(p, s);
        return s;
    }

    if (!is_perfect_square(disc)) {
        return fail(SpectrumErrorKind::IrrationalMultiplicity, IntegralityVerdict::FailIrrational,
                    p,
                    "discriminant " + disc.get_str() +
                        " is not a perfect square and the numerator " + num.get_str() +
                        " is nonzero, so the multiplicities are irrational");
    }
    const BigInt root = isqrt(disc);
    if (num % root != 0) {
        return fail(SpectrumErrorKind::NonIntegralMultiplicity,
                    IntegralityVerdict::FailNotDivisible, p,
                    "sqrt(discriminant) = " + root.get_str() + " does not divide " +
                        num.get_str());
    }
    const BigInt q = num / root;
    if ((n_minus_1 - q) % 2 != 0) {
        return fail(SpectrumErrorKind::NonIntegralMultiplicity, IntegralityVerdict::FailParity, p,
                    "n-1 -/+ q is odd, multiplicities are half-integers");
    }
    s.m1 = (n_minus_1 - q) / 2;
    s.m2 = (n_minus_1 + q) / 2;
    if (sgn(s.m1) < 0 || sgn(s.m2) < 0) {
        return fail(SpectrumErrorKind::NegativeMultiplicity,
                    IntegralityVerdict::FailNegativeMultiplicity, p,
                    "negative multiplicity (" + s.m1.get_str() + ", " + s.m2.get_str() + ")");
    }
    // sqrt(disc) and lambda-mu have equal parity, so both eigenvalues are integers.
    if ((root - diff) % 2 != 0) {
        throw std::logic_error("parity identity fails for " + p.to_string());
    }
    s.r1 = QuadraticNumber::integer((diff + root) / 2);
    s.r2 = QuadraticNumber::integer((diff - root) / 2);
    assert_spectrum_identities(p, s);
    return s;
}

IntegralityVerdict verdict_of(const Evaluation& e) {
    if (const auto* err = std::get_if<SpectrumError>(&e)) {
        return *err->verdict();
    }
    return std::get<Spectrum>(e).conference ? IntegralityVerdict::PassConference
                                            : IntegralityVerdict::PassIntegerEigenvalues;
}

}  // namespace

Spectrum spectrum(const SrgParams& p) {
    if (!check_bounds(p) || !check_identity(p)) {
        throw SpectrumError(SpectrumErrorKind::PreconditionFailed,
                            std::nullopt,
                            p.to_string() + ": spectrum requires 0<k<n-1 and (n-1-k)mu = k(k-1-lambda)");
    }
    Evaluation e = evaluate(p);
    if (auto* err = std::get_if<SpectrumError>(&e)) {
        throw *err;
    }
    return std::get<Spectrum>(std::move(e));
}

IntegralityVerdict check_integrality(const SrgParams& p) { return verdict_of(evaluate(p)); }

FeasibilityReport feasibility(const SrgParams& p) {
    FeasibilityReport r;
    r.params = p;
    r.bounds_ok = check_bounds(p);
    r.identity_ok = check_identity(p);
    r.mu_at_most_k = p.mu <= p.k;
    Evaluation e = evaluate(p);
    r.integrality = verdict_of(e);
    if (auto* s = std::get_if<Spectrum>(&e)) {
        r.spectrum = std::move(*s);
    }
    r.feasible = r.bounds_ok && r.identity_ok && is_pass(r.integrality);
    return r;
}

}  // namespace srg
