#include "srg/report.hpp"

#include <sstream>

namespace srg {

using nlohmann::json;

json to_json(const SrgParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json to_json(const Spectrum& s) {
    return {{"disc", to_string(s.disc)},
            {"r1", s.r1.to_string()},
            {"r2", s.r2.to_string()},
            {"m1", to_string(s.m1)},
            {"m2", to_string(s.m2)},
            {"conference", s.conference}};
}

json to_json(const FeasibilityReport& r) {
    json out = {{"params", to_json(r.params)},
                {"bounds_ok", r.bounds_ok},
                {"identity_ok", r.identity_ok},
                {"integrality", std::string(to_string(r.integrality))},
                {"feasible", r.feasible},
                {"mu_at_most_k", r.mu_at_most_k},
                {"spectrum", nullptr}};
    if (r.spectrum) out["spectrum"] = to_json(*r.spectrum);
    return out;
}

json to_json(const DivisibilityReport& r) {
    json out = {{"params", to_json(r.params)},
                {"checked_primes", r.checked_primes},
                {"all_pass", r.all_pass},
                {"first_violation", nullptr}};
    if (r.first_violation) {
        out["first_violation"] = {{"prime", r.first_violation->prime},
                                  {"residue", r.first_violation->residue}};
    }
    return out;
}

json to_json(const ScanRecord& r) {
    json out = {{"params", to_json(r.params)},
                {"integrality", std::string(to_string(r.report.integrality))},
                {"spectrum", nullptr},
                {"complement_params", nullptr}};
    if (r.report.spectrum) out["spectrum"] = to_json(*r.report.spectrum);
    if (r.complement_params) out["complement_params"] = to_json(*r.complement_params);
    return out;
}

json to_json(const VerificationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back(
            {{"params", to_json(v.params)}, {"prime", v.prime}, {"residue", v.residue}});
    }
    return {{"n_max", r.n_max},
            {"p_max", r.p_max},
            {"tuples_checked", r.tuples_checked},
            {"prime_checks", r.prime_checks},
            {"violations", violations},
            {"elapsed_seconds", r.elapsed.count()}};
}

json to_json(const RotationClassStats& r) {
    return {{"walk_length", r.walk_length},
            {"total_walks", r.total_walks},
            {"class_count", r.class_count},
            {"all_classes_size_p", r.all_classes_size_p}};
}

std::string scan_csv_row(const ScanRecord& r) {
    std::ostringstream os;
    const auto& p = r.params;
    os << p.n << ',' << p.k << ',' << p.lambda << ',' << p.mu << ',';
    if (const auto& s = r.report.spectrum) {
        os << s->m1.get_str() << ',' << s->m2.get_str() << ',' << s->r1.to_string() << ','
           << s->r2.to_string() << ',' << (s->conference ? "true" : "false");
    } else {
        os << ",,,,";
    }
    return os.str();
}

}  // namespace srg
