#include "srg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "srg/core.hpp"
#include "srg/graphs.hpp"
#include "srg/report.hpp"
#include "srg/scan.hpp"
#include "srg/walks.hpp"

namespace srg::cli {

namespace {

using nlohmann::json;

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Human;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_str(bool b) { return b ? "true" : "false"; }

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
}

void add_params(CLI::App* cmd, SrgParams& p) {
    cmd->add_option("n", p.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("k", p.k, "Degree")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("lambda", p.lambda, "Common neighbours of adjacent pairs")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("mu", p.mu, "Common neighbours of nonadjacent pairs")
        ->required()
        ->check(CLI::NonNegativeNumber);
}

// --- check ------------------------------------------------------------------

int cmd_check(const SrgParams& p, std::uint64_t primes, Format format, std::ostream& out) {
    const FeasibilityReport report = feasibility(p);
    const DivisibilityReport div = check_prime_divisibility(p, primes);

    switch (format) {
        case Format::Json:
            out << json{{"feasibility", to_json(report)}, {"divisibility", to_json(div)}}.dump(2)
                << '\n';
            break;
        case Format::Csv: {
            out << "n,k,lambda,mu,bounds_ok,identity_ok,integrality,feasible,m1,m2,r1,r2,"
                   "conference,primes_up_to,divisibility_ok,violation_prime,violation_residue\n";
            out << p.n << ',' << p.k << ',' << p.lambda << ',' << p.mu << ','
                << bool_str(report.bounds_ok) << ',' << bool_str(report.identity_ok) << ','
                << to_string(report.integrality) << ',' << bool_str(report.feasible) << ',';
            if (const auto& s = report.spectrum) {
                out << s->m1.get_str() << ',' << s->m2.get_str() << ',' << s->r1.to_string()
                    << ',' << s->r2.to_string() << ',' << bool_str(s->conference);
            } else {
                out << ",,,,";
            }
            out << ',' << primes << ',' << bool_str(div.all_pass) << ',';
            if (div.first_violation) {
                out << div.first_violation->prime << ',' << div.first_violation->residue;
            } else {
                out << ',';
            }
            out << '\n';
            break;
        }
        case Format::Human: {
            out << "parameters     " << p.to_string() << '\n'
                << "bounds         " << (report.bounds_ok ? "ok" : "FAIL") << "  (0 < k < n-1)\n"
                << "identity       " << (report.identity_ok ? "ok" : "FAIL")
                << "  ((n-1-k) mu = k (k-1-lambda))\n"
                << "integrality    " << to_string(report.integrality) << '\n';
            if (const auto& s = report.spectrum) {
                out << "discriminant   " << s->disc.get_str() << '\n'
                    << "eigenvalues    k=" << p.k << "  r1=" << s->r1.to_string()
                    << "  r2=" << s->r2.to_string() << '\n'
                    << "multiplicities m1=" << s->m1.get_str() << "  m2=" << s->m2.get_str()
                    << '\n'
                    << "conference     " << yes_no(s->conference) << '\n';
            }
            if (!report.mu_at_most_k) out << "note           mu > k\n";
            out << "feasible       " << yes_no(report.feasible) << '\n';
            out << "divisibility   ";
            if (div.first_violation) {
                out << "FAIL at p=" << div.first_violation->prime
                    << " (c_p mod p = " << div.first_violation->residue << ")\n";
            } else {
                out << "ok for all " << div.checked_primes.size() << " primes <= " << primes
                    << '\n';
            }
            break;
        }
    }
    return report.feasible ? kExitOk : kExitFailed;
}

// --- walks ------------------------------------------------------------------

int cmd_walks(const SrgParams& p, std::size_t up_to, std::optional<std::uint64_t> modulus,
              Format format, std::ostream& out) {
    const WalkTable table = walk_counts(p, up_to);
    std::vector<std::uint64_t> residues;
    if (modulus) {
        for (std::size_t l = 0; l <= up_to; ++l) residues.push_back(mod_u64(table.counts[l], *modulus));
    }

    if (format == Format::Json) {
        json rows = json::array();
        for (std::size_t l = 0; l <= up_to; ++l) {
            json row = {{"l", l}, {"c", to_string(table.counts[l])}};
            if (modulus) row["c_mod"] = residues[l];
            rows.push_back(row);
        }
        json doc = {{"params", to_json(p)}, {"modulus", nullptr}, {"rows", rows}};
        if (modulus) doc["modulus"] = *modulus;
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    const char sep = format == Format::Csv ? ',' : '\t';
    out << 'l' << sep << 'c';
    if (modulus) out << sep << "c_mod";
    out << '\n';
    for (std::size_t l = 0; l <= up_to; ++l) {
        out << l << sep << table.counts[l].get_str();
        if (modulus) out << sep << residues[l];
        out << '\n';
    }
    return kExitOk;
}

// --- scan -------------------------------------------------------------------

int cmd_scan(std::int64_t n_max, unsigned jobs, Format format, std::ostream& out) {
    const std::vector<ScanRecord> records = enumerate_feasible(n_max, jobs);
    switch (format) {
        case Format::Json: {
            json list = json::array();
            for (const auto& r : records) list.push_back(to_json(r));
            out << json{{"n_max", n_max}, {"count", records.size()}, {"records", list}}.dump(2)
                << '\n';
            break;
        }
        case Format::Csv:
            out << kScanCsvHeader << '\n';
            for (const auto& r : records) out << scan_csv_row(r) << '\n';
            break;
        case Format::Human:
            out << "feasible parameter sets with n <= " << n_max << ": " << records.size() << '\n';
            for (const auto& r : records) {
                const auto& s = *r.report.spectrum;
                out << std::left << std::setw(22) << r.params.to_string() << " r="
                    << s.r1.to_string() << '^' << s.m1.get_str() << ", " << s.r2.to_string()
                    << '^' << s.m2.get_str() << (s.conference ? "  [conference]" : "") << '\n';
            }
            break;
    }
    return kExitOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(std::int64_t n_max, std::uint64_t p_max, unsigned jobs, Format format,
               std::ostream& out) {
    const VerificationReport report = verify_theorem3(n_max, p_max, jobs);
    switch (format) {
        case Format::Json: out << to_json(report).dump(2) << '\n'; break;
        case Format::Csv:
            out << "n_max,p_max,tuples_checked,prime_checks,violations,elapsed_seconds\n"
                << report.n_max << ',' << report.p_max << ',' << report.tuples_checked << ','
                << report.prime_checks << ',' << report.violations.size() << ','
                << report.elapsed.count() << '\n';
            break;
        case Format::Human:
            out << "feasible tuples with n <= " << n_max << ": " << report.tuples_checked << '\n'
                << "prime checks (p <= " << p_max << "): " << report.prime_checks << '\n'
                << "violations: " << report.violations.size() << '\n';
            for (const auto& v : report.violations) {
                out << "  " << v.params.to_string() << " p=" << v.prime
                    << " c_p mod p=" << v.residue << '\n';
            }
            out << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed.count()
                << " s\n";
            break;
    }
    return report.violations.empty() ? kExitOk : kExitFailed;
}

// --- oracle -----------------------------------------------------------------

struct OracleOptions {
    std::string family;
    std::size_t max_len = 10;
    std::optional<std::uint64_t> rotation_prime;
    std::uint64_t budget = kDefaultWalkBudget;
    std::string export_path;
};

int cmd_oracle(const OracleOptions& opt, Format format, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = build_family(FamilySpec::parse(opt.family));
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (opt.rotation_prime && !is_prime(*opt.rotation_prime)) {
        err << "error: --rotation-prime " << *opt.rotation_prime << " is not prime\n";
        return kExitUsage;
    }
    if (!opt.export_path.empty()) {
        std::ofstream file(opt.export_path);
        if (!file) {
            err << "error: cannot write " << opt.export_path << '\n';
            return kExitUsage;
        }
        g.write_edge_list(file);
    }

    json doc = {{"family", opt.family},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"params", nullptr},
                {"srg_error", nullptr},
                {"walks", json::array()},
                {"walks_agree", false},
                {"rotation", nullptr}};
    bool ok = true;

    std::optional<SrgParams> params;
    try {
        params = verify_srg(g);
        doc["params"] = to_json(*params);
    } catch (const GraphError& e) {
        doc["srg_error"] = e.what();
        ok = false;
    }

    if (params) {
        const std::vector<BigInt> traces = trace_walks(g, opt.max_len);
        const WalkTable table = walk_counts(*params, opt.max_len);
        bool agree = true;
        for (std::size_t l = 0; l <= opt.max_len; ++l) {
            const bool match = traces[l] == table.counts[l];
            agree = agree && match;
            doc["walks"].push_back({{"l", l},
                                    {"trace", to_string(traces[l])},
                                    {"recurrence", to_string(table.counts[l])},
                                    {"match", match}});
        }
        doc["walks_agree"] = agree;
        ok = ok && agree;
    }

    if (opt.rotation_prime) {
        try {
            const RotationClassStats stats = rotation_classes(g, *opt.rotation_prime, opt.budget);
            doc["rotation"] = to_json(stats);
            ok = ok && stats.all_classes_size_p;
        } catch (const GraphError& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

    switch (format) {
        case Format::Json: out << doc.dump(2) << '\n'; break;
        case Format::Csv:
            out << "l,trace,recurrence,match\n";
            for (const auto& row : doc["walks"]) {
                out << row["l"].get<std::size_t>() << ',' << row["trace"].get<std::string>() << ','
                    << row["recurrence"].get<std::string>() << ','
                    << bool_str(row["match"].get<bool>()) << '\n';
            }
            break;
        case Format::Human: {
            out << "family       " << opt.family << " (" << g.vertex_count() << " vertices, "
                << g.edge_count() << " edges)\n";
            if (params) {
                out << "parameters   " << params->to_string() << '\n'
                    << "walks        " << (doc["walks_agree"].get<bool>() ? "agree" : "MISMATCH")
                    << " for l <= " << opt.max_len << '\n';
            } else {
                out << "parameters   not strongly regular: "
                    << doc["srg_error"].get<std::string>() << '\n';
            }
            if (opt.rotation_prime) {
                const auto& r = doc["rotation"];
                out << "rotation     p=" << *opt.rotation_prime
                    << " walks=" << r["total_walks"].get<std::uint64_t>()
                    << " classes=" << r["class_count"].get<std::uint64_t>() << " all size p: "
                    << yes_no(r["all_classes_size_p"].get<bool>()) << '\n';
            }
            break;
        }
    }
    if (!ok) err << "oracle comparison failed for " << opt.family << '\n';
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Feasibility of strongly regular graph parameter sets", "srgcheck"};
    app.require_subcommand(1);

    std::string format = "human";
    SrgParams params;

    auto* check = app.add_subcommand("check", "Evaluate the feasibility conditions for one tuple");
    std::uint64_t check_primes = 100;
    std::uint64_t prime_cap = kDefaultPrimeCap;
    add_params(check, params);
    check->add_option("--primes-up-to", check_primes, "Check p | c_p for primes up to P")
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    check->add_option("--prime-cap", prime_cap, "Largest accepted --primes-up-to")
        ->capture_default_str();
    add_format(check, format);

    auto* walks = app.add_subcommand("walks", "Print closed-walk counts c_0..c_L");
    std::size_t up_to = 10;
    std::optional<std::uint64_t> modulus;
    add_params(walks, params);
    walks->add_option("--up-to", up_to, "Largest walk length L")->capture_default_str();
    walks->add_option("--mod", modulus, "Also print c_l mod m")
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    add_format(walks, format);

    auto* scan = app.add_subcommand("scan", "List feasible tuples with n <= N");
    std::int64_t n_max = 50;
    unsigned jobs = 1;
    scan->add_option("--n-max", n_max, "Largest vertex count")
        ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()))
        ->capture_default_str();
    scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(scan, format);

    auto* verify = app.add_subcommand("verify", "Check p | c_p for every feasible tuple");
    std::uint64_t verify_primes = 100;
    verify->add_option("--n-max", n_max, "Largest vertex count")
        ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()))
        ->capture_default_str();
    verify->add_option("--primes-up-to", verify_primes, "Largest prime checked")
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    verify->add_option("--prime-cap", prime_cap, "Largest accepted --primes-up-to")
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(verify, format);

    auto* oracle = app.add_subcommand("oracle", "Compare a fixture graph against the recurrence");
    OracleOptions oracle_opt;
    oracle->add_option("--family", oracle_opt.family,
                       "petersen | cycle5 | paley:Q | triangular:M | lattice:M | complement:SPEC")
        ->required();
    oracle->add_option("--max-len", oracle_opt.max_len, "Largest walk length")
        ->capture_default_str();
    oracle->add_option("--rotation-prime", oracle_opt.rotation_prime,
                       "Group closed walks of this prime length by rotation");
    oracle->add_option("--budget", oracle_opt.budget, "Walk enumeration budget")
        ->capture_default_str();
    oracle->add_option("--export", oracle_opt.export_path, "Write the graph as an edge list");
    add_format(oracle, format);

    // CLI11 parses in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Format fmt = parse_format(format);
    try {
        if (*check) {
            if (check_primes > prime_cap) {
                err << "error: --primes-up-to exceeds --prime-cap " << prime_cap << '\n';
                return kExitUsage;
            }
            return cmd_check(params, check_primes, fmt, out);
        }
        if (*walks) return cmd_walks(params, up_to, modulus, fmt, out);
        if (*scan) return cmd_scan(n_max, jobs, fmt, out);
        if (*verify) {
            if (verify_primes > prime_cap) {
                err << "error: --primes-up-to exceeds --prime-cap " << prime_cap << '\n';
                return kExitUsage;
            }
            return cmd_verify(n_max, verify_primes, jobs, fmt, out);
        }
        if (*oracle) return cmd_oracle(oracle_opt, fmt, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace srg::cli
