#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "srg/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = srg::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("check") {
    Result r = run({"check", "10", "3", "0", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("m1=5  m2=4") != std::string::npos);
    CHECK(r.out.find("r1=1  r2=-2") != std::string::npos);
    CHECK(r.out.find("ok for all 25 primes") != std::string::npos);

    r = run({"check", "7", "3", "1", "1", "--format", "json"});
    CHECK(r.code == 1);
    const json doc = json::parse(r.out);
    CHECK(doc["feasibility"]["integrality"] == "fail-irrational");
    CHECK(doc["feasibility"]["identity_ok"] == true);
    CHECK(doc["feasibility"]["spectrum"].is_null());
    CHECK(doc["divisibility"]["first_violation"]["prime"] == 2);
    CHECK(doc["divisibility"]["first_violation"]["residue"] == 1);

    r = run({"check", "5", "2", "0", "1", "--format", "json"});
    CHECK(r.code == 0);
    const json conf = json::parse(r.out)["feasibility"]["spectrum"];
    CHECK(conf["r1"] == "(-1+sqrt(5))/2");
    CHECK(conf["r2"] == "(-1-sqrt(5))/2");
    CHECK(conf["m1"] == "2");  // decimal string, not a number
    CHECK(conf["conference"] == true);

    r = run({"check", "50", "7", "0", "1", "--format", "csv", "--primes-up-to", "53"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rfind("n,k,lambda,mu,", 0) == 0);
    CHECK(rows[1] == "50,7,0,1,true,true,pass-integer-eigenvalues,true,28,21,2,-3,false,53,true,,");
}

TEST_CASE("usage errors exit with 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check", "10", "3", "0", "x"},
             {"check", "10", "3", "0"},
             {"check", "10", "3", "0", "-1"},
             {"check", "10", "3", "0", "1", "--primes-up-to", "1"},
             {"check", "10", "3", "0", "1", "--primes-up-to", "5000"},
             {"check", "10", "3", "0", "1", "--format", "xml"},
             {"walks", "10", "3", "0", "1", "--mod", "1"},
             {"scan", "--n-max", "1"},
             {"verify", "--n-max", "1"},
             {"verify", "--primes-up-to", "1"},
             {"oracle", "--family", "paley:12"},
             {"oracle", "--family", "petersen", "--rotation-prime", "4"},
             {"oracle", "--family", "paley:29", "--rotation-prime", "7", "--budget", "10"},
             {"oracle"},
             {"frobnicate"},
             {}}) {
        CAPTURE(args.size());
        const Result r = run(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("help exits with 0") {
    const Result r = run({"--help"});
    CHECK(r.code == 0);
}

TEST_CASE("walks") {
    Result r = run({"walks", "10", "3", "0", "1", "--up-to", "5", "--format", "csv"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    CHECK(rows.front() == "l,c");
    CHECK(rows.back() == "5,120");
    CHECK(rows.size() == 7);

    r = run({"walks", "7", "3", "1", "1", "--up-to", "5", "--mod", "5", "--format", "csv"});
    rows = lines(r.out);
    CHECK(rows.front() == "l,c,c_mod");
    CHECK(rows.back() == "5,231,1");

    r = run({"walks", "5", "2", "0", "1", "--up-to", "0", "--format", "csv"});
    rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "0,5");

    r = run({"walks", "3250", "57", "0", "1", "--up-to", "30", "--format", "json"});
    const json doc = json::parse(r.out);
    CHECK(doc["rows"][30]["c"].is_string());
    CHECK(doc["rows"].size() == 31);
}

TEST_CASE("scan") {
    Result r = run({"scan", "--n-max", "5", "--format", "csv"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n,k,lambda,mu,m1,m2,r1,r2,conference");
    CHECK(rows[3] == "5,2,0,1,2,2,(-1+sqrt(5))/2,(-1-sqrt(5))/2,true");

    r = run({"scan", "--n-max", "3", "--format", "csv"});
    CHECK(lines(r.out) == std::vector<std::string>{"n,k,lambda,mu,m1,m2,r1,r2,conference"});

    r = run({"scan", "--n-max", "30", "--format", "json", "--jobs", "4"});
    const json doc = json::parse(r.out);
    CHECK(doc["count"] == srg::oracle::naive_scan(30).size());
}

TEST_CASE("scan csv golden file") {
    const Result r = run({"scan", "--n-max", "40", "--format", "csv"});
    const std::filesystem::path golden =
        std::filesystem::path(SRG_SOURCE_DIR) / "tests" / "golden" / "scan_n40.csv";
    CHECK(r.out == read_file(golden));

    // The golden rows themselves agree with the brute-force oracle.
    std::vector<srg::SrgParams> listed;
    for (const auto& row : lines(read_file(golden))) {
        if (row.rfind("n,", 0) == 0) continue;
        srg::SrgParams p;
        char c;
        std::istringstream is(row);
        is >> p.n >> c >> p.k >> c >> p.lambda >> c >> p.mu;
        listed.push_back(p);
    }
    CHECK(listed == srg::oracle::naive_scan(40));
}

TEST_CASE("verify") {
    Result r = run({"verify", "--n-max", "50", "--primes-up-to", "53", "--format", "json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["violations"].empty());

    r = run({"verify", "--n-max", "5", "--primes-up-to", "13", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["tuples_checked"] == 3);

    r = run({"verify", "--n-max", "2", "--primes-up-to", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["tuples_checked"] == 0);

    r = run({"verify", "--n-max", "20", "--primes-up-to", "13", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 2);
}

TEST_CASE("oracle") {
    Result r = run({"oracle", "--family", "petersen", "--max-len", "8"});
    CHECK(r.code == 0);

    r = run({"oracle", "--family", "cycle5", "--max-len", "5", "--rotation-prime", "5",
             "--format", "json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["rotation"]["class_count"] == 2);
    CHECK(doc["rotation"]["total_walks"] == 10);
    CHECK(doc["walks_agree"] == true);

    r = run({"oracle", "--family", "paley:12"});
    CHECK(r.code == 2);

    r = run({"oracle", "--family", "lattice:3", "--format", "csv", "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "3,36,36,true");
}

TEST_CASE("oracle export writes an edge list") {
    const auto path = std::filesystem::temp_directory_path() / "srgcheck_cycle5.txt";
    const Result r = run({"oracle", "--family", "cycle5", "--export", path.string()});
    CHECK(r.code == 0);
    CHECK(read_file(path) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    std::filesystem::remove(path);
}

TEST_CASE("json output round-trips") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check", "13", "6", "2", "3", "--format", "json"},
             {"walks", "10", "3", "0", "1", "--mod", "7", "--format", "json"},
             {"scan", "--n-max", "20", "--format", "json"},
             {"verify", "--n-max", "20", "--primes-up-to", "31", "--format", "json"},
             {"oracle", "--family", "petersen", "--rotation-prime", "5", "--format", "json"}}) {
        const Result r = run(args);
        const json first = json::parse(r.out);
        const std::string again = first.dump(2);
        CHECK(json::parse(again) == first);
        CHECK(json::parse(again).dump(2) == again);
    }
}
