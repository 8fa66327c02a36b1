#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "srg/core.hpp"
#include "srg/graphs.hpp"
#include "srg/scan.hpp"
#include "srg/walks.hpp"

namespace srg {

// JSON views of the library's reports. Arbitrary-precision values (walk
// counts, multiplicities, discriminants) are written as decimal strings;
// eigenvalues use the exact form of QuadraticNumber::to_string().

nlohmann::json to_json(const SrgParams& p);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const FeasibilityReport& r);
nlohmann::json to_json(const DivisibilityReport& r);
nlohmann::json to_json(const ScanRecord& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const RotationClassStats& r);

/// Fixed column order of `scan --format csv`.
inline constexpr const char* kScanCsvHeader = "n,k,lambda,mu,m1,m2,r1,r2,conference";
std::string scan_csv_row(const ScanRecord& r);

}  // namespace srg
