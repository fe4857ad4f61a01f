#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csop/moebius.hpp"
#include "csop/scenarios.hpp"

namespace csop {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr const char* kReportFormat = "csop-verify/1";
inline constexpr int kCatalogVersion = 1;
inline constexpr const char* kSeedEnvVar = "CSOP_SEED";

struct RunConfig {
    std::vector<std::string> scenario_ids;  // empty: full catalog plus controls
    RunSettings settings;
};

/// Rejects unknown scenario ids, unusable size/block overrides and
/// non-positive tolerances (std::invalid_argument).
void validate_config(const RunConfig& cfg);

struct Report {
    RunConfig config;
    std::vector<std::pair<ScenarioSpec, Verdict>> results;
    bool overall = false;
};

/// Runs the selected scenarios sequentially in catalog order. overall is
/// true when every verdict is consistent with its expectation (controls
/// must fail convincingly).
Report run_verification(const RunConfig& cfg);

/// Renders the report normal form: stable key order, residuals with 17
/// significant digits. For a fixed config and seed the output is
/// reproducible byte for byte except for lines carrying wall-clock
/// timings, which all match "wall-ms:".
void render_report(std::ostream& os, const Report& rep);

/// Complex token grammar shared by CLI flags and CSV headers:
/// <re><sign><im>i, each part %.17g, e.g. "0.5+0.25i" or "1e-3-2i".
/// Formatting always includes the imaginary part; parsing accepts a bare
/// real. Round-trips bit for bit; non-finite values are rejected.
std::string format_complex(Cplx z);
std::optional<Cplx> parse_complex(std::string_view s);

std::string format_residual(double r);  // %.16e, 17 significant digits

/// Matrix CSV: one header line
///   # family=<id> a=<complex> b=<complex> N=<n>
/// followed by N rows of N comma-separated re:im pairs (%.17g each).
void write_matrix_csv(std::ostream& os, const std::string& family, Cplx a, Cplx b,
                      const Eigen::MatrixXcd& m);

struct CsvMatrix {
    std::string family;
    Cplx a;
    Cplx b;
    int n = 0;
    Eigen::MatrixXcd mat;
};

/// Parses what write_matrix_csv emits; std::runtime_error on malformed
/// input. The numeric payload round-trips bit for bit.
CsvMatrix read_matrix_csv(std::istream& is);

}  // namespace csop
