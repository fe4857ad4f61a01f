#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace csop {

// Tolerance classes. Exact identities (true at every truncation up to
// roundoff) are pinned at 1e-12; realness checks at 1e-14; convergence
// checks must reach 1e-8 at the top of the size ladder while decreasing
// along it. Residual chains are allowed to stop decreasing once they hit
// the roundoff floor. Negative controls must miss the convergence
// tolerance by a wide margin, not scrape along it.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kConvTol = 1e-8;
inline constexpr double kRealTol = 1e-14;
inline constexpr double kResidualFloor = 1e-12;
inline constexpr double kControlSeparation = 1e-3;

inline constexpr int kDefaultBlock = 16;
inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class CheckClass { ExactSymbolic, ExactNumeric, Convergence };
enum class Expectation { Pass, Fail, Informational };

struct ScenarioSpec {
    std::string id;
    std::string anchor;  // one-line statement of the identity being checked
    std::string family;  // which symbol family / parameters feed the check
    CheckClass cls;
    Expectation expectation;
    int samples;
    std::vector<int> sizes;  // truncation ladder (single entry for exact checks)
};

struct RunSettings {
    std::uint64_t seed = kDefaultSeed;
    std::optional<int> size_override;   // replaces the top of the ladder
    std::optional<int> block_override;  // leading block for residuals
    double tol_exact = kExactTol;
    double tol_conv = kConvTol;
};

struct SampleRecord {
    std::string params;
    std::vector<double> residuals;  // one entry per ladder size
    bool ok;
};

struct Verdict {
    std::string id;
    CheckClass cls;
    Expectation expectation;
    bool pass;  // whether the mathematical check itself succeeded
    // Residual of the decisive sample: the largest final residual for
    // positive scenarios, the smallest for negative controls (how close the
    // control came to slipping through). Symbolic checks report 0 or 1.
    double worst_residual;
    int samples_total;
    int samples_passing;
    std::vector<int> sizes;
    int block;
    std::vector<SampleRecord> worst_samples;  // up to 3, most extreme first
    double wall_ms;
};

/// Positive and informational scenarios, one per verified statement.
const std::vector<ScenarioSpec>& scenario_catalog();

/// Expected-to-fail controls plus the trivially-passing identity control.
const std::vector<ScenarioSpec>& negative_controls();

std::vector<ScenarioSpec> all_scenarios();

/// Looks up an id across catalog and controls; nullptr when unknown.
const ScenarioSpec* find_scenario(const std::string& id);

Verdict run_scenario(const ScenarioSpec& spec, const RunSettings& rs);

/// Whether the verdict is consistent with the scenario's expectation.
/// Negative controls must fail with residuals above kControlSeparation.
bool verdict_ok(const ScenarioSpec& spec, const Verdict& v);

}  // namespace csop
