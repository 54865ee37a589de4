#pragma once

// Dense-sampling checks of every claimed inequality, monotonicity, identity
// and sharp constant. A sweep evaluates one claim on a deterministic grid (or
// low-discrepancy sample) and returns a certificate; the registry lists the
// claims run by `verify`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyplam::verify {

enum class Target {
    Product,
    Sum,
    LemmaMonotone,
    Th1,
    Ath1Region,
    MuIdentity,
    AkBracket,
    OracleDistance,
    QcReduction,
    Identity,
    Beardon,
    IdealBounds,
    Orthogonality,
    CrossRatioRho,
    MoebiusInvariance,
    Isometry,
    Midpoint,
    HalfPlane,
    HolderMonotone,
    LemmaConcave,
    BigC,
    HyperbolicMean,
    QcRoot,
    QcMonotone,
    QcContinuity,
    QcDomination,
    QcIdeal,
    QcML,
};

std::string_view to_string(Target t);
/// Throws ConfigurationError for unknown names.
Target target_from_string(std::string_view s);
const std::vector<Target>& all_targets();

using ParamList = std::vector<std::pair<std::string, double>>;

struct SweepSpec {
    Target target = Target::Product;
    std::string lemma;  // function name for LemmaMonotone / LemmaConcave
    std::size_t grid_size = 1000;
    ParamList params;
    double tolerance = 1e-12;
    std::string name;    // claim identifier, unique within a registry
    std::string result;  // the published result the claim belongs to

    std::optional<double> find(std::string_view key) const;
    /// Throws ConfigurationError when the key is missing.
    double param(std::string_view key) const;
};

bool operator==(const SweepSpec& a, const SweepSpec& b);

struct Certificate {
    SweepSpec spec;
    bool passed = false;
    double observed_extremum = 0.0;
    ParamList witness;
    double margin = 0.0;  // passed iff margin >= -spec.tolerance
    std::int64_t runtime_ms = 0;
};

bool operator==(const Certificate& a, const Certificate& b);

/// Validates the spec (grid_size >= 2, tolerance > 0, required params) and
/// runs it. Deterministic for a given spec and HYPLAM_SEED.
Certificate run_sweep(const SweepSpec& spec);

enum class Profile { Fast, Thorough };

std::string_view to_string(Profile p);
/// Throws ConfigurationError for unknown names.
Profile profile_from_string(std::string_view s);

std::vector<SweepSpec> registry(Profile profile);

/// Runs the specs concurrently; results keep the input order.
std::vector<Certificate> run_specs(const std::vector<SweepSpec>& specs);
std::vector<Certificate> run_all(Profile profile);

/// Results every registry must cover; asserted by the test suite.
const std::vector<std::string>& required_results();

/// Point-by-point data for plotting: one row per grid point.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Targets: product, sum (param L), ideal, mu, th1 (param p),
/// distortion, qc (param L).
SweepTable sweep_table(std::string_view target, std::size_t grid_size, const ParamList& params);

}  // namespace hyplam::verify
