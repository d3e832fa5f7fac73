#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cvteleport/channel.hpp"

namespace cvt {

/// One resource series of a sweep: a preset kind, or a squeezed-Bell state
/// whose mixing angle is re-optimized (or held fixed) at every sweep point.
struct ResourceChoice {
    enum class Mode {
        Preset,             ///< twb / pas / pss
        SqueezedBellSubopt, ///< delta = delta_subopt(s_bar, r)
        SqueezedBellOptVar, ///< delta = delta_optvar(r, tau)
        SqueezedBellFixed   ///< delta, theta given explicitly
    };

    Mode mode = Mode::Preset;
    ResourceKind preset_kind = ResourceKind::TwinBeam;
    double s_bar_db = 5.0; ///< SqueezedBellSubopt only
    double delta = 0.0;    ///< SqueezedBellFixed only
    double theta = 0.0;    ///< SqueezedBellFixed only

    /// Column tag: twb, pas, pss, sb_subopt, sb_optvar, sb_fixed.
    std::string tag() const;

    friend bool operator==(const ResourceChoice&, const ResourceChoice&) = default;
};

enum class Observable {
    Fidelity,
    VarX,
    VarP,
    Sigma,
    DX,
    DP,
    DVarX,
    DVarP,
    DCovXP,
    DeltaOpt,
    DeltaOptVar
};

const char* observable_name(Observable obs);

/// A sweep scenario as read from a config file. Angles in radians,
/// squeezing magnitudes in dB (the _db keys of the file format).
struct Scenario {
    // input state
    double beta_re = 0.0;
    double beta_im = 0.0;
    double s_db = 0.0;
    double varphi = 0.0;

    // resource family
    double r_db = 0.0;
    double phi_res = 3.14159265358979323846;
    std::vector<ResourceChoice> resources;

    // channel
    double tau = 0.0;
    double n_th = 0.0;
    double r2 = 0.0;        ///< detector reflectivity R^2
    bool gain_unity = true; ///< g = 1/T per point
    double g = 1.0;         ///< used when gain_unity is false

    // sweep
    std::string axis; ///< one of the axis names below
    double start = 0.0;
    double stop = 0.0;
    int points = 0;

    std::vector<Observable> outputs;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Axis names accepted in sweep.axis: r_db, s_db, s_bar_db, tau, n_th, R2,
/// g, beta_re, beta_im, varphi, delta, theta.
bool is_valid_axis(const std::string& name);

/// Parse a YAML scenario. Throws ConfigError on schema violations
/// (unknown keys/kinds/axes, points < 2, non-finite ranges, T and R2 both
/// given, ...).
Scenario parse_scenario_text(const std::string& yaml_text);
Scenario load_scenario(const std::string& path);

/// Tabulated sweep: one row per sweep point, one column per observable per
/// resource series, plus the leading axis column.
struct SweepResult {
    std::string version;
    Scenario scenario;
    std::vector<std::string> columns; ///< data columns, excluding the axis
    std::vector<double> axis_values;
    std::vector<std::vector<double>> rows; ///< axis_values.size() x columns.size()

    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Evaluate the scenario. Sweep points are independent and evaluated on
/// `jobs` threads; assembly is order-preserving, so output is deterministic
/// for any job count. Throws ComputeError (with point context) if an
/// observable fails to converge or is non-finite.
SweepResult run_scenario(const Scenario& scenario, int jobs = 1);

enum class EmitFormat { Csv, Json };

/// CSV: one header row, one data row per point, %.17g values.
/// JSON: generator version + scenario echo + columnar arrays.
void emit(const SweepResult& result, EmitFormat format, std::ostream& out);
void emit_to_file(const SweepResult& result, EmitFormat format, const std::string& path);
std::string emit_string(const SweepResult& result, EmitFormat format);

/// Inverse of the JSON emitter: parse(emit(x)) == x.
SweepResult parse_json_result(const std::string& text);

/// Realize a resource series at a concrete sweep point.
ResourceSpec realize_resource(const ResourceChoice& choice, double r, double phi_res,
                              const ChannelParams& params);

// ---------------------------------------------------------------------------
// Built-in verification suite (CLI verb `verify`).

struct VerifyOptions {
    int fidelity_points = 200;
    int moment_points = 100;
    double fidelity_tol = 1e-8; ///< |F_numeric - F_closed|
    double moment_tol = 1e-6;   ///< moments_numeric vs output_moments
    int quad_order = 192;
    unsigned long long seed = 42;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
    double measured = 0.0; ///< worst deviation observed
    double tolerance = 0.0;
};

/// Oracle-equivalence and identity checks; all should pass.
std::vector<VerifyCheck> run_verification(const VerifyOptions& options);

} // namespace cvt
