#ifndef DISPSIM_SCENARIO_HPP
#define DISPSIM_SCENARIO_HPP

#include <string>
#include <vector>

#include "dispsim/integrate.hpp"
#include "dispsim/output.hpp"

namespace dispsim {

inline constexpr const char* kVersion = "0.1.0";

/// Parses flat "key = value" text with '#' comments into a sorted map.
KeyValues parse_config_text(const std::string& text);
KeyValues parse_config_file(const std::string& path);

/// Fully parameterized run recipe. String-valued initial-condition parameters
/// live under ic.* so overrides and echoes stay exact.
struct ScenarioSpec {
    std::string name = "unnamed";
    ModelKind model = ModelKind::SGN;
    Geometry geometry = Geometry::Line;

    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
    int nx = 100, ny = 1;

    // closure parameters (lambda shared, g for SGN, the rest for IKW)
    double lambda = 0.0;
    double g = 9.81;
    double p0 = 1e5, R0 = 1e-3, gam = 1.4, nb = 1e4, rho10 = 1e3, Y1 = 0.99;

    SchemeConfig scheme;
    BoundaryConditions bc;

    std::string recipe = "uniform";
    KeyValues ic; ///< recipe parameters, keys without the "ic." prefix

    double t_end = 1.0;
    double output_every_seconds = 0.0; ///< 0 disables cadence dumps
    int output_every_steps = 0;        ///< 0 disables step-cadence dumps
    int eigen_check_every = 500;       ///< spot eigenstructure checks; 0 disables

    ModelClosure closure() const;
    Grid make_grid() const;
    void initialize(Grid& grid) const;
    void validate() const;

    KeyValues to_config() const;
    /// Applies keys on top of the current values; run.* keys are ignored,
    /// anything else unknown raises ConfigError.
    void apply_config(const KeyValues& kv);
};

std::vector<std::string> builtin_scenario_names();
ScenarioSpec builtin_scenario(const std::string& name);

/// Registry defaults, then config-file keys, then command-line overrides.
ScenarioSpec make_scenario(const std::string& name, const KeyValues& file_kv,
                           const KeyValues& overrides);

struct RunResult {
    bool ok = false;
    std::string error;
    int steps = 0;
    double t = 0.0;
    double wall_seconds = 0.0;
    double final_mass = 0.0;
    double final_energy = 0.0;
    std::vector<std::string> outputs;
    std::string manifest_path;
    KeyValues manifest;
};

/// Time loop: apply BCs, clamp dt to t_end, step, dump at the configured
/// cadence; the manifest is written exactly once, last. Step errors abort
/// the run and leave a manifest marked failed.
RunResult run(const ScenarioSpec& spec, const std::string& out_dir, bool verbose = false);

} // namespace dispsim

#endif
