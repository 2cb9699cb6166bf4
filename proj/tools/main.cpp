#include <CLI11.hpp>
#include <cstdio>
#include <random>

#include "dispsim/integrate.hpp"
#include "dispsim/oracles.hpp"
#include "dispsim/scenario.hpp"

namespace {

using namespace dispsim;

KeyValues parse_sets(const std::vector<std::string>& sets) {
    KeyValues kv;
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + s + "'");
        kv[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return kv;
}

ScenarioSpec build_spec(const std::string& name, const std::string& config_path,
                        const std::vector<std::string>& sets) {
    KeyValues file_kv;
    if (!config_path.empty())
        file_kv = parse_config_file(config_path);
    return make_scenario(name, file_kv, parse_sets(sets));
}

int cmd_run(const std::string& name, const std::string& config_path,
            const std::vector<std::string>& sets, const std::string& out_dir) {
    const ScenarioSpec spec = build_spec(name, config_path, sets);
    std::printf("running scenario '%s' (%d cells, t_end = %g)\n", spec.name.c_str(),
                spec.nx * (spec.geometry == Geometry::Plane ? spec.ny : 1), spec.t_end);
    const RunResult res = run(spec, out_dir, true);
    if (!res.ok) {
        std::fprintf(stderr, "run failed: %s\n", res.error.c_str());
        std::printf("manifest: %s\n", res.manifest_path.c_str());
        return 1;
    }
    std::printf("done: %d steps, t = %.6f, wall %.2f s\n", res.steps, res.t, res.wall_seconds);
    std::printf("final mass %.12e, energy %.12e\n", res.final_mass, res.final_energy);
    std::printf("manifest: %s\n", res.manifest_path.c_str());
    return 0;
}

int cmd_list() {
    for (const auto& n : builtin_scenario_names()) {
        const ScenarioSpec s = builtin_scenario(n);
        const std::string mesh = s.geometry == Geometry::Plane
                                     ? std::to_string(s.nx) + "x" + std::to_string(s.ny)
                                     : std::to_string(s.nx);
        std::printf("%-10s %-4s %-6s nx=%-9s t_end=%-8g lambda=%g\n", n.c_str(),
                    s.model == ModelKind::SGN ? "sgn" : "ikw",
                    s.geometry == Geometry::Line     ? "line"
                    : s.geometry == Geometry::Plane  ? "plane"
                                                     : "radial",
                    mesh.c_str(), s.t_end, s.lambda);
    }
    return 0;
}

int cmd_check(const std::string& name, const std::string& config_path,
              const std::vector<std::string>& sets) {
    const ScenarioSpec spec = build_spec(name, config_path, sets);
    for (const auto& [k, v] : spec.to_config())
        std::printf("%s = %s\n", k.c_str(), v.c_str());
    std::printf("# scenario '%s' is valid\n", spec.name.c_str());
    return 0;
}

// Random-state eigenstructure and relaxation-invariant suites.
int cmd_verify(int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uh(0.1, 10.0), uu(-10.0, 10.0), ufac(0.5, 2.0),
        ul(1.0, 5000.0), urho(500.0, 1000.0);
    int failures = 0;

    auto report = [&](const char* label, bool ok, double worst) {
        std::printf("[%s] %-34s worst = %.3e\n", ok ? "PASS" : "FAIL", label, worst);
        if (!ok)
            ++failures;
    };

    {
        double worst = 0.0;
        bool ok = true;
        for (int k = 0; k < samples; ++k) {
            const ModelClosure c = ModelClosure::sgn(9.81, ul(rng));
            const Prim p{uh(rng), uu(rng), uu(rng), uh(rng), uu(rng)};
            try {
                const EigenReport r = eigenstructure_check(c, p, true);
                worst = std::max(worst, r.eigenvalue_error);
            } catch (const HyperbolicityViolation&) {
                ok = false;
            }
        }
        report("eigenstructure SGN", ok, worst);
    }
    {
        double worst = 0.0;
        bool ok = true;
        for (int k = 0; k < samples; ++k) {
            const ModelClosure c =
                ModelClosure::ikw(1e5, 1e-3, 1.4, 14952.188074685953, 1000.0, 0.99, ul(rng));
            const double rho = urho(rng);
            const Prim p{rho, uu(rng), uu(rng), c.Q(rho) * ufac(rng), uu(rng)};
            try {
                const EigenReport r = eigenstructure_check(c, p, true);
                worst = std::max(worst, r.eigenvalue_error);
            } catch (const HyperbolicityViolation&) {
                ok = false;
            }
        }
        report("eigenstructure IKW", ok, worst);
    }
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> udt(0.0, 5.0);
        for (int k = 0; k < samples * 100; ++k) {
            const double h = uh(rng), lambda = ul(rng);
            const double eta = h * ufac(rng), w = uu(rng), dt = udt(rng);
            const auto [e1, w1] = ode_exact_relax(h, eta, w, lambda, dt);
            const double i0 = w * w + lambda * (eta / h - 1.0) * (eta / h - 1.0);
            const double i1 = w1 * w1 + lambda * (e1 / h - 1.0) * (e1 / h - 1.0);
            worst = std::max(worst, std::abs(i1 - i0) / std::max(1.0, std::abs(i0)));
        }
        report("relaxation ODE invariant", worst <= 1e-12, worst);
    }
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> udt(0.0, 1.0);
        for (int k = 0; k < samples * 100; ++k) {
            const double h = uh(rng), lambda = ul(rng);
            const double eta = h * ufac(rng), w = uu(rng), A = udt(rng);
            const auto [e1, w1] = implicit_relax_solve(h, 0.0, eta, w, A, lambda);
            const double r1 = e1 - (eta + A * w1);
            const double r2 = w1 - (w - A * (lambda / h) * (e1 / h - 1.0));
            // backward-error normalization of the 2x2 stage system
            const double row_norm = std::max(1.0 + A, 1.0 + A * lambda / (h * h));
            const double scale = row_norm * std::max({1.0, std::abs(e1), std::abs(w1)});
            worst = std::max(worst, std::max(std::abs(r1), std::abs(r2)) / scale);
        }
        report("implicit stage residual", worst <= 1e-12, worst);
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-volume solver for hyperbolic approximations of dispersive systems"};
    app.require_subcommand(1);

    std::string scenario, config_path, out_dir = ".";
    std::vector<std::string> sets;
    int samples = 1000;
    unsigned seed = 20240915;

    auto* run_cmd = app.add_subcommand("run", "run a scenario");
    run_cmd->add_option("scenario", scenario, "scenario name")->required();
    run_cmd->add_option("--config", config_path, "config file with key = value overrides");
    run_cmd->add_option("--set", sets, "override a single key, e.g. --set scheme.cfl=0.5");
    run_cmd->add_option("--out", out_dir, "output directory");

    auto* list_cmd = app.add_subcommand("list", "list built-in scenarios");

    auto* check_cmd = app.add_subcommand("check", "validate and echo the effective config");
    check_cmd->add_option("scenario", scenario, "scenario name")->required();
    check_cmd->add_option("--config", config_path, "config file");
    check_cmd->add_option("--set", sets, "override a single key");

    auto* verify_cmd = app.add_subcommand("verify", "run the eigenstructure/invariant suites");
    verify_cmd->add_option("--samples", samples, "random states per suite");
    verify_cmd->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(scenario, config_path, sets, out_dir);
        if (list_cmd->parsed())
            return cmd_list();
        if (check_cmd->parsed())
            return cmd_check(scenario, config_path, sets);
        if (verify_cmd->parsed())
            return cmd_verify(samples, seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
