#include "dispsim/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dispsim/oracles.hpp"

namespace dispsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_num(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size())
            throw ConfigError("");
        return x;
    } catch (...) {
        throw ConfigError("bad numeric value for " + key + ": '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size())
            throw ConfigError("");
        return x;
    } catch (...) {
        throw ConfigError("bad integer value for " + key + ": '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "on" || v == "1")
        return true;
    if (v == "false" || v == "off" || v == "0")
        return false;
    throw ConfigError("bad boolean value for " + key + ": '" + v + "'");
}

std::string num_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* bc_str(BcType b) {
    switch (b) {
    case BcType::Periodic: return "periodic";
    case BcType::Transmissive: return "transmissive";
    case BcType::ReflectiveWall: return "wall";
    }
    return "transmissive";
}

BcType bc_from(const std::string& key, const std::string& v) {
    if (v == "periodic") return BcType::Periodic;
    if (v == "transmissive") return BcType::Transmissive;
    if (v == "wall") return BcType::ReflectiveWall;
    throw ConfigError("bad boundary tag for " + key + ": '" + v + "'");
}

} // namespace

KeyValues parse_config_text(const std::string& text) {
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + " has no '='");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + " has an empty key");
        kv[key] = value;
    }
    return kv;
}

KeyValues parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

ModelClosure ScenarioSpec::closure() const {
    return model == ModelKind::SGN ? ModelClosure::sgn(g, lambda)
                                   : ModelClosure::ikw(p0, R0, gam, nb, rho10, Y1, lambda);
}

Grid ScenarioSpec::make_grid() const {
    const double dx = (x1 - x0) / nx;
    const int nyy = geometry == Geometry::Plane ? ny : 1;
    const double dy = geometry == Geometry::Plane ? (y1 - y0) / ny : dx;
    return Grid(geometry, nx, nyy, dx, dy, x0, y0);
}

namespace {

double ic_num(const KeyValues& ic, const std::string& key, double fallback) {
    const auto it = ic.find(key);
    return it == ic.end() ? fallback : to_num("ic." + key, it->second);
}

} // namespace

void ScenarioSpec::initialize(Grid& grid) const {
    const ModelClosure c = closure();
    auto fill = [&](auto&& state_of) {
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i)
                grid.at(i, j) = prim_to_cons(state_of(grid.xc(i), grid.yc(j)));
    };

    if (recipe == "uniform") {
        const double rho = ic_num(ic, "rho", 1.0);
        Prim p{rho, ic_num(ic, "u", 0.0), ic_num(ic, "v", 0.0), 0.0, ic_num(ic, "w", 0.0)};
        p.eta = ic_num(ic, "eta", c.Q(rho));
        fill([&](double, double) { return p; });
    } else if (recipe == "soliton") {
        SolitonParams p;
        p.h0 = ic_num(ic, "h0", 1.0);
        p.a = ic_num(ic, "a", 0.2);
        p.g = g;
        p.x_center = ic_num(ic, "x_center", 0.5 * (x0 + x1));
        p.direction = ic_num(ic, "direction", 1.0) < 0 ? -1 : 1;
        fill([&](double x, double) { return sgn_soliton_state(p, x, 0.0); });
    } else if (recipe == "two_solitons") {
        SolitonParams a, b;
        a.h0 = b.h0 = ic_num(ic, "h0", 10.0);
        a.a = b.a = ic_num(ic, "a", 2.0);
        a.g = b.g = g;
        a.x_center = ic_num(ic, "x1", 1500.0);
        b.x_center = ic_num(ic, "x2", 2500.0);
        a.direction = 1;
        b.direction = -1;
        fill([&](double x, double) {
            const Prim pa = sgn_soliton_state(a, x, 0.0);
            const Prim pb = sgn_soliton_state(b, x, 0.0);
            const double h = a.h0 + (pa.rho - a.h0) + (pb.rho - b.h0);
            return Prim{h, pa.u + pb.u, 0.0, h, pa.w + pb.w};
        });
    } else if (recipe == "dam_break") {
        const double hL = ic_num(ic, "h_left", 1.8);
        const double hR = ic_num(ic, "h_right", 1.0);
        const double xj = ic_num(ic, "x_jump", 0.0);
        fill([&](double x, double) {
            const double h = x <= xj ? hL : hR;
            return Prim{h, 0.0, 0.0, h, 0.0};
        });
    } else if (recipe == "circle") {
        const double hin = ic_num(ic, "h_in", 1.8);
        const double hout = ic_num(ic, "h_out", 1.0);
        const double rc = ic_num(ic, "radius", 40.0);
        fill([&](double x, double y) {
            const double h = x * x + y * y <= rc * rc ? hin : hout;
            return Prim{h, 0.0, 0.0, h, 0.0};
        });
    } else if (recipe == "square") {
        const double hin = ic_num(ic, "h_in", 1.8);
        const double hout = ic_num(ic, "h_out", 1.0);
        const double half = 0.5 * ic_num(ic, "side", 80.0);
        fill([&](double x, double y) {
            const double h = std::abs(x) <= half && std::abs(y) <= half ? hin : hout;
            return Prim{h, 0.0, 0.0, h, 0.0};
        });
    } else if (recipe == "radial_dam") {
        const double hin = ic_num(ic, "h_in", 1.8);
        const double hout = ic_num(ic, "h_out", 1.0);
        const double rc = ic_num(ic, "radius", 40.0);
        fill([&](double x, double) {
            const double h = x <= rc ? hin : hout;
            return Prim{h, 0.0, 0.0, h, 0.0};
        });
    } else if (recipe == "pulse") {
        const double rho0 = ic_num(ic, "rho0", 950.0);
        const double amp = ic_num(ic, "amp", 1e-3);
        const double xc = ic_num(ic, "x_center", 0.5 * (x0 + x1));
        const double width = ic_num(ic, "width", 0.1 * (x1 - x0));
        fill([&](double x, double) {
            const double xi = (x - xc) / width;
            double rho = rho0;
            if (std::abs(xi) < 1.0) {
                const double cs = std::cos(0.5 * std::numbers::pi * xi);
                rho = rho0 * (1.0 + amp * cs * cs);
            }
            return Prim{rho, 0.0, 0.0, c.Q(rho), 0.0};
        });
    } else {
        throw ConfigError("unknown initial-condition recipe '" + recipe + "'");
    }
}

void ScenarioSpec::validate() const {
    if (!(t_end >= 0.0))
        throw ConfigError("t_end must be >= 0");
    if (nx < 1 || (geometry == Geometry::Plane && ny < 1))
        throw ConfigError("mesh needs nx, ny >= 1");
    if (!(x1 > x0) || (geometry == Geometry::Plane && !(y1 > y0)))
        throw ConfigError("domain extents are empty");
    if (!(scheme.cfl > 0.0))
        throw ConfigError("scheme.cfl must be positive");
    if (scheme.cfl > 1.0 && !scheme.allow_cfl_above_one)
        throw ConfigError("scheme.cfl > 1 requires scheme.allow_cfl_above_one = true");
    if (scheme.workers < 1)
        throw ConfigError("scheme.workers must be >= 1");
    if (geometry == Geometry::Radial) {
        if (x0 != 0.0)
            throw ConfigError("radial geometry requires domain.x0 = 0");
        if (bc.left != BcType::ReflectiveWall)
            throw ConfigError("radial geometry requires bc.left = wall");
    }
    if ((bc.left == BcType::Periodic) != (bc.right == BcType::Periodic) ||
        (bc.bottom == BcType::Periodic) != (bc.top == BcType::Periodic))
        throw ConfigError("periodic boundaries must come in matching pairs");
    closure();                      // parameter checks
    static_cast<void>(make_grid()); // grid invariants
    const std::vector<std::string> known = {"uniform", "soliton",    "two_solitons", "dam_break",
                                            "circle",  "square",     "radial_dam",   "pulse"};
    bool found = false;
    for (const auto& r : known)
        found = found || r == recipe;
    if (!found)
        throw ConfigError("unknown initial-condition recipe '" + recipe + "'");
    if (output_every_seconds < 0.0 || output_every_steps < 0)
        throw ConfigError("output cadence must be >= 0");
}

KeyValues ScenarioSpec::to_config() const {
    KeyValues kv;
    kv["name"] = name;
    kv["model"] = model == ModelKind::SGN ? "sgn" : "ikw";
    kv["geometry"] = geometry == Geometry::Line     ? "line"
                     : geometry == Geometry::Plane  ? "plane"
                                                    : "radial";
    kv["domain.x0"] = num_str(x0);
    kv["domain.x1"] = num_str(x1);
    kv["mesh.nx"] = std::to_string(nx);
    if (geometry == Geometry::Plane) {
        kv["domain.y0"] = num_str(y0);
        kv["domain.y1"] = num_str(y1);
        kv["mesh.ny"] = std::to_string(ny);
    }
    kv["closure.lambda"] = num_str(lambda);
    if (model == ModelKind::SGN) {
        kv["closure.g"] = num_str(g);
    } else {
        kv["closure.p0"] = num_str(p0);
        kv["closure.R0"] = num_str(R0);
        kv["closure.gamma"] = num_str(gam);
        kv["closure.n"] = num_str(nb);
        kv["closure.rho10"] = num_str(rho10);
        kv["closure.Y1"] = num_str(Y1);
    }
    kv["scheme.integrator"] =
        scheme.integrator == Integrator::Splitting1 ? "splitting" : "imex";
    kv["scheme.solver"] = scheme.solver == RiemannSolver::Rusanov ? "rusanov" : "hllc";
    kv["scheme.cfl"] = num_str(scheme.cfl);
    kv["scheme.muscl"] = scheme.muscl ? "on" : "off";
    kv["scheme.workers"] = std::to_string(scheme.workers);
    kv["scheme.allow_cfl_above_one"] = scheme.allow_cfl_above_one ? "true" : "false";
    kv["bc.left"] = bc_str(bc.left);
    kv["bc.right"] = bc_str(bc.right);
    if (geometry == Geometry::Plane) {
        kv["bc.bottom"] = bc_str(bc.bottom);
        kv["bc.top"] = bc_str(bc.top);
    }
    kv["ic.recipe"] = recipe;
    for (const auto& [k, v] : ic)
        kv["ic." + k] = v;
    kv["t_end"] = num_str(t_end);
    kv["output.every_seconds"] = num_str(output_every_seconds);
    kv["output.every_steps"] = std::to_string(output_every_steps);
    kv["verify.eigen_every"] = std::to_string(eigen_check_every);
    return kv;
}

void ScenarioSpec::apply_config(const KeyValues& kv) {
    for (const auto& [key, v] : kv) {
        if (key.rfind("run.", 0) == 0)
            continue; // manifest bookkeeping, not scenario state
        if (key == "name") name = v;
        else if (key == "model") {
            if (v == "sgn") model = ModelKind::SGN;
            else if (v == "ikw") model = ModelKind::IKW;
            else throw ConfigError("bad model '" + v + "'");
        } else if (key == "geometry") {
            if (v == "line") geometry = Geometry::Line;
            else if (v == "plane") geometry = Geometry::Plane;
            else if (v == "radial") geometry = Geometry::Radial;
            else throw ConfigError("bad geometry '" + v + "'");
        }
        else if (key == "domain.x0") x0 = to_num(key, v);
        else if (key == "domain.x1") x1 = to_num(key, v);
        else if (key == "domain.y0") y0 = to_num(key, v);
        else if (key == "domain.y1") y1 = to_num(key, v);
        else if (key == "mesh.nx") nx = to_int(key, v);
        else if (key == "mesh.ny") ny = to_int(key, v);
        else if (key == "closure.lambda") lambda = to_num(key, v);
        else if (key == "closure.g") g = to_num(key, v);
        else if (key == "closure.p0") p0 = to_num(key, v);
        else if (key == "closure.R0") R0 = to_num(key, v);
        else if (key == "closure.gamma") gam = to_num(key, v);
        else if (key == "closure.n") nb = to_num(key, v);
        else if (key == "closure.rho10") rho10 = to_num(key, v);
        else if (key == "closure.Y1") Y1 = to_num(key, v);
        else if (key == "scheme.integrator") {
            if (v == "splitting") scheme.integrator = Integrator::Splitting1;
            else if (v == "imex") scheme.integrator = Integrator::ImexArs222;
            else throw ConfigError("bad integrator '" + v + "'");
        } else if (key == "scheme.solver") {
            if (v == "rusanov") scheme.solver = RiemannSolver::Rusanov;
            else if (v == "hllc") scheme.solver = RiemannSolver::Hllc;
            else throw ConfigError("bad solver '" + v + "'");
        }
        else if (key == "scheme.cfl") scheme.cfl = to_num(key, v);
        else if (key == "scheme.muscl") scheme.muscl = to_bool(key, v);
        else if (key == "scheme.workers") scheme.workers = to_int(key, v);
        else if (key == "scheme.allow_cfl_above_one") scheme.allow_cfl_above_one = to_bool(key, v);
        else if (key == "bc.left") bc.left = bc_from(key, v);
        else if (key == "bc.right") bc.right = bc_from(key, v);
        else if (key == "bc.bottom") bc.bottom = bc_from(key, v);
        else if (key == "bc.top") bc.top = bc_from(key, v);
        else if (key == "ic.recipe") recipe = v;
        else if (key.rfind("ic.", 0) == 0) ic[key.substr(3)] = v;
        else if (key == "t_end") t_end = to_num(key, v);
        else if (key == "output.every_seconds") output_every_seconds = to_num(key, v);
        else if (key == "output.every_steps") output_every_steps = to_int(key, v);
        else if (key == "verify.eigen_every") eigen_check_every = to_int(key, v);
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

std::vector<std::string> builtin_scenario_names() {
    return {"soliton", "collision", "dam1d", "circle2d", "square2d", "radial1d", "ikw_pulse"};
}

ScenarioSpec builtin_scenario(const std::string& name) {
    ScenarioSpec s;
    s.name = name;
    if (name == "soliton") {
        s.geometry = Geometry::Line;
        s.x0 = 0.0; s.x1 = 100.0; s.nx = 2000;
        s.lambda = 1200.0;
        s.scheme = {Integrator::ImexArs222, RiemannSolver::Rusanov, 0.9, true, 1, false};
        s.bc = {BcType::Periodic, BcType::Periodic, BcType::Transmissive, BcType::Transmissive};
        s.recipe = "soliton";
        s.ic = {{"h0", "1"}, {"a", "0.2"}, {"x_center", "50"}, {"direction", "1"}};
        s.t_end = 29.145725699277875; // one period, 100/D
    } else if (name == "collision") {
        s.geometry = Geometry::Line;
        s.x0 = 0.0; s.x1 = 4000.0; s.nx = 4000;
        s.lambda = 2400.0;
        s.scheme = {Integrator::ImexArs222, RiemannSolver::Rusanov, 0.9, true, 1, false};
        s.recipe = "two_solitons";
        s.ic = {{"h0", "10"}, {"a", "2"}, {"x1", "1500"}, {"x2", "2500"}};
        s.t_end = 200.0;
    } else if (name == "dam1d") {
        s.geometry = Geometry::Line;
        // Domain keeps the undisturbed h_L stretch short so the plateau is
        // the longest low-gradient window at the reference output time.
        s.x0 = -210.0; s.x1 = 250.0; s.nx = 8000;
        s.lambda = 300.0;
        s.scheme = {Integrator::ImexArs222, RiemannSolver::Hllc, 0.95, true, 1, false};
        s.recipe = "dam_break";
        s.ic = {{"h_left", "1.8"}, {"h_right", "1"}, {"x_jump", "0"}};
        s.t_end = 47.434;
    } else if (name == "circle2d") {
        s.geometry = Geometry::Plane;
        s.x0 = s.y0 = -300.0; s.x1 = s.y1 = 300.0;
        s.nx = s.ny = 800;
        s.lambda = 75.0;
        s.scheme = {Integrator::ImexArs222, RiemannSolver::Hllc, 0.5, true, 1, false};
        s.recipe = "circle";
        s.ic = {{"h_in", "1.8"}, {"h_out", "1"}, {"radius", "40"}};
        s.t_end = 40.0;
    } else if (name == "square2d") {
        s.geometry = Geometry::Plane;
        s.x0 = s.y0 = -300.0; s.x1 = s.y1 = 300.0;
        s.nx = s.ny = 800;
        s.lambda = 75.0;
        s.scheme = {Integrator::ImexArs222, RiemannSolver::Hllc, 0.5, true, 1, false};
        s.recipe = "square";
        s.ic = {{"h_in", "1.8"}, {"h_out", "1"}, {"side", "80"}};
        s.t_end = 40.0;
    } else if (name == "radial1d") {
        s.geometry = Geometry::Radial;
        s.x0 = 0.0; s.x1 = 300.0; s.nx = 400; // dr matches circle2d's dx
        s.lambda = 75.0;
        s.scheme = {Integrator::ImexArs222, RiemannSolver::Hllc, 0.5, true, 1, false};
        s.bc = {BcType::ReflectiveWall, BcType::Transmissive, BcType::Transmissive,
                BcType::Transmissive};
        s.recipe = "radial_dam";
        s.ic = {{"h_in", "1.8"}, {"h_out", "1"}, {"radius", "40"}};
        s.t_end = 40.0;
    } else if (name == "ikw_pulse") {
        s.geometry = Geometry::Line;
        s.x0 = 0.0; s.x1 = 20.0; s.nx = 1000;
        s.model = ModelKind::IKW;
        s.lambda = 100.0;
        s.p0 = 1e5; s.R0 = 1e-3; s.gam = 1.4;
        s.nb = 14952.188074685953; // equilibrium R = R0 at rho = 950
        s.rho10 = 1000.0; s.Y1 = 0.99;
        s.scheme = {Integrator::ImexArs222, RiemannSolver::Rusanov, 0.9, true, 1, false};
        s.recipe = "pulse";
        s.ic = {{"rho0", "950"}, {"amp", "0.001"}, {"x_center", "5"}, {"width", "2"}};
        s.t_end = 0.2;
    } else {
        throw ConfigError("unknown scenario '" + name + "'");
    }
    return s;
}

ScenarioSpec make_scenario(const std::string& name, const KeyValues& file_kv,
                           const KeyValues& overrides) {
    ScenarioSpec s = builtin_scenario(name);
    s.apply_config(file_kv);
    s.apply_config(overrides);
    s.validate();
    return s;
}

namespace {

std::string dump_path(const std::string& out_dir, const ScenarioSpec& s, int index,
                      bool final_dump) {
    char tag[32];
    if (final_dump)
        std::snprintf(tag, sizeof tag, "final");
    else
        std::snprintf(tag, sizeof tag, "%04d", index);
    const char* ext = s.geometry == Geometry::Plane ? ".grid" : ".csv";
    return out_dir + "/" + s.name + "_" + tag + ext;
}

void dump_fields(const Grid& g, const ModelClosure& c, const std::string& path) {
    if (g.two_dimensional())
        write_grid_2d(g, c, path);
    else
        write_csv_1d(g, c, path);
}

void spot_check_eigenstructure(const Grid& g, const ModelClosure& c) {
    const int samples = 8;
    for (int k = 0; k < samples; ++k) {
        const int i = static_cast<int>((static_cast<long long>(k) + 1) * g.nx() / (samples + 1));
        const int j = g.two_dimensional()
                          ? static_cast<int>((static_cast<long long>(k) + 1) * g.ny() / (samples + 1))
                          : 0;
        eigenstructure_check(c, cons_to_prim(g.at(i, j)), true);
    }
}

} // namespace

RunResult run(const ScenarioSpec& spec, const std::string& out_dir, bool verbose) {
    spec.validate();
    std::filesystem::create_directories(out_dir);
    const auto start = std::chrono::steady_clock::now();

    RunResult res;
    res.manifest_path = out_dir + "/" + spec.name + ".manifest";
    KeyValues manifest = spec.to_config();
    manifest["run.code_version"] = kVersion;

    const ModelClosure c = spec.closure();
    Grid grid = spec.make_grid();
    Workspace ws;
    double t = 0.0;
    int dump_index = 0;
    int next_cadence = 1;

    auto finish = [&](bool ok, const std::string& err) {
        res.ok = ok;
        res.error = err;
        res.t = t;
        res.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        manifest["run.status"] = ok ? "ok" : "failed";
        if (!ok)
            manifest["run.error"] = err;
        manifest["run.steps"] = std::to_string(res.steps);
        manifest["run.final_time"] = num_str(t);
        manifest["run.wall_seconds"] = num_str(res.wall_seconds);
        if (ok) {
            res.final_mass = integrate_total_mass(grid);
            res.final_energy = integrate_total_energy(grid, c);
            manifest["run.final_mass"] = num_str(res.final_mass);
            manifest["run.final_energy"] = num_str(res.final_energy);
        }
        manifest["run.output_count"] = std::to_string(res.outputs.size());
        for (size_t k = 0; k < res.outputs.size(); ++k)
            manifest["run.output." + std::to_string(k)] = res.outputs[k];
        write_key_values(res.manifest_path, manifest);
        res.manifest = manifest;
        return res;
    };

    try {
        spec.initialize(grid);
        apply_boundary_conditions(grid, spec.bc);

        const std::string init_path = dump_path(out_dir, spec, dump_index++, false);
        dump_fields(grid, c, init_path);
        res.outputs.push_back(init_path);

        const double eps_t = 1e-12 * std::max(1.0, spec.t_end);
        while (t < spec.t_end - eps_t) {
            apply_boundary_conditions(grid, spec.bc);
            const StepReport rep =
                advance_step(grid, c, spec.scheme, spec.bc, spec.t_end - t, ws);
            t += rep.dt;
            ++res.steps;

            if (spec.eigen_check_every > 0 && res.steps % spec.eigen_check_every == 0)
                spot_check_eigenstructure(grid, c);

            bool cadence_hit = false;
            if (spec.output_every_seconds > 0.0 &&
                t >= next_cadence * spec.output_every_seconds - eps_t &&
                next_cadence <= static_cast<int>(spec.t_end / spec.output_every_seconds)) {
                ++next_cadence;
                cadence_hit = true;
            }
            if (spec.output_every_steps > 0 && res.steps % spec.output_every_steps == 0)
                cadence_hit = true;
            if (cadence_hit) {
                const std::string path = dump_path(out_dir, spec, dump_index++, false);
                dump_fields(grid, c, path);
                res.outputs.push_back(path);
            }
            if (verbose && res.steps % 200 == 0)
                std::printf("step %6d  t = %12.6f / %g  dt = %.3e  mass = %.9e\n", res.steps,
                            t, spec.t_end, rep.dt, rep.mass);
        }

        const std::string final_path = dump_path(out_dir, spec, dump_index, true);
        dump_fields(grid, c, final_path);
        res.outputs.push_back(final_path);
        return finish(true, "");
    } catch (const std::exception& e) {
        return finish(false, e.what());
    }
}

} // namespace dispsim
