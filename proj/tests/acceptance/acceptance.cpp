// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Heavy 2-D runs honor --workers; the runtime-capped runs always use
// a single worker.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "dispsim/integrate.hpp"
#include "dispsim/oracles.hpp"
#include "dispsim/scenario.hpp"

using namespace dispsim;

namespace {

int g_workers = 1;
int g_failures = 0;

void record(const char* id, bool pass, const std::string& details) {
    std::printf("[%s] %-4s %s\n", pass ? "PASS" : "FAIL", id, details.c_str());
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

double wall_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RunTrace {
    Grid grid;
    int steps = 0;
    double wall = 0.0;
    double mass0 = 0.0, mass_drift = 0.0;
    std::vector<double> times, energies;
    double max_eta_dev = 0.0;
};

// In-memory time loop over a scenario spec with optional per-step hooks.
template <class StepHook>
RunTrace simulate(const ScenarioSpec& spec, int sample_every, bool track_eta_dev,
                  StepHook&& hook) {
    const ModelClosure c = spec.closure();
    RunTrace tr{spec.make_grid()};
    spec.initialize(tr.grid);
    apply_boundary_conditions(tr.grid, spec.bc);
    tr.mass0 = integrate_total_mass(tr.grid);
    tr.times.push_back(0.0);
    tr.energies.push_back(integrate_total_energy(tr.grid, c));
    Workspace ws;
    const auto t0 = std::chrono::steady_clock::now();
    double t = 0.0;
    const double eps_t = 1e-12 * std::max(1.0, spec.t_end);
    while (t < spec.t_end - eps_t) {
        apply_boundary_conditions(tr.grid, spec.bc);
        const StepReport rep = advance_step(tr.grid, c, spec.scheme, spec.bc, spec.t_end - t, ws);
        t += rep.dt;
        ++tr.steps;
        tr.mass_drift = std::max(tr.mass_drift, std::abs(rep.mass - tr.mass0) / tr.mass0);
        if (sample_every > 0 && tr.steps % sample_every == 0) {
            tr.times.push_back(t);
            tr.energies.push_back(rep.energy);
        }
        if (track_eta_dev) {
            for (int i = 0; i < tr.grid.nx(); ++i) {
                const Prim p = cons_to_prim(tr.grid.at(i, 0));
                tr.max_eta_dev = std::max(tr.max_eta_dev, std::abs(p.eta - p.rho));
            }
        }
        hook(tr.grid, tr.steps, t);
    }
    tr.times.push_back(t);
    tr.energies.push_back(integrate_total_energy(tr.grid, c));
    tr.wall = wall_since(t0);
    return tr;
}

RunTrace simulate(const ScenarioSpec& spec, int sample_every = 0, bool track_eta = false) {
    return simulate(spec, sample_every, track_eta, [](const Grid&, int, double) {});
}

std::vector<double> depth_field(const Grid& g) {
    std::vector<double> h(static_cast<size_t>(g.nx()) * static_cast<size_t>(g.ny()));
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            h[static_cast<size_t>(j) * g.nx() + i] = g.at(i, j).rho;
    return h;
}

// sub-cell crest position from a quadratic fit around the argmax
double crest_position(const Grid& g, double x_lo, double x_hi) {
    int best = -1;
    double best_h = -1.0;
    for (int i = 0; i < g.nx(); ++i) {
        if (g.xc(i) < x_lo || g.xc(i) > x_hi)
            continue;
        if (g.at(i, 0).rho > best_h) {
            best_h = g.at(i, 0).rho;
            best = i;
        }
    }
    const double hm = g.at(best - 1, 0).rho, h0 = g.at(best, 0).rho, hp = g.at(best + 1, 0).rho;
    const double denom = hm - 2.0 * h0 + hp;
    const double frac = denom != 0.0 ? 0.5 * (hm - hp) / denom : 0.0;
    return g.xc(best) + frac * g.dx();
}

double max_depth(const Grid& g, double x_lo, double x_hi) {
    double best = -1.0;
    for (int i = 0; i < g.nx(); ++i)
        if (g.xc(i) >= x_lo && g.xc(i) <= x_hi)
            best = std::max(best, g.at(i, 0).rho);
    return best;
}

// ---------------------------------------------------------------------------

void criterion_1_9_10() {
    // C1: one soliton period at N = 2000, lambda = 1200, CFL 0.9, IMEX+Rusanov
    // C9: mass conservation and energy drift on the same run
    // C10: max|eta - h| monotone in lambda over {300, 1200, 4800}
    ScenarioSpec spec = builtin_scenario("soliton");
    spec.scheme.workers = 1;
    spec.eigen_check_every = 0;

    RunTrace base{Grid(Geometry::Line, 1, 1, 1.0, 1.0, 0.0, 0.0)};
    try {
        base = simulate(spec, 50, true);
    } catch (const std::exception& e) {
        record("C1", false, fmt("soliton run failed: %s", e.what()));
        record("C9", false, "skipped: soliton run failed");
        record("C10", false, "skipped: soliton run failed");
        return;
    }

    const SolitonParams p{1.0, 0.2, 9.81, 50.0, 1};
    std::vector<double> exact(static_cast<size_t>(spec.nx));
    for (int i = 0; i < spec.nx; ++i)
        exact[static_cast<size_t>(i)] = sgn_soliton_state(p, base.grid.xc(i), 0.0).rho;
    const Norms n = error_norms(depth_field(base.grid), exact, base.grid);
    const double amp = max_depth(base.grid, 0.0, 100.0) - 1.0;
    const bool c1 = std::abs(amp - 0.2) <= 0.004 && n.linf <= 0.01 && base.wall <= 60.0;
    record("C1", c1,
           fmt("soliton period: amp=%.5f (target 0.2 within 0.004), Linf(h)=%.5f (<=0.01), "
               "wall=%.1fs (<=60, 1 worker), steps=%d",
               amp, n.linf, base.wall, base.steps));

    // C9: mass to 1e-12, energy drift <= 1e-3 and non-increasing trendwise
    double slope = 0.0; // least-squares dE/dt over the sampled history
    {
        const size_t m = base.times.size();
        double st = 0, se = 0, stt = 0, ste = 0;
        for (size_t k = 0; k < m; ++k) {
            st += base.times[k];
            se += base.energies[k];
            stt += base.times[k] * base.times[k];
            ste += base.times[k] * base.energies[k];
        }
        slope = (m * ste - st * se) / (m * stt - st * st);
    }
    const double e0 = base.energies.front();
    const double drift = std::abs(base.energies.back() - e0) / e0;
    const bool c9 = base.mass_drift <= 1e-12 && drift <= 1e-3 && slope <= 0.0;
    record("C9", c9,
           fmt("mass drift=%.2e (<=1e-12), energy drift=%.2e (<=1e-3), trend slope=%.2e "
               "(<=0, dissipative)",
               base.mass_drift, drift, slope));

    // C10: lambda relaxation ordering
    try {
        ScenarioSpec s300 = spec, s4800 = spec;
        s300.lambda = 300.0;
        s4800.lambda = 4800.0;
        const RunTrace r300 = simulate(s300, 0, true);
        const RunTrace r4800 = simulate(s4800, 0, true);
        const bool c10 = r300.max_eta_dev > base.max_eta_dev &&
                         base.max_eta_dev > r4800.max_eta_dev;
        record("C10", c10,
               fmt("max|eta-h| over run: %.4e (l=300) > %.4e (l=1200) > %.4e (l=4800)",
                   r300.max_eta_dev, base.max_eta_dev, r4800.max_eta_dev));
    } catch (const std::exception& e) {
        record("C10", false, fmt("lambda sweep failed: %s", e.what()));
    }
}

void criterion_2() {
    // Refinement oracle: L2(h) errors against a 16000-cell second-order
    // reference of the same lambda-extended system (cell-average restriction);
    // the observed order is the finest-pair estimate.
    auto run_mesh = [&](Integrator integ, int n) {
        ScenarioSpec spec = builtin_scenario("soliton");
        spec.nx = n;
        spec.t_end = 5.0;
        spec.scheme.integrator = integ;
        spec.scheme.muscl = integ == Integrator::ImexArs222;
        spec.scheme.workers = g_workers;
        spec.eigen_check_every = 0;
        return depth_field(simulate(spec).grid);
    };
    auto restrict_to = [](const std::vector<double>& fine, size_t n) {
        const size_t f = fine.size() / n;
        std::vector<double> coarse(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < f; ++k)
                coarse[i] += fine[i * f + k];
            coarse[i] /= static_cast<double>(f);
        }
        return coarse;
    };
    auto l2 = [](const std::vector<double>& a, const std::vector<double>& b, double dx) {
        double s = 0.0;
        for (size_t i = 0; i < a.size(); ++i)
            s += (a[i] - b[i]) * (a[i] - b[i]) * dx;
        return std::sqrt(s);
    };
    try {
        const auto ref = run_mesh(Integrator::ImexArs222, 16000);
        struct Study {
            double coarse_order, fine_order;
        };
        auto study = [&](Integrator integ) {
            double e[3];
            int k = 0;
            for (int n : {500, 1000, 2000}) {
                const auto h = run_mesh(integ, n);
                e[k++] = l2(h, restrict_to(ref, static_cast<size_t>(n)), 100.0 / n);
            }
            return Study{std::log2(e[0] / e[1]), std::log2(e[1] / e[2])};
        };
        const Study imex = study(Integrator::ImexArs222);
        const Study split = study(Integrator::Splitting1);
        const bool imex_ok = imex.fine_order >= 1.8 && imex.fine_order <= 2.2;
        const bool split_ok = split.fine_order >= 0.7 && split.fine_order <= 1.2;
        record("C2", imex_ok && split_ok,
               fmt("observed L2(h) orders at N=500/1000/2000, T=5s: imex=%.3f (pairs "
                   "%.3f/%.3f, need [1.8,2.2]), splitting=%.3f (pairs %.3f/%.3f, need "
                   "[0.7,1.2])",
                   imex.fine_order, imex.coarse_order, imex.fine_order, split.fine_order,
                   split.coarse_order, split.fine_order));
    } catch (const std::exception& e) {
        record("C2", false, fmt("convergence study failed: %s", e.what()));
    }
}

void criterion_3() {
    ScenarioSpec spec = builtin_scenario("dam1d");
    spec.scheme.workers = 1;
    spec.eigen_check_every = 0;
    try {
        const RunTrace tr = simulate(spec);
        const DambreakMetrics m = dambreak_metrics(tr.grid, 1.8, 1.0, 9.81);
        const double h_ref = 1.37082, u_ref = 1.07066, a_ref = 0.74667;
        const bool ok = std::abs(m.h_plateau - h_ref) <= 0.01 * h_ref &&
                        std::abs(m.u_plateau - u_ref) <= 0.02 * u_ref &&
                        std::abs(m.lead_amp - a_ref) <= 0.10 * a_ref && tr.wall <= 300.0;
        record("C3", ok,
               fmt("dam break: h*=%.5f (1.37082 within 1%%), u*=%.5f (1.07066 within 2%%), "
                   "a+=%.5f (0.74667 within 10%%), wall=%.1fs (<=300, 1 worker)",
                   m.h_plateau, m.u_plateau, m.lead_amp, tr.wall));
    } catch (const std::exception& e) {
        record("C3", false, fmt("dam-break run failed: %s", e.what()));
    }
}

void criterion_4() {
    ScenarioSpec coll = builtin_scenario("collision");
    coll.scheme.workers = g_workers;
    coll.eigen_check_every = 0;

    ScenarioSpec single = coll;
    single.recipe = "soliton";
    single.ic = {{"h0", "10"}, {"a", "2"}, {"x_center", "1500"}, {"direction", "1"}};

    try {
        const RunTrace rc = simulate(coll);
        const RunTrace rs = simulate(single);

        const double amp_ref = max_depth(rs.grid, 2000.0, 4000.0) - 10.0;
        const double x_ref = crest_position(rs.grid, 2000.0, 4000.0);
        const double amp_right = max_depth(rc.grid, 2000.0, 4000.0) - 10.0;
        const double amp_left = max_depth(rc.grid, 0.0, 2000.0) - 10.0;
        const double x_right = crest_position(rc.grid, 2000.0, 4000.0);
        const double x_left = crest_position(rc.grid, 0.0, 2000.0);
        // left-moving reference by reflection symmetry about the midpoint
        const double lag_right = x_ref - x_right;
        const double lag_left = x_left - (4000.0 - x_ref);
        const bool ok = amp_right >= 0.95 * amp_ref && amp_left >= 0.95 * amp_ref &&
                        lag_right > 0.0 && lag_right <= 50.0 && lag_left > 0.0 &&
                        lag_left <= 50.0;
        record("C4", ok,
               fmt("collision: amp R/L=%.4f/%.4f (>=0.95*%.4f), phase lag R/L=%.2f/%.2f m "
                   "(positive, bounded)",
                   amp_right, amp_left, amp_ref, lag_right, lag_left));
    } catch (const std::exception& e) {
        record("C4", false, fmt("collision runs failed: %s", e.what()));
    }
}

void criterion_5_6() {
    ScenarioSpec circ = builtin_scenario("circle2d");
    circ.scheme.workers = g_workers;
    circ.eigen_check_every = 0;

    double rot_worst = 0.0;
    int rot_checks = 0;
    auto rotation_hook = [&](const Grid& g, int step, double) {
        if (step % 100 != 0)
            return;
        ++rot_checks;
        const int n = g.nx();
        double comp_scale[5] = {0, 0, 0, 0, 0};
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const auto a = g.at(i, j).as_array();
                for (int m = 0; m < 5; ++m)
                    comp_scale[m] = std::max(comp_scale[m], std::abs(a[m]));
            }
        double worst = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const Cons& a = g.at(i, j);
                const Cons& b = g.at(n - 1 - j, i); // image cell under +90 deg
                worst = std::max(worst, std::abs(b.rho - a.rho) / comp_scale[0]);
                worst = std::max(worst, std::abs(b.mx - -a.my) /
                                            std::max(comp_scale[1], comp_scale[2]));
                worst = std::max(worst, std::abs(b.my - a.mx) /
                                            std::max(comp_scale[1], comp_scale[2]));
                worst = std::max(worst, std::abs(b.qe - a.qe) / comp_scale[3]);
                if (comp_scale[4] > 0.0)
                    worst = std::max(worst, std::abs(b.qw - a.qw) / comp_scale[4]);
            }
        rot_worst = std::max(rot_worst, worst);
    };

    try {
        const auto t0 = std::chrono::steady_clock::now();
        const RunTrace r2d = simulate(circ, 0, false, rotation_hook);
        const double wall2d = wall_since(t0);

        record("C6", rot_checks > 0 && rot_worst <= 1e-12,
               fmt("90-degree rotation symmetry: worst rel asymmetry=%.2e (<=1e-12) over %d "
                   "checks",
                   rot_worst, rot_checks));

        ScenarioSpec rad = builtin_scenario("radial1d");
        rad.scheme.workers = 1;
        rad.eigen_check_every = 0;
        const RunTrace r1d = simulate(rad);

        // y = 0 cross-section (first row above the axis) vs the radial run,
        // interpolated at the true cell radii
        const Grid& g = r2d.grid;
        const int jmid = g.ny() / 2;
        const double yj = g.yc(jmid);
        double linf = 0.0;
        for (int i = 0; i < g.nx(); ++i) {
            const double x = g.xc(i);
            if (x <= 0.0)
                continue;
            const double r = std::hypot(x, yj);
            const double rmax = r1d.grid.xc(r1d.grid.nx() - 1);
            if (r >= rmax)
                continue;
            const double pos = r / r1d.grid.dx() - 0.5; // radial cell coordinate
            const int k = std::max(0, std::min(r1d.grid.nx() - 2, static_cast<int>(pos)));
            const double fr = std::min(1.0, std::max(0.0, pos - k));
            const double h1d =
                (1.0 - fr) * r1d.grid.at(k, 0).rho + fr * r1d.grid.at(k + 1, 0).rho;
            linf = std::max(linf, std::abs(g.at(i, jmid).rho - h1d));
        }
        const double tol = 0.03 * 0.8; // 3% of (h_in - h_out)
        record("C5", linf <= tol,
               fmt("polar vs 2-D section: Linf(h)=%.4f (<=%.3f), 2-D %d steps %.0fs "
                   "(%d workers), radial %d steps",
                   linf, tol, r2d.steps, wall2d, g_workers, r1d.steps));
    } catch (const std::exception& e) {
        record("C5", false, fmt("2-D/radial runs failed: %s", e.what()));
        record("C6", false, "skipped: 2-D run failed");
    }
}

void criterion_7() {
    std::mt19937_64 rng(20240915);
    std::uniform_real_distribution<double> uh(0.1, 10.0), uu(-10.0, 10.0), ufac(0.5, 2.0),
        ul(1.0, 5000.0), urho(500.0, 1000.0);
    int failures = 0;
    double worst_ev = 0.0, worst_contact = 0.0, min_gn = 1e300, min_sv = 1e300;
    auto tally = [&](const ModelClosure& c, const Prim& p) {
        try {
            const EigenReport r = eigenstructure_check(c, p, true);
            worst_ev = std::max(worst_ev, r.eigenvalue_error);
            worst_contact = std::max(worst_contact, r.contact_residual);
            min_gn = std::min(min_gn, r.genuine_nonlinearity);
            min_sv = std::min(min_sv, r.eigenvector_min_sv);
        } catch (const std::exception&) {
            ++failures;
        }
    };
    for (int k = 0; k < 1000; ++k) {
        tally(ModelClosure::sgn(9.81, ul(rng)), {uh(rng), uu(rng), uu(rng), uh(rng), uu(rng)});
        const ModelClosure ikw =
            ModelClosure::ikw(1e5, 1e-3, 1.4, 14952.188074685953, 1000.0, 0.99, ul(rng));
        const double rho = urho(rng);
        tally(ikw, {rho, uu(rng), uu(rng), ikw.Q(rho) * ufac(rng), uu(rng)});
    }
    record("C7", failures == 0,
           fmt("eigenstructure (1000 states x 2 closures): failures=%d, worst ev err=%.2e "
               "(<=1e-6), contact=%.2e (<=1e-8), min |GN|=%.2e, min sv=%.2e",
               failures, worst_ev, worst_contact, min_gn, min_sv));
}

void criterion_8() {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> uh(0.1, 10.0), ufac(0.5, 2.0), uw(-10.0, 10.0),
        ul(1.0, 5000.0), udt(0.0, 5.0), ua(0.0, 1.0);
    double worst_inv = 0.0;
    for (int k = 0; k < 1000000; ++k) {
        const double h = uh(rng), lambda = ul(rng), eta = h * ufac(rng), w = uw(rng);
        const auto [e1, w1] = ode_exact_relax(h, eta, w, lambda, udt(rng));
        const double i0 = w * w + lambda * (eta / h - 1.0) * (eta / h - 1.0);
        const double i1 = w1 * w1 + lambda * (e1 / h - 1.0) * (e1 / h - 1.0);
        worst_inv = std::max(worst_inv, std::abs(i1 - i0) / std::max(1.0, i0));
    }
    double worst_res = 0.0;
    for (int k = 0; k < 1000000; ++k) {
        const double h = uh(rng), lambda = ul(rng), eta0 = h * ufac(rng), w0 = uw(rng),
                     A = ua(rng);
        const auto [eta, w] = implicit_relax_solve(h, 0.0, eta0, w0, A, lambda);
        const double r1 = eta - (eta0 + A * w);
        const double r2 = w - (w0 - A * (lambda / h) * (eta / h - 1.0));
        const double row = std::max(1.0 + A, 1.0 + A * lambda / (h * h));
        const double scale = row * std::max({1.0, std::abs(eta), std::abs(w)});
        worst_res = std::max(worst_res, std::max(std::abs(r1), std::abs(r2)) / scale);
    }
    record("C8", worst_inv <= 1e-12 && worst_res <= 1e-12,
           fmt("relaxation solves (1e6 samples each): ODE invariant drift=%.2e (<=1e-12), "
               "implicit stage residual=%.2e (<=1e-12)",
               worst_inv, worst_res));
}

void criterion_11() {
    const ModelClosure c =
        ModelClosure::ikw(1e5, 1e-3, 1.4, 14952.188074685953, 1000.0, 0.99, 100.0);

    // (a) uniform equilibrium at the reference radius is a fixed point
    double fixed_dev = 0.0;
    try {
        ScenarioSpec eq = builtin_scenario("ikw_pulse");
        eq.recipe = "uniform";
        eq.ic = {{"rho", "950"}};
        eq.t_end = 0.05;
        eq.bc = {BcType::Periodic, BcType::Periodic, BcType::Transmissive, BcType::Transmissive};
        eq.scheme.workers = 1;
        eq.eigen_check_every = 0;
        const RunTrace tr = simulate(eq);
        const double eta_eq = c.Q(950.0);
        for (int i = 0; i < tr.grid.nx(); ++i) {
            const Prim p = cons_to_prim(tr.grid.at(i, 0));
            fixed_dev = std::max(fixed_dev, std::abs(p.rho - 950.0) / 950.0);
            fixed_dev = std::max(fixed_dev, std::abs(p.u) / 50.0);
            fixed_dev = std::max(fixed_dev, std::abs(p.eta - eta_eq) / eta_eq);
        }
    } catch (const std::exception& e) {
        record("C11", false, fmt("IKW equilibrium run failed: %s", e.what()));
        return;
    }

    // (b) small pulse speed against the linearized sound speed
    try {
        ScenarioSpec pulse = builtin_scenario("ikw_pulse");
        pulse.scheme.workers = 1;
        pulse.eigen_check_every = 0;
        const double t1 = 0.06, t2 = 0.18;
        double x1 = 0.0, x2 = 0.0;
        pulse.t_end = t1;
        const RunTrace r1 = simulate(pulse);
        x1 = crest_position(r1.grid, 6.0, 20.0);
        pulse.t_end = t2;
        const RunTrace r2 = simulate(pulse);
        x2 = crest_position(r2.grid, 6.0, 20.0);
        const double speed = (x2 - x1) / (t2 - t1);
        const double c_ref = std::sqrt(c.sound_speed_sq(950.0, c.Q(950.0)));
        const bool ok = fixed_dev <= 1e-11 && std::abs(speed - c_ref) <= 0.05 * c_ref;
        record("C11", ok,
               fmt("IKW smoke: equilibrium drift=%.2e (<=1e-11), pulse speed=%.2f m/s vs "
                   "sqrt(dp/drho)=%.2f (within 5%%)",
                   fixed_dev, speed, c_ref));
    } catch (const std::exception& e) {
        record("C11", false, fmt("IKW pulse run failed: %s", e.what()));
    }
}

} // namespace

int main(int argc, char** argv) {
    std::string only;
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--workers") == 0 && k + 1 < argc)
            g_workers = std::atoi(argv[++k]);
        else if (std::strcmp(argv[k], "--only") == 0 && k + 1 < argc)
            only = argv[++k];
    }
    auto wanted = [&](const char* id) {
        if (only.empty())
            return true;
        size_t pos = 0;
        while (pos < only.size()) {
            size_t comma = only.find(',', pos);
            if (comma == std::string::npos)
                comma = only.size();
            if (only.substr(pos, comma - pos) == id)
                return true;
            pos = comma + 1;
        }
        return false;
    };

    std::printf("acceptance suite (workers for 2-D runs: %d)\n", g_workers);
    const auto t0 = std::chrono::steady_clock::now();
    if (wanted("c7")) criterion_7();
    if (wanted("c8")) criterion_8();
    if (wanted("c2")) criterion_2();
    if (wanted("c1") || wanted("c9") || wanted("c10")) criterion_1_9_10();
    if (wanted("c11")) criterion_11();
    if (wanted("c4")) criterion_4();
    if (wanted("c3")) criterion_3();
    if (wanted("c5") || wanted("c6")) criterion_5_6();
    std::printf("acceptance total: %.0f s, %s\n", wall_since(t0),
                g_failures == 0 ? "all criteria passed" : "FAILURES PRESENT");
    return g_failures == 0 ? 0 : 1;
}
