#include "dispsim/integrate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "dispsim/parallel.hpp"

namespace dispsim {

namespace {

constexpr double kArsAlpha = 0.2928932188134524756; // 1 - 1/sqrt(2)
constexpr double kArsDelta = kArsAlpha - 1.0;

struct SpeedScan {
    double sum_max = 0.0;   // max of (|u|+c)/dx + (|v|+c)/dy
    double speed_max = 0.0; // max of |u|+c, |v|+c
};

SpeedScan scan_speeds(const Grid& g, const ModelClosure& c, int workers) {
    const bool two_d = g.two_dimensional();
    const double inv_dx = 1.0 / g.dx();
    const double inv_dy = 1.0 / g.dy();
    std::vector<SpeedScan> partial(static_cast<size_t>(std::max(workers, 1)));
    std::atomic<int> slot{0};
    parallel_chunks(0, g.ny(), workers, [&](int jb, int je) {
        SpeedScan local;
        for (int j = jb; j < je; ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                const Prim p = cons_to_prim(g.at(i, j));
                const double cs = std::sqrt(c.sound_speed_sq(p.rho, p.eta));
                const double sx = std::abs(p.u) + cs;
                double sum = sx * inv_dx;
                double spd = sx;
                if (two_d) {
                    const double sy = std::abs(p.v) + cs;
                    sum = sx * inv_dx + sy * inv_dy;
                    spd = std::max(sx, sy);
                }
                if (!std::isfinite(sum))
                    sum = std::numeric_limits<double>::infinity();
                local.sum_max = std::max(local.sum_max, sum);
                local.speed_max = std::max(local.speed_max, spd);
            }
        }
        partial[static_cast<size_t>(slot.fetch_add(1))] = local;
    });
    SpeedScan out;
    for (const auto& p : partial) {
        out.sum_max = std::max(out.sum_max, p.sum_max);
        out.speed_max = std::max(out.speed_max, p.speed_max);
    }
    return out;
}

} // namespace

double cfl_dt(const Grid& g, const ModelClosure& c, double cfl) {
    if (!(cfl > 0.0))
        throw ConfigError("cfl must be positive");
    const SpeedScan s = scan_speeds(g, c, 1);
    if (!(s.sum_max > 0.0) || !std::isfinite(s.sum_max))
        throw ZeroWaveSpeed("cfl_dt: no positive finite wave speed in the field");
    return cfl / s.sum_max;
}

std::pair<double, double> ode_exact_relax(double h, double eta0, double w0,
                                          double lambda, double dt) {
    if (lambda == 0.0)
        return {eta0 + w0 * dt, w0};
    const double s = std::sqrt(lambda);
    const double theta = s * dt / h;
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    const double eta1 = h + (eta0 - h) * cs + (h * w0 / s) * sn;
    const double w1 = -s * (eta0 / h - 1.0) * sn + w0 * cs;
    return {eta1, w1};
}

std::pair<double, double> implicit_relax_solve(double h0, double /*u0*/, double eta0,
                                               double w0, double alpha_dt, double lambda) {
    const double A = alpha_dt;
    const double den = h0 * h0 + lambda * A * A;
    const double eta = (h0 * h0 * (eta0 + A * w0) + lambda * A * A * h0) / den;
    const double w = (h0 * h0 * w0 + lambda * A * (h0 - eta0)) / den;
    return {eta, w};
}

namespace {

// Solves eta = eta0 + A w0 + A^2 relax_rate(rho, eta) for the nonlinear IKW
// penalty source: bracketed Newton with a bisection safeguard, since the
// residual is non-monotone in eta for stiff A.
std::pair<double, double> implicit_relax_newton(const ModelClosure& c, double rho,
                                                double eta0, double w0, double A) {
    const double target = eta0 + A * w0;
    auto res_of = [&](double eta) { return eta - target - A * A * c.relax_rate(rho, eta); };

    const double eq = c.Q(rho);
    double hi = std::max({eq, eta0, target});
    for (int k = 0; k < 200 && !(res_of(hi) > 0.0); ++k)
        hi *= 2.0;
    double lo = std::min(eq, eta0);
    if (target > 0.0)
        lo = std::min(lo, target);
    int shrink = 0;
    for (; shrink < 200 && !(res_of(lo) < 0.0); ++shrink)
        lo *= 0.5;
    if (shrink >= 200)
        throw DomainError("implicit relaxation stage has no positive solution");

    const double albet = c.a() * c.lambda / (c.beta() * rho);
    double eta = std::clamp(target > 0.0 ? target : eq, lo, hi);
    for (int iter = 0; iter < 120; ++iter) {
        const double res = res_of(eta);
        if (std::abs(res) <= 1e-15 * std::max(std::abs(eta), std::abs(target)) + 1e-300)
            break;
        (res < 0.0 ? lo : hi) = eta;
        const double fe = c.f(eta);
        const double fp = c.f_prime(eta);
        const double rate_eta = -albet * (c.f_second(eta) * (fe / rho - 1.0) + fp * fp / rho);
        const double der = 1.0 - A * A * rate_eta;
        double next = eta - res / der;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        if (next == eta)
            break;
        eta = next;
    }
    return {eta, w0 + A * c.relax_rate(rho, eta)};
}

} // namespace

std::pair<double, double> implicit_relax_stage(const ModelClosure& c, double rho0,
                                               double eta0, double w0, double alpha_dt) {
    if (c.kind == ModelKind::SGN)
        return implicit_relax_solve(rho0, 0.0, eta0, w0, alpha_dt, c.lambda);
    if (c.lambda == 0.0)
        return {eta0 + alpha_dt * w0, w0};
    return implicit_relax_newton(c, rho0, eta0, w0, alpha_dt);
}

std::pair<Cons, Cons> muscl_reconstruct(const Cons& um, const Cons& u, const Cons& up) {
    const Cons half_slope = 0.25 * (up - um); // Delta_i / 2 with Delta_i = (up - um)/2
    return {u - half_slope, u + half_slope};
}

namespace {

// RK4 with period-resolved substeps for the nonlinear IKW relaxation ODE
// (the SGN oscillator has the exact trigonometric solution instead).
std::pair<double, double> relax_ode_rk4(const ModelClosure& c, double rho, double eta0,
                                        double w0, double dt) {
    const double omega =
        std::sqrt(c.a() * c.lambda / c.beta()) * std::abs(c.f_prime(eta0)) / rho;
    int subs = 1;
    if (omega > 0.0 && std::isfinite(omega))
        subs = std::clamp(static_cast<int>(std::ceil(dt * omega / 0.1)), 1, 200000);
    const double h = dt / subs;
    double eta = eta0, w = w0;
    for (int k = 0; k < subs; ++k) {
        const double k1e = w, k1w = c.relax_rate(rho, eta);
        const double k2e = w + 0.5 * h * k1w, k2w = c.relax_rate(rho, eta + 0.5 * h * k1e);
        const double k3e = w + 0.5 * h * k2w, k3w = c.relax_rate(rho, eta + 0.5 * h * k2e);
        const double k4e = w + h * k3w, k4w = c.relax_rate(rho, eta + h * k3e);
        eta += h / 6.0 * (k1e + 2.0 * k2e + 2.0 * k3e + k4e);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    }
    return {eta, w};
}

inline size_t cell_index(const Grid& g, int i, int j) {
    return static_cast<size_t>(j) * static_cast<size_t>(g.nx()) + static_cast<size_t>(i);
}

void sweep_x(const Grid& g, const ModelClosure& c, const SchemeConfig& s, bool muscl_faces,
             std::vector<Cons>& fx) {
    const int nxi = g.nx() + 1; // interfaces per row
    fx.resize(static_cast<size_t>(nxi) * static_cast<size_t>(g.ny()));
    parallel_chunks(0, g.ny() * nxi, s.workers, [&](int b, int e) {
        for (int k = b; k < e; ++k) {
            const int j = k / nxi;
            const int i = k % nxi; // interface i-1/2: cells i-1 | i
            Cons ul, ur;
            if (muscl_faces) {
                ul = muscl_reconstruct(g.at(i - 2, j), g.at(i - 1, j), g.at(i, j)).second;
                ur = muscl_reconstruct(g.at(i - 1, j), g.at(i, j), g.at(i + 1, j)).first;
            } else {
                ul = g.at(i - 1, j);
                ur = g.at(i, j);
            }
            fx[static_cast<size_t>(k)] = interface_flux(s.solver, c, ul, ur, Axis::X);
        }
    });
}

void sweep_y(const Grid& g, const ModelClosure& c, const SchemeConfig& s, bool muscl_faces,
             std::vector<Cons>& fy) {
    const int nyi = g.ny() + 1;
    fy.resize(static_cast<size_t>(g.nx()) * static_cast<size_t>(nyi));
    parallel_chunks(0, g.nx() * nyi, s.workers, [&](int b, int e) {
        for (int k = b; k < e; ++k) {
            const int i = k / nyi;
            const int j = k % nyi; // interface j-1/2: cells j-1 | j
            Cons ul, ur;
            if (muscl_faces) {
                ul = muscl_reconstruct(g.at(i, j - 2), g.at(i, j - 1), g.at(i, j)).second;
                ur = muscl_reconstruct(g.at(i, j - 1), g.at(i, j), g.at(i, j + 1)).first;
            } else {
                ul = g.at(i, j - 1);
                ur = g.at(i, j);
            }
            fy[static_cast<size_t>(k)] = interface_flux(s.solver, c, ul, ur, Axis::Y);
        }
    });
}

} // namespace

void hyperbolic_rhs(const Grid& g, const ModelClosure& c, const SchemeConfig& s,
                    bool muscl_faces, std::vector<Cons>& rhs, FluxBuffers& fb) {
    std::vector<Cons>& fx = fb.fx;
    std::vector<Cons>& fy = fb.fy;
    const int nx = g.nx(), ny = g.ny();
    rhs.resize(static_cast<size_t>(nx) * static_cast<size_t>(ny));
    sweep_x(g, c, s, muscl_faces, fx);
    const bool two_d = g.two_dimensional();
    if (two_d)
        sweep_y(g, c, s, muscl_faces, fy);
    const double inv_dx = 1.0 / g.dx();
    const double inv_dy = 1.0 / g.dy();
    const int nxi = nx + 1, nyi = ny + 1;
    parallel_chunks(0, ny, s.workers, [&](int jb, int je) {
        for (int j = jb; j < je; ++j) {
            for (int i = 0; i < nx; ++i) {
                const Cons dfx = inv_dx * (fx[static_cast<size_t>(j) * nxi + i + 1] -
                                           fx[static_cast<size_t>(j) * nxi + i]);
                Cons total = dfx;
                if (two_d) {
                    const Cons dfy = inv_dy * (fy[static_cast<size_t>(i) * nyi + j + 1] -
                                               fy[static_cast<size_t>(i) * nyi + j]);
                    total = dfx + dfy;
                }
                rhs[cell_index(g, i, j)] = -1.0 * total;
            }
        }
    });
}

void hyperbolic_rhs(const Grid& g, const ModelClosure& c, const SchemeConfig& s,
                    bool muscl_faces, std::vector<Cons>& rhs) {
    FluxBuffers fb;
    hyperbolic_rhs(g, c, s, muscl_faces, rhs, fb);
}

namespace {

void guard_depth(const Cons& u) {
    if (!(u.rho > kRhoFloor))
        throw NonPositiveDepth("step produced rho = " + std::to_string(u.rho));
}

StepReport make_report(const Grid& g, const ModelClosure& c, double dt, double speed_max) {
    StepReport r;
    r.dt = dt;
    r.max_wave_speed = speed_max;
    r.mass = integrate_total_mass(g);
    r.energy = integrate_total_energy(g, c);
    return r;
}

double pick_dt(const SpeedScan& scan, double cfl, double cap) {
    if (!(scan.sum_max > 0.0) || !std::isfinite(scan.sum_max))
        throw ZeroWaveSpeed("step: no positive finite wave speed in the field");
    return std::min(cfl / scan.sum_max, cap);
}

Grid& stage_buffer(Workspace& ws, const Grid& g) {
    if (ws.stage.empty() || ws.stage.front().nx() != g.nx() ||
        ws.stage.front().ny() != g.ny() || ws.stage.front().geometry() != g.geometry()) {
        ws.stage.clear();
        ws.stage.push_back(g);
    }
    return ws.stage.front();
}

} // namespace

StepReport step_splitting1(Grid& g, const ModelClosure& c, const SchemeConfig& s,
                           const BoundaryConditions& /*bc*/, double dt_cap, Workspace& ws) {
    const SpeedScan scan = scan_speeds(g, c, s.workers);
    const double dt = pick_dt(scan, s.cfl, dt_cap);
    const bool radial = g.geometry() == Geometry::Radial;

    hyperbolic_rhs(g, c, s, false, ws.rhs_n, ws.flux);

    parallel_chunks(0, g.ny(), s.workers, [&](int jb, int je) {
        for (int j = jb; j < je; ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                Cons& u = g.at(i, j);
                const Cons u1 = u + dt * ws.rhs_n[cell_index(g, i, j)];
                guard_depth(u1);
                // Relaxation ODE runs from U^n, not from the hyperbolic update.
                const Prim p = cons_to_prim(u);
                const auto [eta2, w2] = c.kind == ModelKind::SGN
                                            ? ode_exact_relax(p.rho, p.eta, p.w, c.lambda, dt)
                                            : relax_ode_rk4(c, p.rho, p.eta, p.w, dt);
                const Cons u2 = {p.rho, u.mx, u.my, p.rho * eta2, p.rho * w2};
                Cons src = relaxation_source(c, u2);
                if (radial)
                    src += polar_geometric_source(c, u2, g.radius(i));
                Cons un1 = u1 + dt * src;
                guard_depth(un1);
                u = un1;
            }
        }
    });
    return make_report(g, c, dt, scan.speed_max);
}

StepReport step_imex_ars222(Grid& g, const ModelClosure& c, const SchemeConfig& s,
                            const BoundaryConditions& bc, double dt_cap, Workspace& ws) {
    const SpeedScan scan = scan_speeds(g, c, s.workers);
    const double dt = pick_dt(scan, s.cfl, dt_cap);
    const double A = kArsAlpha * dt;
    const bool radial = g.geometry() == Geometry::Radial;
    Grid& stage = stage_buffer(ws, g);

    hyperbolic_rhs(g, c, s, s.muscl, ws.rhs_n, ws.flux);

    // Stage 1: U{1} = U^n + alpha dt (G(U^n) + S(U{1})), geometric part explicit.
    parallel_chunks(0, g.ny(), s.workers, [&](int jb, int je) {
        for (int j = jb; j < je; ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                Cons rhs = ws.rhs_n[cell_index(g, i, j)];
                if (radial)
                    rhs += polar_geometric_source(c, g.at(i, j), g.radius(i));
                ws.rhs_n[cell_index(g, i, j)] = rhs; // keep combined G(U^n) for stage 2
                Cons u0 = g.at(i, j) + A * rhs;
                guard_depth(u0);
                const Prim p0 = cons_to_prim(u0);
                const auto [eta, w] = implicit_relax_stage(c, p0.rho, p0.eta, p0.w, A);
                stage.at(i, j) = {p0.rho, u0.mx, u0.my, p0.rho * eta, p0.rho * w};
            }
        }
    });

    apply_boundary_conditions(stage, bc);
    hyperbolic_rhs(stage, c, s, s.muscl, ws.rhs_1, ws.flux);

    // Stage 2: explicit tableau (delta, 1-delta) on G, (alpha, 1-alpha) on S.
    parallel_chunks(0, g.ny(), s.workers, [&](int jb, int je) {
        for (int j = jb; j < je; ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                const size_t k = cell_index(g, i, j);
                Cons g1 = ws.rhs_1[k];
                if (radial)
                    g1 += polar_geometric_source(c, stage.at(i, j), g.radius(i));
                const Cons src1 = relaxation_source(c, stage.at(i, j));
                Cons u0 = g.at(i, j) + dt * (kArsDelta * ws.rhs_n[k] + (1.0 - kArsDelta) * g1) +
                          ((1.0 - kArsAlpha) * dt) * src1;
                guard_depth(u0);
                const Prim p0 = cons_to_prim(u0);
                const auto [eta, w] = implicit_relax_stage(c, p0.rho, p0.eta, p0.w, A);
                g.at(i, j) = {p0.rho, u0.mx, u0.my, p0.rho * eta, p0.rho * w};
            }
        }
    });
    return make_report(g, c, dt, scan.speed_max);
}

StepReport advance_step(Grid& g, const ModelClosure& c, const SchemeConfig& s,
                        const BoundaryConditions& bc, double dt_cap, Workspace& ws) {
    return s.integrator == Integrator::Splitting1
               ? step_splitting1(g, c, s, bc, dt_cap, ws)
               : step_imex_ars222(g, c, s, bc, dt_cap, ws);
}

} // namespace dispsim
