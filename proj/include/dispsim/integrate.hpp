#ifndef DISPSIM_INTEGRATE_HPP
#define DISPSIM_INTEGRATE_HPP

#include <utility>
#include <vector>

#include "dispsim/grid.hpp"
#include "dispsim/riemann.hpp"

namespace dispsim {

enum class Integrator { Splitting1, ImexArs222 };

struct SchemeConfig {
    Integrator integrator = Integrator::ImexArs222;
    RiemannSolver solver = RiemannSolver::Hllc;
    double cfl = 0.5;
    bool muscl = true; ///< central unlimited face reconstruction (IMEX path)
    int workers = 1;
    bool allow_cfl_above_one = false;
};

struct StepReport {
    double dt = 0.0;
    double max_wave_speed = 0.0; ///< max over cells of |u|+c (and |v|+c in 2-D)
    double mass = 0.0;           ///< post-step integrated mass
    double energy = 0.0;         ///< post-step integrated energy
};

/// dt = cfl / max_ij((|u|+c)/dx + (|v|+c)/dy); the y term drops in 1-D.
/// Throws ZeroWaveSpeed when the reduction is not a positive finite number.
double cfl_dt(const Grid& g, const ModelClosure& c, double cfl);

/// Exact solution of the frozen-depth SGN relaxation oscillator
///   eta' = w,  w' = -(lambda/h)(eta/h - 1)
/// over dt. Returns (eta1, w1). lambda = 0 degenerates to linear drift.
std::pair<double, double> ode_exact_relax(double h, double eta0, double w0,
                                          double lambda, double dt);

/// Closed-form solution of the SGN implicit stage
///   eta = eta0 + A w,  w = w0 - A (lambda/h)(eta/h - 1),  A = alpha*dt.
std::pair<double, double> implicit_relax_solve(double h0, double u0, double eta0,
                                               double w0, double alpha_dt, double lambda);

/// Implicit stage for either closure: the SGN closed form, or a Newton solve
/// of the scalar eta equation for IKW (residual driven to ~1e-13 relative).
std::pair<double, double> implicit_relax_stage(const ModelClosure& c, double rho0,
                                               double eta0, double w0, double alpha_dt);

/// Unlimited central slopes on conserved variables:
///   left  = U_i - (U_{i+1} - U_{i-1})/4,  right = U_i + (U_{i+1} - U_{i-1})/4.
std::pair<Cons, Cons> muscl_reconstruct(const Cons& um, const Cons& u, const Cons& up);

/// Interface-flux scratch arrays reused between sweeps.
struct FluxBuffers {
    std::vector<Cons> fx, fy;
};

/// Negated flux divergence -[(F_{i+1/2}-F_{i-1/2})/dx + (G_{j+1/2}-G_{j-1/2})/dy]
/// over interior cells (row-major). Requires ghost cells to be current.
void hyperbolic_rhs(const Grid& g, const ModelClosure& c, const SchemeConfig& s,
                    bool muscl_faces, std::vector<Cons>& rhs, FluxBuffers& fb);
void hyperbolic_rhs(const Grid& g, const ModelClosure& c, const SchemeConfig& s,
                    bool muscl_faces, std::vector<Cons>& rhs);

/// Reusable step scratch (stage field and rhs buffers).
struct Workspace {
    std::vector<Cons> rhs_n, rhs_1;
    FluxBuffers flux;
    std::vector<Grid> stage; ///< lazily sized to match the target grid
};

/// One step of the first-order Godunov splitting: hyperbolic update from U^n,
/// exact relaxation ODE from U^n, then an Euler source update. dt is
/// min(cfl_dt, dt_cap). Ghost cells must be consistent on entry.
StepReport step_splitting1(Grid& g, const ModelClosure& c, const SchemeConfig& s,
                           const BoundaryConditions& bc, double dt_cap, Workspace& ws);

/// One ARS(2,2,2) IMEX step with MUSCL faces and closed-form implicit
/// relaxation solves (alpha = 1 - 1/sqrt(2), delta = alpha - 1).
StepReport step_imex_ars222(Grid& g, const ModelClosure& c, const SchemeConfig& s,
                            const BoundaryConditions& bc, double dt_cap, Workspace& ws);

StepReport advance_step(Grid& g, const ModelClosure& c, const SchemeConfig& s,
                        const BoundaryConditions& bc, double dt_cap, Workspace& ws);

} // namespace dispsim

#endif
