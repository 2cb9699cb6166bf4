#ifndef DISPSIM_ORACLES_HPP
#define DISPSIM_ORACLES_HPP

#include <array>
#include <vector>

#include "dispsim/grid.hpp"

namespace dispsim {

/// Parameters of the exact SGN solitary wave h = h0 + a sech^2(kappa (x - D t)).
struct SolitonParams {
    double h0 = 1.0;      ///< still-water depth (m)
    double a = 0.2;       ///< crest amplitude (m)
    double g = 9.81;      ///< gravity (m/s^2)
    double x_center = 0.0;///< crest position at t = 0 (m)
    int direction = 1;    ///< +1 right-moving, -1 left-moving
};

double soliton_speed(const SolitonParams& p);  ///< D = sqrt(g (h0 + a))
double soliton_kappa(const SolitonParams& p);  ///< sqrt(3a / (4 h0^2 (h0+a)))

/// Exact solitary-wave state at (x, t) with eta = h and w = -dir D h0 h_x / h.
Prim sgn_soliton_state(const SolitonParams& p, double x, double t);

struct PlateauState {
    double h_star = 0.0;
    double u_star = 0.0;
};

/// Whitham-modulation plateau between the rarefaction and the DSW:
///   h* = (sqrt(hL) + sqrt(hR))^2 / 4,  u* = 2 (sqrt(g h*) - sqrt(g hR)).
PlateauState whitham_plateau(double h_left, double h_right, double g);

/// Second-order lead-soliton amplitude a+ = d0 - d0^2 / 12.
double lead_soliton_amplitude(double delta0);

struct Norms {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
};

/// Cell-volume-weighted discrete norms of (a - b). Throws ShapeMismatch when
/// the arrays do not match the grid's interior.
Norms error_norms(const std::vector<double>& a, const std::vector<double>& b, const Grid& g);

/// Result of the numerical eigenstructure verification of the quasi-linear
/// x-direction matrix in primitive variables (rho, u, v, eta, w).
struct EigenReport {
    std::array<double, kNumFields> eigenvalues{}; // sorted ascending
    double eigenvalue_error = 0.0;   // vs {u, u, u, u +- sqrt(p_rho)}, relative
    double eigenvector_min_sv = 0.0; // smallest singular value of eigenvector set
    double genuine_nonlinearity = 0.0; // |(1/2)(sqrt(p_rho)/rho)(2 + rho p_rr / p_r)|
    double contact_residual = 0.0;   // max |r_k . grad(mu_k)| over contact fields
    bool pass = false;
};

/// Builds the primitive-form matrix by central finite differences, checks the
/// spectrum against {u (x3), u +- sqrt(p_rho)}, eigenvector rank, genuine
/// nonlinearity of the sound fields and linear degeneracy of the contacts.
/// Throws HyperbolicityViolation when a check fails and strict is set.
EigenReport eigenstructure_check(const ModelClosure& c, const Prim& state, bool strict = true);

struct DambreakMetrics {
    double h_plateau = 0.0;
    double u_plateau = 0.0;
    double lead_amp = 0.0;
    int window_begin = 0; ///< plateau cell range [begin, end)
    int window_end = 0;
};

/// Measures the plateau (median of h, u over the longest low-gradient window)
/// and the lead-soliton amplitude max(h) - hR right of the plateau, for a
/// developed 1-D dam-break field. Throws PlateauNotFound on undeveloped data.
DambreakMetrics dambreak_metrics(const Grid& g, double h_left, double h_right, double grav);

} // namespace dispsim

#endif
