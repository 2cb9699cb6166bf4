#ifndef DISPSIM_MODEL_HPP
#define DISPSIM_MODEL_HPP

#include "dispsim/state.hpp"

namespace dispsim {

enum class ModelKind { SGN, IKW };

enum class Axis { X, Y };

/// Closure bundle for the two dispersive models behind one interface.
///
/// Both models are first-order extensions of the form
///   rho_t + div(rho u) = 0
///   (rho u)_t + div(rho u x u + p I) = 0
///   eta advected with source w,  w advected with a stiff penalty source,
/// with pressure p(rho, eta) = rho^2 eps'(rho) - a*lambda*f(eta)*(f(eta)/rho - 1).
///
/// SGN: rho is the water depth, eps = g*rho/2, Q(rho) = rho, f identity,
///      a = beta = 1/3.
/// IKW: bubbly liquid, eps is the polytropic gas energy, Q(rho) built from the
///      bubble radius R(rho), f = Q^{-1}, a = 1, beta = 4*pi*n*rho10.
struct ModelClosure {
    ModelKind kind = ModelKind::SGN;
    double lambda = 0.0; ///< penalty stiffness (m^2/s^2), >= 0

    // SGN parameters
    double g = 9.81; ///< gravity (m/s^2)

    // IKW parameters
    double p0 = 1e5;    ///< reference gas pressure (Pa)
    double R0 = 1e-3;   ///< reference bubble radius (m)
    double gamma = 1.4; ///< polytropic exponent, > 1
    double n = 0.0;     ///< bubbles per unit mass (1/kg)
    double rho10 = 1e3; ///< carrier liquid density (kg/m^3)
    double Y1 = 0.999;  ///< liquid mass fraction, in (0,1)

    static ModelClosure sgn(double g, double lambda);
    static ModelClosure ikw(double p0, double R0, double gamma, double n,
                            double rho10, double Y1, double lambda);

    /// Penalty prefactor: 1/3 for SGN, 1 for IKW (fixed by the models).
    double a() const { return kind == ModelKind::SGN ? 1.0 / 3.0 : 1.0; }

    /// Micro-inertia coefficient; computed, never stored.
    double beta() const;

    /// Bubble radius R(rho) from the mixture density (IKW only).
    double bubble_radius(double rho) const;

    /// Equilibrium value of the relaxation variable: Q(rho).
    double Q(double rho) const;

    /// Specific internal energy eps(rho).
    double epsilon(double rho) const;

    double f(double eta) const;
    double f_prime(double eta) const;
    double f_second(double eta) const;

    double pressure(double rho, double eta) const;

    /// d p / d rho at fixed eta. Strictly positive for admissible states
    /// whenever lambda > 0 (unconditional hyperbolicity).
    double sound_speed_sq(double rho, double eta) const;

    double p_rho_rho(double rho, double eta) const;
    double p_eta(double rho, double eta) const;

    /// Energy density E = rho|u|^2/2 + beta rho w^2/2 + rho eps
    ///                  + a lambda rho (f(eta)/rho - 1)^2 / 2.
    double total_energy(const Prim& p) const;

    /// Right-hand side of the w equation:
    ///   -(a lambda f'(eta) / (beta rho)) (f(eta)/rho - 1).
    double relax_rate(double rho, double eta) const;
};

/// Physical flux along the given axis; Y is routed through the X kernel via
/// component swap so both directions share one code path bit for bit.
Cons physical_flux(const ModelClosure& c, const Cons& u, Axis axis);

/// Relaxation source S(U) = (0, 0, 0, rho*w, rho*relax_rate).
Cons relaxation_source(const ModelClosure& c, const Cons& u);

} // namespace dispsim

#endif
