#ifndef DISPSIM_STATE_HPP
#define DISPSIM_STATE_HPP

#include <array>
#include <cmath>

#include "dispsim/errors.hpp"

namespace dispsim {

/// States below this density are treated as inadmissible rather than clipped.
inline constexpr double kRhoFloor = 1e-12;

inline constexpr int kNumFields = 5;

/// Primitive state (rho, u, v, eta, w). For the SGN closure rho is the water
/// depth h; v is identically zero in 1-D runs.
struct Prim {
    double rho = 0.0;
    double u = 0.0;
    double v = 0.0;
    double eta = 0.0;
    double w = 0.0;
};

/// Conserved state U = (rho, rho*u, rho*v, rho*eta, rho*w).
struct Cons {
    double rho = 0.0;
    double mx = 0.0;
    double my = 0.0;
    double qe = 0.0;
    double qw = 0.0;

    std::array<double, kNumFields> as_array() const { return {rho, mx, my, qe, qw}; }

    Cons& operator+=(const Cons& o) {
        rho += o.rho; mx += o.mx; my += o.my; qe += o.qe; qw += o.qw;
        return *this;
    }
    Cons& operator-=(const Cons& o) {
        rho -= o.rho; mx -= o.mx; my -= o.my; qe -= o.qe; qw -= o.qw;
        return *this;
    }
    Cons& operator*=(double s) {
        rho *= s; mx *= s; my *= s; qe *= s; qw *= s;
        return *this;
    }
};

inline Cons operator+(Cons a, const Cons& b) { a += b; return a; }
inline Cons operator-(Cons a, const Cons& b) { a -= b; return a; }
inline Cons operator*(double s, Cons a) { a *= s; return a; }
inline Cons operator*(Cons a, double s) { a *= s; return a; }

/// Exchanges the roles of the x and y momenta. Used to route Y-axis fluxes
/// through the X-axis kernels so that both directions share one code path.
inline Cons swap_xy(const Cons& u) { return {u.rho, u.my, u.mx, u.qe, u.qw}; }

inline Cons prim_to_cons(const Prim& p) {
    return {p.rho, p.rho * p.u, p.rho * p.v, p.rho * p.eta, p.rho * p.w};
}

/// Throws NonPositiveDepth for rho <= kRhoFloor (the check also rejects NaN).
inline Prim cons_to_prim(const Cons& u) {
    if (!(u.rho > kRhoFloor))
        throw NonPositiveDepth("cons_to_prim: rho = " + std::to_string(u.rho));
    const double inv = 1.0 / u.rho;
    return {u.rho, u.mx * inv, u.my * inv, u.qe * inv, u.qw * inv};
}

} // namespace dispsim

#endif
