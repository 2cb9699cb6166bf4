#ifndef DISPSIM_RIEMANN_HPP
#define DISPSIM_RIEMANN_HPP

#include "dispsim/model.hpp"

namespace dispsim {

enum class RiemannSolver { Rusanov, Hllc };

/// Davis wave-speed estimates plus the HLLC contact speed.
struct WaveSpeeds {
    double s_left = 0.0;
    double s_right = 0.0;
    double s_star = 0.0;
};

/// Rusanov flux with the Davis bound
///   S+ = max(|uL - cL|, |uR - cR|, |uL + cL|, |uR + cR|).
Cons rusanov_flux(const ModelClosure& c, const Cons& uL, const Cons& uR, Axis axis);

/// Davis speeds S_L = min(uL - cL, uR - cR), S_R = max(uL + cL, uR + cR) and
/// the contact speed S*. Throws DegenerateStarState when the S* denominator
/// is below 1e-14 times the local momentum/acoustic scale.
WaveSpeeds hllc_speeds(const ModelClosure& c, const Cons& uL, const Cons& uR, Axis axis);

/// HLLC flux; v, eta, w ride passively on the contact. Falls back to the
/// Rusanov flux if the star state degenerates.
Cons hllc_flux(const ModelClosure& c, const Cons& uL, const Cons& uR, Axis axis);

inline Cons interface_flux(RiemannSolver s, const ModelClosure& c, const Cons& uL,
                           const Cons& uR, Axis axis) {
    return s == RiemannSolver::Rusanov ? rusanov_flux(c, uL, uR, axis)
                                       : hllc_flux(c, uL, uR, axis);
}

} // namespace dispsim

#endif
