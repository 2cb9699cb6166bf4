#include "dispsim/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace dispsim {

namespace {

struct FaceState {
    Prim p;
    double c;    // sound speed
    double pr;   // pressure
    Cons flux;   // physical flux along x
};

FaceState face_state(const ModelClosure& c, const Cons& u) {
    FaceState fs;
    fs.p = cons_to_prim(u);
    fs.c = std::sqrt(c.sound_speed_sq(fs.p.rho, fs.p.eta));
    fs.pr = c.pressure(fs.p.rho, fs.p.eta);
    fs.flux = {u.mx, u.mx * fs.p.u + fs.pr, u.mx * fs.p.v, u.mx * fs.p.eta, u.mx * fs.p.w};
    return fs;
}

Cons rusanov_x(const ModelClosure& c, const Cons& uL, const Cons& uR) {
    const FaceState L = face_state(c, uL);
    const FaceState R = face_state(c, uR);
    const double splus = std::max(std::max(std::abs(L.p.u - L.c), std::abs(R.p.u - R.c)),
                                  std::max(std::abs(L.p.u + L.c), std::abs(R.p.u + R.c)));
    return 0.5 * (L.flux + R.flux) - 0.5 * splus * (uR - uL);
}

WaveSpeeds hllc_speeds_x(const FaceState& L, const FaceState& R) {
    WaveSpeeds s;
    s.s_left = std::min(L.p.u - L.c, R.p.u - R.c);
    s.s_right = std::max(L.p.u + L.c, R.p.u + R.c);
    const double num = R.pr - L.pr + R.p.rho * R.p.u * (R.p.u - s.s_right) -
                       L.p.rho * L.p.u * (L.p.u - s.s_left);
    const double den = R.p.rho * (R.p.u - s.s_right) - L.p.rho * (L.p.u - s.s_left);
    const double scale = std::max(std::max(std::abs(L.p.rho * L.p.u), std::abs(R.p.rho * R.p.u)),
                                  std::max(L.p.rho * L.c, R.p.rho * R.c));
    if (std::abs(den) < 1e-14 * scale)
        throw DegenerateStarState("hllc_speeds: |denominator| below threshold");
    s.s_star = num / den;
    return s;
}

Cons star_state(const FaceState& k, double sK, double sStar) {
    const double rho_star = k.p.rho * (sK - k.p.u) / (sK - sStar);
    return {rho_star, rho_star * sStar, rho_star * k.p.v, rho_star * k.p.eta,
            rho_star * k.p.w};
}

Cons hllc_x(const ModelClosure& c, const Cons& uL, const Cons& uR) {
    const FaceState L = face_state(c, uL);
    const FaceState R = face_state(c, uR);
    WaveSpeeds s;
    try {
        s = hllc_speeds_x(L, R);
    } catch (const DegenerateStarState&) {
        return rusanov_x(c, uL, uR);
    }
    if (s.s_left >= 0.0)
        return L.flux;
    if (s.s_star >= 0.0)
        return L.flux + s.s_left * (star_state(L, s.s_left, s.s_star) - uL);
    if (s.s_right >= 0.0)
        return R.flux + s.s_right * (star_state(R, s.s_right, s.s_star) - uR);
    return R.flux;
}

} // namespace

Cons rusanov_flux(const ModelClosure& c, const Cons& uL, const Cons& uR, Axis axis) {
    if (axis == Axis::X)
        return rusanov_x(c, uL, uR);
    return swap_xy(rusanov_x(c, swap_xy(uL), swap_xy(uR)));
}

WaveSpeeds hllc_speeds(const ModelClosure& c, const Cons& uL, const Cons& uR, Axis axis) {
    const Cons l = axis == Axis::X ? uL : swap_xy(uL);
    const Cons r = axis == Axis::X ? uR : swap_xy(uR);
    return hllc_speeds_x(face_state(c, l), face_state(c, r));
}

Cons hllc_flux(const ModelClosure& c, const Cons& uL, const Cons& uR, Axis axis) {
    if (axis == Axis::X)
        return hllc_x(c, uL, uR);
    return swap_xy(hllc_x(c, swap_xy(uL), swap_xy(uR)));
}

} // namespace dispsim
