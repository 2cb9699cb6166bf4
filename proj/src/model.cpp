#include "dispsim/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dispsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

ModelClosure ModelClosure::sgn(double g, double lambda) {
    if (!(g > 0.0))
        throw ConfigError("SGN closure requires g > 0");
    if (!(lambda >= 0.0))
        throw ConfigError("closure requires lambda >= 0");
    ModelClosure c;
    c.kind = ModelKind::SGN;
    c.g = g;
    c.lambda = lambda;
    return c;
}

ModelClosure ModelClosure::ikw(double p0, double R0, double gamma, double n,
                               double rho10, double Y1, double lambda) {
    if (!(gamma > 1.0 && p0 > 0.0 && R0 > 0.0 && n > 0.0 && rho10 > 0.0))
        throw ConfigError("IKW closure requires gamma > 1, p0 > 0, R0 > 0, n > 0, rho10 > 0");
    if (!(Y1 > 0.0 && Y1 < 1.0))
        throw ConfigError("IKW closure requires 0 < Y1 < 1");
    if (!(lambda >= 0.0))
        throw ConfigError("closure requires lambda >= 0");
    ModelClosure c;
    c.kind = ModelKind::IKW;
    c.p0 = p0;
    c.R0 = R0;
    c.gamma = gamma;
    c.n = n;
    c.rho10 = rho10;
    c.Y1 = Y1;
    c.lambda = lambda;
    return c;
}

double ModelClosure::beta() const {
    return kind == ModelKind::SGN ? 1.0 / 3.0 : 4.0 * kPi * n * rho10;
}

double ModelClosure::bubble_radius(double rho) const {
    const double gas_vol = 1.0 / rho - Y1 / rho10; // specific gas volume * n
    if (!(gas_vol > 0.0))
        throw NonPositiveBubbleVolume("bubble_radius: 1/rho <= Y1/rho10 at rho = " +
                                      std::to_string(rho));
    return std::cbrt(3.0 / (4.0 * kPi * n) * gas_vol);
}

double ModelClosure::Q(double rho) const {
    if (kind == ModelKind::SGN)
        return rho;
    const double R = bubble_radius(rho);
    return 0.4 * R * R * std::sqrt(R); // (2/5) R^{5/2}
}

double ModelClosure::epsilon(double rho) const {
    if (kind == ModelKind::SGN)
        return 0.5 * g * rho;
    const double R = bubble_radius(rho);
    const double gas_vol = 1.0 / rho - Y1 / rho10;
    return gas_vol * p0 * std::pow(R0 / R, 3.0 * gamma) / (gamma - 1.0);
}

double ModelClosure::f(double eta) const {
    if (kind == ModelKind::SGN)
        return eta;
    if (!(eta > 0.0))
        throw DomainError("IKW f(eta) requires eta > 0, got " + std::to_string(eta));
    const double s = std::pow(2.5 * eta, 1.2); // (5 eta / 2)^{6/5}
    return 1.0 / (Y1 / rho10 + (4.0 * kPi * n / 3.0) * s);
}

double ModelClosure::f_prime(double eta) const {
    if (kind == ModelKind::SGN)
        return 1.0;
    const double fe = f(eta);
    return -4.0 * kPi * n * fe * fe * std::pow(2.5 * eta, 0.2);
}

double ModelClosure::f_second(double eta) const {
    if (kind == ModelKind::SGN)
        return 0.0;
    const double fe = f(eta);
    const double fp = f_prime(eta);
    const double s1 = std::pow(2.5 * eta, 0.2);
    return -4.0 * kPi * n * (2.0 * fe * fp * s1 + 0.5 * fe * fe / std::pow(2.5 * eta, 0.8));
}

double ModelClosure::pressure(double rho, double eta) const {
    if (!(rho > kRhoFloor))
        throw NonPositiveDepth("pressure: rho = " + std::to_string(rho));
    if (kind == ModelKind::SGN)
        return 0.5 * g * rho * rho - (lambda * eta / 3.0) * (eta / rho - 1.0);
    const double R = bubble_radius(rho);
    const double fe = f(eta);
    return p0 * std::pow(R0 / R, 3.0 * gamma) - lambda * fe * (fe / rho - 1.0);
}

double ModelClosure::sound_speed_sq(double rho, double eta) const {
    if (!(rho > kRhoFloor))
        throw NonPositiveDepth("sound_speed_sq: rho = " + std::to_string(rho));
    if (kind == ModelKind::SGN)
        return g * rho + (lambda / 3.0) * (eta * eta) / (rho * rho);
    const double R = bubble_radius(rho);
    const double p2 = p0 * std::pow(R0 / R, 3.0 * gamma);
    const double fe = f(eta);
    return 3.0 * gamma * p2 / (4.0 * kPi * n * rho * rho * R * R * R) +
           lambda * fe * fe / (rho * rho);
}

double ModelClosure::p_rho_rho(double rho, double eta) const {
    if (kind == ModelKind::SGN)
        return g - (2.0 * lambda / 3.0) * (eta * eta) / (rho * rho * rho);
    const double R = bubble_radius(rho);
    const double R3 = R * R * R;
    const double p2 = p0 * std::pow(R0 / R, 3.0 * gamma);
    const double fourPiN = 4.0 * kPi * n;
    const double gas_dd = (3.0 * gamma * p2 / fourPiN) *
                          (3.0 * (gamma + 1.0) / (fourPiN * R3 * R3 * std::pow(rho, 4)) -
                           2.0 / (R3 * rho * rho * rho));
    const double fe = f(eta);
    return gas_dd - 2.0 * lambda * fe * fe / (rho * rho * rho);
}

double ModelClosure::p_eta(double rho, double eta) const {
    return -a() * lambda * f_prime(eta) * (2.0 * f(eta) / rho - 1.0);
}

double ModelClosure::total_energy(const Prim& p) const {
    const double kinetic = 0.5 * p.rho * (p.u * p.u + p.v * p.v);
    const double micro = 0.5 * beta() * p.rho * p.w * p.w;
    const double dev = f(p.eta) / p.rho - 1.0;
    const double penalty = 0.5 * a() * lambda * p.rho * dev * dev;
    return kinetic + micro + p.rho * epsilon(p.rho) + penalty;
}

double ModelClosure::relax_rate(double rho, double eta) const {
    if (kind == ModelKind::SGN) // a = beta = 1/3, f' = 1
        return -(lambda / rho) * (eta / rho - 1.0);
    return -(lambda * f_prime(eta) / (beta() * rho)) * (f(eta) / rho - 1.0); // a = 1
}

namespace {

Cons flux_x(const ModelClosure& c, const Cons& u) {
    const Prim p = cons_to_prim(u);
    const double pr = c.pressure(p.rho, p.eta);
    return {u.mx, u.mx * p.u + pr, u.mx * p.v, u.mx * p.eta, u.mx * p.w};
}

} // namespace

Cons physical_flux(const ModelClosure& c, const Cons& u, Axis axis) {
    if (axis == Axis::X)
        return flux_x(c, u);
    return swap_xy(flux_x(c, swap_xy(u)));
}

Cons relaxation_source(const ModelClosure& c, const Cons& u) {
    const Prim p = cons_to_prim(u);
    if (c.kind == ModelKind::SGN)
        return {0.0, 0.0, 0.0, u.qw, -c.lambda * (p.eta / p.rho - 1.0)};
    return {0.0, 0.0, 0.0, u.qw, p.rho * c.relax_rate(p.rho, p.eta)};
}

} // namespace dispsim
