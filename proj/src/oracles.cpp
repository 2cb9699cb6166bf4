#include "dispsim/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace dispsim {

double soliton_speed(const SolitonParams& p) { return std::sqrt(p.g * (p.h0 + p.a)); }

double soliton_kappa(const SolitonParams& p) {
    return std::sqrt(3.0 * p.a / (4.0 * p.h0 * p.h0 * (p.h0 + p.a)));
}

Prim sgn_soliton_state(const SolitonParams& p, double x, double t) {
    const double D = soliton_speed(p);
    const double kappa = soliton_kappa(p);
    const double xi = x - p.x_center - p.direction * D * t;
    const double sech = 1.0 / std::cosh(kappa * xi);
    const double h = p.h0 + p.a * sech * sech;
    const double u = p.direction * D * (1.0 - p.h0 / h);
    const double h_x = -2.0 * p.a * kappa * sech * sech * std::tanh(kappa * xi);
    const double w = -p.direction * D * p.h0 * h_x / h;
    return {h, u, 0.0, h, w};
}

PlateauState whitham_plateau(double h_left, double h_right, double g) {
    const double s = std::sqrt(h_left) + std::sqrt(h_right);
    PlateauState out;
    out.h_star = s * s / 4.0;
    out.u_star = 2.0 * (std::sqrt(g * out.h_star) - std::sqrt(g * h_right));
    return out;
}

double lead_soliton_amplitude(double delta0) { return delta0 - delta0 * delta0 / 12.0; }

Norms error_norms(const std::vector<double>& a, const std::vector<double>& b, const Grid& g) {
    const size_t count = static_cast<size_t>(g.nx()) * static_cast<size_t>(g.ny());
    if (a.size() != count || b.size() != count)
        throw ShapeMismatch("error_norms: field sizes do not match the grid interior");
    Norms n;
    double l2sq = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const size_t k = static_cast<size_t>(j) * g.nx() + i;
            const double d = a[k] - b[k];
            const double vol = g.cell_volume(i);
            n.l1 += std::abs(d) * vol;
            l2sq += d * d * vol;
            n.linf = std::max(n.linf, std::abs(d));
        }
    }
    n.l2 = std::sqrt(l2sq);
    return n;
}

namespace {

using Mat5 = Eigen::Matrix<double, 5, 5>;
using Vec5 = Eigen::Matrix<double, 5, 1>;

Vec5 to_vec(const Prim& p) {
    Vec5 v;
    v << p.rho, p.u, p.v, p.eta, p.w;
    return v;
}

Prim from_vec(const Vec5& v) { return {v[0], v[1], v[2], v[3], v[4]}; }

Vec5 cons_of(const Prim& p) {
    const Cons u = prim_to_cons(p);
    Vec5 v;
    v << u.rho, u.mx, u.my, u.qe, u.qw;
    return v;
}

Vec5 flux_of(const ModelClosure& c, const Prim& p) {
    const Cons f = physical_flux(c, prim_to_cons(p), Axis::X);
    Vec5 v;
    v << f.rho, f.mx, f.my, f.qe, f.qw;
    return v;
}

/// Quasi-linear matrix of the primitive-form system, by central differences:
/// A = (dU/dV)^{-1} (dF/dV). Velocities use step 1e-6 * max(1, |component|);
/// rho and eta use a purely relative step, since eta can sit many orders of
/// magnitude below 1 (IKW) and both must stay strictly positive.
Mat5 primitive_matrix_fd(const ModelClosure& c, const Prim& state) {
    const Vec5 v0 = to_vec(state);
    Mat5 m, jf;
    for (int k = 0; k < 5; ++k) {
        const bool positive_domain = k == 0 || k == 3; // rho, eta
        const double eps = positive_domain ? 1e-6 * std::abs(v0[k])
                                           : 1e-6 * std::max(1.0, std::abs(v0[k]));
        Vec5 vp = v0, vm = v0;
        vp[k] += eps;
        vm[k] -= eps;
        m.col(k) = (cons_of(from_vec(vp)) - cons_of(from_vec(vm))) / (2.0 * eps);
        jf.col(k) = (flux_of(c, from_vec(vp)) - flux_of(c, from_vec(vm))) / (2.0 * eps);
    }
    return m.partialPivLu().solve(jf);
}

} // namespace

EigenReport eigenstructure_check(const ModelClosure& c, const Prim& state, bool strict) {
    EigenReport rep;
    const double p_r = c.sound_speed_sq(state.rho, state.eta);
    if (!(p_r > 0.0))
        throw HyperbolicityViolation("eigenstructure_check: p_rho <= 0");
    const double cs = std::sqrt(p_r);
    const double scale = std::max(1.0, std::abs(state.u) + cs);

    const Mat5 a = primitive_matrix_fd(c, state);

    // Balance with the natural component scales before the eigen solve; the
    // raw SI-unit matrix mixes O(1e-8) eta entries with O(1e11) pressure
    // derivatives for IKW, which would make the (exactly spanning)
    // eigenvector basis look rank-deficient in floating point. A similarity
    // transform leaves the spectrum untouched.
    // w is exactly decoupled in the flux Jacobian, so its scale only controls
    // how finite-difference noise is amplified; rho keeps the ratios tame.
    Vec5 d;
    d << state.rho, cs, cs, std::abs(state.eta), state.rho;
    const Mat5 balanced = d.cwiseInverse().asDiagonal() * a * d.asDiagonal();
    const Eigen::EigenSolver<Mat5> solver(balanced);

    // (i) spectrum matches {u, u, u, u +- sqrt(p_rho)} and is real
    std::array<double, 5> got{}, ref{state.u - cs, state.u, state.u, state.u, state.u + cs};
    double imag_max = 0.0;
    for (int k = 0; k < 5; ++k) {
        got[static_cast<size_t>(k)] = solver.eigenvalues()[k].real();
        imag_max = std::max(imag_max, std::abs(solver.eigenvalues()[k].imag()));
    }
    std::sort(got.begin(), got.end());
    std::sort(ref.begin(), ref.end());
    double ev_err = imag_max / scale;
    for (size_t k = 0; k < 5; ++k)
        ev_err = std::max(ev_err, std::abs(got[k] - ref[k]) / scale);
    rep.eigenvalues = got;
    rep.eigenvalue_error = ev_err;

    // (ii) eigenvector set spans R^5. The contact eigenvalue is triple, so
    // its eigenvectors come from the null space of (B - u I); the two simple
    // sound fields come from their own shifted null spaces.
    Eigen::Matrix<double, 5, 5> basis;
    int basis_cols = 0;
    bool multiplicities_ok = true;
    const Mat5 ident = Mat5::Identity();
    auto null_vectors = [&](double mu, int expected) {
        Eigen::JacobiSVD<Mat5> svd(balanced - mu * ident, Eigen::ComputeFullV);
        int small = 0;
        for (int k = 0; k < 5; ++k)
            if (svd.singularValues()[k] <= 1e-6 * scale)
                ++small;
        if (small != expected)
            multiplicities_ok = false;
        for (int k = 0; k < std::min(expected, small); ++k)
            basis.col(basis_cols++) = svd.matrixV().col(4 - k);
    };
    null_vectors(state.u, 3);
    null_vectors(state.u - cs, 1);
    null_vectors(state.u + cs, 1);
    if (basis_cols == 5 && multiplicities_ok) {
        Eigen::JacobiSVD<Eigen::Matrix<double, 5, 5>> svd(basis);
        rep.eigenvector_min_sv = svd.singularValues().minCoeff();
    } else {
        rep.eigenvector_min_sv = 0.0;
    }

    // (iii) genuine nonlinearity of the sound fields
    const double p_rr = c.p_rho_rho(state.rho, state.eta);
    rep.genuine_nonlinearity =
        std::abs(0.5 * (cs / state.rho) * (2.0 + state.rho * p_rr / p_r));

    // (iv) contact degeneracy: analytic contact eigenvectors against
    // grad(mu) = (0,1,0,0,0), plus the u-component of the numerical
    // eigenvectors attached to mu ~ u.
    const double p_e = c.p_eta(state.rho, state.eta);
    const double contacts[3][5] = {
        {0, 0, 1, 0, 0}, {-p_e / d[0], 0, 0, p_r / d[3], 0}, {0, 0, 0, 0, 1}};
    double contact = 0.0;
    for (const auto& r : contacts) {
        double norm = 0.0;
        for (double x : r)
            norm += x * x;
        contact = std::max(contact, std::abs(r[1]) / std::sqrt(norm));
    }
    for (int k = 0; k < 3 && k < basis_cols; ++k)
        contact = std::max(contact, std::abs(basis.col(k)[1]));
    rep.contact_residual = contact;

    rep.pass = rep.eigenvalue_error <= 1e-6 && rep.eigenvector_min_sv > 1e-6 &&
               rep.genuine_nonlinearity > 1e-10 && rep.contact_residual <= 1e-8;
    if (strict && !rep.pass)
        throw HyperbolicityViolation("eigenstructure_check failed (eigenvalue err " +
                                     std::to_string(rep.eigenvalue_error) + ", min sv " +
                                     std::to_string(rep.eigenvector_min_sv) + ")");
    return rep;
}

namespace {

double median_of(std::vector<double> vals) {
    std::sort(vals.begin(), vals.end());
    const size_t m = vals.size() / 2;
    return vals.size() % 2 ? vals[m] : 0.5 * (vals[m - 1] + vals[m]);
}

// edge-renormalized moving average over 2*half+1 cells
std::vector<double> smooth_field(const std::vector<double>& v, int half) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out(v.size());
    for (int i = 0; i < n; ++i) {
        const int b = std::max(0, i - half), e = std::min(n - 1, i + half);
        double s = 0.0;
        for (int k = b; k <= e; ++k)
            s += v[static_cast<size_t>(k)];
        out[static_cast<size_t>(i)] = s / (e - b + 1);
    }
    return out;
}

} // namespace

DambreakMetrics dambreak_metrics(const Grid& g, double h_left, double h_right, double grav) {
    (void)grav;
    if (g.two_dimensional() || g.nx() < 16)
        throw ShapeMismatch("dambreak_metrics expects a 1-D grid");
    const int nx = g.nx();
    const double dx = g.dx();
    std::vector<double> h(static_cast<size_t>(nx)), u(static_cast<size_t>(nx));
    for (int i = 0; i < nx; ++i) {
        const Prim p = cons_to_prim(g.at(i, 0));
        h[static_cast<size_t>(i)] = p.rho;
        u[static_cast<size_t>(i)] = p.u;
    }

    // orient so the deep state sits on the left; u flips with the mirror
    const int edge = std::max(1, nx / 20);
    double left_mean = 0.0, right_mean = 0.0;
    for (int i = 0; i < edge; ++i) {
        left_mean += h[static_cast<size_t>(i)] / edge;
        right_mean += h[static_cast<size_t>(nx - 1 - i)] / edge;
    }
    const bool mirrored = left_mean < right_mean;
    if (mirrored) {
        std::reverse(h.begin(), h.end());
        std::reverse(u.begin(), u.end());
        for (auto& v : u)
            v = -v;
    }

    const double jump = h_left - h_right;
    const double grad_threshold = 1e-3 * jump / dx;

    // smooth over a few downstream depths so DSW oscillations do not read as
    // gradients while the rarefaction still does
    const int half = std::max(1, static_cast<int>(std::lround(2.0 * h_right / dx)));
    const std::vector<double> hs = smooth_field(h, half);

    // rarefaction tail: descend below h_L - 0.3*jump, then the first window
    // of sustained non-decrease marks the end of the rarefaction
    int descent = -1;
    for (int i = 0; i < nx; ++i)
        if (hs[static_cast<size_t>(i)] < h_left - 0.1 * jump) {
            descent = i;
            break;
        }
    if (descent < 0)
        throw PlateauNotFound("dambreak_metrics: no descent from the deep state");
    int tail = -1;
    for (int i = descent; i < nx; ++i)
        if (hs[static_cast<size_t>(i)] < h_left - 0.3 * jump) {
            tail = i;
            break;
        }
    if (tail < 0)
        throw PlateauNotFound("dambreak_metrics: rarefaction has not developed");
    const int K = 2 * half + 1;
    for (int i = tail; i + K < nx; ++i) {
        bool nondecreasing = true;
        for (int k = 0; k < K - 1 && nondecreasing; ++k)
            nondecreasing = hs[static_cast<size_t>(i + k + 1)] >=
                            hs[static_cast<size_t>(i + k)] - 1e-3 * grad_threshold * dx;
        if (nondecreasing) {
            tail = i;
            break;
        }
    }

    // longest low-gradient window right of the rarefaction tail whose median
    // sits strictly between the initial states
    int best_b = -1, best_e = -1, run_b = -1;
    auto consider = [&](int b, int e) {
        if (b < 0 || e - b <= std::max(4, nx / 100))
            return;
        const double med = median_of({h.begin() + b, h.begin() + e});
        if (med < h_right + 0.1 * jump || med > h_left - 0.1 * jump)
            return;
        if (e - b > best_e - best_b) {
            best_b = b;
            best_e = e;
        }
    };
    for (int i = std::max(tail, 1); i + 1 < nx; ++i) {
        const double grad =
            std::abs(hs[static_cast<size_t>(i + 1)] - hs[static_cast<size_t>(i - 1)]) / (2.0 * dx);
        if (grad < grad_threshold) {
            if (run_b < 0)
                run_b = i;
        } else if (run_b >= 0) {
            consider(run_b, i);
            run_b = -1;
        }
    }
    if (run_b >= 0)
        consider(run_b, nx - 1);
    if (best_b < 0)
        throw PlateauNotFound("dambreak_metrics: no qualifying plateau window");

    DambreakMetrics m;
    m.window_begin = mirrored ? nx - best_e : best_b;
    m.window_end = mirrored ? nx - best_b : best_e;
    m.h_plateau = median_of({h.begin() + best_b, h.begin() + best_e});
    const double u_oriented = median_of({u.begin() + best_b, u.begin() + best_e});
    m.u_plateau = mirrored ? -u_oriented : u_oriented;

    // lead soliton: highest crest downstream of the window
    double h_max = h_right;
    for (int i = best_e; i < nx; ++i)
        h_max = std::max(h_max, h[static_cast<size_t>(i)]);
    m.lead_amp = h_max - h_right;
    return m;
}

} // namespace dispsim
