#include <doctest.h>

#include <cmath>
#include <random>

#include "dispsim/oracles.hpp"

using namespace dispsim;

TEST_CASE("sgn solitary wave") {
    const SolitonParams p{1.0, 0.2, 9.81, 50.0, 1};

    SUBCASE("speed and period constants") {
        CHECK(soliton_speed(p) == doctest::Approx(3.431034829318991).epsilon(1e-14));
        CHECK(100.0 / soliton_speed(p) == doctest::Approx(29.14573).epsilon(1e-6));
        CHECK(soliton_kappa(p) == doctest::Approx(0.3535533905932738).epsilon(1e-14));
    }
    SUBCASE("crest values") {
        const Prim s = sgn_soliton_state(p, 50.0, 0.0);
        CHECK(s.rho == doctest::Approx(1.2).epsilon(1e-14));
        CHECK(s.u == doctest::Approx(soliton_speed(p) * 0.2 / 1.2).epsilon(1e-14));
        CHECK(s.eta == s.rho);
        CHECK(std::abs(s.w) <= 1e-13);
    }
    SUBCASE("far field decays to still water") {
        const Prim s = sgn_soliton_state(p, 50.0 + 80.0, 0.0);
        CHECK(s.rho == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(s.u) <= 1e-12);
        CHECK(std::abs(s.w) <= 1e-12);
    }
    SUBCASE("w equals -D h0 h_x / h with a finite-difference h_x") {
        for (double x : {48.0, 49.5, 50.5, 53.0}) {
            const double eps = 1e-6;
            const double hp = sgn_soliton_state(p, x + eps, 0.0).rho;
            const double hm = sgn_soliton_state(p, x - eps, 0.0).rho;
            const Prim s = sgn_soliton_state(p, x, 0.0);
            const double w_fd = -soliton_speed(p) * p.h0 * (hp - hm) / (2.0 * eps) / s.rho;
            CHECK(s.w == doctest::Approx(w_fd).epsilon(1e-8));
        }
    }
    SUBCASE("direction mirrors the state") {
        SolitonParams q = p;
        q.direction = -1;
        const Prim a = sgn_soliton_state(p, 51.0, 0.0);
        const Prim b = sgn_soliton_state(q, 49.0, 0.0);
        CHECK(b.rho == doctest::Approx(a.rho).epsilon(1e-14));
        CHECK(b.u == doctest::Approx(-a.u).epsilon(1e-14));
        // w is a scalar rate: the direction flip and the mirrored slope cancel
        CHECK(b.w == doctest::Approx(a.w).epsilon(1e-12));
    }
    SUBCASE("profile translates at speed D") {
        const Prim a = sgn_soliton_state(p, 50.0 + 3.0, 2.0 / soliton_speed(p) * 3.0);
        // crest sits at x_center + D t
        const Prim crest = sgn_soliton_state(p, 50.0, 0.0);
        const double t = 4.0 / soliton_speed(p);
        const Prim b = sgn_soliton_state(p, 54.0, t);
        CHECK(b.rho == doctest::Approx(crest.rho).epsilon(1e-14));
        CHECK(a.rho < b.rho);
    }
}

TEST_CASE("whitham plateau") {
    SUBCASE("no jump, no plateau flow") {
        const PlateauState s = whitham_plateau(1.3, 1.3, 9.81);
        CHECK(s.h_star == doctest::Approx(1.3).epsilon(1e-14));
        CHECK(std::abs(s.u_star) <= 1e-12);
    }
    SUBCASE("frozen values for the 1.8/1.0 dam") {
        const PlateauState s = whitham_plateau(1.8, 1.0, 9.81);
        CHECK(s.h_star == doctest::Approx(1.3708203932499372).epsilon(1e-14));
        CHECK(s.u_star == doctest::Approx(1.0700503581011862).epsilon(1e-13));
    }
    SUBCASE("depth scaling homogeneity") {
        for (double scale : {0.5, 2.0, 7.3}) {
            const PlateauState a = whitham_plateau(1.8, 1.0, 9.81);
            const PlateauState b = whitham_plateau(scale * 1.8, scale * 1.0, 9.81);
            CHECK(b.h_star == doctest::Approx(scale * a.h_star).epsilon(1e-13));
            // u*/sqrt(g hR) is invariant under the joint depth scaling
            CHECK(b.u_star / std::sqrt(9.81 * scale) ==
                  doctest::Approx(a.u_star / std::sqrt(9.81)).epsilon(1e-13));
        }
    }
}

TEST_CASE("lead soliton amplitude") {
    CHECK(lead_soliton_amplitude(0.8) == doctest::Approx(0.7466666666666667).epsilon(1e-15));
    SUBCASE("leading order ratio tends to one") {
        CHECK(lead_soliton_amplitude(1e-8) / 1e-8 == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("monotone below delta0 = 6") {
        double prev = 0.0;
        for (double d = 0.05; d < 6.0; d += 0.05) {
            const double a = lead_soliton_amplitude(d);
            CHECK(a > prev);
            prev = a;
        }
    }
}

TEST_CASE("error norms") {
    Grid g(Geometry::Line, 10, 1, 0.1, 1.0, 0.0, 0.0);
    std::vector<double> a(10, 2.0), b(10, 2.0);

    SUBCASE("identical fields") {
        const Norms n = error_norms(a, b, g);
        CHECK(n.l1 == 0.0);
        CHECK(n.l2 == 0.0);
        CHECK(n.linf == 0.0);
    }
    SUBCASE("constant offset on the unit domain") {
        for (auto& v : b)
            v += 0.25;
        const Norms n = error_norms(a, b, g);
        CHECK(n.l1 == doctest::Approx(0.25).epsilon(1e-13));
        CHECK(n.l2 == doctest::Approx(0.25).epsilon(1e-13));
        CHECK(n.linf == doctest::Approx(0.25).epsilon(1e-13));
    }
    SUBCASE("single-cell spike dominates Linf") {
        b[4] += 0.5;
        const Norms n = error_norms(a, b, g);
        CHECK(n.linf == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(n.l1 == doctest::Approx(0.05).epsilon(1e-13));
    }
    SUBCASE("shape mismatch rejected") {
        std::vector<double> shorter(9, 0.0);
        CHECK_THROWS_AS(error_norms(a, shorter, g), ShapeMismatch);
    }
}

TEST_CASE("eigenstructure verification") {
    SUBCASE("SGN hand spectrum") {
        const ModelClosure c = ModelClosure::sgn(9.81, 1200.0);
        const EigenReport r = eigenstructure_check(c, {1.0, 0.3, 0.0, 1.0, 0.0}, true);
        const double cs = std::sqrt(409.81);
        CHECK(r.pass);
        CHECK(r.eigenvalues[0] == doctest::Approx(0.3 - cs).epsilon(1e-7));
        CHECK(r.eigenvalues[1] == doctest::Approx(0.3).epsilon(1e-7));
        CHECK(r.eigenvalues[2] == doctest::Approx(0.3).epsilon(1e-7));
        CHECK(r.eigenvalues[3] == doctest::Approx(0.3).epsilon(1e-7));
        CHECK(r.eigenvalues[4] == doctest::Approx(0.3 + cs).epsilon(1e-7));
        CHECK(std::sqrt(409.81) == doctest::Approx(20.243764472054103).epsilon(1e-14));
    }
    SUBCASE("Saint-Venant limit keeps a real spectrum") {
        const ModelClosure c = ModelClosure::sgn(9.81, 0.0);
        const EigenReport r = eigenstructure_check(c, {1.0, 0.2, 0.0, 1.4, 0.3}, true);
        CHECK(r.pass);
    }
    SUBCASE("random admissible states pass, both closures") {
        std::mt19937_64 rng(61);
        std::uniform_real_distribution<double> uh(0.1, 10.0), uu(-10.0, 10.0), ufac(0.5, 2.0),
            ul(1.0, 5000.0), urho(500.0, 1000.0);
        for (int k = 0; k < 100; ++k) {
            const ModelClosure sgn = ModelClosure::sgn(9.81, ul(rng));
            const EigenReport a =
                eigenstructure_check(sgn, {uh(rng), uu(rng), uu(rng), uh(rng), uu(rng)}, true);
            CHECK(a.pass);
            CHECK(a.contact_residual <= 1e-8);
            CHECK(a.genuine_nonlinearity > 0.0);
            const ModelClosure ikw =
                ModelClosure::ikw(1e5, 1e-3, 1.4, 14952.188074685953, 1000.0, 0.99, ul(rng));
            const double rho = urho(rng);
            const EigenReport b = eigenstructure_check(
                ikw, {rho, uu(rng), uu(rng), ikw.Q(rho) * ufac(rng), uu(rng)}, true);
            CHECK(b.pass);
            CHECK(b.contact_residual <= 1e-8);
        }
    }
    SUBCASE("violations throw") {
        const ModelClosure c = ModelClosure::sgn(9.81, 0.0);
        CHECK_THROWS_AS(eigenstructure_check(c, {-1.0, 0.0, 0.0, 1.0, 0.0}, true),
                        NonPositiveDepth);
    }
}

namespace {

// synthetic developed dam-break profile: h_L | rarefaction | plateau | DSW | h_R
Grid synthetic_dambreak() {
    const int n = 2000;
    Grid g(Geometry::Line, n, 1, 460.0 / n, 1.0, -210.0, 0.0);
    const double hs = 1.3708203932499372, us = 1.0700503581011862;
    for (int i = 0; i < n; ++i) {
        const double x = g.xc(i);
        double h, u;
        if (x < -199.0) {
            h = 1.8;
            u = 0.0;
        } else if (x < -123.0) {
            const double s = (x + 199.0) / 76.0;
            h = 1.8 + (hs - 1.8) * s;
            u = us * s;
        } else if (x < 50.0) {
            h = hs;
            u = us;
        } else if (x < 196.0) {
            const double envelope = 0.37 * (x - 50.0) / 146.0;
            h = 1.0 + envelope * (1.0 + std::sin(2.0 * M_PI * x / 7.0));
            u = 0.5 * envelope;
        } else {
            h = 1.0;
            u = 0.0;
        }
        if (x > 188.0 && x < 195.0)
            h = std::max(h, 1.0 + 0.74 * std::cos((x - 191.5) * 0.4));
        g.at(i, 0) = prim_to_cons({h, u, 0.0, h, 0.0});
    }
    return g;
}

// exact discrete mirror: reversed cells with the velocity negated
Grid mirror_field(const Grid& src) {
    Grid g = src;
    const int n = src.nx();
    for (int i = 0; i < n; ++i) {
        Cons u = src.at(n - 1 - i, 0);
        u.mx = -u.mx;
        g.at(i, 0) = u;
    }
    return g;
}

} // namespace

TEST_CASE("dam-break metrics") {
    SUBCASE("undeveloped step data has no plateau") {
        Grid g(Geometry::Line, 400, 1, 1.0, 1.0, -200.0, 0.0);
        for (int i = 0; i < 400; ++i) {
            const double h = g.xc(i) <= 0.0 ? 1.8 : 1.0;
            g.at(i, 0) = prim_to_cons({h, 0.0, 0.0, h, 0.0});
        }
        CHECK_THROWS_AS(dambreak_metrics(g, 1.8, 1.0, 9.81), PlateauNotFound);
    }
    SUBCASE("synthetic developed profile") {
        const Grid g = synthetic_dambreak();
        const DambreakMetrics m = dambreak_metrics(g, 1.8, 1.0, 9.81);
        CHECK(m.h_plateau == doctest::Approx(1.3708203932499372).epsilon(1e-6));
        CHECK(m.u_plateau == doctest::Approx(1.0700503581011862).epsilon(1e-6));
        CHECK(m.lead_amp == doctest::Approx(0.74).epsilon(1e-3));
    }
    SUBCASE("mirrored data gives mirrored metrics") {
        const Grid g = synthetic_dambreak();
        const DambreakMetrics a = dambreak_metrics(g, 1.8, 1.0, 9.81);
        const DambreakMetrics b = dambreak_metrics(mirror_field(g), 1.8, 1.0, 9.81);
        CHECK(b.h_plateau == doctest::Approx(a.h_plateau).epsilon(1e-12));
        CHECK(b.u_plateau == doctest::Approx(-a.u_plateau).epsilon(1e-12));
        CHECK(b.lead_amp == doctest::Approx(a.lead_amp).epsilon(1e-12));
    }
}
