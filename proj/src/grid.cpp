#include "dispsim/grid.hpp"

#include <cmath>
#include <numbers>

namespace dispsim {

Grid::Grid(Geometry geom, int nx, int ny, double dx, double dy, double x0, double y0)
    : geom_(geom), nx_(nx), ny_(ny), dx_(dx), dy_(dy), x0_(x0), y0_(y0) {
    if (geom != Geometry::Plane)
        ny_ = 1;
    if (nx_ < 1 || ny_ < 1)
        throw ConfigError("grid needs nx, ny >= 1");
    if (!(dx_ > 0.0) || !(dy_ > 0.0))
        throw ConfigError("grid needs dx, dy > 0");
    if (geom == Geometry::Radial && x0_ != 0.0)
        throw ConfigError("radial grid must start at r = 0");
    stride_ = nx_ + 2 * kGhost;
    cells_.assign(static_cast<size_t>(stride_) * static_cast<size_t>(ny_ + 2 * kGhost), Cons{});
}

double Grid::cell_volume(int i) const {
    switch (geom_) {
    case Geometry::Line:
        return dx_;
    case Geometry::Plane:
        return dx_ * dy_;
    case Geometry::Radial:
        return 2.0 * std::numbers::pi * radius(i) * dx_;
    }
    return dx_;
}

namespace {

Cons mirror_x(Cons u) {
    u.mx = -u.mx;
    return u;
}

Cons mirror_y(Cons u) {
    u.my = -u.my;
    return u;
}

} // namespace

void apply_boundary_conditions(Grid& g, const BoundaryConditions& bc) {
    const int nx = g.nx();
    const int ny = g.ny();
    const int ng = Grid::kGhost;

    if ((bc.left == BcType::Periodic) != (bc.right == BcType::Periodic))
        throw ConfigError("periodic x-boundaries must come in a matching pair");

    for (int j = 0; j < ny; ++j) {
        for (int k = 1; k <= ng; ++k) {
            switch (bc.left) {
            case BcType::Periodic:      g.at(-k, j) = g.at(nx - k, j); break;
            case BcType::Transmissive:  g.at(-k, j) = g.at(0, j); break;
            case BcType::ReflectiveWall:g.at(-k, j) = mirror_x(g.at(k - 1, j)); break;
            }
            switch (bc.right) {
            case BcType::Periodic:      g.at(nx - 1 + k, j) = g.at(k - 1, j); break;
            case BcType::Transmissive:  g.at(nx - 1 + k, j) = g.at(nx - 1, j); break;
            case BcType::ReflectiveWall:g.at(nx - 1 + k, j) = mirror_x(g.at(nx - k, j)); break;
            }
        }
    }

    if (!g.two_dimensional())
        return;

    if ((bc.bottom == BcType::Periodic) != (bc.top == BcType::Periodic))
        throw ConfigError("periodic y-boundaries must come in a matching pair");

    // Fill ghost rows across the full padded width so corners end up defined.
    for (int i = -ng; i < nx + ng; ++i) {
        for (int k = 1; k <= ng; ++k) {
            switch (bc.bottom) {
            case BcType::Periodic:      g.at(i, -k) = g.at(i, ny - k); break;
            case BcType::Transmissive:  g.at(i, -k) = g.at(i, 0); break;
            case BcType::ReflectiveWall:g.at(i, -k) = mirror_y(g.at(i, k - 1)); break;
            }
            switch (bc.top) {
            case BcType::Periodic:      g.at(i, ny - 1 + k) = g.at(i, k - 1); break;
            case BcType::Transmissive:  g.at(i, ny - 1 + k) = g.at(i, ny - 1); break;
            case BcType::ReflectiveWall:g.at(i, ny - 1 + k) = mirror_y(g.at(i, ny - k)); break;
            }
        }
    }
}

Cons polar_geometric_source(const ModelClosure&, const Cons& u, double r) {
    const Prim p = cons_to_prim(u);
    return (-p.u / r) * u;
}

double integrate_total_energy(const Grid& g, const ModelClosure& c) {
    // Kahan summation keeps the diagnostic deterministic and round-off tight.
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const double term = c.total_energy(cons_to_prim(g.at(i, j))) * g.cell_volume(i);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

double integrate_total_mass(const Grid& g) {
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const double term = g.at(i, j).rho * g.cell_volume(i);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

} // namespace dispsim
