#ifndef DISPSIM_GRID_HPP
#define DISPSIM_GRID_HPP

#include <vector>

#include "dispsim/model.hpp"

namespace dispsim {

enum class Geometry { Line, Plane, Radial };

enum class BcType { Periodic, Transmissive, ReflectiveWall };

/// Per-side boundary tags. bottom/top are ignored for 1-D geometries.
struct BoundaryConditions {
    BcType left = BcType::Transmissive;
    BcType right = BcType::Transmissive;
    BcType bottom = BcType::Transmissive;
    BcType top = BcType::Transmissive;
};

/// Structured cell-centered mesh with two ghost layers per side, stored as a
/// flat row-major array of conserved states. Radial grids live on r > 0 with
/// the first cell center at dr/2.
class Grid {
public:
    static constexpr int kGhost = 2;

    Grid(Geometry geom, int nx, int ny, double dx, double dy, double x0, double y0);

    Geometry geometry() const { return geom_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    bool two_dimensional() const { return geom_ == Geometry::Plane; }

    /// Interior indices are i in [0, nx), j in [0, ny); ghosts extend kGhost
    /// cells beyond each side.
    Cons& at(int i, int j) { return cells_[index(i, j)]; }
    const Cons& at(int i, int j) const { return cells_[index(i, j)]; }

    double xc(int i) const { return x0_ + (i + 0.5) * dx_; }
    double yc(int j) const { return y0_ + (j + 0.5) * dy_; }

    /// Cell radius for the radial geometry (equals xc; strictly positive).
    double radius(int i) const { return xc(i); }

    /// dx, dx*dy, or 2*pi*r*dr depending on the geometry.
    double cell_volume(int i) const;

    std::vector<Cons>& raw() { return cells_; }
    const std::vector<Cons>& raw() const { return cells_; }

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(j + kGhost) * static_cast<size_t>(stride_) +
               static_cast<size_t>(i + kGhost);
    }

    Geometry geom_;
    int nx_, ny_, stride_;
    double dx_, dy_, x0_, y0_;
    std::vector<Cons> cells_;
};

/// Fills ghost layers from the interior. Idempotent; x sides first, then y
/// sides across the full padded width so corners are consistent.
void apply_boundary_conditions(Grid& g, const BoundaryConditions& bc);

/// Geometric source of the radially symmetric 1-D system, evaluated at the
/// cell center: -(u/r) * (h, hu, hv, h eta, h w).
Cons polar_geometric_source(const ModelClosure& c, const Cons& u, double r);

/// Cell-volume-weighted sum of the energy density over interior cells.
double integrate_total_energy(const Grid& g, const ModelClosure& c);

/// Cell-volume-weighted sum of rho over interior cells.
double integrate_total_mass(const Grid& g);

} // namespace dispsim

#endif
