#ifndef DISPSIM_OUTPUT_HPP
#define DISPSIM_OUTPUT_HPP

#include <map>
#include <string>
#include <vector>

#include "dispsim/grid.hpp"

namespace dispsim {

using KeyValues = std::map<std::string, std::string>;

/// 1-D profile as CSV with header x,h,u,eta,w,p,E and %.6g formatting;
/// this is the golden-file format for 1-D runs.
void write_csv_1d(const Grid& g, const ModelClosure& c, const std::string& path);

/// Numerical Schlieren ln(1 + 2 |grad h|) over the interior (row-major),
/// central differences inside, one-sided at the boundary cells.
std::vector<double> schlieren_field(const Grid& g);

/// Self-describing 2-D container: text header (dims, spacing, origin, field
/// names) then little-endian float64 payload per field, row-major. Fields:
/// h, u, v, eta, w, p, schlieren.
void write_grid_2d(const Grid& g, const ModelClosure& c, const std::string& path);

struct Field2D {
    int nx = 0, ny = 0;
    double dx = 0, dy = 0, x0 = 0, y0 = 0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> data; ///< one row-major array per field
};

Field2D read_grid_2d(const std::string& path);

/// Flat "key = value" text, keys in sorted order.
void write_key_values(const std::string& path, const KeyValues& kv);

} // namespace dispsim

#endif
