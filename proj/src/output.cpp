#include "dispsim/output.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace dispsim {

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_le_doubles(std::ofstream& out, const std::vector<double>& vals) {
    static_assert(sizeof(double) == 8);
    if constexpr (std::endian::native == std::endian::little) {
        out.write(reinterpret_cast<const char*>(vals.data()),
                  static_cast<std::streamsize>(vals.size() * 8));
    } else {
        for (double v : vals) {
            uint64_t bits;
            std::memcpy(&bits, &v, 8);
            char buf[8];
            for (int k = 0; k < 8; ++k)
                buf[k] = static_cast<char>((bits >> (8 * k)) & 0xff);
            out.write(buf, 8);
        }
    }
}

std::vector<double> read_le_doubles(std::ifstream& in, size_t count) {
    std::vector<double> vals(count);
    if constexpr (std::endian::native == std::endian::little) {
        in.read(reinterpret_cast<char*>(vals.data()), static_cast<std::streamsize>(count * 8));
    } else {
        for (size_t k = 0; k < count; ++k) {
            char buf[8];
            in.read(buf, 8);
            uint64_t bits = 0;
            for (int b = 0; b < 8; ++b)
                bits |= static_cast<uint64_t>(static_cast<unsigned char>(buf[b])) << (8 * b);
            std::memcpy(&vals[k], &bits, 8);
        }
    }
    if (!in)
        throw SimError("truncated field payload");
    return vals;
}

} // namespace

void write_csv_1d(const Grid& g, const ModelClosure& c, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw SimError("cannot open " + path + " for writing");
    out << "x,h,u,eta,w,p,E\n";
    for (int i = 0; i < g.nx(); ++i) {
        const Prim p = cons_to_prim(g.at(i, 0));
        const double pr = c.pressure(p.rho, p.eta);
        const double en = c.total_energy(p);
        out << fmt6(g.xc(i)) << ',' << fmt6(p.rho) << ',' << fmt6(p.u) << ',' << fmt6(p.eta)
            << ',' << fmt6(p.w) << ',' << fmt6(pr) << ',' << fmt6(en) << '\n';
    }
    if (!out)
        throw SimError("write failed for " + path);
}

std::vector<double> schlieren_field(const Grid& g) {
    const int nx = g.nx(), ny = g.ny();
    std::vector<double> out(static_cast<size_t>(nx) * static_cast<size_t>(ny));
    auto h = [&](int i, int j) { return g.at(i, j).rho; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            double gx;
            if (i == 0)
                gx = (h(1, j) - h(0, j)) / g.dx();
            else if (i == nx - 1)
                gx = (h(nx - 1, j) - h(nx - 2, j)) / g.dx();
            else
                gx = (h(i + 1, j) - h(i - 1, j)) / (2.0 * g.dx());
            double gy = 0.0;
            if (ny > 1) {
                if (j == 0)
                    gy = (h(i, 1) - h(i, 0)) / g.dy();
                else if (j == ny - 1)
                    gy = (h(i, ny - 1) - h(i, ny - 2)) / g.dy();
                else
                    gy = (h(i, j + 1) - h(i, j - 1)) / (2.0 * g.dy());
            }
            out[static_cast<size_t>(j) * nx + i] = std::log1p(2.0 * std::hypot(gx, gy));
        }
    }
    return out;
}

void write_grid_2d(const Grid& g, const ModelClosure& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw SimError("cannot open " + path + " for writing");
    const int nx = g.nx(), ny = g.ny();
    out << "dispgrid 1\n";
    out << "nx " << nx << "\nny " << ny << "\n";
    out << "dx " << fmt17(g.dx()) << "\ndy " << fmt17(g.dy()) << "\n";
    out << "x0 " << fmt17(g.x0()) << "\ny0 " << fmt17(g.y0()) << "\n";
    out << "fields h u v eta w p schlieren\n";
    out << "data\n";

    const size_t count = static_cast<size_t>(nx) * static_cast<size_t>(ny);
    std::vector<std::vector<double>> fields(6, std::vector<double>(count));
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const size_t k = static_cast<size_t>(j) * nx + i;
            const Prim p = cons_to_prim(g.at(i, j));
            fields[0][k] = p.rho;
            fields[1][k] = p.u;
            fields[2][k] = p.v;
            fields[3][k] = p.eta;
            fields[4][k] = p.w;
            fields[5][k] = c.pressure(p.rho, p.eta);
        }
    }
    for (const auto& f : fields)
        write_le_doubles(out, f);
    write_le_doubles(out, schlieren_field(g));
    if (!out)
        throw SimError("write failed for " + path);
}

Field2D read_grid_2d(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SimError("cannot open " + path);
    Field2D f;
    std::string line;
    if (!std::getline(in, line) || line != "dispgrid 1")
        throw SimError(path + ": not a dispgrid file");
    while (std::getline(in, line)) {
        if (line == "data")
            break;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "nx") ss >> f.nx;
        else if (key == "ny") ss >> f.ny;
        else if (key == "dx") ss >> f.dx;
        else if (key == "dy") ss >> f.dy;
        else if (key == "x0") ss >> f.x0;
        else if (key == "y0") ss >> f.y0;
        else if (key == "fields") {
            std::string name;
            while (ss >> name)
                f.names.push_back(name);
        } else
            throw SimError(path + ": unknown header key " + key);
    }
    if (f.nx <= 0 || f.ny <= 0 || f.names.empty())
        throw SimError(path + ": incomplete header");
    const size_t count = static_cast<size_t>(f.nx) * static_cast<size_t>(f.ny);
    for (size_t k = 0; k < f.names.size(); ++k)
        f.data.push_back(read_le_doubles(in, count));
    return f;
}

void write_key_values(const std::string& path, const KeyValues& kv) {
    std::ofstream out(path);
    if (!out)
        throw SimError("cannot open " + path + " for writing");
    for (const auto& [k, v] : kv)
        out << k << " = " << v << "\n";
    if (!out)
        throw SimError("write failed for " + path);
}

} // namespace dispsim
