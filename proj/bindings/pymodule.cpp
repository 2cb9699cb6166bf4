#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dispsim/integrate.hpp"
#include "dispsim/oracles.hpp"
#include "dispsim/scenario.hpp"

namespace py = pybind11;
using namespace dispsim;

PYBIND11_MODULE(dispsim, m) {
    m.doc() = "Finite-volume solver for hyperbolic approximations of dispersive systems "
              "(extended SGN shallow water and IKW bubbly fluids).";
    m.attr("__version__") = kVersion;

    py::register_exception<SimError>(m, "SimError");

    py::class_<Prim>(m, "Prim")
        .def(py::init([](double rho, double u, double v, double eta, double w) {
                 return Prim{rho, u, v, eta, w};
             }),
             py::arg("rho"), py::arg("u") = 0.0, py::arg("v") = 0.0, py::arg("eta") = 0.0,
             py::arg("w") = 0.0)
        .def_readwrite("rho", &Prim::rho)
        .def_readwrite("u", &Prim::u)
        .def_readwrite("v", &Prim::v)
        .def_readwrite("eta", &Prim::eta)
        .def_readwrite("w", &Prim::w);

    py::class_<ModelClosure>(m, "Closure")
        .def_static("sgn", &ModelClosure::sgn, py::arg("g"), py::arg("lambda"))
        .def_static("ikw", &ModelClosure::ikw, py::arg("p0"), py::arg("R0"), py::arg("gamma"),
                    py::arg("n"), py::arg("rho10"), py::arg("Y1"), py::arg("lambda"))
        .def("pressure", &ModelClosure::pressure, py::arg("rho"), py::arg("eta"))
        .def("sound_speed_sq", &ModelClosure::sound_speed_sq, py::arg("rho"), py::arg("eta"))
        .def("bubble_radius", &ModelClosure::bubble_radius, py::arg("rho"))
        .def("Q", &ModelClosure::Q, py::arg("rho"))
        .def("f", &ModelClosure::f, py::arg("eta"))
        .def("f_prime", &ModelClosure::f_prime, py::arg("eta"))
        .def("total_energy", &ModelClosure::total_energy, py::arg("state"));

    m.def(
        "soliton_state",
        [](double h0, double a, double g, double x_center, int direction, double x, double t) {
            const SolitonParams p{h0, a, g, x_center, direction};
            const Prim s = sgn_soliton_state(p, x, t);
            return py::make_tuple(s.rho, s.u, s.eta, s.w);
        },
        py::arg("h0"), py::arg("a"), py::arg("g"), py::arg("x_center"), py::arg("direction"),
        py::arg("x"), py::arg("t"), "Exact SGN solitary wave (h, u, eta, w) at (x, t).");

    m.def(
        "whitham_plateau",
        [](double hl, double hr, double g) {
            const PlateauState p = whitham_plateau(hl, hr, g);
            return py::make_tuple(p.h_star, p.u_star);
        },
        py::arg("h_left"), py::arg("h_right"), py::arg("g"));

    m.def("lead_soliton_amplitude", &lead_soliton_amplitude, py::arg("delta0"));

    m.def(
        "ode_exact_relax",
        [](double h, double eta0, double w0, double lambda, double dt) {
            const auto [eta, w] = ode_exact_relax(h, eta0, w0, lambda, dt);
            return py::make_tuple(eta, w);
        },
        py::arg("h"), py::arg("eta0"), py::arg("w0"), py::arg("lambda"), py::arg("dt"));

    m.def("list_scenarios", &builtin_scenario_names);

    m.def(
        "run_scenario",
        [](const std::string& name, const KeyValues& overrides, const std::string& out_dir) {
            const ScenarioSpec spec = make_scenario(name, {}, overrides);
            const RunResult res = run(spec, out_dir, false);
            py::dict d;
            d["ok"] = res.ok;
            d["error"] = res.error;
            d["steps"] = res.steps;
            d["t"] = res.t;
            d["final_mass"] = res.final_mass;
            d["final_energy"] = res.final_energy;
            d["outputs"] = res.outputs;
            d["manifest_path"] = res.manifest_path;
            py::dict mf;
            for (const auto& [k, v] : res.manifest)
                mf[py::str(k)] = v;
            d["manifest"] = mf;
            return d;
        },
        py::arg("name"), py::arg("overrides") = KeyValues{}, py::arg("out_dir") = ".",
        "Run a built-in scenario with key = value overrides; returns the manifest.");
}
