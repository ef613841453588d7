#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "paramplane/cli.hpp"
#include "paramplane/dynamics.hpp"
#include "paramplane/errors.hpp"
#include "paramplane/families.hpp"
#include "paramplane/operator.hpp"
#include "paramplane/polynomial.hpp"
#include "paramplane/render.hpp"
#include "paramplane/roots.hpp"

namespace py = pybind11;
using namespace paramplane;

namespace {

using Coeffs = std::vector<Complex>;

Family family_arg(const std::string& name) {
    const auto f = parse_family(name);
    if (!f) throw ValidationError("unknown family '" + name + "' (expected kim, cheby, ermakov or sixth)");
    return *f;
}

Window window_arg(std::tuple<double, double, double, double> bounds, std::pair<int, int> res) {
    Window w{std::get<0>(bounds), std::get<1>(bounds), std::get<2>(bounds), std::get<3>(bounds), res.first,
             res.second};
    w.validate();
    return w;
}

py::array_t<std::uint8_t> image_array(const RasterImage& img) {
    py::array_t<std::uint8_t> out({img.height(), img.width(), 3});
    std::copy(img.bytes().begin(), img.bytes().end(), out.mutable_data());
    return out;
}

py::dict grid_dict(const ParamGrid& grid) {
    const int h = grid.window.height, w = grid.window.width;
    py::array_t<int> n_converged({h, w}), slowest({h, w}), n_free({h, w});
    py::array_t<bool> degenerate({h, w});
    py::array_t<std::int8_t> verdict({h, w});
    for (std::size_t k = 0; k < grid.cells.size(); ++k) {
        const ParamCell& c = grid.cells[k];
        n_free.mutable_data()[k] = c.n_free;
        n_converged.mutable_data()[k] = c.n_converged;
        slowest.mutable_data()[k] = c.slowest_iters;
        degenerate.mutable_data()[k] = c.degenerate;
        verdict.mutable_data()[k] = c.verdict ? static_cast<std::int8_t>(*c.verdict) : std::int8_t{-1};
    }
    py::dict d;
    d["n_free"] = n_free;
    d["n_converged"] = n_converged;
    d["slowest_iters"] = slowest;
    d["degenerate"] = degenerate;
    d["verdict"] = verdict;
    return d;
}

py::dict outcome_dict(const OrbitOutcome& o) {
    py::dict d;
    d["kind"] = to_string(o.kind);
    d["iterations"] = o.iterations;
    d["target"] = o.target;
    return d;
}

} // namespace

PYBIND11_MODULE(_paramplane, m) {
    m.doc() = "Parameter and dynamical planes of symmetric Newton-like rational maps";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    // Polynomials as ascending coefficient lists.
    m.def("is_palindromic", [](const Coeffs& c, double tol) { return is_palindromic(Polynomial(c), tol); },
          py::arg("coeffs"), py::arg("tol") = 1e-12);
    m.def("reduce_palindromic", [](const Coeffs& c) { return reduce_palindromic(Polynomial(c)).coeffs(); },
          py::arg("coeffs"), "q with z^m q(z + 1/z) = p(z) for palindromic p of degree 2m.");
    m.def("lift_root", &lift_root, py::arg("x"), "Both solutions of z + 1/z = x, the first with |z| >= 1.");
    m.def("solve_poly", [](const Coeffs& c) { return solve_poly(Polynomial(c)); }, py::arg("coeffs"));
    m.def("solve_poly_oracle", [](const Coeffs& c) { return solve_poly_oracle(Polynomial(c)); }, py::arg("coeffs"));

    py::class_<NewtonLikeOperator>(m, "Operator")
        .def(py::init([](int n, const Coeffs& den) { return NewtonLikeOperator(n, Polynomial(den)); }), py::arg("n"),
             py::arg("den"))
        .def_property_readonly("n", &NewtonLikeOperator::n)
        .def_property_readonly("k", &NewtonLikeOperator::k)
        .def_property_readonly("den", [](const NewtonLikeOperator& op) { return op.den().coeffs(); })
        .def_property_readonly("num", [](const NewtonLikeOperator& op) { return op.num().coeffs(); })
        .def("__call__", [](const NewtonLikeOperator& op, Complex z) { return op(z); }, py::arg("z"))
        .def("derivative", [](const NewtonLikeOperator& op, Complex z) { return derivative(op, z); }, py::arg("z"))
        .def("derivative_numerator",
             [](const NewtonLikeOperator& op) { return derivative_numerator(op).coeffs(); })
        .def("multiplier", [](const NewtonLikeOperator& op, Complex z) { return multiplier(op, z); }, py::arg("z"))
        .def("fixed_points",
             [](const NewtonLikeOperator& op) {
                 py::list out;
                 for (const auto& fp : fixed_points(op)) {
                     py::dict d;
                     d["location"] = fp.location;
                     d["multiplier"] = fp.multiplier;
                     d["kind"] = to_string(fp.kind);
                     d["multiplicity"] = fp.multiplicity;
                     out.append(d);
                 }
                 return out;
             })
        .def("classify_orbit",
             [](const NewtonLikeOperator& op, Complex z0, int max_iter, double esc, const Coeffs& targets) {
                 return outcome_dict(classify_orbit(op, z0, EscapeConfig(esc, max_iter), targets));
             },
             py::arg("z0"), py::arg("max_iter") = EscapeConfig::kParamMaxIter, py::arg("esc") = 1e4,
             py::arg("targets") = Coeffs{})
        .def("same_cycle",
             [](const NewtonLikeOperator& op, Complex c1, Complex c3) { return to_string(same_cycle(op, c1, c3)); },
             py::arg("c1"), py::arg("c3"))
        .def("__repr__", [](const NewtonLikeOperator& op) {
            std::ostringstream os;
            os << "Operator(n=" << op.n() << ", k=" << op.k() << ")";
            return os.str();
        });

    m.attr("infinity") = kInfinity;

    m.def("families", [] { return std::vector<std::string>{"kim", "cheby", "ermakov", "sixth"}; });
    m.def("instantiate", [](const std::string& family, Complex a) { return instantiate({family_arg(family), a}); },
          py::arg("family"), py::arg("a"));
    m.def("free_critical_count", [](const std::string& family) { return free_critical_count(family_arg(family)); },
          py::arg("family"));
    m.def(
        "critical_points",
        [](const std::string& family, Complex a, bool closed_form) {
            const FamilyId id{family_arg(family), a};
            const CriticalSet s = closed_form ? closed_form_criticals(id) : numeric_criticals(id);
            return py::make_tuple(s.representatives, s.full);
        },
        py::arg("family"), py::arg("a"), py::arg("closed_form") = true,
        "(representatives, full) free critical points of the family member at a.");

    m.def(
        "param_cell",
        [](const std::string& family, Complex a, int max_iter, double esc, bool capture) {
            const ParamCell c = compute_param_cell({family_arg(family), a}, EscapeConfig(esc, max_iter), capture);
            py::dict d;
            d["n_free"] = c.n_free;
            d["n_converged"] = c.n_converged;
            d["slowest_iters"] = c.slowest_iters;
            d["verdict"] = c.verdict ? py::cast(to_string(*c.verdict)) : py::none();
            d["degenerate"] = c.degenerate;
            return d;
        },
        py::arg("family"), py::arg("a"), py::arg("max_iter") = EscapeConfig::kParamMaxIter, py::arg("esc") = 1e4,
        py::arg("capture") = false);

    m.def(
        "render_parameter_plane",
        [](const std::string& family, std::tuple<double, double, double, double> window, std::pair<int, int> res,
           int max_iter, double esc, bool shift, bool capture, int workers) {
            const Window w = window_arg(window, res);
            const EscapeConfig cfg(esc, max_iter);
            const Family f = family_arg(family);
            ParamPlane plane;
            {
                py::gil_scoped_release release;
                plane = capture ? render_capture_plane(f, w, cfg, Palette{}, {workers, false})
                                : render_parameter_plane(f, w, cfg, Palette{}, shift, {workers, false});
            }
            return py::make_tuple(image_array(plane.image), grid_dict(plane.grid));
        },
        py::arg("family"), py::arg("window"), py::arg("res") = std::pair{400, 400},
        py::arg("max_iter") = EscapeConfig::kParamMaxIter, py::arg("esc") = 1e4, py::arg("shift") = false,
        py::arg("capture") = false, py::arg("workers") = 0,
        "Returns (image[h, w, 3] uint8, grid dict of [h, w] arrays).");

    m.def(
        "render_dynamical_plane",
        [](const std::string& family, Complex a, std::tuple<double, double, double, double> window,
           std::pair<int, int> res, int max_iter, double esc, int workers) {
            const FamilyId id{family_arg(family), a};
            const Window w = window_arg(window, res);
            const EscapeConfig cfg(esc, max_iter);
            const auto op = instantiate(id);
            const auto crit = closed_form_criticals(id);
            const auto targets = default_targets(id.family, cfg);
            DynamicalPlane plane;
            {
                py::gil_scoped_release release;
                plane = render_dynamical_plane(op, w, cfg, Palette{}, crit, targets, {workers, false});
            }
            py::array_t<int> iters({w.height, w.width});
            py::array_t<std::int8_t> kinds({w.height, w.width});
            for (std::size_t k = 0; k < plane.outcomes.size(); ++k) {
                iters.mutable_data()[k] = plane.outcomes[k].iterations;
                kinds.mutable_data()[k] = static_cast<std::int8_t>(plane.outcomes[k].kind);
            }
            return py::make_tuple(image_array(plane.image), kinds, iters);
        },
        py::arg("family"), py::arg("a"), py::arg("window") = std::tuple{-3.0, 3.0, -3.0, 3.0},
        py::arg("res") = std::pair{400, 400}, py::arg("max_iter") = EscapeConfig::kDynMaxIter, py::arg("esc") = 1e4,
        py::arg("workers") = 0,
        "Returns (image, kind codes 0=zero 1=infinity 2=target 3=none, iterations).");

    m.def(
        "render_stability_map",
        [](const std::string& family, std::tuple<double, double, double, double> window, std::pair<int, int> res,
           int workers) {
            const Window w = window_arg(window, res);
            const Family f = family_arg(family);
            StabilityMap map;
            {
                py::gil_scoped_release release;
                map = render_stability_map(f, w, Palette{}, {workers, false});
            }
            py::array_t<double> mult({w.height, w.width});
            std::copy(map.abs_multiplier_one.begin(), map.abs_multiplier_one.end(), mult.mutable_data());
            return py::make_tuple(image_array(map.image), mult);
        },
        py::arg("family"), py::arg("window"), py::arg("res") = std::pair{400, 400}, py::arg("workers") = 0,
        "Returns (image, |O'(1)| per pixel with NaN on degenerate parameters).");

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::main(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
