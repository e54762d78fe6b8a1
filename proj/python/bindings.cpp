#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "hbcnp/cli.hpp"
#include "hbcnp/error.hpp"
#include "hbcnp/json_io.hpp"

namespace py = pybind11;
using namespace hbcnp;

namespace {

using PointArg = std::variant<Cplx, std::vector<Cplx>>;

BallPoint to_point(const PointArg& p) {
    if (const auto* z = std::get_if<Cplx>(&p)) return *z;
    return BallPoint(std::get<std::vector<Cplx>>(p));
}

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
    if (py::isinstance<py::str>(o)) return json::parse(o.cast<std::string>());
    return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

SampleSet samples_or_default(const std::optional<SampleSet>& s) { return s ? *s : SampleSet::default_set(); }

py::array_t<Cplx> to_array(const HermitianMatrix& m) {
    py::array_t<Cplx> a({m.n(), m.n()});
    auto v = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t k = 0; k < m.n(); ++k) v(i, k) = m(i, k);
    }
    return a;
}

HermitianMatrix from_array(const py::array_t<Cplx, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
    const auto n = static_cast<std::size_t>(a.shape(0));
    return HermitianMatrix(n, std::vector<Cplx>(a.data(), a.data() + n * n), "python array");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sampled complete Nevanlinna-Pick checks for reproducing kernels";
    py::register_exception<Error>(m, "HbcnpError", PyExc_RuntimeError);
    m.attr("DEFAULT_ORDER") = kDefaultOrder;
    m.attr("DEFAULT_SEED") = kDefaultSeed;

    py::class_<PowerSeries>(m, "PowerSeries")
        .def(py::init<std::vector<Cplx>, Cplx>(), py::arg("coeffs"), py::arg("center") = Cplx{})
        .def_static("identity", &PowerSeries::identity, py::arg("order") = kDefaultOrder, py::arg("center") = Cplx{})
        .def_static("constant", &PowerSeries::constant, py::arg("value"), py::arg("order") = kDefaultOrder,
                    py::arg("center") = Cplx{})
        .def_property_readonly("center", &PowerSeries::center)
        .def_property_readonly("order", &PowerSeries::order)
        .def_property_readonly("coeffs", [](const PowerSeries& s) { return std::vector<Cplx>(s.coeffs().begin(), s.coeffs().end()); })
        .def("__call__", [](const PowerSeries& s, Cplx z) { return s(z); })
        .def("__getitem__", [](const PowerSeries& s, std::size_t n) { return s[n]; })
        .def("resized", &PowerSeries::resized)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__repr__", [](const PowerSeries& s) {
            std::ostringstream os;
            os << "PowerSeries(order=" << s.order() << ", center=" << s.center() << ")";
            return os.str();
        });
    m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
    m.def("reciprocal", &reciprocal);
    m.def("revert", [](const PowerSeries& s) { return revert(s); });
    m.def("div_factor", [](const PowerSeries& a, const PowerSeries& b) { return div_factor(a, b); });

    py::class_<SampleSet>(m, "SampleSet")
        .def_static("default", &SampleSet::default_set, py::arg("seed") = kDefaultSeed)
        .def_static("radial_grid", &SampleSet::radial_grid, py::arg("n_radii"), py::arg("n_angles"), py::arg("r_max"))
        .def_static("random_disk", &SampleSet::random_disk, py::arg("count"), py::arg("r_max"), py::arg("seed"))
        .def_static("random_ball", &SampleSet::random_ball, py::arg("count"), py::arg("dim"), py::arg("r_max"),
                    py::arg("seed"))
        .def_static("explicit", [](const std::vector<PointArg>& pts) {
            std::vector<BallPoint> v;
            for (const auto& p : pts) v.push_back(to_point(p));
            return SampleSet::explicit_points(std::move(v));
        })
        .def("merged", &SampleSet::merged)
        .def("__len__", &SampleSet::size)
        .def_property_readonly("points", [](const SampleSet& s) {
            py::list out;
            for (const auto& p : s.points()) {
                if (p.dim() == 1) {
                    out.append(p[0]);
                } else {
                    out.append(py::cast(p.coords()));
                }
            }
            return out;
        })
        .def("__repr__", &SampleSet::describe);

    py::class_<KernelExpr>(m, "Kernel")
        .def_static("szego", &KernelExpr::szego)
        .def_static("drury_arveson", &KernelExpr::drury_arveson, py::arg("dim"))
        .def_static("weighted_hardy", &KernelExpr::weighted_hardy, py::arg("weights"))
        .def_static("dbr", &dbr_kernel, py::arg("b"))
        .def_static("from_json", [](const py::object& o, std::size_t order) { return kernel_from_json(from_py(o), order); },
                    py::arg("descriptor"), py::arg("order") = kDefaultOrder)
        .def("to_json", [](const KernelExpr& k) { return to_py(kernel_to_json(k)); })
        .def_property_readonly("dim", &KernelExpr::dim)
        .def("__call__", [](const KernelExpr& k, const PointArg& z, const PointArg& w) { return k(to_point(z), to_point(w)); })
        .def("__add__", [](const KernelExpr& a, const KernelExpr& b) { return kernel_sum(a, b); })
        .def("__repr__", &KernelExpr::describe);
    m.def("pullback", &kernel_pullback, py::arg("kernel"), py::arg("map"));
    m.def("congruence", &kernel_congruence, py::arg("kernel"), py::arg("factor"));
    m.def("cnp_defect_kernel", [](const KernelExpr& k, const PointArg& base) { return cnp_defect_kernel(k, to_point(base)); });

    m.def("gram", [](const KernelExpr& k, const SampleSet& s) { return to_array(gram(k, s)); });
    m.def("eigenvalues", [](const py::array_t<Cplx, py::array::c_style | py::array::forcecast>& a) {
        return eigenvalues_hermitian(from_array(a));
    });
    m.def(
        "psd_verdict",
        [](const py::array_t<Cplx, py::array::c_style | py::array::forcecast>& a, std::optional<double> tol) {
            return to_py(to_json(psd_verdict(from_array(a), tol)));
        },
        py::arg("matrix"), py::arg("tol") = py::none());

    m.def(
        "cnp_certify",
        [](const KernelExpr& k, const PointArg& base, const std::optional<SampleSet>& s, std::optional<double> tol) {
            return to_py(to_json(cnp_certify(k, to_point(base), samples_or_default(s), tol)));
        },
        py::arg("kernel"), py::arg("base") = Cplx{}, py::arg("samples") = py::none(), py::arg("tol") = py::none());
    m.def(
        "cnp_basepoint_sweep",
        [](const KernelExpr& k, const std::vector<PointArg>& bases, const std::optional<SampleSet>& s) {
            std::vector<BallPoint> bs;
            for (const auto& b : bases) bs.push_back(to_point(b));
            py::list out;
            for (const auto& r : cnp_basepoint_sweep(k, bs, samples_or_default(s))) out.append(to_py(to_json(r)));
            return out;
        },
        py::arg("kernel"), py::arg("bases"), py::arg("samples") = py::none());

    m.def(
        "symbol",
        [](const py::object& spec, std::size_t order) { return build_symbol(symbol_from_json(from_py(spec)), order); },
        py::arg("spec"), py::arg("order") = kDefaultOrder);
    m.def(
        "closed_form_witness",
        [](const py::object& spec, std::size_t order) { return closed_form_witness(symbol_from_json(from_py(spec)), order); },
        py::arg("spec"), py::arg("order") = kDefaultOrder);
    m.def("compute_h", [](const PowerSeries& b) {
        const auto r = compute_h(b);
        return py::make_tuple(r.h, r.residual);
    });
    m.def(
        "injectivity_probe",
        [](const PowerSeries& b, const std::optional<SampleSet>& s) {
            return to_py(to_json(injectivity_probe(b, samples_or_default(s))));
        },
        py::arg("b"), py::arg("samples") = py::none());
    m.def(
        "decomposition_check",
        [](const PowerSeries& b, const std::optional<SampleSet>& s) {
            return to_py(to_json(decomposition_check(b, samples_or_default(s))));
        },
        py::arg("b"), py::arg("samples") = py::none());
    m.def(
        "witness_identity_check",
        [](const PowerSeries& b, const PowerSeries& f, const std::optional<SampleSet>& s) {
            return witness_identity_check(b, f, samples_or_default(s));
        },
        py::arg("b"), py::arg("f"), py::arg("samples") = py::none());
    m.def(
        "evaluate_criterion",
        [](const PowerSeries& b, const std::optional<PowerSeries>& witness, const std::optional<SampleSet>& s) {
            std::optional<ExtensionWitness> w;
            if (witness) w = ExtensionWitness{*witness};
            return to_py(to_json(evaluate_criterion(b, w, samples_or_default(s))));
        },
        py::arg("b"), py::arg("witness") = py::none(), py::arg("samples") = py::none());

    py::class_<SchurInterpolant>(m, "SchurInterpolant")
        .def("__call__", [](const SchurInterpolant& f, Cplx z) { return f(z); })
        .def("sampled_sup", &SchurInterpolant::sampled_sup, py::arg("radius") = 0.999, py::arg("n_angles") = 2048)
        .def_property_readonly("steps", [](const SchurInterpolant& f) {
            py::list out;
            for (const auto& s : f.steps()) out.append(py::make_tuple(s.node, s.parameter));
            return out;
        });
    m.def(
        "pick_solvable",
        [](const std::vector<Cplx>& nodes, const std::vector<Cplx>& targets, const std::optional<KernelExpr>& k,
           std::optional<double> tol) {
            return to_py(to_json(pick_solvable(InterpolationProblem::make(nodes, targets), k ? *k : KernelExpr::szego(), tol)));
        },
        py::arg("nodes"), py::arg("targets"), py::arg("kernel") = py::none(), py::arg("tol") = py::none());
    m.def("schur_interpolant", [](const std::vector<Cplx>& nodes, const std::vector<Cplx>& targets) {
        return schur_interpolant(InterpolationProblem::make(nodes, targets));
    });
    m.def(
        "blaschke_product", [](const std::vector<Cplx>& zeros, std::size_t order) { return blaschke_product(zeros, order); },
        py::arg("zeros"), py::arg("order") = kDefaultOrder);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
