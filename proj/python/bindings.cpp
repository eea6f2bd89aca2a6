#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nbs/dynamics.hpp"
#include "nbs/phasespace.hpp"
#include "nbs/squeeze.hpp"
#include "nbs/states.hpp"
#include "nbs/stats.hpp"
#include "nbs/su11.hpp"

namespace py = pybind11;
using namespace nbs;

namespace {

TruncationPolicy make_policy(double tail_eps, std::size_t n_cap)
{
    TruncationPolicy p{tail_eps, n_cap};
    p.validate();
    return p;
}

std::vector<complex> to_list(std::span<const complex> s)
{
    return {s.begin(), s.end()};
}

Quasiprobability kind_of(const std::string& kind, double s)
{
    if (kind == "q") {
        return Quasiprobability::q();
    }
    if (kind == "wigner") {
        return Quasiprobability::w();
    }
    if (kind == "s") {
        return Quasiprobability::s_param(s);
    }
    throw InvalidArgument("kind must be one of 'q', 'wigner', 's', got '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Negative binomial states: construction, statistics, squeezing, phase space, dynamics";

    static py::exception<NumericalError> numerical(m, "NumericalError", PyExc_ArithmeticError);
    static py::exception<TruncationError> truncation(m, "TruncationError", numerical.ptr());
    static py::exception<ConvergenceError> convergence(m, "ConvergenceError", numerical.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const TruncationError& e) {
            py::set_error(truncation, e.what());
        } catch (const ConvergenceError& e) {
            py::set_error(convergence, e.what());
        } catch (const NumericalError& e) {
            py::set_error(numerical, e.what());
        }
    });

    py::class_<FockVector>(m, "FockVector")
        .def(py::init([](std::vector<complex> amps, double tail) { return FockVector(std::move(amps), tail); }),
             py::arg("amplitudes"), py::arg("tail_bound") = 0.0)
        .def_property_readonly("n_max", &FockVector::n_max)
        .def_property_readonly("tail_bound", &FockVector::tail_bound)
        .def_property_readonly("amplitudes", [](const FockVector& v) { return to_list(v.amplitudes()); })
        .def("norm_squared", &FockVector::norm_squared)
        .def("probabilities", &FockVector::probabilities)
        .def("normalized", &FockVector::normalized)
        .def("resized", &FockVector::resized, py::arg("n_max"))
        .def("__len__", &FockVector::size)
        .def("__getitem__", [](const FockVector& v, std::size_t n) {
            if (n >= v.size()) {
                throw py::index_error("Fock index out of range");
            }
            return v[n];
        });

    py::class_<PairBasisVector>(m, "PairBasisVector")
        .def_property_readonly("n_max", &PairBasisVector::n_max)
        .def_property_readonly("offset_m", &PairBasisVector::offset_m)
        .def_property_readonly("tail_bound", &PairBasisVector::tail_bound)
        .def_property_readonly("amplitudes", [](const PairBasisVector& v) { return to_list(v.amplitudes()); })
        .def("norm_squared", &PairBasisVector::norm_squared)
        .def("signal_distribution", &PairBasisVector::signal_distribution)
        .def("pair_distribution", &PairBasisVector::pair_distribution);

    const auto eps = py::arg("tail_eps") = 1e-12;
    const auto cap = py::arg("n_cap") = 4096;

    m.def("tail_mass_nbs", [](double eta, std::size_t mm, std::size_t n_max) {
        return tail_mass_nbs(NBSParams(eta, mm), n_max);
    }, py::arg("eta"), py::arg("m"), py::arg("n_max"));
    m.def("choose_n_max", [](double eta, std::size_t mm, double e, std::size_t c) {
        return choose_n_max(NBSParams(eta, mm), make_policy(e, c));
    }, py::arg("eta"), py::arg("m"), eps, cap);

    m.def("nbs", [](double eta, std::size_t mm, double e, std::size_t c) {
        return nbs::nbs(NBSParams(eta, mm), make_policy(e, c));
    }, py::arg("eta"), py::arg("m"), eps, cap);
    m.def("nbs_on", [](double eta, std::size_t mm, std::size_t n_max) {
        return nbs_on(NBSParams(eta, mm), n_max);
    }, py::arg("eta"), py::arg("m"), py::arg("n_max"));
    m.def("geometric_state", [](double eta, double e, std::size_t c) {
        return geometric_state(eta, make_policy(e, c));
    }, py::arg("eta"), eps, cap);
    m.def("excited_geometric", [](double eta, std::size_t mm, double e, std::size_t c) {
        return excited_geometric(eta, mm, make_policy(e, c));
    }, py::arg("eta"), py::arg("m"), eps, cap);
    m.def("number_state", &number_state, py::arg("m"), py::arg("n_max"));
    m.def("two_mode_nbs", [](double eta, std::size_t mm, double e, std::size_t c) {
        return two_mode_nbs(eta, mm, make_policy(e, c));
    }, py::arg("eta"), py::arg("m"), eps, cap);

    m.def("su11_displace", [](double xi, std::size_t mm, double e, std::size_t c) {
        return su11_displace(xi, mm, make_policy(e, c));
    }, py::arg("xi"), py::arg("m"), eps, cap);
    m.def("ladder_residual", [](double eta, std::size_t mm) { return ladder_residual(eta, mm); },
          py::arg("eta"), py::arg("m"));
    m.def("nonlinear_eigen_residual", [](double eta, std::size_t mm) { return nonlinear_eigen_residual(eta, mm); },
          py::arg("eta"), py::arg("m"));
    m.def("disentangle_check", &disentangle_check, py::arg("alpha"), py::arg("m"));

    m.def("generating_function", &generating_function, py::arg("lam"), py::arg("eta"), py::arg("m"));
    m.def("factorial_moments", [](double eta, std::size_t mm) {
        const FactorialMoments f = factorial_moments(eta, mm);
        return py::make_tuple(f.f1, f.f2);
    }, py::arg("eta"), py::arg("m"));
    m.def("mandel_q", [](double eta, std::size_t mm) -> py::object {
        const MandelQ q = mandel_q(eta, mm);
        if (q.degenerate) {
            return py::none();
        }
        return py::float_(q.value);
    }, py::arg("eta"), py::arg("m"));
    m.def("mandel_q_numeric", &mandel_q_numeric, py::arg("state"));
    m.def("eta_threshold", &eta_threshold, py::arg("m"));
    m.def("stats_report", [](double eta, std::size_t mm, std::vector<double> lambdas, double e, std::size_t c) {
        const StatsReport r = stats_report(NBSParams(eta, mm), lambdas, make_policy(e, c));
        py::dict d;
        d["eta"] = r.eta;
        d["m"] = r.m;
        d["g_values"] = r.g_values;
        d["mean_n"] = r.f1;
        d["f2"] = r.f2;
        d["mandel_q"] = r.mandel_q_closed;
        d["mandel_q_degenerate"] = r.mandel_q_degenerate;
        d["mandel_q_numeric"] = r.mandel_q_numeric;
        d["eta_minus"] = r.eta_minus;
        d["sub_poissonian"] = r.sub_poissonian;
        d["n_max"] = r.n_max;
        d["tail_mass"] = r.tail_mass;
        return d;
    }, py::arg("eta"), py::arg("m"), py::arg("lambdas") = std::vector<double>{0.5, 1.0}, eps, cap);

    m.def("quadrature_variances", [](const FockVector& v) {
        const QuadratureVariances q = quadrature_variances(v);
        return py::make_tuple(q.var_x, q.var_y);
    }, py::arg("state"));
    m.def("variance_sample", [](double eta, std::size_t mm, double e, std::size_t c) {
        const VarianceSample s = variance_sample(eta, mm, make_policy(e, c));
        py::dict d;
        d["eta"] = s.eta;
        d["m"] = s.m;
        d["mean_a"] = s.mean_a;
        d["mean_a2"] = s.mean_a2;
        d["var_x"] = s.var_x;
        d["var_y"] = s.var_y;
        return d;
    }, py::arg("eta"), py::arg("m"), eps, py::arg("n_cap") = 32768);
    m.def("squeezing_criticals", [](std::size_t m_lo, std::size_t m_hi, std::vector<double> grid, double e,
                                    std::size_t c) {
        const SqueezingCriticals k = squeezing_criticals(squeezing_scan(m_lo, m_hi, grid, make_policy(e, c)));
        return py::make_tuple(k.x_onset, k.y_last);
    }, py::arg("m_lo"), py::arg("m_hi"), py::arg("eta_grid"), eps, py::arg("n_cap") = 32768);

    m.def("chi_element", &chi_element, py::arg("n"), py::arg("k"), py::arg("beta"));
    m.def("q_function", [](const FockVector& v, complex b) { return q_function(v, {b.real(), b.imag()}); },
          py::arg("state"), py::arg("beta"));
    m.def("wigner", [](const FockVector& v, complex b) { return wigner(v, {b.real(), b.imag()}); },
          py::arg("state"), py::arg("beta"));
    m.def("s_distribution", [](const FockVector& v, complex b, double s) {
        return s_distribution(v, {b.real(), b.imag()}, s);
    }, py::arg("state"), py::arg("beta"), py::arg("s"));
    m.def("grid_evaluate", [](const FockVector& v, const std::string& kind, double s, double x_min, double x_max,
                              double y_min, double y_max, std::size_t nx, std::size_t ny) {
        const GridSpec spec{x_min, x_max, y_min, y_max, nx, ny};
        const PhaseSpaceGrid g = grid_evaluate(v, spec, kind_of(kind, s));
        std::vector<std::vector<double>> rows(ny, std::vector<double>(nx));
        for (std::size_t iy = 0; iy < ny; ++iy) {
            for (std::size_t ix = 0; ix < nx; ++ix) {
                rows[iy][ix] = g.at(ix, iy);
            }
        }
        return py::make_tuple(rows, g.integral);
    }, py::arg("state"), py::arg("kind") = "wigner", py::arg("s") = 0.0, py::arg("x_min") = -6.0,
       py::arg("x_max") = 6.0, py::arg("y_min") = -6.0, py::arg("y_max") = 6.0, py::arg("nx") = 201,
       py::arg("ny") = 201);

    m.def("eta_after", &eta_after, py::arg("chi_t"));
    m.def("evolve_intensity_dependent", [](double chi_t, std::size_t mm, double e, std::size_t c) {
        return evolve_intensity_dependent({chi_t, mm, make_policy(e, c)});
    }, py::arg("chi_t"), py::arg("m"), eps, cap);
    m.def("evolve_parametric", [](double chi_t, double e, std::size_t c) {
        return evolve_parametric(chi_t, make_policy(e, c));
    }, py::arg("chi_t"), eps, cap);
    m.def("atom_passage", [](const PairBasisVector& s, double g_t, std::size_t mp) {
        const AtomPassage a = atom_passage(s, g_t, mp);
        return py::make_tuple(a.ground_branch, a.excited_weight);
    }, py::arg("state"), py::arg("g_t"), py::arg("m_photon"));
    m.def("fidelity", py::overload_cast<const FockVector&, const FockVector&>(&fidelity), py::arg("a"),
          py::arg("b"));
    m.def("fidelity", py::overload_cast<const PairBasisVector&, const PairBasisVector&>(&fidelity), py::arg("a"),
          py::arg("b"));
}
