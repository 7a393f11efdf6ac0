#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "zeta_eta/approx.hpp"
#include "zeta_eta/branch_logzeta.hpp"
#include "zeta_eta/distribution.hpp"
#include "zeta_eta/eta.hpp"
#include "zeta_eta/kernels.hpp"
#include "zeta_eta/zero_store.hpp"
#include "zeta_eta/zeta.hpp"

namespace py = pybind11;
using namespace zeta_eta;

namespace {

EvalPrecision prec_of(double abs_err) {
  EvalPrecision p;
  p.abs_err = abs_err;
  return p;
}

py::dict residual_dict(const ResidualReport& r) {
  py::dict d;
  d["s"] = r.s;
  d["eta"] = r.eta;
  d["eta_err"] = r.eta_err;
  d["poly"] = r.poly;
  d["y"] = r.y;
  d["r"] = r.r;
  d["bound_esrm"] = r.bound_esrm;
  d["bound_esrm2"] = r.bound_esrm2;
  d["rh_form_applies"] = r.rh_form_applies;
  d["ratio"] = r.ratio;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "log zeta, its iterated integrals and the prime-sum approximation";
  m.attr("__version__") = ZETA_ETA_VERSION;

  static PyObject* error_type = PyErr_NewException("zeta_eta._core.ZetaEtaError", PyExc_RuntimeError, nullptr);
  m.attr("ZetaEtaError") = py::reinterpret_borrow<py::object>(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("code") = std::string(errc_name(e.code()));
      inst.attr("line") = e.line() ? py::object(py::int_(*e.line())) : py::object(py::none());
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  // zeta
  m.def("zeta", [](Complex s, double abs_err) { return zeta(s, prec_of(abs_err)); }, py::arg("s"),
        py::arg("abs_err") = 1e-10);
  m.def("zeta_log_deriv", [](Complex s, double abs_err) { return zeta_log_deriv(s, prec_of(abs_err)); },
        py::arg("s"), py::arg("abs_err") = 1e-10);
  m.def("hardy_z", [](double t, double abs_err) { return hardy_z(t, prec_of(abs_err)); }, py::arg("t"),
        py::arg("abs_err") = 1e-10);
  m.def("riemann_siegel_theta", &riemann_siegel_theta, py::arg("t"));

  // zeros
  py::class_<ZeroRecord>(m, "ZeroRecord")
      .def_readonly("gamma", &ZeroRecord::gamma)
      .def_readonly("beta", &ZeroRecord::beta)
      .def_readonly("multiplicity", &ZeroRecord::multiplicity)
      .def_readonly("hypothetical", &ZeroRecord::hypothetical)
      .def("__repr__", [](const ZeroRecord& r) {
        return "ZeroRecord(beta=" + std::to_string(r.beta) + ", gamma=" + std::to_string(r.gamma) + ")";
      });

  py::class_<ZeroStore>(m, "ZeroStore")
      .def_property_readonly("t_max", &ZeroStore::t_max)
      .def_property_readonly("source", &ZeroStore::source)
      .def_property_readonly("has_hypothetical", &ZeroStore::has_hypothetical)
      .def("__len__", &ZeroStore::size)
      .def("records", [](const ZeroStore& s) { return std::vector<ZeroRecord>(s.records().begin(), s.records().end()); })
      .def("count_below", &ZeroStore::count_below, py::arg("T"), py::arg("include_hypothetical") = false);

  m.def(
      "load_zeros",
      [](const std::filesystem::path& path, const std::string& format) {
        if (format != "plain" && format != "csv") throw Error(Errc::InvalidArgument, "format is plain or csv");
        return load_zeros(path, format == "plain" ? ZeroFormat::Plain : ZeroFormat::Csv);
      },
      py::arg("path"), py::arg("format") = "plain");
  m.def("inject_hypothetical", &inject_hypothetical, py::arg("store"), py::arg("beta"), py::arg("gamma"),
        py::arg("multiplicity") = 1);
  m.def("count_window", &count_window, py::arg("store"), py::arg("t"), py::arg("h"));
  m.def(
      "rvmf_check",
      [](const ZeroStore& store, double T, double abs_err) {
        const auto r = rvmf_check(store, T, prec_of(abs_err));
        return py::dict(py::arg("n_store") = r.n_store, py::arg("n_rvmf") = r.n_rvmf, py::arg("delta") = r.delta);
      },
      py::arg("store"), py::arg("T"), py::arg("abs_err") = 1e-10);

  // branch
  m.def(
      "log_zeta",
      [](Complex s, const ZeroStore* store, double abs_err) {
        return store ? log_zeta(s, *store, prec_of(abs_err)) : log_zeta(s, prec_of(abs_err));
      },
      py::arg("s"), py::arg("store") = nullptr, py::arg("abs_err") = 1e-10);
  m.def("big_s", [](double t, const ZeroStore& store, double abs_err) { return big_s(t, store, prec_of(abs_err)); },
        py::arg("t"), py::arg("store"), py::arg("abs_err") = 1e-10);

  // kernels
  py::class_<Kernel>(m, "Kernel")
      .def_static("poly_bump", &Kernel::poly_bump, py::arg("d"))
      .def_static("tent", &Kernel::tent)
      .def_static("custom", &Kernel::custom, py::arg("f"), py::arg("d_smooth"), py::arg("name") = "custom")
      .def_property_readonly("name", &Kernel::name)
      .def_property_readonly("d_smooth", &Kernel::d_smooth)
      .def_property_readonly("admissible", &Kernel::admissible)
      .def("f", &Kernel::f)
      .def("cdf", &Kernel::cdf);
  m.def("u_f_H", &u_f_H, py::arg("kernel"), py::arg("H"), py::arg("x"));
  m.def("v_f_H", &v_f_H, py::arg("kernel"), py::arg("H"), py::arg("y"));
  m.def("e_star", [](int k, Complex z, double abs_err) { return e_star(k, z, prec_of(abs_err)); }, py::arg("m"),
        py::arg("z"), py::arg("abs_err") = 1e-12);
  m.def("exp_integral_e1", &exp_integral_e1, py::arg("z"));
  m.def(
      "u_m",
      [](const Kernel& k, double H, int order, Complex z, double abs_err) {
        return u_m(k, H, order, z, prec_of(abs_err));
      },
      py::arg("kernel"), py::arg("H"), py::arg("m"), py::arg("z"), py::arg("abs_err") = 1e-10);

  // eta
  py::class_<EtaValue>(m, "EtaValue")
      .def_readonly("s", &EtaValue::s)
      .def_readonly("m", &EtaValue::m)
      .def_readonly("value", &EtaValue::value)
      .def_readonly("est_err", &EtaValue::est_err)
      .def_property_readonly("route",
                             [](const EtaValue& v) { return v.route == EtaRoute::Vertical ? "vertical" : "iterated"; });
  m.def(
      "eta_vertical",
      [](Complex s, int order, const ZeroStore& store, double abs_err) {
        return eta_vertical(s, order, store, prec_of(abs_err));
      },
      py::arg("s"), py::arg("m"), py::arg("store"), py::arg("abs_err") = 1e-10);
  m.def(
      "eta_iterated",
      [](Complex s, int order, const ZeroStore& store, double abs_err) {
        return eta_iterated(s, order, store, prec_of(abs_err));
      },
      py::arg("s"), py::arg("m"), py::arg("store"), py::arg("abs_err") = 1e-10);
  m.def(
      "s_m",
      [](double t, int order, const ZeroStore& store, double abs_err) { return s_m(t, order, store, prec_of(abs_err)); },
      py::arg("t"), py::arg("m"), py::arg("store"), py::arg("abs_err") = 1e-10);
  m.def("zero_sum", &zero_sum, py::arg("s"), py::arg("m"), py::arg("store"));

  // approximation
  py::class_<MangoldtSieve>(m, "MangoldtSieve")
      .def(py::init<std::int64_t>(), py::arg("limit"))
      .def_property_readonly("limit", &MangoldtSieve::limit)
      .def("__call__", &MangoldtSieve::lambda, py::arg("n"))
      .def("is_prime", &MangoldtSieve::is_prime, py::arg("n"));

  py::class_<ApproxConfig>(m, "ApproxConfig")
      .def(py::init([](int order, double X, double H, const Kernel& k) { return ApproxConfig{order, X, H, k}; }),
           py::arg("m") = 0, py::arg("X") = 10.0, py::arg("H") = 1.0, py::arg("kernel") = Kernel::poly_bump(4))
      .def_readwrite("m", &ApproxConfig::m)
      .def_readwrite("X", &ApproxConfig::X)
      .def_readwrite("H", &ApproxConfig::H)
      .def_readwrite("kernel", &ApproxConfig::kernel)
      .def("validate", &ApproxConfig::validate);

  m.def("dirichlet_poly", &dirichlet_poly, py::arg("s"), py::arg("cfg"), py::arg("sieve"));
  m.def("y_m", &y_m, py::arg("s"), py::arg("X"), py::arg("m"), py::arg("store"));
  m.def(
      "residual",
      [](Complex s, const ApproxConfig& cfg, const ZeroStore& store, const MangoldtSieve& sieve, double abs_err) {
        return residual_dict(residual(s, cfg, store, sieve, prec_of(abs_err)));
      },
      py::arg("s"), py::arg("cfg"), py::arg("store"), py::arg("sieve"), py::arg("abs_err") = 1e-8);
  m.def("bound_esrm", &bound_esrm, py::arg("s"), py::arg("cfg"), py::arg("store"));
  m.def("bound_esrm2", &bound_esrm2, py::arg("s"), py::arg("cfg"));
  m.def("p_f", &p_f, py::arg("s"), py::arg("X"), py::arg("kernel"), py::arg("sieve"));
  m.def(
      "relzz_decompose",
      [](double t, double X, const Kernel& k, const ZeroStore& store, const MangoldtSieve& sieve) {
        const auto d = relzz_decompose(t, X, k, store, sieve);
        return py::dict(py::arg("lhs") = d.lhs, py::arg("main1") = d.main1, py::arg("main2") = d.main2,
                        py::arg("diff") = d.diff);
      },
      py::arg("t"), py::arg("X"), py::arg("kernel"), py::arg("store"), py::arg("sieve"));

  // distribution
  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](double T, std::int64_t count, const std::string& scheme, std::uint64_t seed,
                       const std::string& interval) {
             return GridSpec{T, count, parse_scheme(scheme), seed, parse_interval(interval)};
           }),
           py::arg("T"), py::arg("count"), py::arg("scheme") = "stratified-jitter", py::arg("seed") = 0,
           py::arg("interval") = "T-2T")
      .def_property_readonly("lo", &GridSpec::lo)
      .def_property_readonly("hi", &GridSpec::hi);
  m.def("sample_grid", [](const GridSpec& g) { return sample_grid(g); }, py::arg("grid"));
  m.def("gaussian_tail", &gaussian_tail, py::arg("v"));
  m.def(
      "tail_table",
      [](const std::vector<double>& Vs, const GridSpec& g, const ZeroStore& store, int threads) {
        py::list out;
        for (const auto& r : tail_table(Vs, g, store, threads))
          out.append(py::dict(py::arg("V") = r.est.V, py::arg("fraction") = r.est.fraction,
                              py::arg("stderr") = r.est.std_error, py::arg("gaussian_ref") = r.est.ref_gaussian,
                              py::arg("jutila_ref") = r.jutila_ref));
        return out;
      },
      py::arg("V"), py::arg("grid"), py::arg("store"), py::arg("threads") = 1);
  m.def(
      "moment_residual",
      [](int order, double X, const GridSpec& g, const ZeroStore& store, const MangoldtSieve& sieve, int k,
         double sigma, double C, bool waive_range, double abs_err, int threads) {
        MomentOptions o;
        o.k = k;
        o.sigma = sigma;
        o.C = C;
        o.waive_range = waive_range;
        const auto r = moment_residual(order, X, g, store, sieve, prec_of(abs_err), o, threads);
        return py::dict(py::arg("empirical") = r.empirical, py::arg("bound") = r.bound,
                        py::arg("max_abs") = r.max_abs, py::arg("samples") = r.samples,
                        py::arg("range_waived") = r.range_waived);
      },
      py::arg("m"), py::arg("X"), py::arg("grid"), py::arg("store"), py::arg("sieve"), py::arg("k") = 1,
      py::arg("sigma") = 0.5, py::arg("C") = 10.0, py::arg("waive_range") = false, py::arg("abs_err") = 1e-8,
      py::arg("threads") = 1);
}
