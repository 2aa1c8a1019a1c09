#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qubeam/sweep.hpp"

namespace py = pybind11;
using namespace qubeam;

namespace {

py::list matrix_rows(const PhotonMatrix& m) {
  py::list rows;
  for (int i = 0; i < 4; ++i) {
    py::list row;
    for (int j = 0; j < 4; ++j) row.append(m(i, j));
    rows.append(row);
  }
  return rows;
}

RootMethod method_from(const std::string& name) {
  if (name == "exact") return RootMethod::Exact;
  if (name == "pert" || name == "perturbative") return RootMethod::Perturbative;
  throw Error(ErrorCode::ParseError, "method must be 'exact' or 'pert'");
}

}  // namespace

PYBIND11_MODULE(_qubeam, m) {
  m.doc() = "Two-photon entanglement through a magnetized electron medium";
  m.attr("__version__") = std::string(version());

  static py::handle exc_type = py::exception<Error>(m, "QubeamError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::gil_scoped_acquire gil;
      py::object inst = py::reinterpret_borrow<py::object>(exc_type)(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc_type.ptr(), inst.ptr());
    }
  });

  py::class_<ModelParams>(m, "ModelParams")
      .def_readonly("kappa1", &ModelParams::kappa1)
      .def_readonly("kappa2", &ModelParams::kappa2)
      .def_readonly("omega", &ModelParams::omega)
      .def_readonly("eps", &ModelParams::eps)
      .def_readonly("unit_label", &ModelParams::unit_label)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(kappa1=" + format_number(p.kappa1) + ", kappa2=" +
               format_number(p.kappa2) + ", omega=" + format_number(p.omega) +
               ", eps=" + format_number(p.eps) + ")";
      });

  m.def("make_params", &make_params, py::arg("kappa1"), py::arg("kappa2"), py::arg("omega"),
        py::arg("eps"), py::arg("resonance_margin") = kDefaultResonanceMargin,
        py::arg("unit_label") = "THz");

  m.def(
      "derive_couplings",
      [](double kappa0, int m1, int m2, double np_momentum, double B_field) {
        const Couplings c =
            derive_couplings(PhysicalInputs::from_box(kappa0, m1, m2, np_momentum, B_field));
        return py::dict(py::arg("eps_raw") = c.eps_raw, py::arg("eps") = c.eps,
                        py::arg("omega") = c.omega, py::arg("kappa1") = c.kappa1,
                        py::arg("kappa2") = c.kappa2);
      },
      py::arg("kappa0"), py::arg("m1"), py::arg("m2"), py::arg("np_momentum"),
      py::arg("B_field"));

  auto roots_dict = [](const ModeRoots& r) {
    py::dict d;
    for (const auto mode : kModes) {
      d[py::make_tuple(mode.k, mode.lambda)] = r.at(mode).value();
    }
    return d;
  };
  auto shifts_dict = [](const ModeRoots& r) {
    py::dict d;
    for (const auto mode : kModes) d[py::make_tuple(mode.k, mode.lambda)] = r.at(mode).shift;
    return d;
  };

  m.def(
      "exact_roots",
      [roots_dict](const ModelParams& p, double tol) {
        SolverOptions o;
        o.tol = tol;
        return roots_dict(exact_roots(p, o));
      },
      py::arg("params"), py::arg("tol") = 1e-12,
      "Exact dispersion roots keyed by (k, lambda).");
  m.def(
      "perturbative_roots", [roots_dict](const ModelParams& p) { return roots_dict(perturbative_roots(p)); },
      py::arg("params"));
  m.def(
      "root_shifts",
      [shifts_dict](const ModelParams& p, const std::string& method) {
        return shifts_dict(solve_roots(p, method_from(method)));
      },
      py::arg("params"), py::arg("method") = "exact", "r - kappa_k keyed by (k, lambda).");

  m.def(
      "residual", [](double r, const ModelParams& p, int lambda) { return residual(r, p, lambda); },
      py::arg("r"), py::arg("params"), py::arg("lambda_"));
  m.def(
      "residual_split",
      [](double kappa, double shift, const ModelParams& p, int lambda) {
        return residual(ModeFrequency{kappa, shift}, p, lambda);
      },
      py::arg("kappa"), py::arg("shift"), py::arg("params"), py::arg("lambda_"),
      "Residual at kappa + shift without rounding the sum.");

  m.def(
      "block",
      [](const ModelParams& p, const std::string& method) {
        const BogoliubovBlock b = build_block(solve_roots(p, method_from(method)), p);
        const IdentityDefect d = identity_defect(b);
        return py::dict(py::arg("u") = matrix_rows(b.u), py::arg("v") = matrix_rows(b.v),
                        py::arg("q") = b.q, py::arg("defect_uu") = d.uu,
                        py::arg("defect_sym") = d.sym);
      },
      py::arg("params"), py::arg("method") = "exact");

  m.def(
      "amplitudes",
      [](const ModelParams& p, const std::string& pol, const std::string& method) {
        const auto a = amplitudes(build_block(solve_roots(p, method_from(method)), p),
                                  PolarizationConfig::parse(pol));
        return py::make_tuple(std::vector<Complex>(a.v.begin(), a.v.end()), a.raw_norm);
      },
      py::arg("params"), py::arg("pol") = "du", py::arg("method") = "exact",
      "Normalized amplitudes over |00>,|01>,|10>,|11> and the raw norm.");

  m.def(
      "closed_form_ab",
      [](const ModelParams& p, const std::string& pol) {
        const ClosedFormAB ab = closed_form_ab(exact_roots(p), p, PolarizationConfig::parse(pol));
        return py::make_tuple(ab.a, ab.b);
      },
      py::arg("params"), py::arg("pol") = "du");

  m.def("info_measure", [](double y) { return info_measure(y); }, py::arg("y"));
  m.def(
      "phi_closed",
      [](const ModelParams& p) {
        const PhiClosed c = phi_closed(p);
        return py::make_tuple(c.phi, c.y_closed);
      },
      py::arg("params"));
  m.def("asymptotic_info", &asymptotic_info, py::arg("params"));

  m.def(
      "measures",
      [](const ModelParams& p, const std::string& pol, const std::string& method) {
        const EntanglementReport r = full_report(p, PolarizationConfig::parse(pol), method_from(method));
        py::dict d;
        d["config"] = r.config.name();
        d["y"] = r.y;
        d["one_minus_y"] = r.y_deficit;
        d["E_I"] = r.E_I;
        d["E_S"] = r.E_S;
        d["raw_norm"] = r.raw_norm;
        if (r.closed_form != ClosedFormKind::None) {
          d["Phi"] = r.Phi;
          d["y_closed"] = r.y_closed;
          d["E_I_asymptotic"] = r.E_I_asymptotic;
          d["E_S_closed"] = r.E_S_closed;
        }
        return d;
      },
      py::arg("params"), py::arg("pol") = "du", py::arg("method") = "exact");

  m.def(
      "sweep",
      [](const std::map<std::string, std::string>& settings) {
        KeyValues kv(settings.begin(), settings.end());
        const SweepTable t = run_sweep(parse_config(kv));
        py::list rows;
        for (const SweepRow& r : t.rows) {
          rows.append(py::dict(py::arg("omega") = r.omega, py::arg("delta_kappa") = r.delta_kappa,
                               py::arg("kappa2") = r.kappa2, py::arg("y") = r.y,
                               py::arg("E_I") = r.E_I, py::arg("E_S") = r.E_S,
                               py::arg("E_I_asymptotic") = r.E_I_asymptotic,
                               py::arg("E_S_closed") = r.E_S_closed,
                               py::arg("raw_norm") = r.raw_norm, py::arg("status") = r.status));
        }
        return rows;
      },
      py::arg("settings") = std::map<std::string, std::string>{},
      "Grid sweep; settings use the config-file keys (values as strings).");

  m.def(
      "sweep_csv",
      [](const std::map<std::string, std::string>& settings) {
        KeyValues kv(settings.begin(), settings.end());
        std::ostringstream os;
        write_csv(run_sweep(parse_config(kv)), os);
        return os.str();
      },
      py::arg("settings") = std::map<std::string, std::string>{});
}
