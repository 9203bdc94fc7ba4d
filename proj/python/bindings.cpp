// Python bindings. Rationals cross the boundary as strings ("p/q"); the
// package wrapper turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conepolar/catalog.hpp"
#include "conepolar/cones.hpp"
#include "conepolar/errors.hpp"
#include "conepolar/invariants.hpp"

namespace py = pybind11;
using namespace conepolar;

namespace {

RationalVector to_vector(const std::vector<std::string>& xs) {
  std::vector<Rational> v;
  v.reserve(xs.size());
  for (const auto& x : xs) v.push_back(Rational::parse(x));
  return RationalVector(std::move(v));
}

std::vector<std::string> from_vector(const RationalVector& v) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

py::dict polar_dict(const PolarValue& p) {
  py::dict d;
  d["lo"] = p.value.lo.str();
  d["hi"] = p.value.hi.str();
  d["exact"] = p.exact();
  d["outside_dual"] = p.outside_dual;
  if (p.argmin) d["argmin"] = from_vector(*p.argmin);
  return d;
}

Route route_of(const std::string& s) {
  auto r = parse_route(s);
  if (!r) throw ContractError("unknown route '" + s + "' (expected exit, polar or divisors)");
  return *r;
}

PolarOptions options(const std::string& tol) { return PolarOptions{Rational::parse(tol)}; }

}  // namespace

PYBIND11_MODULE(_conepolar, m) {
  m.doc() = "Exact local positivity invariants on polyhedral cone models";

  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);

  py::class_<VarietyModel>(m, "Model")
      .def_readonly("name", &VarietyModel::name)
      .def_readonly("dim", &VarietyModel::dim)
      .def_readonly("rho", &VarietyModel::rho)
      .def_readonly("divisor_basis", &VarietyModel::divisor_basis)
      .def_readonly("curve_basis", &VarietyModel::curve_basis)
      .def_property_readonly("profiles",
                             [](const VarietyModel& v) {
                               std::vector<std::string> names;
                               for (const auto& p : v.profiles) names.push_back(p.name);
                               return names;
                             })
      .def("__repr__", [](const VarietyModel& v) {
        return "<Model " + v.name + " dim=" + std::to_string(v.dim) + " rho=" + std::to_string(v.rho) + ">";
      });

  m.def("load_model", [](const std::string& text) { return load_model(text); }, py::arg("json_text"));
  m.def("load_model_file", [](const std::string& path) { return load_model_file(path); }, py::arg("path"));
  m.def("load_catalog_model", &load_catalog_model, py::arg("id_or_path"));
  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : list_catalog()) ids.push_back(e.id);
    return ids;
  });

  m.def("seshadri_s", [](const VarietyModel& v, const std::string& p, const std::vector<std::string>& l) {
    return seshadri_s(v, p, to_vector(l)).str();
  });
  m.def("seshadri_s_via_curves", [](const VarietyModel& v, const std::string& p, const std::vector<std::string>& l) {
    return seshadri_s_via_curves(v, p, to_vector(l)).str();
  });
  m.def("nakayama_n", [](const VarietyModel& v, const std::string& p, const std::vector<std::string>& l) {
    return nakayama_n(v, p, to_vector(l)).str();
  });
  m.def("nakayama_N",
        [](const VarietyModel& v, const std::string& p, const std::vector<std::string>& a, const std::string& route,
           const std::string& tol) { return polar_dict(nakayama_N(v, p, to_vector(a), route_of(route), options(tol))); },
        py::arg("model"), py::arg("profile"), py::arg("alpha"), py::arg("route") = "exit", py::arg("tol") = "1/1000000000");
  m.def("seshadri_S",
        [](const VarietyModel& v, const std::string& p, const std::vector<std::string>& a, const std::string& route,
           const std::string& tol) { return polar_dict(seshadri_S(v, p, to_vector(a), route_of(route), options(tol))); },
        py::arg("model"), py::arg("profile"), py::arg("alpha"), py::arg("route") = "exit", py::arg("tol") = "1/1000000000");
  m.def("global_S", [](const VarietyModel& v, const std::vector<std::string>& a) {
    return global_S(v, to_vector(a)).str();
  });
  m.def("volume", [](const VarietyModel& v, const std::vector<std::string>& l) { return volume(v, to_vector(l)).str(); });
  m.def(
      "vol_hat",
      [](const VarietyModel& v, const std::vector<std::string>& a, const std::string& tol) {
        const auto i = vol_hat(v, to_vector(a), options(tol));
        return std::make_pair(i.lo.str(), i.hi.str());
      },
      py::arg("model"), py::arg("alpha"), py::arg("tol") = "1/1000000000");
  m.def(
      "M",
      [](const VarietyModel& v, const std::vector<std::string>& a, const std::string& tol) {
        const auto i = M_func(v, to_vector(a), options(tol));
        return std::make_pair(i.lo.str(), i.hi.str());
      },
      py::arg("model"), py::arg("alpha"), py::arg("tol") = "1/1000000000");

  m.def(
      "dual_rays",
      [](const VarietyModel& v, const std::string& cone) {
        const PolyhedralCone* c = nullptr;
        if (cone == "nef") c = &v.nef;
        else if (cone == "eff_div") c = &v.eff_div;
        else if (cone == "eff_curves") c = &v.eff_curves;
        else if (cone == "mov_curves") c = &v.mov_curves;
        else throw ContractError("unknown cone '" + cone + "'");
        std::vector<std::vector<std::string>> rays;
        const PolyhedralCone dual = dual_cone(*c);
        for (const auto& r : dual.rays()) rays.push_back(from_vector(r));
        return rays;
      },
      py::arg("model"), py::arg("cone"));

  m.def(
      "run_suite",
      [](const VarietyModel& v, std::size_t samples, std::uint64_t seed, const std::string& tol) {
        py::gil_scoped_release release;
        return report_json(run_suite(v, {samples, seed, Rational::parse(tol)}));
      },
      py::arg("model"), py::arg("samples") = 200, py::arg("seed") = 1, py::arg("tol") = "1/1000000000");
  m.def(
      "golden_run",
      [](const VarietyModel& v, const std::string& tol) { return report_json({golden_run(v, Rational::parse(tol))}); },
      py::arg("model"), py::arg("tol") = "1/1000000000");
}
