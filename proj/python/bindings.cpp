#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homlie/classify.hpp"
#include "homlie/dsl.hpp"

namespace py = pybind11;
using namespace homlie;

namespace {

Window window_of(std::pair<int, int> w) {
  if (w.first > w.second) throw ValidationError("empty window");
  return {w.first, w.second};
}

MapClass class_of(const std::string& name, int k) {
  auto cls = parse_map_class(name, k);
  if (!cls) throw ValidationError("unknown map class '" + name + "'");
  return *cls;
}

py::dict report(const AlgebraPresentation& p, const CheckReport& r) {
  py::dict d;
  d["passed"] = r.passed();
  d["instances"] = r.instances;
  py::list w;
  for (const auto& x : r.witnesses) w.append(describe(p, x));
  d["witnesses"] = w;
  return d;
}

py::list basis_of(const AlgebraPresentation& p, const HomogeneousAnsatz& a, const std::vector<Assignment>& basis) {
  py::list out;
  for (const auto& v : basis) {
    py::dict entry;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      const auto& s = a.slots[i];
      py::tuple inputs(s.inputs.size());
      for (std::size_t j = 0; j < s.inputs.size(); ++j) inputs[j] = p.generator_name(s.inputs[j]);
      entry[py::make_tuple(inputs, p.generator_name(s.target))] = v[i].to_string();
    }
    out.append(entry);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Biderivations and commuting maps of graded Hom-Lie (super)algebras over Q(q)";

  py::register_exception<Error>(m, "HomlieError", PyExc_ValueError);

  m.def("builtin_names", &builtin_names);
  m.def("presentation", [](const std::string& algebra) { return serialize(resolve_algebra(algebra)); },
        py::arg("algebra"), "Presentation text of a built-in or .alg file.");
  m.def("q_bracket", [](int n) { return q_bracket_number(n).to_string(); }, py::arg("n"));
  m.def("q_brace", [](int n) { return q_brace_number(n).to_string(); }, py::arg("n"));

  m.def(
      "check_axioms",
      [](const std::string& algebra, std::pair<int, int> window) {
        const auto p = resolve_algebra(algebra);
        CheckReport r;
        {
          py::gil_scoped_release release;
          r = check_axioms(p, window_of(window));
        }
        return report(p, r);
      },
      py::arg("algebra"), py::arg("window") = std::pair{-6, 6});

  m.def(
      "check_multiplicative",
      [](const std::string& algebra, std::pair<int, int> window) {
        const auto p = resolve_algebra(algebra);
        return report(p, check_multiplicative(p, window_of(window)));
      },
      py::arg("algebra"), py::arg("window") = std::pair{-6, 6});

  m.def(
      "stable_solve",
      [](const std::string& algebra, const std::string& map_class, int s, int parity, std::pair<int, int> window,
         int delta, int k) {
        const auto p = resolve_algebra(algebra);
        StableSolution st;
        {
          py::gil_scoped_release release;
          StableOptions o;
          o.window_nullity = true;
          st = stable_solve(p, class_of(map_class, k), s, parity, window_of(window), delta, o);
        }
        py::dict d;
        d["dim"] = st.space.dim();
        d["window_dim"] = st.window_dim;
        d["enlarged_dim"] = st.enlarged_dim;
        d["basis"] = basis_of(p, st.ansatz, st.space.basis);
        return d;
      },
      py::arg("algebra"), py::arg("map_class"), py::arg("s") = 0, py::arg("parity") = 0,
      py::arg("window") = std::pair{-6, 6}, py::arg("delta") = 2, py::arg("k") = 1);

  m.def(
      "classify",
      [](const std::string& algebra, const std::string& map_class, int s, int parity, std::vector<std::string> knowns,
         std::pair<int, int> window, int delta) {
        const auto p = resolve_algebra(algebra);
        std::vector<KnownMap> ks;
        for (const auto& k : knowns) ks.push_back(known_map(p, k));
        StableSolution st;
        DecompositionReport rep;
        {
          py::gil_scoped_release release;
          st = stable_solve(p, class_of(map_class, 1), s, parity, window_of(window), delta);
          rep = decompose(st.ansatz, st.space, ks);
        }
        py::dict d;
        d["dim"] = st.space.dim();
        d["residual_dim"] = rep.residual_dim;
        d["unmatched_knowns"] = rep.unmatched_knowns;
        py::list coeffs;
        for (const auto& c : rep.coefficients) {
          if (!c) {
            coeffs.append(py::none());
            continue;
          }
          py::dict cd;
          for (const auto& [name, x] : *c) cd[py::str(name)] = x.to_string();
          coeffs.append(cd);
        }
        d["coefficients"] = coeffs;
        return d;
      },
      py::arg("algebra"), py::arg("map_class"), py::arg("s"), py::arg("parity"), py::arg("knowns"),
      py::arg("window") = std::pair{-6, 6}, py::arg("delta") = 2);

  m.def(
      "commuting_maps",
      [](const std::string& algebra, int parity, std::pair<int, int> window, int delta, std::pair<int, int> degrees) {
        const auto p = resolve_algebra(algebra);
        CommutingFamily fam;
        {
          py::gil_scoped_release release;
          fam = solve_commuting_maps(p, parity, window_of(window), delta, {degrees.first, degrees.second, {}});
        }
        py::dict d;
        d["parameters"] = fam.parameters;
        d["degrees"] = fam.degrees;
        d["rule"] = fam.describe(p);
        return d;
      },
      py::arg("algebra"), py::arg("parity") = 0, py::arg("window") = std::pair{-6, 6}, py::arg("delta") = 2,
      py::arg("degrees") = std::pair{-4, 4});

  m.def(
      "corollaries",
      [](const std::string& algebra, const std::string& property, int parity, std::pair<int, int> window, int delta,
         std::pair<int, int> degrees) {
        const auto p = resolve_algebra(algebra);
        auto prop = parse_corollary_property(property);
        if (!prop) throw ValidationError("unknown property '" + property + "'");
        CorollaryReport r;
        {
          py::gil_scoped_release release;
          const auto w = window_of(window);
          const auto fam = solve_commuting_maps(p, parity, w, delta, {degrees.first, degrees.second, {}});
          r = corollary_check(p, fam, *prop, w);
        }
        py::list out;
        for (const auto& pt : r.points) out.append(py::make_tuple(to_string(pt, r.parameters), pt.admissible));
        return out;
      },
      py::arg("algebra"), py::arg("property"), py::arg("parity") = 0, py::arg("window") = std::pair{-6, 6},
      py::arg("delta") = 2, py::arg("degrees") = std::pair{-4, 4});
}
