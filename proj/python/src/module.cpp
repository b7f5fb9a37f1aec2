#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopcoprod/algebra.hpp"
#include "loopcoprod/coproduct.hpp"
#include "loopcoprod/expr.hpp"
#include "loopcoprod/group.hpp"
#include "loopcoprod/homology.hpp"
#include "loopcoprod/io.hpp"
#include "loopcoprod/loopspace.hpp"
#include "loopcoprod/maps.hpp"
#include "loopcoprod/matrix.hpp"

namespace py = pybind11;
using namespace loopcoprod;

namespace {

// The C++ side passes groups around as shared_ptr-to-const; wrap once so the
// bindings never have to spell that holder type.
struct PyGroup {
  GroupPtr ptr;
};

std::string tensor_term_string(const TensorTerm& t) {
  return to_string(t.first) + " ⊗ " + to_string(t.second);
}

CircleVariant variant_or_throw(const std::string& name) {
  auto v = variant_from_name(name);
  if (!v) fail(Errc::BadInput, "unknown circle variant '" + name + "'");
  return *v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact loop coproducts on spherical space forms";

  py::register_exception<Error>(m, "Error");

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("name", [](const PyGroup& g) { return g.ptr->name(); })
      .def_property_readonly("order", [](const PyGroup& g) { return g.ptr->order(); })
      .def("is_cyclic", [](const PyGroup& g) { return g.ptr->is_cyclic(); })
      .def("mul", [](const PyGroup& g, int a, int b) { return g.ptr->mul(a, b); })
      .def("inverse", [](const PyGroup& g, int a) { return g.ptr->inverse(a); })
      .def("element_order", [](const PyGroup& g, int a) { return g.ptr->element_order(a); })
      .def("conjugacy_classes", [](const PyGroup& g) { return g.ptr->conjugacy_classes(); })
      .def("table", [](const PyGroup& g) { return g.ptr->table(); })
      .def("__eq__",
           [](const PyGroup& a, const PyGroup& b) { return a.ptr->same_as(*b.ptr); })
      .def("__repr__", [](const PyGroup& g) {
        return "<Group " + g.ptr->name() + " of order " + std::to_string(g.ptr->order()) + ">";
      });
  m.def("cyclic", [](int order) { return PyGroup{FiniteGroup::cyclic(order)}; },
        py::arg("order"));
  m.def("quaternion", [](int order) { return PyGroup{FiniteGroup::quaternion(order)}; },
        py::arg("order"));
  m.def(
      "group_from_table",
      [](std::string name, std::vector<std::vector<int>> table) {
        return PyGroup{FiniteGroup::from_table(std::move(name), std::move(table))};
      },
      py::arg("name"), py::arg("table"));

  py::class_<SpaceSpec>(m, "Space")
      .def_readonly("n", &SpaceSpec::n)
      .def_property_readonly("infinite", [](const SpaceSpec& s) { return s.infinite(); })
      .def_property_readonly("group",
                             [](const SpaceSpec& s) -> std::optional<PyGroup> {
                               if (s.infinite()) return std::nullopt;
                               return PyGroup{s.group};
                             })
      .def("__repr__", [](const SpaceSpec& s) {
        return "<Space S^" + std::to_string(s.n) + " / " +
               (s.infinite() ? std::string("infinite pi1") : s.group->name()) + ">";
      });
  m.def(
      "sphere_quotient",
      [](int n, const PyGroup& g) { return SpaceSpec::sphere_quotient(n, g.ptr); },
      py::arg("n"), py::arg("group"));
  m.def("sphere", &SpaceSpec::sphere, py::arg("n"));
  m.def("infinite_pi1", &SpaceSpec::infinite_pi1, py::arg("n"));

  py::class_<LoopClass>(m, "LoopClass")
      .def_property_readonly("space", &LoopClass::space)
      .def("is_zero", &LoopClass::is_zero)
      .def("homogeneous", &LoopClass::homogeneous)
      .def("terms",
           [](const LoopClass& a) {
             std::vector<std::tuple<int, long long, std::string>> out;
             for (const auto& [mono_, coeff] : a.terms())
               out.emplace_back(mono_.g, mono_.k, coeff.str());
             return out;
           })
      .def("__eq__", [](const LoopClass& a, const LoopClass& b) { return a == b; })
      .def("__str__", [](const LoopClass& a) { return to_string(a); })
      .def("__repr__", [](const LoopClass& a) { return "<LoopClass " + to_string(a) + ">"; });

  py::class_<TensorClass>(m, "TensorClass")
      .def_property_readonly("space", &TensorClass::space)
      .def("is_zero", &TensorClass::is_zero)
      .def("terms",
           [](const TensorClass& t) {
             std::vector<std::tuple<std::tuple<int, long long>, std::tuple<int, long long>,
                                    std::string>>
                 out;
             for (const auto& [term, coeff] : t.terms())
               out.emplace_back(std::make_tuple(term.first.g, term.first.k),
                                std::make_tuple(term.second.g, term.second.k), coeff.str());
             return out;
           })
      .def("__eq__", [](const TensorClass& a, const TensorClass& b) { return a == b; })
      .def("__str__", [](const TensorClass& t) { return to_string(t); })
      .def("__repr__", [](const TensorClass& t) { return "<TensorClass " + to_string(t) + ">"; });

  m.def("parse", &parse_loop_class, py::arg("space"), py::arg("text"));
  m.def(
      "monomial",
      [](const SpaceSpec& s, int g, long long k, long long coeff) {
        return LoopClass::monomial(s, g, k, coeff);
      },
      py::arg("space"), py::arg("g"), py::arg("k"), py::arg("coeff") = 1);
  m.def("multiply",
        [](const LoopClass& a, const LoopClass& b) { return multiply(a, b); });
  m.def("add", [](const LoopClass& a, const LoopClass& b) { return add(a, b); });
  m.def("subtract", [](const LoopClass& a, const LoopClass& b) { return subtract(a, b); });
  m.def("scale", [](const LoopClass& a, long long c) { return scale(a, c); });
  m.def("act_tensor", &act_tensor, py::arg("tensor"), py::arg("tau"));
  m.def("contract_right", &contract_right);
  m.def("contract_left", &contract_left);

  m.def("coproduct", [](const LoopClass& a) { return coproduct(a); }, py::arg("element"));
  m.def("infinite_pi1_rule", &infinite_pi1_rule, py::arg("n"));
  m.def(
      "check_sullivan",
      [](const LoopClass& a, const LoopClass& b) {
        SullivanReport r = check_sullivan(a, b);
        return py::make_tuple(r.holds, r.sign, to_string(r.defect));
      },
      "returns (holds, sign, defect)");
  m.def(
      "check_pi1_invariance",
      [](const LoopClass& a) {
        Pi1Report r = check_pi1_invariance(a);
        return py::make_tuple(r.invariant, r.failing_tau);
      },
      "returns (invariant, failing_tau)");
  m.def("coproduct_via_universal_cover", &coproduct_via_universal_cover);
  m.def(
      "coproduct_witness",
      [](const SpaceSpec& s, int g, long long k) {
        WitnessResult w = coproduct_witness(s, g, k);
        std::string status;
        switch (w.status) {
          case WitnessStatus::Found: status = "found"; break;
          case WitnessStatus::Exceptional: status = "exceptional"; break;
          case WitnessStatus::NoneFound: status = "none"; break;
        }
        std::optional<std::string> term;
        if (w.term) term = tensor_term_string(*w.term);
        return py::make_tuple(status, term);
      },
      py::arg("space"), py::arg("g"), py::arg("k"), "returns (status, term-or-None)");

  m.def(
      "coproduct_circle",
      [](const std::string& variant, const std::string& element) {
        LaurentTensor t = coproduct_circle(variant_or_throw(variant), parse_laurent_class(element));
        std::vector<std::tuple<long long, long long, std::string>> out;
        for (const auto& [ks, coeff] : t) out.emplace_back(ks.first, ks.second, coeff.str());
        return out;
      },
      py::arg("variant"), py::arg("element"), "terms as (k_left, k_right, coeff)");
  m.def(
      "coproduct_circle_str",
      [](const std::string& variant, const std::string& element) {
        return to_string(coproduct_circle(variant_or_throw(variant), parse_laurent_class(element)));
      },
      py::arg("variant"), py::arg("element"));
  m.def(
      "check_sullivan_circle",
      [](const std::string& variant, const std::string& a, const std::string& b) {
        CircleSullivanReport r = check_sullivan_circle(variant_or_throw(variant),
                                                       parse_laurent_class(a),
                                                       parse_laurent_class(b));
        return py::make_tuple(r.holds, to_string(r.defect));
      },
      py::arg("variant"), py::arg("a"), py::arg("b"), "returns (holds, defect)");

  py::class_<MapData>(m, "Map")
      .def_property_readonly("kind", &MapData::kind_name)
      .def_property_readonly("degree", &MapData::degree)
      .def_property_readonly("source", &MapData::source)
      .def_property_readonly("target", &MapData::target)
      .def("__repr__", [](const MapData& f) {
        return std::string("<Map ") + f.kind_name() + " of degree " +
               std::to_string(f.degree()) + ">";
      });
  m.def(
      "covering", [](int n, const PyGroup& g) { return MapData::covering(n, g.ptr); },
      py::arg("n"), py::arg("group"));
  m.def("sphere_self_map", &MapData::sphere_self_map, py::arg("n"), py::arg("degree"));
  m.def("pushforward", [](const MapData& f, const LoopClass& a) { return pushforward(f, a); });
  m.def("coproduct_via", &coproduct_via_f, py::arg("map"), py::arg("element"));

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long long>>& rows) {
        std::vector<std::string> out;
        for (const Int& d : smith_normal_form(IntegerMatrix::from_dense(rows)))
          out.push_back(d.str());
        return out;
      },
      py::arg("matrix"), "invariant factor diagonal, as decimal strings");

  // Structured results come back as canonical JSON text; the package wraps
  // these with json.loads.
  m.def(
      "group_homology_json",
      [](const PyGroup& g, int max_degree, long long generator_cap) {
        return graded_to_json(group_homology(g.ptr, max_degree, generator_cap));
      },
      py::arg("group"), py::arg("max_degree"), py::arg("generator_cap") = kDefaultGeneratorCap);
  m.def(
      "cyclic_periodic_homology_json",
      [](int order, int max_degree) {
        return graded_to_json(cyclic_periodic_homology(order, max_degree));
      },
      py::arg("order"), py::arg("max_degree"));
  m.def(
      "quotient_space_homology_json",
      [](int n, const PyGroup& g, long long generator_cap) {
        return graded_to_json(quotient_space_homology(n, g.ptr, generator_cap));
      },
      py::arg("n"), py::arg("group"), py::arg("generator_cap") = kDefaultGeneratorCap);
  m.def(
      "loop_table_json",
      [](const SpaceSpec& s, int max_degree, long long generator_cap) {
        return loop_table_to_json(full_table(s, max_degree, generator_cap));
      },
      py::arg("space"), py::arg("max_degree"),
      py::arg("generator_cap") = kDefaultGeneratorCap);
}
