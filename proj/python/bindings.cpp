#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "integra/classify.hpp"
#include "integra/json_io.hpp"
#include "integra/spectra.hpp"
#include "integra/verify.hpp"

namespace py = pybind11;
using namespace integra;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// Catalog names win over construct specs, as on the command line.
FiniteGroup build(const std::string& spec) {
  try {
    return construct(catalog_entry(spec).construct_spec);
  } catch (const Error&) {
    return construct(spec);
  }
}

SymmetricSet connection_set(const FiniteGroup& g, const py::list& items) {
  std::vector<Elem> members;
  for (const auto& item : items) {
    if (py::isinstance<py::str>(item)) {
      members.push_back(parse_word(g, item.cast<std::string>()));
    } else {
      const auto idx = item.cast<long long>();
      if (idx < 0 || static_cast<std::size_t>(idx) >= g.order()) throw Error("element index out of range");
      members.push_back(static_cast<Elem>(idx));
    }
  }
  return make_symmetric_set(g, members);
}

py::object spectrum(const FiniteGroup& g, const py::list& items) {
  const SymmetricSet s = connection_set(g, items);
  json j;
  {
    py::gil_scoped_release release;
    j = spectrum_to_json(is_integral_cayley(g, s).lifted);
  }
  j["set"] = s.members;
  json words = json::array();
  for (Elem e : s.members) words.push_back(g.name(e));
  j["words"] = words;
  return to_python(j);
}

py::object classify(const FiniteGroup& g, const std::string& cls, int k, bool dedup, const std::string& label) {
  if (cls != "A" && cls != "G") throw Error("class must be A or G");
  if (k < 1) throw Error("k must be positive");
  ScanOptions options;
  options.dedup_conjugates = dedup;
  MembershipReport r;
  {
    py::gil_scoped_release release;
    r = cls == "A" ? in_A_k(g, k, label, options) : in_G_k(g, k, label, options);
  }
  return to_python(membership_to_json(r));
}

py::object verify(std::optional<std::string> claim) {
  json out = json::array();
  {
    py::gil_scoped_release release;
    const VerifySummary s = claim ? run_all(*claim) : run_all();
    for (const auto& r : s.results) out.push_back(claim_result_to_json(r));
  }
  return to_python(out);
}

}  // namespace

PYBIND11_MODULE(_integra, m) {
  m.doc() = "Integral Cayley graphs on small finite groups";

  py::register_exception<Error>(m, "IntegraError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("names", &FiniteGroup::names)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("index", [](const FiniteGroup& g, const std::string& word) { return parse_word(g, word); })
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("profile", [](const FiniteGroup& g) { return to_python(profile_to_json(profile(g))); })
      .def("to_json", [](const FiniteGroup& g) { return canonical_dump(group_to_json(g)); })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<integra.Group of order " + std::to_string(g.order()) + ">"; });

  m.def("construct", &build, py::arg("spec"));
  m.def("load", [](const std::string& text) { return group_from_text(text); }, py::arg("text"));
  m.def("recognize", &recognize_named, py::arg("group"), py::arg("name"));
  m.def("catalog", [] {
    std::vector<std::string> names;
    for (const auto& e : named_catalog()) names.push_back(e.name);
    return names;
  });
  m.def("spectrum", &spectrum, py::arg("group"), py::arg("connection_set"));
  m.def("is_integral", [](const FiniteGroup& g, const py::list& items) {
    return cayley_integral_verdict(g, connection_set(g, items));
  }, py::arg("group"), py::arg("connection_set"));
  m.def("count_sets", [](const FiniteGroup& g, std::size_t k, bool exact) {
    const std::string digits = count_symmetric_sets(g, k, exact ? SizeMode::exact : SizeMode::at_most).get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
  }, py::arg("group"), py::arg("k"), py::arg("exact") = true);
  m.def("classify", &classify, py::arg("group"), py::arg("cls"), py::arg("k"), py::arg("dedup") = false,
        py::arg("label") = "");
  m.def("claims", [] {
    std::vector<std::string> ids;
    for (const auto& c : list_claims()) ids.push_back(c.id);
    return ids;
  });
  m.def("verify", &verify, py::arg("claim") = py::none());
}
