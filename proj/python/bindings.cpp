#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ocdf/analysis.hpp"
#include "ocdf/minioo.hpp"
#include "ocdf/model.hpp"
#include "ocdf/render.hpp"
#include "ocdf/validator.hpp"

namespace py = pybind11;

namespace {

PyObject* g_ocdf_error = nullptr;

[[noreturn]] void raise_errors(const std::vector<ocdf::Diagnostic>& errors) {
  std::string message = errors.empty() ? "ocdf error"
                                       : std::string(ocdf::code_name(errors.front().code)) + ": " +
                                             errors.front().message;
  py::object exc = py::reinterpret_borrow<py::object>(g_ocdf_error)(message);
  exc.attr("diagnostics") = py::cast(errors);
  PyErr_SetObject(g_ocdf_error, exc.ptr());
  throw py::error_already_set();
}

template <typename T>
T unwrap(ocdf::Result<T> result) {
  if (!result) raise_errors(result.errors());
  return std::move(result).value();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Object control/data-flow models: build, validate, extract, analyze and render.";

  g_ocdf_error = PyErr_NewException("ocdf._core.OcdfError", PyExc_ValueError, nullptr);
  m.attr("OcdfError") = py::handle(g_ocdf_error);

  py::enum_<ocdf::FeatureKind>(m, "FeatureKind")
      .value("member", ocdf::FeatureKind::Member)
      .value("method", ocdf::FeatureKind::Method)
      .value("interface_method", ocdf::FeatureKind::InterfaceMethod);
  py::enum_<ocdf::Visibility>(m, "Visibility")
      .value("public", ocdf::Visibility::Public)
      .value("protected", ocdf::Visibility::Protected)
      .value("private", ocdf::Visibility::Private);
  py::enum_<ocdf::FlowKind>(m, "FlowKind")
      .value("control", ocdf::FlowKind::Control)
      .value("data", ocdf::FlowKind::Data);
  py::enum_<ocdf::Severity>(m, "Severity")
      .value("error", ocdf::Severity::Error)
      .value("warning", ocdf::Severity::Warning);
  py::enum_<ocdf::AbstractionLevel>(m, "AbstractionLevel")
      .value("L1", ocdf::AbstractionLevel::L1)
      .value("L2", ocdf::AbstractionLevel::L2)
      .value("L3", ocdf::AbstractionLevel::L3);
  py::enum_<ocdf::RankDir>(m, "RankDir")
      .value("top_down", ocdf::RankDir::TopDown)
      .value("left_right", ocdf::RankDir::LeftRight);

  py::class_<ocdf::Feature>(m, "Feature")
      .def(py::init([](std::string id, ocdf::FeatureKind kind, std::string name, std::string decl,
                       ocdf::Visibility visibility, bool is_static, bool is_const,
                       bool is_constructor, bool inherited) {
             return ocdf::Feature{std::move(id), kind,      std::move(name), std::move(decl),
                                  visibility,    is_static, is_const,        is_constructor,
                                  inherited};
           }),
           py::arg("id"), py::arg("kind"), py::arg("name"), py::arg("decl") = "",
           py::arg("visibility") = ocdf::Visibility::Private, py::arg("is_static") = false,
           py::arg("is_const") = false, py::arg("is_constructor") = false,
           py::arg("inherited") = false)
      .def_readwrite("id", &ocdf::Feature::id)
      .def_readwrite("kind", &ocdf::Feature::kind)
      .def_readwrite("name", &ocdf::Feature::name)
      .def_readwrite("decl", &ocdf::Feature::decl)
      .def_readwrite("visibility", &ocdf::Feature::visibility)
      .def_readwrite("is_static", &ocdf::Feature::is_static)
      .def_readwrite("is_const", &ocdf::Feature::is_const)
      .def_readwrite("is_constructor", &ocdf::Feature::is_constructor)
      .def_readwrite("inherited", &ocdf::Feature::inherited)
      .def(py::self == py::self)
      .def("__repr__", [](const ocdf::Feature& f) {
        return "<Feature " + f.id + " " + std::string(ocdf::to_string(f.kind)) + ">";
      });

  py::class_<ocdf::Flow>(m, "Flow")
      .def(py::init([](ocdf::FlowKind kind, std::string source, std::string target,
                       std::optional<std::string> label) {
             return ocdf::Flow{kind, std::move(source), std::move(target), std::move(label)};
           }),
           py::arg("kind"), py::arg("source"), py::arg("target"), py::arg("label") = py::none())
      .def_readwrite("kind", &ocdf::Flow::kind)
      .def_readwrite("source", &ocdf::Flow::source)
      .def_readwrite("target", &ocdf::Flow::target)
      .def_readwrite("label", &ocdf::Flow::label)
      .def(py::self == py::self)
      .def("__repr__", [](const ocdf::Flow& f) {
        return "<Flow " + std::string(ocdf::to_string(f.kind)) + " " + f.source + " -> " +
               f.target + ">";
      });

  py::class_<ocdf::OcdfClass>(m, "OcdfClass")
      .def(py::init<>())
      .def_readwrite("name", &ocdf::OcdfClass::name)
      .def_readwrite("features", &ocdf::OcdfClass::features)
      .def_readwrite("flows", &ocdf::OcdfClass::flows)
      .def(py::self == py::self);

  py::class_<ocdf::OcdfModel>(m, "OcdfModel")
      .def(py::init([](std::vector<ocdf::OcdfClass> classes) {
             ocdf::OcdfModel model;
             model.classes = std::move(classes);
             return model;
           }),
           py::arg("classes") = std::vector<ocdf::OcdfClass>{})
      .def_readonly("format_version", &ocdf::OcdfModel::format_version)
      .def_readwrite("classes", &ocdf::OcdfModel::classes)
      .def(py::self == py::self);

  py::class_<ocdf::Diagnostic>(m, "Diagnostic")
      .def_property_readonly("code",
                             [](const ocdf::Diagnostic& d) { return std::string(ocdf::code_name(d.code)); })
      .def_readonly("severity", &ocdf::Diagnostic::severity)
      .def_readonly("message", &ocdf::Diagnostic::message)
      .def_readonly("class_name", &ocdf::Diagnostic::class_name)
      .def_readonly("subjects", &ocdf::Diagnostic::subjects)
      .def_property_readonly("span",
                             [](const ocdf::Diagnostic& d) -> std::optional<std::pair<int, int>> {
                               if (!d.span) return std::nullopt;
                               return std::pair{d.span->line, d.span->column};
                             })
      .def("__repr__", [](const ocdf::Diagnostic& d) {
        return "<Diagnostic " + std::string(ocdf::code_name(d.code)) + " " + d.message + ">";
      });

  py::class_<ocdf::CutSuggestion>(m, "CutSuggestion")
      .def_readonly("first", &ocdf::CutSuggestion::first)
      .def_readonly("second", &ocdf::CutSuggestion::second)
      .def_readonly("affinity", &ocdf::CutSuggestion::affinity)
      .def_readonly("flows_required", &ocdf::CutSuggestion::flows_required);
  py::class_<ocdf::SubstructureReport>(m, "SubstructureReport")
      .def_readonly("components", &ocdf::SubstructureReport::components)
      .def_readonly("cut_suggestions", &ocdf::SubstructureReport::cut_suggestions);
  py::class_<ocdf::RaceHazard>(m, "RaceHazard")
      .def_readonly("member", &ocdf::RaceHazard::member)
      .def_readonly("writers", &ocdf::RaceHazard::writers)
      .def_readonly("readers", &ocdf::RaceHazard::readers)
      .def_readonly("entry_points", &ocdf::RaceHazard::entry_points);

  m.def(
      "build_class",
      [](std::string name, std::vector<ocdf::Feature> features, std::vector<ocdf::Flow> flows) {
        return unwrap(ocdf::build_class(std::move(name), std::move(features), std::move(flows)));
      },
      py::arg("name"), py::arg("features") = std::vector<ocdf::Feature>{},
      py::arg("flows") = std::vector<ocdf::Flow>{});
  m.def("serialize", [](const ocdf::OcdfModel& model) { return ocdf::serialize(model); },
        py::arg("model"), "Canonical JSON model document.");
  m.def("deserialize", [](const std::string& text) { return unwrap(ocdf::deserialize(text)); },
        py::arg("document"));
  m.def("validate", py::overload_cast<const ocdf::OcdfModel&>(&ocdf::validate), py::arg("model"));
  m.def("validate", py::overload_cast<const ocdf::OcdfClass&>(&ocdf::validate), py::arg("cls"));
  m.def("explain", [](const std::string& code) { return unwrap(ocdf::explain(code)); },
        py::arg("code"));
  m.def(
      "extract",
      [](const std::string& source, const std::string& class_name, bool lazy) {
        auto program = unwrap(ocdf::minioo::parse(source));
        return unwrap(lazy ? ocdf::minioo::extract_lazy_inherited(program, class_name)
                           : ocdf::minioo::extract(program, class_name));
      },
      py::arg("source"), py::arg("class_name"), py::arg("lazy") = false,
      "Parse MiniOO source and lower one class to an OCDF class.");
  m.def("project", &ocdf::project, py::arg("cls"), py::arg("level"));
  m.def("substructures", &ocdf::substructures, py::arg("cls"));
  m.def("detect_races", &ocdf::detect_races, py::arg("cls"));
  m.def(
      "render_dot",
      [](const ocdf::OcdfClass& cls, ocdf::AbstractionLevel level, bool show_inherited,
         ocdf::RankDir rankdir) {
        return ocdf::render_dot(cls, ocdf::RenderOptions{level, show_inherited, rankdir});
      },
      py::arg("cls"), py::arg("level") = ocdf::AbstractionLevel::L3,
      py::arg("show_inherited") = true, py::arg("rankdir") = ocdf::RankDir::TopDown);
}
