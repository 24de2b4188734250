#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gridpaths/diagnostics.hpp"
#include "gridpaths/elements.hpp"
#include "gridpaths/engine.hpp"
#include "gridpaths/graph.hpp"
#include "gridpaths/io.hpp"
#include "gridpaths/render.hpp"
#include "gridpaths/transform.hpp"

namespace py = pybind11;
using namespace gridpaths;

namespace {

std::vector<std::pair<double, double>> coords_out(const Element& e) {
    std::vector<std::pair<double, double>> out;
    for (const Coord& c : e.coords) out.emplace_back(c.x, c.y);
    return out;
}

std::optional<std::string> status_out(const Element& e) {
    if (!e.status) return std::nullopt;
    return std::string(status_name(*e.status));
}

Element element_in(const std::string& id, const std::string& type,
                   const std::vector<std::pair<double, double>>& coords,
                   const std::optional<std::string>& status) {
    std::vector<Coord> cs;
    for (const auto& [x, y] : coords) cs.push_back({x, y});
    std::optional<SwitchStatus> st;
    if (status) st = parse_status(*status);
    return make_element(id, parse_type(type), std::move(cs), st);
}

std::vector<std::string> types_out(const std::vector<ElementType>& types) {
    std::vector<std::string> out;
    for (ElementType t : types) out.emplace_back(type_name(t));
    return out;
}

}  // namespace

PYBIND11_MODULE(gridpaths, m) {
    m.doc() = "Distribution-network connectivity reconstruction and path enumeration";

    py::register_exception<Error>(m, "Error");

    py::class_<Element>(m, "Element")
        .def(py::init(&element_in), py::arg("id"), py::arg("type"), py::arg("coords"),
             py::arg("status") = std::nullopt)
        .def_readonly("id", &Element::id)
        .def_property_readonly("type", [](const Element& e) { return type_name(e.type); })
        .def_property_readonly("coords", &coords_out)
        .def_property_readonly("status", &status_out)
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__repr__", [](const Element& e) {
            return "Element(" + e.id + ", " + type_name(e.type) + ")";
        });

    py::class_<ElementSet>(m, "ElementSet")
        .def(py::init<>())
        .def("add", &ElementSet::add)
        .def("replace", &ElementSet::replace)
        .def("remove", &ElementSet::remove)
        .def("get", [](const ElementSet& s, const std::string& id) { return s.get(id); })
        .def("ids", &ElementSet::ids)
        .def("__len__", &ElementSet::size)
        .def("__contains__",
             [](const ElementSet& s, const std::string& id) { return s.contains(id); })
        .def("__eq__", [](const ElementSet& a, const ElementSet& b) { return a == b; });

    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def(py::init<>())
        .def_property(
            "mode", [](const PipelineConfig& c) { return mode_name(c.mode); },
            [](PipelineConfig& c, const std::string& v) { c.mode = parse_mode(v); })
        .def_readwrite("r", &PipelineConfig::r)
        .def_readwrite("l", &PipelineConfig::l)
        .def_readwrite("d_oh", &PipelineConfig::d_oh)
        .def_readwrite("d_cab", &PipelineConfig::d_cab)
        .def_readwrite("d_cb", &PipelineConfig::d_cb)
        .def_readwrite("min_line_length", &PipelineConfig::min_line_length)
        .def_readwrite("n", &PipelineConfig::n)
        .def_readwrite("d_p", &PipelineConfig::d_p)
        .def_readwrite("m", &PipelineConfig::m)
        .def_readwrite("cap", &PipelineConfig::cap)
        .def_readwrite("steps", &PipelineConfig::steps)
        .def("validate", &PipelineConfig::validate);

    py::class_<PathInfo>(m, "PathInfo")
        .def_readonly("path", &PathInfo::path)
        .def_readonly("length", &PathInfo::length)
        .def_readonly("active", &PathInfo::active);

    py::class_<PathSet>(m, "PathSet")
        .def_readonly("by_customer", &PathSet::by_customer)
        .def_readonly("engine", &PathSet::provenance)
        .def_readonly("stage_counts", &PathSet::stage_counts)
        .def("total_paths", &PathSet::total_paths);

    py::class_<TransformTrace>(m, "TransformTrace")
        .def_readonly("step", &TransformTrace::step)
        .def_readonly("added", &TransformTrace::added)
        .def_readonly("removed", &TransformTrace::removed)
        .def_readonly("replaced", &TransformTrace::replaced)
        .def("touched", &TransformTrace::touched);

    py::class_<Finding>(m, "Finding")
        .def_property_readonly("kind",
                               [](const Finding& f) { return finding_kind_name(f.kind); })
        .def_readonly("subjects", &Finding::subjects)
        .def_property_readonly(
            "subject_types", [](const Finding& f) { return types_out(f.subject_types); })
        .def_readonly("step", &Finding::step)
        .def_readonly("detail", &Finding::detail);

    py::class_<DiagnosticReport>(m, "DiagnosticReport")
        .def_readonly("findings", &DiagnosticReport::findings)
        .def_readonly("passed", &DiagnosticReport::passed);

    m.def("load_elements", &load_elements, py::arg("file"));
    m.def("save_elements", &save_elements, py::arg("elements"), py::arg("file"));
    m.def("load_config", &load_config, py::arg("file"));
    m.def("with_inserts", &with_inserts, py::arg("elements"), py::arg("config"));

    m.def("subset", [](const ElementSet& s, const std::string& type) {
        return subset(s, parse_type(type));
    });
    m.def("dist", &dist);
    m.def("internal_length", &internal_length);
    m.def("closest",
          [](const Element& e, const ElementSet& candidates) { return closest(e, candidates); });
    m.def("length_path", &length_path);
    m.def("valid_path", &valid_path);
    m.def("hypothetical_count", &hypothetical_count, py::arg("elements"), py::arg("customers"),
          py::arg("transformers"));

    m.def("apply_pipeline", &apply_pipeline, py::arg("elements"), py::arg("config"));
    m.def("replay", &replay, py::arg("elements"), py::arg("traces"));
    m.def("snap_overhead", &snap_overhead);
    m.def("stitch_underground_to_cabinets", &stitch_underground_to_cabinets);
    m.def("link_boards_to_poles", &link_boards_to_poles);
    m.def("connect_customers", &connect_customers);
    m.def("locate_switches", &locate_switches);
    m.def("step_names", [] { return step_names(); });

    m.def("enumerate_filtered", &enumerate_filtered, py::arg("elements"), py::arg("config"));
    m.def("enumerate_eps", &enumerate_eps, py::arg("elements"), py::arg("config"));
    m.def("classify", &classify, py::arg("paths"), py::arg("elements"));
    m.def("path_active", &path_active);
    m.def("paths_for_customer", &paths_for_customer, py::arg("paths"), py::arg("elements"),
          py::arg("customer"));

    m.def("diagnose", &diagnose, py::arg("elements"), py::arg("paths"), py::arg("config"));
    m.def("check_unique_active", &check_unique_active, py::arg("elements"), py::arg("paths"));

    m.def("render", &render, py::arg("elements"), py::arg("paths"), py::arg("format"));
    m.def("paths_json", &paths_json);
    m.def("report_json", &report_json);
}
