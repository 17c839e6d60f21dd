#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linecast/algorithms.hpp"
#include "linecast/bounds.hpp"
#include "linecast/error.hpp"
#include "linecast/io.hpp"
#include "linecast/oracle.hpp"

namespace py = pybind11;
using namespace linecast;

namespace {

py::tuple frac(const Rational& q) { return py::make_tuple(q.num(), q.den()); }

py::dict report_dict(const ValidationReport& rep) {
    py::list violations;
    for (const auto& v : rep.violations) {
        py::dict d;
        d["step"] = v.step;
        d["kind"] = std::string(to_string(v.kind));
        d["detail"] = v.detail;
        violations.append(d);
    }
    py::dict out;
    out["ok"] = rep.ok;
    out["violations"] = violations;
    out["informed_timeline"] = rep.informed_timeline;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Line-broadcasting schedules on complete k-trees";

    py::register_exception<Error>(m, "LinecastError", PyExc_ValueError);

    py::class_<CompleteKTree>(m, "CompleteKTree")
        .def(py::init<int, int>(), py::arg("k"), py::arg("r"))
        .def_property_readonly("k", &CompleteKTree::k)
        .def_property_readonly("r", &CompleteKTree::height)
        .def_property_readonly("n", &CompleteKTree::size)
        .def("vertex_id", &CompleteKTree::vertex_id, py::arg("level"), py::arg("offset"))
        .def("locate", &CompleteKTree::locate, py::arg("v"))
        .def("parent", [](const CompleteKTree& t, VertexId v) { return t.parent(t.vertex(v)).id; })
        .def("children",
             [](const CompleteKTree& t, VertexId v) {
                 std::vector<VertexId> out;
                 for (const auto& c : t.children(t.vertex(v))) out.push_back(c.id);
                 return out;
             })
        .def("path",
             [](const CompleteKTree& t, VertexId a, VertexId b) {
                 std::vector<VertexId> out;
                 for (const auto& e : t.path(t.vertex(a), t.vertex(b))) out.push_back(e.child);
                 return out;
             })
        .def("level_vertices", [](const CompleteKTree& t, int j) {
            std::vector<VertexId> out;
            for (const auto& v : t.level_vertices(j)) out.push_back(v.id);
            return out;
        });

    py::class_<Schedule>(m, "Schedule")
        .def_property_readonly("k", [](const Schedule& s) { return s.tree().k(); })
        .def_property_readonly("r", [](const Schedule& s) { return s.tree().height(); })
        .def_property_readonly("originator", [](const Schedule& s) { return s.originator().id; })
        .def_property_readonly("algorithm", &Schedule::algorithm_tag)
        .def_property_readonly("total_cost", [](const Schedule& s) { return total_cost(s); })
        .def_property_readonly("total_time", [](const Schedule& s) { return total_time(s); })
        .def_property_readonly("deviations",
                               [](const Schedule& s) {
                                   std::vector<std::string> out;
                                   for (const auto& d : s.deviations()) out.push_back(deviation_text(d));
                                   return out;
                               })
        .def_property_readonly("steps",
                               [](const Schedule& s) {
                                   py::list steps;
                                   for (const auto& st : s.steps()) {
                                       py::list calls;
                                       for (const auto& c : st.calls)
                                           calls.append(py::make_tuple(c.source.id, c.dest.id, c.cost));
                                       steps.append(calls);
                                   }
                                   return steps;
                               })
        .def(
            "validate",
            [](const Schedule& s, std::optional<int> budget) { return report_dict(validate(s, budget)); },
            py::arg("time_budget") = py::none())
        .def(
            "to_json", [](const Schedule& s) { return to_json(s, validate(s).ok); })
        .def("trace", [](const Schedule& s) { return to_trace(s, validate(s)); });

    m.def(
        "run",
        [](int k, int r, VertexId originator, const std::string& alg) {
            CompleteKTree t(k, r);
            if (!t.contains(originator)) throw Error(ErrorKind::OutOfRange, "originator not in tree");
            return run_named(t, t.vertex(originator), alg);
        },
        py::arg("k"), py::arg("r"), py::arg("originator") = 1, py::arg("alg") = "auto");
    m.def("from_json", [](const std::string& text) { return from_json(text); }, py::arg("text"));
    m.def("time_limit", [](int k, int r) { return time_limit(CompleteKTree(k, r)); });

    m.def("tree_size", &tree_size);
    m.def("farley_bound", [](int k, int r) { return frac(farley_bound(k, r)); });
    m.def("cost_lower_bound", [](int k, int r, bool leaf) { return frac(cost_lower_bound(k, r, leaf)); },
          py::arg("k"), py::arg("r"), py::arg("leaf_adjust") = false);
    m.def("alg1_upper", [](int k, int r) { return frac(alg1_upper(k, r)); });
    m.def("alg2_upper", [](int k, int r) { return frac(alg2_upper(k, r)); });
    m.def("alg3_upper", [](int k, int r) { return frac(alg3_upper(k, r)); });
    m.def("tolevel_upper", [](int k, int j) { return frac(tolevel_upper(k, j)); });
    m.def("fromlevel_cost", &fromlevel_cost, py::arg("k"), py::arg("j"), py::arg("root_originator") = true);
    m.def("lbckt_case", [](int k, int r) { return std::string(to_string(lbckt_case(k, r))); });
    m.def("dispatched_upper", [](int k, int r) { return frac(dispatched_upper(k, r)); });

    m.def(
        "optimal_cost",
        [](int k, int r, VertexId originator, std::optional<int> budget, std::int64_t cap) {
            CompleteKTree t(k, r);
            if (!t.contains(originator)) throw Error(ErrorKind::OutOfRange, "originator not in tree");
            OracleResult res = optimal_cost(t, t.vertex(originator), budget, cap);
            return py::make_tuple(res.cost, std::move(res.witness));
        },
        py::arg("k"), py::arg("r"), py::arg("originator") = 1, py::arg("time_budget") = py::none(),
        py::arg("cap") = kOracleCap);
}
