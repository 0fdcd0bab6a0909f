// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metacheck/errors.hpp"
#include "metacheck/oracle.hpp"
#include "metacheck/semantics.hpp"
#include "metacheck/textformats.hpp"
#include "metacheck/wellformedness.hpp"

namespace py = pybind11;

namespace {

template <typename Id>
std::vector<std::string> names(const std::set<Id>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (const Id& id : ids) {
        out.push_back(id.str());
    }
    return out;
}

metacheck::Model parseModelOrRaise(const std::string& text, const std::string& filename) {
    metacheck::ParseResult<metacheck::Model> result = metacheck::parseModel(text, filename);
    if (!result.ok()) {
        throw py::value_error(metacheck::renderParseError(*result.error));
    }
    return *result.value;
}

metacheck::Snapshot parseSnapshotOrRaise(const std::string& text, const metacheck::Model& model,
                                         const std::string& filename) {
    metacheck::ParseResult<metacheck::Snapshot> result =
        metacheck::parseSnapshot(text, model, filename);
    if (!result.ok()) {
        throw py::value_error(metacheck::renderParseError(*result.error));
    }
    return *result.value;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Class-model well-formedness and snapshot conformance checking";

    py::class_<metacheck::Violation>(m, "Violation")
        .def_property_readonly(
            "code",
            [](const metacheck::Violation& v) { return std::string(metacheck::toString(v.code)); })
        .def_readonly("subjects", &metacheck::Violation::subjects)
        .def_readonly("message", &metacheck::Violation::message)
        .def("__repr__", &metacheck::renderViolation)
        .def("__eq__",
             [](const metacheck::Violation& a, const metacheck::Violation& b) { return a == b; });

    py::class_<metacheck::Model>(m, "Model")
        .def_property_readonly("name", &metacheck::Model::name)
        .def("classifier_names",
             [](const metacheck::Model& model) {
                 std::vector<std::string> out;
                 for (const auto& [id, c] : model.classifiers()) {
                     out.push_back(id.str());
                 }
                 return out;
             })
        .def("generalization_names",
             [](const metacheck::Model& model) {
                 std::vector<std::string> out;
                 for (const auto& [id, g] : model.generalizations()) {
                     out.push_back(id.str());
                 }
                 return out;
             })
        .def("is_abstract",
             [](const metacheck::Model& model, const std::string& c) {
                 return model.classifier(metacheck::ClassifierId(c)).isAbstract;
             })
        .def("direct_parents",
             [](const metacheck::Model& model, const std::string& c) {
                 return names(model.directParents(metacheck::ClassifierId(c)));
             })
        .def("__eq__",
             [](const metacheck::Model& a, const metacheck::Model& b) { return a == b; });

    py::class_<metacheck::Snapshot>(m, "Snapshot")
        .def_property_readonly("name", &metacheck::Snapshot::name)
        .def("instance_names",
             [](const metacheck::Snapshot& snapshot) {
                 std::vector<std::string> out;
                 for (const auto& [id, instance] : snapshot.instances()) {
                     out.push_back(id.str());
                 }
                 return out;
             })
        .def("classifiers_of",
             [](const metacheck::Snapshot& snapshot, const std::string& i) {
                 return names(snapshot.instance(metacheck::InstanceId(i)).classifiers);
             })
        .def("__eq__",
             [](const metacheck::Snapshot& a, const metacheck::Snapshot& b) { return a == b; });

    py::class_<metacheck::Disagreement>(m, "Disagreement")
        .def_readonly("snapshot_text", &metacheck::Disagreement::snapshotText)
        .def_readonly("checker_verdict", &metacheck::Disagreement::checkerVerdict)
        .def_readonly("oracle_verdict", &metacheck::Disagreement::oracleVerdict);

    py::class_<metacheck::CrossCheckReport>(m, "CrossCheckReport")
        .def_readonly("model_name", &metacheck::CrossCheckReport::modelName)
        .def_readonly("instance_count", &metacheck::CrossCheckReport::instanceCount)
        .def_readonly("total_snapshots", &metacheck::CrossCheckReport::totalSnapshots)
        .def_readonly("agreeing", &metacheck::CrossCheckReport::agreeing)
        .def_readonly("disagreements", &metacheck::CrossCheckReport::disagreements);

    m.def("parse_model", &parseModelOrRaise, py::arg("text"), py::arg("filename") = "<input>",
          "Parse the model DSL; raises ValueError on syntax or reference errors.");
    m.def("parse_snapshot", &parseSnapshotOrRaise, py::arg("text"), py::arg("model"),
          py::arg("filename") = "<input>",
          "Parse the snapshot DSL against a model; raises ValueError on errors.");
    m.def("render_model", &metacheck::renderModel, py::arg("model"),
          "Canonical text form of a model.");
    m.def("render_snapshot", &metacheck::renderSnapshot, py::arg("snapshot"),
          "Canonical text form of a snapshot.");

    m.def(
        "all_parents",
        [](const metacheck::Model& model, const std::string& c) {
            return names(metacheck::allParents(model, metacheck::ClassifierId(c)));
        },
        py::arg("model"), py::arg("classifier"),
        "Ancestor closure of a classifier, sorted.");
    m.def(
        "specializations_of",
        [](const metacheck::Model& model, const std::string& c) {
            return names(metacheck::specializationsOf(model, metacheck::ClassifierId(c)));
        },
        py::arg("model"), py::arg("classifier"),
        "Names of the generalizations whose parent is the classifier.");

    m.def("check_model", &metacheck::checkModel, py::arg("model"),
          "Well-formedness violations, sorted; empty means well-formed.");
    m.def("check_snapshot", &metacheck::checkSnapshot, py::arg("model"), py::arg("snapshot"),
          "Snapshot violations, sorted; empty means the snapshot is accepted.");

    m.def(
        "instances_of",
        [](const metacheck::Model& model, const metacheck::Snapshot& snapshot,
           const std::string& c) {
            return names(metacheck::instancesOf(model, snapshot, metacheck::ClassifierId(c)));
        },
        py::arg("model"), py::arg("snapshot"), py::arg("classifier"));
    m.def(
        "is_direct_instance_of",
        [](const metacheck::Model& model, const metacheck::Snapshot& snapshot,
           const std::string& i, const std::string& c) {
            return metacheck::isDirectInstanceOf(model, snapshot, metacheck::InstanceId(i),
                                                 metacheck::ClassifierId(c));
        },
        py::arg("model"), py::arg("snapshot"), py::arg("instance"), py::arg("classifier"));
    m.def(
        "direct_of",
        [](const metacheck::Model& model, const metacheck::Snapshot& snapshot,
           const std::string& i) -> std::optional<std::string> {
            std::optional<metacheck::ClassifierId> direct =
                metacheck::directOf(model, snapshot, metacheck::InstanceId(i));
            if (!direct) {
                return std::nullopt;
            }
            return direct->str();
        },
        py::arg("model"), py::arg("snapshot"), py::arg("instance"),
        "The unique directly-instantiated classifier, or None.");
    m.def(
        "indirect_of",
        [](const metacheck::Model& model, const metacheck::Snapshot& snapshot,
           const std::string& i) {
            return names(metacheck::indirectOf(model, snapshot, metacheck::InstanceId(i)));
        },
        py::arg("model"), py::arg("snapshot"), py::arg("instance"));
    m.def(
        "ocl_is_type_of",
        [](const metacheck::Model& model, const metacheck::Snapshot& snapshot,
           const std::string& i, const std::string& c) {
            return metacheck::oclIsTypeOf(model, snapshot, metacheck::InstanceId(i),
                                          metacheck::ClassifierId(c));
        },
        py::arg("model"), py::arg("snapshot"), py::arg("instance"), py::arg("classifier"));
    m.def(
        "ocl_is_kind_of",
        [](const metacheck::Model& model, const metacheck::Snapshot& snapshot,
           const std::string& i, const std::string& c) {
            return metacheck::oclIsKindOf(model, snapshot, metacheck::InstanceId(i),
                                          metacheck::ClassifierId(c));
        },
        py::arg("model"), py::arg("snapshot"), py::arg("instance"), py::arg("classifier"));
    m.def(
        "has_same_overlapping_constraint",
        [](const metacheck::Model& model, const std::string& g1, const std::string& g2) {
            return metacheck::hasSameOverlappingConstraint(model, metacheck::GeneralizationId(g1),
                                                           metacheck::GeneralizationId(g2));
        },
        py::arg("model"), py::arg("gen1"), py::arg("gen2"));

    m.def("valid_by_definition", &metacheck::validByDefinition, py::arg("model"),
          py::arg("snapshot"),
          "Validity evaluated directly from the set-semantics definitions.");
    m.def("count_snapshots", &metacheck::countSnapshots, py::arg("model"),
          py::arg("instance_count"));
    m.def("enumerate_snapshots", &metacheck::enumerateSnapshots, py::arg("model"),
          py::arg("instance_count"), py::arg("cap") = metacheck::kDefaultEnumerationCap);
    m.def("cross_check", &metacheck::crossCheck, py::arg("model"), py::arg("instance_count"),
          py::arg("cap") = metacheck::kDefaultEnumerationCap,
          "Compare check_snapshot against valid_by_definition over the enumeration.");

    m.attr("DEFAULT_ENUMERATION_CAP") = metacheck::kDefaultEnumerationCap;
}
