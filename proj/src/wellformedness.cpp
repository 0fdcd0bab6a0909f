// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include "metacheck/wellformedness.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace metacheck {

std::vector<Violation> checkAcyclicity(const Model& model) {
    std::vector<Violation> violations;
    for (const auto& [id, classifier] : model.classifiers()) {
        if (allParents(model, id).contains(id)) {
            violations.push_back(Violation{
                ViolationCode::WF_CYCLE,
                {id.str()},
                "circular inheritance: classifier '" + id.str() + "' is its own ancestor"});
        }
    }
    return violations;
}

std::vector<Violation> checkIntegrity(const Model& model) {
    std::vector<Violation> violations;
    for (const auto& [id, gen] : model.generalizations()) {
        if (gen.child == gen.parent) {
            violations.push_back(Violation{ViolationCode::WF_SELF_GEN,
                                           {id.str()},
                                           "generalization '" + id.str() +
                                               "' relates classifier '" + gen.child.str() +
                                               "' to itself"});
        }
    }
    // Duplicate parallel edges: same (child, parent) declared more than once.
    std::map<std::pair<ClassifierId, ClassifierId>, std::vector<GeneralizationId>> byEdge;
    for (const auto& [id, gen] : model.generalizations()) {
        byEdge[{gen.child, gen.parent}].push_back(id);
    }
    for (const auto& [edge, ids] : byEdge) {
        for (std::size_t k = 1; k < ids.size(); ++k) {
            std::vector<std::string> subjects{ids.front().str(), ids[k].str()};
            std::sort(subjects.begin(), subjects.end());
            violations.push_back(Violation{ViolationCode::WF_DUP_EDGE, std::move(subjects),
                                           "generalizations '" + ids.front().str() + "' and '" +
                                               ids[k].str() + "' both declare " +
                                               edge.first.str() + " -> " + edge.second.str()});
        }
    }
    std::sort(violations.begin(), violations.end());
    return violations;
}

std::vector<Violation> checkOverlappingArity(const Model& model) {
    std::vector<Violation> violations;
    for (const auto& [id, group] : model.overlappingGroups()) {
        if (group.members.size() <= 1) {
            violations.push_back(Violation{ViolationCode::WF_OVERLAP_ARITY,
                                           {id.str()},
                                           "overlapping group '" + id.str() + "' constrains " +
                                               std::to_string(group.members.size()) +
                                               " generalization(s); more than one required"});
        }
    }
    return violations;
}

std::vector<Violation> checkModel(const Model& model) {
    std::vector<Violation> violations = checkIntegrity(model);
    std::vector<Violation> cycles = checkAcyclicity(model);
    violations.insert(violations.end(), std::make_move_iterator(cycles.begin()),
                      std::make_move_iterator(cycles.end()));
    std::vector<Violation> arity = checkOverlappingArity(model);
    violations.insert(violations.end(), std::make_move_iterator(arity.begin()),
                      std::make_move_iterator(arity.end()));
    std::sort(violations.begin(), violations.end());
    return violations;
}

} // namespace metacheck
