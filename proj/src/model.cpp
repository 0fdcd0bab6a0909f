// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include "metacheck/model.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "metacheck/errors.hpp"

namespace metacheck {

bool isValidToken(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    auto isStart = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
    auto isRest = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
    if (!isStart(static_cast<unsigned char>(text.front()))) {
        return false;
    }
    for (char c : text.substr(1)) {
        if (!isRest(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

bool Model::hasClassifier(const ClassifierId& id) const {
    return classifiers_.contains(id);
}

bool Model::hasGeneralization(const GeneralizationId& id) const {
    return generalizations_.contains(id);
}

const Classifier& Model::classifier(const ClassifierId& id) const {
    auto it = classifiers_.find(id);
    if (it == classifiers_.end()) {
        throw LookupError("unknown classifier '" + id.str() + "' in model '" + name_ + "'");
    }
    return it->second;
}

const Generalization& Model::generalization(const GeneralizationId& id) const {
    auto it = generalizations_.find(id);
    if (it == generalizations_.end()) {
        throw LookupError("unknown generalization '" + id.str() + "' in model '" + name_ + "'");
    }
    return it->second;
}

const OverlappingGroup& Model::overlappingGroup(const GroupId& id) const {
    auto it = groups_.find(id);
    if (it == groups_.end()) {
        throw LookupError("unknown overlapping group '" + id.str() + "' in model '" + name_ +
                          "'");
    }
    return it->second;
}

const std::set<ClassifierId>& Model::directParents(const ClassifierId& id) const {
    classifier(id); // existence check
    static const std::set<ClassifierId> kEmpty;
    auto it = parentsByChild_.find(id);
    return it == parentsByChild_.end() ? kEmpty : it->second;
}

std::set<ClassifierId> allParents(const Model& model, const ClassifierId& c) {
    std::vector<ClassifierId> work(model.directParents(c).begin(),
                                   model.directParents(c).end());
    std::set<ClassifierId> closure;
    while (!work.empty()) {
        ClassifierId current = work.back();
        work.pop_back();
        if (!closure.insert(current).second) {
            continue;
        }
        for (const ClassifierId& parent : model.directParents(current)) {
            if (!closure.contains(parent)) {
                work.push_back(parent);
            }
        }
    }
    return closure;
}

std::set<GeneralizationId> specializationsOf(const Model& model, const ClassifierId& c) {
    model.classifier(c); // existence check
    std::set<GeneralizationId> result;
    for (const auto& [id, gen] : model.generalizations()) {
        if (gen.parent == c) {
            result.insert(id);
        }
    }
    return result;
}

ModelBuilder::ModelBuilder(std::string name) {
    if (!isValidToken(name)) {
        throw std::invalid_argument("invalid model name: '" + name + "'");
    }
    model_.name_ = std::move(name);
}

ModelBuilder& ModelBuilder::addClassifier(const std::string& id, bool isAbstract) {
    ClassifierId cid{id};
    if (model_.classifiers_.contains(cid)) {
        throw std::invalid_argument("duplicate classifier '" + id + "'");
    }
    model_.classifiers_.emplace(cid, Classifier{cid, isAbstract});
    return *this;
}

ModelBuilder& ModelBuilder::addGeneralization(const std::string& id, const std::string& child,
                                              const std::string& parent) {
    GeneralizationId gid{id};
    ClassifierId childId{child};
    ClassifierId parentId{parent};
    if (model_.generalizations_.contains(gid)) {
        throw std::invalid_argument("duplicate generalization '" + id + "'");
    }
    if (!model_.classifiers_.contains(childId)) {
        throw std::invalid_argument("undefined classifier '" + child + "'");
    }
    if (!model_.classifiers_.contains(parentId)) {
        throw std::invalid_argument("undefined classifier '" + parent + "'");
    }
    model_.generalizations_.emplace(gid, Generalization{gid, childId, parentId});
    model_.parentsByChild_[childId].insert(parentId);
    model_.generalizationsByParent_[parentId].insert(gid);
    return *this;
}

ModelBuilder& ModelBuilder::addOverlappingGroup(const std::string& id,
                                                const std::vector<std::string>& members) {
    GroupId group{id};
    if (model_.groups_.contains(group)) {
        throw std::invalid_argument("duplicate overlapping group '" + id + "'");
    }
    std::set<GeneralizationId> memberIds;
    for (const std::string& member : members) {
        GeneralizationId gid{member};
        if (!model_.generalizations_.contains(gid)) {
            throw std::invalid_argument("undefined generalization '" + member + "'");
        }
        memberIds.insert(gid);
    }
    model_.groups_.emplace(group, OverlappingGroup{group, std::move(memberIds)});
    return *this;
}

} // namespace metacheck
