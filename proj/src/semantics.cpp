// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include "metacheck/semantics.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "metacheck/errors.hpp"
#include "metacheck/wellformedness.hpp"

namespace metacheck {

std::set<InstanceId> instancesOf(const Model& model, const Snapshot& snapshot,
                                 const ClassifierId& c) {
    model.classifier(c); // existence check
    std::set<InstanceId> result;
    for (const auto& [id, instance] : snapshot.instances()) {
        if (instance.classifiers.contains(c)) {
            result.insert(id);
        }
    }
    return result;
}

namespace {

/// {c} plus c's ancestor closure.
std::set<ClassifierId> closedAncestry(const Model& model, const ClassifierId& c) {
    std::set<ClassifierId> closure = allParents(model, c);
    closure.insert(c);
    return closure;
}

} // namespace

bool isDirectInstanceOf(const Model& model, const Snapshot& snapshot, const InstanceId& i,
                        const ClassifierId& c) {
    const Instance& instance = snapshot.instance(i);
    model.classifier(c); // existence check
    return instance.classifiers == closedAncestry(model, c);
}

std::optional<ClassifierId> directOf(const Model& model, const Snapshot& snapshot,
                                     const InstanceId& i) {
    const Instance& instance = snapshot.instance(i);
    std::optional<ClassifierId> direct;
    for (const ClassifierId& c : instance.classifiers) {
        if (instance.classifiers == closedAncestry(model, c)) {
            if (direct) {
                // Impossible on acyclic models; reaching this means the
                // well-formedness precondition was violated.
                throw std::logic_error("instance '" + i.str() +
                                       "' has multiple direct classifiers ('" + direct->str() +
                                       "', '" + c.str() + "'); is the model cyclic?");
            }
            direct = c;
        }
    }
    return direct;
}

std::set<ClassifierId> indirectOf(const Model& model, const Snapshot& snapshot,
                                  const InstanceId& i) {
    std::set<ClassifierId> result = snapshot.instance(i).classifiers;
    if (std::optional<ClassifierId> direct = directOf(model, snapshot, i)) {
        result.erase(*direct);
    }
    return result;
}

bool oclIsTypeOf(const Model& model, const Snapshot& snapshot, const InstanceId& i,
                 const ClassifierId& c) {
    return isDirectInstanceOf(model, snapshot, i, c);
}

bool oclIsKindOf(const Model& model, const Snapshot& snapshot, const InstanceId& i,
                 const ClassifierId& c) {
    model.classifier(c); // existence check
    std::optional<ClassifierId> direct = directOf(model, snapshot, i);
    if (!direct) {
        return false;
    }
    return *direct == c || allParents(model, *direct).contains(c);
}

bool hasSameOverlappingConstraint(const Model& model, const GeneralizationId& g1,
                                  const GeneralizationId& g2) {
    model.generalization(g1); // existence checks
    model.generalization(g2);
    for (const auto& [id, group] : model.overlappingGroups()) {
        if (group.members.contains(g1) && group.members.contains(g2)) {
            return true;
        }
    }
    return false;
}

std::vector<Violation> checkConformance(const Model& model, const Snapshot& snapshot) {
    std::vector<Violation> violations;
    for (const auto& [iid, instance] : snapshot.instances()) {
        for (const auto& [gid, gen] : model.generalizations()) {
            if (instance.classifiers.contains(gen.child) &&
                !instance.classifiers.contains(gen.parent)) {
                violations.push_back(Violation{
                    ViolationCode::SEM_CONFORMANCE,
                    {iid.str(), gen.child.str(), gen.parent.str()},
                    "instance '" + iid.str() + "' is linked to '" + gen.child.str() +
                        "' but not to its parent '" + gen.parent.str() + "'"});
            }
        }
    }
    std::sort(violations.begin(), violations.end());
    return violations;
}

std::vector<Violation> checkUniqueIdentity(const Model& model, const Snapshot& snapshot) {
    std::vector<Violation> violations;
    for (const auto& [iid, instance] : snapshot.instances()) {
        std::size_t directCount = 0;
        for (const ClassifierId& c : instance.classifiers) {
            if (instance.classifiers == closedAncestry(model, c)) {
                ++directCount;
            }
        }
        if (directCount != 1) {
            violations.push_back(Violation{
                ViolationCode::SEM_IDENTITY,
                {iid.str()},
                "instance '" + iid.str() +
                    "' has no direct classifier: its links match no classifier's "
                    "ancestor closure"});
        }
    }
    return violations;
}

std::vector<Violation> checkDisjointness(const Model& model, const Snapshot& snapshot) {
    std::vector<Violation> violations;
    for (const auto& [parentId, parent] : model.classifiers()) {
        const std::set<GeneralizationId> specs = specializationsOf(model, parentId);
        for (auto g = specs.begin(); g != specs.end(); ++g) {
            for (auto h = std::next(g); h != specs.end(); ++h) {
                if (hasSameOverlappingConstraint(model, *g, *h)) {
                    continue;
                }
                const ClassifierId& childG = model.generalization(*g).child;
                const ClassifierId& childH = model.generalization(*h).child;
                std::set<InstanceId> shared;
                std::ranges::set_intersection(
                    instancesOf(model, snapshot, childG), instancesOf(model, snapshot, childH),
                    std::inserter(shared, shared.end()));
                for (const InstanceId& iid : shared) {
                    std::vector<std::string> children{childG.str(), childH.str()};
                    std::sort(children.begin(), children.end());
                    violations.push_back(Violation{
                        ViolationCode::SEM_DISJOINT,
                        {iid.str(), children[0], children[1]},
                        "instance '" + iid.str() + "' belongs to disjoint subclasses '" +
                            children[0] + "' and '" + children[1] + "' of '" + parentId.str() +
                            "'"});
                }
            }
        }
    }
    std::sort(violations.begin(), violations.end());
    return violations;
}

std::vector<Violation> checkAbstractCoverage(const Model& model, const Snapshot& snapshot) {
    std::vector<Violation> violations;
    for (const auto& [cid, classifier] : model.classifiers()) {
        if (!classifier.isAbstract) {
            continue;
        }
        std::set<InstanceId> covered;
        for (const GeneralizationId& gid : specializationsOf(model, cid)) {
            std::set<InstanceId> childInstances =
                instancesOf(model, snapshot, model.generalization(gid).child);
            covered.insert(childInstances.begin(), childInstances.end());
        }
        for (const InstanceId& iid : instancesOf(model, snapshot, cid)) {
            if (!covered.contains(iid)) {
                violations.push_back(Violation{
                    ViolationCode::SEM_ABSTRACT,
                    {iid.str(), cid.str()},
                    "instance '" + iid.str() + "' is linked to abstract classifier '" +
                        cid.str() + "' but to none of its subclasses"});
            }
        }
    }
    std::sort(violations.begin(), violations.end());
    return violations;
}

std::vector<Violation> checkSnapshot(const Model& model, const Snapshot& snapshot) {
    if (!checkModel(model).empty()) {
        throw UsageError("checkSnapshot requires a well-formed model; '" + model.name() +
                         "' has well-formedness violations");
    }
    std::vector<Violation> violations = checkConformance(model, snapshot);
    for (auto&& more : {checkUniqueIdentity(model, snapshot),
                        checkDisjointness(model, snapshot),
                        checkAbstractCoverage(model, snapshot)}) {
        violations.insert(violations.end(), more.begin(), more.end());
    }
    std::sort(violations.begin(), violations.end());
    return violations;
}

} // namespace metacheck
