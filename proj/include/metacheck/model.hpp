// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_MODEL_HPP
#define METACHECK_MODEL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "metacheck/ids.hpp"

namespace metacheck {

struct Classifier {
    ClassifierId id;
    bool isAbstract = false;

    friend bool operator==(const Classifier&, const Classifier&) = default;
};

/// Directed child -> parent edge of the generalization hierarchy.
struct Generalization {
    GeneralizationId id;
    ClassifierId child;
    ClassifierId parent;

    friend bool operator==(const Generalization&, const Generalization&) = default;
};

/// A set of generalizations whose child classifiers are allowed to share
/// instances. Suspends the default pairwise disjointness among its members.
struct OverlappingGroup {
    GroupId id;
    std::set<GeneralizationId> members;

    friend bool operator==(const OverlappingGroup&, const OverlappingGroup&) = default;
};

/// Immutable class-model fragment: classifiers, generalization edges and
/// overlapping groups. Referentially closed by construction; acyclicity and
/// group arity are checked separately (wellformedness.hpp). All queries are
/// read-only, so a Model can be shared across threads freely.
class Model {
public:
    const std::string& name() const { return name_; }
    const std::map<ClassifierId, Classifier>& classifiers() const { return classifiers_; }
    const std::map<GeneralizationId, Generalization>& generalizations() const {
        return generalizations_;
    }
    const std::map<GroupId, OverlappingGroup>& overlappingGroups() const { return groups_; }

    bool hasClassifier(const ClassifierId& id) const;
    bool hasGeneralization(const GeneralizationId& id) const;

    /// Lookups throw LookupError when the id does not resolve.
    const Classifier& classifier(const ClassifierId& id) const;
    const Generalization& generalization(const GeneralizationId& id) const;
    const OverlappingGroup& overlappingGroup(const GroupId& id) const;

    /// Direct parents of a classifier (one generalization step).
    const std::set<ClassifierId>& directParents(const ClassifierId& id) const;

    friend bool operator==(const Model& a, const Model& b) {
        return a.name_ == b.name_ && a.classifiers_ == b.classifiers_ &&
               a.generalizations_ == b.generalizations_ && a.groups_ == b.groups_;
    }

private:
    friend class ModelBuilder;
    Model() = default;

    std::string name_;
    std::map<ClassifierId, Classifier> classifiers_;
    std::map<GeneralizationId, Generalization> generalizations_;
    std::map<GroupId, OverlappingGroup> groups_;
    // Adjacency precomputed at build time; Model stays immutable afterwards.
    std::map<ClassifierId, std::set<ClassifierId>> parentsByChild_;
    std::map<ClassifierId, std::set<GeneralizationId>> generalizationsByParent_;
};

/// Ancestor closure: every classifier reachable from `c` by following
/// child -> parent edges one or more times. Uses a visited set, so it
/// terminates on cyclic models; `c` itself appears in the result exactly
/// when it lies on a cycle.
std::set<ClassifierId> allParents(const Model& model, const ClassifierId& c);

/// All generalizations whose parent is `c`.
std::set<GeneralizationId> specializationsOf(const Model& model, const ClassifierId& c);

/// Checked construction. Enforces token syntax, per-category id uniqueness
/// and referential closure (edge endpoints and group members must already
/// be declared). Everything else — self edges, duplicate parallel edges,
/// cycles, undersized groups — is constructible and left to the
/// well-formedness checks. Throws std::invalid_argument on violations.
class ModelBuilder {
public:
    explicit ModelBuilder(std::string name);

    ModelBuilder& addClassifier(const std::string& id, bool isAbstract = false);
    ModelBuilder& addGeneralization(const std::string& id, const std::string& child,
                                    const std::string& parent);
    ModelBuilder& addOverlappingGroup(const std::string& id,
                                      const std::vector<std::string>& members);

    Model build() const { return model_; }

private:
    Model model_;
};

} // namespace metacheck

#endif
