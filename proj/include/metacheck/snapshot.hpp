// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_SNAPSHOT_HPP
#define METACHECK_SNAPSHOT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "metacheck/ids.hpp"
#include "metacheck/model.hpp"

namespace metacheck {

/// An object with the set of classifiers it is linked to. The set is
/// non-empty and every member resolves in the companion model.
struct Instance {
    InstanceId id;
    std::set<ClassifierId> classifiers;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// A finite object-diagram state checked against a model.
class Snapshot {
public:
    const std::string& name() const { return name_; }
    const std::map<InstanceId, Instance>& instances() const { return instances_; }

    bool hasInstance(const InstanceId& id) const;
    const Instance& instance(const InstanceId& id) const; // throws LookupError

    friend bool operator==(const Snapshot& a, const Snapshot& b) {
        return a.name_ == b.name_ && a.instances_ == b.instances_;
    }

private:
    friend class SnapshotBuilder;
    Snapshot() = default;

    std::string name_;
    std::map<InstanceId, Instance> instances_;
};

/// Checked construction against a model: instance ids unique, classifier
/// lists non-empty, deduplicated into sets, every reference resolving.
/// Throws std::invalid_argument on violations.
class SnapshotBuilder {
public:
    SnapshotBuilder(std::string name, const Model& model);

    SnapshotBuilder& addInstance(const std::string& id,
                                 const std::vector<std::string>& classifiers);

    Snapshot build() const { return snapshot_; }

private:
    const Model& model_;
    Snapshot snapshot_;
};

} // namespace metacheck

#endif
