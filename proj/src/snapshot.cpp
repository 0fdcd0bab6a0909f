// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include "metacheck/snapshot.hpp"

#include <stdexcept>
#include <utility>

#include "metacheck/errors.hpp"

namespace metacheck {

bool Snapshot::hasInstance(const InstanceId& id) const {
    return instances_.contains(id);
}

const Instance& Snapshot::instance(const InstanceId& id) const {
    auto it = instances_.find(id);
    if (it == instances_.end()) {
        throw LookupError("unknown instance '" + id.str() + "' in snapshot '" + name_ + "'");
    }
    return it->second;
}

SnapshotBuilder::SnapshotBuilder(std::string name, const Model& model) : model_(model) {
    if (!isValidToken(name)) {
        throw std::invalid_argument("invalid snapshot name: '" + name + "'");
    }
    snapshot_.name_ = std::move(name);
}

SnapshotBuilder& SnapshotBuilder::addInstance(const std::string& id,
                                              const std::vector<std::string>& classifiers) {
    InstanceId iid{id};
    if (snapshot_.instances_.contains(iid)) {
        throw std::invalid_argument("duplicate instance '" + id + "'");
    }
    if (classifiers.empty()) {
        throw std::invalid_argument("instance '" + id + "' must name at least one classifier");
    }
    std::set<ClassifierId> links;
    for (const std::string& name : classifiers) {
        ClassifierId cid{name};
        if (!model_.hasClassifier(cid)) {
            throw std::invalid_argument("undefined classifier '" + name + "'");
        }
        links.insert(cid);
    }
    snapshot_.instances_.emplace(iid, Instance{iid, std::move(links)});
    return *this;
}

} // namespace metacheck
