// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include "metacheck/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "metacheck/errors.hpp"
#include "metacheck/semantics.hpp"
#include "metacheck/textformats.hpp"
#include "metacheck/wellformedness.hpp"

namespace metacheck {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    if (a > kSaturated / b) {
        return kSaturated;
    }
    return a * b;
}

std::uint64_t saturatingPow(std::uint64_t base, int exponent) {
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        result = saturatingMul(result, base);
    }
    return result;
}

void requireNonNegative(int instanceCount) {
    if (instanceCount < 0) {
        throw UsageError("instance count must be non-negative, got " +
                         std::to_string(instanceCount));
    }
}

} // namespace

std::uint64_t countSnapshots(const Model& model, int instanceCount) {
    requireNonNegative(instanceCount);
    const std::size_t k = model.classifiers().size();
    const std::uint64_t base = k >= 64 ? kSaturated : (std::uint64_t{1} << k) - 1;
    return saturatingPow(base, instanceCount);
}

void forEachSnapshot(const Model& model, int instanceCount, std::uint64_t cap,
                     const std::function<void(const Snapshot&)>& visit) {
    requireNonNegative(instanceCount);
    const std::uint64_t total = countSnapshots(model, instanceCount);
    if (total > cap) {
        throw CapExceededError("enumeration would yield " +
                               (total == kSaturated ? std::string(">= 2^64 - 1")
                                                    : std::to_string(total)) +
                               " snapshots, exceeding the cap of " + std::to_string(cap));
    }

    if (instanceCount == 0) {
        visit(SnapshotBuilder{"s1", model}.build());
        return;
    }
    std::vector<std::string> classifierNames;
    for (const auto& [id, classifier] : model.classifiers()) {
        classifierNames.push_back(id.str());
    }
    const std::size_t k = classifierNames.size();
    if (k == 0) {
        return; // (2^0 - 1)^n = 0 snapshots
    }
    if (k >= 64) {
        throw CapExceededError("enumeration over " + std::to_string(k) +
                               " classifiers exceeds the supported range");
    }

    const std::uint64_t maxMask = (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(instanceCount), 1);
    std::uint64_t position = 0;
    while (true) {
        ++position;
        SnapshotBuilder builder{"s" + std::to_string(position), model};
        for (int i = 0; i < instanceCount; ++i) {
            std::vector<std::string> subset;
            for (std::size_t j = 0; j < k; ++j) {
                if (masks[static_cast<std::size_t>(i)] >> j & 1) {
                    subset.push_back(classifierNames[j]);
                }
            }
            builder.addInstance("i" + std::to_string(i + 1), subset);
        }
        visit(builder.build());

        // Odometer: the last instance's subset varies fastest, so i1's
        // subset is the most significant digit of the enumeration order.
        int pos = instanceCount - 1;
        while (pos >= 0 && masks[static_cast<std::size_t>(pos)] == maxMask) {
            masks[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++masks[static_cast<std::size_t>(pos)];
    }
}

std::vector<Snapshot> enumerateSnapshots(const Model& model, int instanceCount,
                                         std::uint64_t cap) {
    std::vector<Snapshot> result;
    forEachSnapshot(model, instanceCount, cap,
                    [&result](const Snapshot& s) { result.push_back(s); });
    return result;
}

bool validByDefinition(const Model& model, const Snapshot& snapshot) {
    if (!checkModel(model).empty()) {
        throw UsageError("validByDefinition requires a well-formed model; '" + model.name() +
                         "' has well-formedness violations");
    }

    // Everything below works on plain string sets extracted from the raw
    // model data. Deliberately no allParents / specializationsOf /
    // instancesOf here: this is the cross-check, it reimplements the set
    // semantics from scratch.
    std::vector<std::string> classifierNames;
    std::set<std::string> abstractNames;
    for (const auto& [id, classifier] : model.classifiers()) {
        classifierNames.push_back(id.str());
        if (classifier.isAbstract) {
            abstractNames.insert(id.str());
        }
    }
    struct Edge {
        std::string gen;
        std::string child;
        std::string parent;
    };
    std::vector<Edge> edges;
    for (const auto& [id, gen] : model.generalizations()) {
        edges.push_back(Edge{id.str(), gen.child.str(), gen.parent.str()});
    }
    std::vector<std::set<std::string>> groups;
    for (const auto& [id, group] : model.overlappingGroups()) {
        std::set<std::string> members;
        for (const GeneralizationId& member : group.members) {
            members.insert(member.str());
        }
        groups.push_back(std::move(members));
    }

    // Denotation: the instance set of every classifier.
    std::map<std::string, std::set<std::string>> extension;
    for (const std::string& name : classifierNames) {
        extension[name];
    }
    for (const auto& [iid, instance] : snapshot.instances()) {
        for (const ClassifierId& c : instance.classifiers) {
            extension[c.str()].insert(iid.str());
        }
    }

    // Ancestor sets via fixpoint iteration over the one-step parent map.
    std::map<std::string, std::set<std::string>> ancestors;
    for (const std::string& name : classifierNames) {
        ancestors[name];
    }
    for (const Edge& edge : edges) {
        ancestors[edge.child].insert(edge.parent);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (const std::string& name : classifierNames) {
            std::set<std::string> grown = ancestors[name];
            for (const std::string& parent : ancestors[name]) {
                grown.insert(ancestors[parent].begin(), ancestors[parent].end());
            }
            if (grown.size() != ancestors[name].size()) {
                ancestors[name] = std::move(grown);
                changed = true;
            }
        }
    }

    // (1) Instances of a child are a subset of the instances of its parent.
    for (const Edge& edge : edges) {
        const std::set<std::string>& childSet = extension[edge.child];
        const std::set<std::string>& parentSet = extension[edge.parent];
        if (!std::includes(parentSet.begin(), parentSet.end(), childSet.begin(),
                           childSet.end())) {
            return false;
        }
    }

    // (2) Exactly one linked classifier whose closed ancestor set equals the
    //     instance's links.
    for (const auto& [iid, instance] : snapshot.instances()) {
        std::set<std::string> links;
        for (const ClassifierId& c : instance.classifiers) {
            links.insert(c.str());
        }
        int matches = 0;
        for (const std::string& candidate : links) {
            std::set<std::string> closed = ancestors[candidate];
            closed.insert(candidate);
            if (closed == links) {
                ++matches;
            }
        }
        if (matches != 1) {
            return false;
        }
    }

    // (3) Specializations of a common parent have disjoint instance sets
    //     unless they share an overlapping group.
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (edges[a].parent != edges[b].parent) {
                continue;
            }
            bool sharedGroup = false;
            for (const std::set<std::string>& group : groups) {
                if (group.contains(edges[a].gen) && group.contains(edges[b].gen)) {
                    sharedGroup = true;
                    break;
                }
            }
            if (sharedGroup) {
                continue;
            }
            for (const std::string& iid : extension[edges[a].child]) {
                if (extension[edges[b].child].contains(iid)) {
                    return false;
                }
            }
        }
    }

    // (4) An abstract classifier's instance set equals the union of its
    //     children's instance sets.
    for (const std::string& name : abstractNames) {
        std::set<std::string> childUnion;
        for (const Edge& edge : edges) {
            if (edge.parent == name) {
                childUnion.insert(extension[edge.child].begin(), extension[edge.child].end());
            }
        }
        if (childUnion != extension[name]) {
            return false;
        }
    }

    return true;
}

CrossCheckReport crossCheck(const Model& model, int instanceCount, std::uint64_t cap) {
    if (!checkModel(model).empty()) {
        throw UsageError("crossCheck requires a well-formed model; '" + model.name() +
                         "' has well-formedness violations");
    }
    CrossCheckReport report;
    report.modelName = model.name();
    report.instanceCount = instanceCount;
    report.totalSnapshots = countSnapshots(model, instanceCount);
    forEachSnapshot(model, instanceCount, cap, [&](const Snapshot& snapshot) {
        const bool checkerVerdict = checkSnapshot(model, snapshot).empty();
        const bool oracleVerdict = validByDefinition(model, snapshot);
        if (checkerVerdict == oracleVerdict) {
            ++report.agreeing;
        } else {
            report.disagreements.push_back(
                Disagreement{renderSnapshot(snapshot), checkerVerdict, oracleVerdict});
        }
    });
    return report;
}

} // namespace metacheck
