// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_SEMANTICS_HPP
#define METACHECK_SEMANTICS_HPP

#include <optional>
#include <set>
#include <vector>

#include "metacheck/model.hpp"
#include "metacheck/snapshot.hpp"
#include "metacheck/violation.hpp"

namespace metacheck {

/// The denotation set of a classifier: every instance linked to it.
std::set<InstanceId> instancesOf(const Model& model, const Snapshot& snapshot,
                                 const ClassifierId& c);

/// True iff the instance's classifier links are exactly {c} plus c's
/// ancestor closure.
bool isDirectInstanceOf(const Model& model, const Snapshot& snapshot, const InstanceId& i,
                        const ClassifierId& c);

/// The unique classifier the instance directly instantiates, or nullopt if
/// none matches. On acyclic models at most one classifier can match; more
/// than one means the acyclicity precondition was violated and is reported
/// as an internal error (std::logic_error).
std::optional<ClassifierId> directOf(const Model& model, const Snapshot& snapshot,
                                     const InstanceId& i);

/// The classifiers the instance instantiates only through a descendant:
/// its links minus the direct classifier (unchanged when none exists).
std::set<ClassifierId> indirectOf(const Model& model, const Snapshot& snapshot,
                                  const InstanceId& i);

/// OCL operation: direct instantiation test (alias of isDirectInstanceOf).
bool oclIsTypeOf(const Model& model, const Snapshot& snapshot, const InstanceId& i,
                 const ClassifierId& c);

/// OCL operation: true iff the instance's direct classifier is c or
/// descends from c.
bool oclIsKindOf(const Model& model, const Snapshot& snapshot, const InstanceId& i,
                 const ClassifierId& c);

/// True iff some overlapping group contains both generalizations.
bool hasSameOverlappingConstraint(const Model& model, const GeneralizationId& g1,
                                  const GeneralizationId& g2);

/// SEM_CONFORMANCE (instance, child, parent) for every instance linked to a
/// generalization's child but not to its parent.
std::vector<Violation> checkConformance(const Model& model, const Snapshot& snapshot);

/// SEM_IDENTITY (instance) for every instance whose classifier links match
/// no classifier's closed ancestor set (no direct classifier).
std::vector<Violation> checkUniqueIdentity(const Model& model, const Snapshot& snapshot);

/// SEM_DISJOINT (instance, childA, childB) for every instance shared by two
/// sibling subclasses whose generalizations carry no common overlapping
/// constraint.
std::vector<Violation> checkDisjointness(const Model& model, const Snapshot& snapshot);

/// SEM_ABSTRACT (instance, classifier) for every instance of an abstract
/// classifier covered by none of its children.
std::vector<Violation> checkAbstractCoverage(const Model& model, const Snapshot& snapshot);

/// All snapshot-level checks, sorted by (code, subjects). Requires a
/// well-formed model (checkModel empty); throws UsageError otherwise.
/// An empty result means the snapshot is accepted.
std::vector<Violation> checkSnapshot(const Model& model, const Snapshot& snapshot);

} // namespace metacheck

#endif
