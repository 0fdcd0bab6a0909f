// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_WELLFORMEDNESS_HPP
#define METACHECK_WELLFORMEDNESS_HPP

#include <vector>

#include "metacheck/model.hpp"
#include "metacheck/violation.hpp"

namespace metacheck {

/// WF_CYCLE for every classifier contained in its own ancestor closure.
std::vector<Violation> checkAcyclicity(const Model& model);

/// WF_SELF_GEN for every generalization whose child equals its parent,
/// WF_DUP_EDGE for every repeated (child, parent) edge beyond the first.
std::vector<Violation> checkIntegrity(const Model& model);

/// WF_OVERLAP_ARITY for every overlapping group with fewer than two members.
std::vector<Violation> checkOverlappingArity(const Model& model);

/// All model-level checks, sorted by (code, subjects). An empty result is
/// the precondition for every snapshot-level check.
std::vector<Violation> checkModel(const Model& model);

} // namespace metacheck

#endif
