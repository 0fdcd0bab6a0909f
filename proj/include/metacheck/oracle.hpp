// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_ORACLE_HPP
#define METACHECK_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "metacheck/model.hpp"
#include "metacheck/snapshot.hpp"

namespace metacheck {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// First-principles validity: the set-level subset / unique-direct /
/// disjointness / abstract-coverage conditions evaluated directly on
/// instance sets. Shares no logic with the semantics checks (own
/// reachability, own set algebra); exists purely to cross-check them.
/// Requires a well-formed model; throws UsageError otherwise.
bool validByDefinition(const Model& model, const Snapshot& snapshot);

/// Number of snapshots enumerateSnapshots would yield for n instances:
/// (2^|classifiers| - 1)^n, saturating at UINT64_MAX.
std::uint64_t countSnapshots(const Model& model, int instanceCount);

/// Streams every snapshot over instances i1..in, each assigned a non-empty
/// classifier subset, in lexicographic order (i1's subset most significant;
/// subsets ordered by bitmask over the sorted classifier list). Snapshots
/// are named s1, s2, ... by enumeration position. Throws CapExceededError
/// when the total would exceed `cap`.
void forEachSnapshot(const Model& model, int instanceCount, std::uint64_t cap,
                     const std::function<void(const Snapshot&)>& visit);

/// Materialized form of forEachSnapshot.
std::vector<Snapshot> enumerateSnapshots(const Model& model, int instanceCount,
                                         std::uint64_t cap = kDefaultEnumerationCap);

struct Disagreement {
    std::string snapshotText; // canonical rendering
    bool checkerVerdict = false;
    bool oracleVerdict = false;

    friend bool operator==(const Disagreement&, const Disagreement&) = default;
};

struct CrossCheckReport {
    std::string modelName;
    int instanceCount = 0;
    std::uint64_t totalSnapshots = 0;
    std::uint64_t agreeing = 0;
    std::vector<Disagreement> disagreements; // in enumeration order
};

/// Runs checkSnapshot (verdict: empty violation list) and validByDefinition
/// over the full enumeration and records every disagreement.
CrossCheckReport crossCheck(const Model& model, int instanceCount,
                            std::uint64_t cap = kDefaultEnumerationCap);

} // namespace metacheck

#endif
