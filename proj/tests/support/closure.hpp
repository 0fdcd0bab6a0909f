// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_TESTS_SUPPORT_CLOSURE_HPP
#define METACHECK_TESTS_SUPPORT_CLOSURE_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

/// Test-side reachability oracle, deliberately coded as a Warshall boolean
/// matrix closure so it shares nothing with the library's worklist
/// implementation. Edges are (child, parent) pairs; the result is every
/// node reachable from `start` in one or more steps.
inline std::set<std::string>
reachableFrom(const std::vector<std::pair<std::string, std::string>>& edges,
              const std::string& start) {
    std::map<std::string, std::size_t> index;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index.try_emplace(name, index.size());
        return it->second;
    };
    intern(start);
    for (const auto& [child, parent] : edges) {
        intern(child);
        intern(parent);
    }

    const std::size_t n = index.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& [child, parent] : edges) {
        reach[index.at(child)][index.at(parent)] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[k][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }

    std::set<std::string> result;
    const std::size_t s = index.at(start);
    for (const auto& [name, i] : index) {
        if (reach[s][i]) {
            result.insert(name);
        }
    }
    return result;
}

} // namespace testsupport

#endif
