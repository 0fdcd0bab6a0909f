// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_TESTS_SUPPORT_TESTUTIL_HPP
#define METACHECK_TESTS_SUPPORT_TESTUTIL_HPP

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "metacheck/model.hpp"
#include "metacheck/snapshot.hpp"
#include "metacheck/textformats.hpp"

namespace testsupport {

inline std::string readFileOrThrow(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open test input: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline metacheck::Model parseModelOrThrow(const std::string& text,
                                          const std::string& filename = "<test>") {
    metacheck::ParseResult<metacheck::Model> result = metacheck::parseModel(text, filename);
    if (!result.ok()) {
        throw std::runtime_error(metacheck::renderParseError(*result.error));
    }
    return *result.value;
}

inline metacheck::Snapshot parseSnapshotOrThrow(const std::string& text,
                                                const metacheck::Model& model,
                                                const std::string& filename = "<test>") {
    metacheck::ParseResult<metacheck::Snapshot> result =
        metacheck::parseSnapshot(text, model, filename);
    if (!result.ok()) {
        throw std::runtime_error(metacheck::renderParseError(*result.error));
    }
    return *result.value;
}

inline std::set<std::string> classifierNames(const std::set<metacheck::ClassifierId>& ids) {
    std::set<std::string> names;
    for (const metacheck::ClassifierId& id : ids) {
        names.insert(id.str());
    }
    return names;
}

inline std::set<std::string> generalizationNames(
    const std::set<metacheck::GeneralizationId>& ids) {
    std::set<std::string> names;
    for (const metacheck::GeneralizationId& id : ids) {
        names.insert(id.str());
    }
    return names;
}

inline std::set<std::string> instanceNames(const std::set<metacheck::InstanceId>& ids) {
    std::set<std::string> names;
    for (const metacheck::InstanceId& id : ids) {
        names.insert(id.str());
    }
    return names;
}

} // namespace testsupport

#endif
