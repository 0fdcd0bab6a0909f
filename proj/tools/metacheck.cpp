// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "metacheck/errors.hpp"
#include "metacheck/oracle.hpp"
#include "metacheck/semantics.hpp"
#include "metacheck/textformats.hpp"
#include "metacheck/wellformedness.hpp"

namespace {

// 0 = no violations, 1 = violations found, 2 = parse error,
// 3 = usage or I/O error.
enum ExitCode : int {
    kOk = 0,
    kViolations = 1,
    kParseFailure = 2,
    kUsage = 3,
};

std::optional<std::string> readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<metacheck::Model> loadModel(const std::string& path, int& exitCode) {
    std::optional<std::string> text = readFile(path);
    if (!text) {
        std::cerr << "error: cannot open '" << path << "'\n";
        exitCode = kUsage;
        return std::nullopt;
    }
    metacheck::ParseResult<metacheck::Model> parsed = metacheck::parseModel(*text, path);
    if (!parsed.ok()) {
        std::cerr << metacheck::renderParseError(*parsed.error) << "\n";
        exitCode = kParseFailure;
        return std::nullopt;
    }
    return parsed.value;
}

void printViolations(const std::vector<metacheck::Violation>& violations) {
    for (const metacheck::Violation& v : violations) {
        std::cout << metacheck::renderViolation(v) << "\n";
    }
}

nlohmann::json violationsToJson(const std::vector<metacheck::Violation>& violations) {
    nlohmann::json list = nlohmann::json::array();
    for (const metacheck::Violation& v : violations) {
        list.push_back({{"code", std::string(metacheck::toString(v.code))},
                        {"subjects", v.subjects},
                        {"message", v.message}});
    }
    return list;
}

/// Flag > METACHECK_CAP env var > built-in default.
bool resolveCap(const std::optional<std::uint64_t>& flagCap, std::uint64_t& cap) {
    if (flagCap) {
        cap = *flagCap;
        return true;
    }
    if (const char* env = std::getenv("METACHECK_CAP")) {
        const std::string value{env};
        try {
            std::size_t consumed = 0;
            const unsigned long long parsed = std::stoull(value, &consumed);
            if (consumed != value.size() || value.starts_with("-")) {
                throw std::invalid_argument(value);
            }
            cap = parsed;
            return true;
        } catch (const std::exception&) {
            std::cerr << "error: invalid METACHECK_CAP value '" << value << "'\n";
            return false;
        }
    }
    cap = metacheck::kDefaultEnumerationCap;
    return true;
}

int cmdValidateModel(const std::string& modelPath) {
    int exitCode = kOk;
    std::optional<metacheck::Model> model = loadModel(modelPath, exitCode);
    if (!model) {
        return exitCode;
    }
    const std::vector<metacheck::Violation> violations = metacheck::checkModel(*model);
    if (violations.empty()) {
        std::cout << "OK\n";
        return kOk;
    }
    printViolations(violations);
    return kViolations;
}

int cmdCheck(const std::string& modelPath, const std::string& snapshotPath,
             const std::string& format) {
    int exitCode = kOk;
    std::optional<metacheck::Model> model = loadModel(modelPath, exitCode);
    if (!model) {
        return exitCode;
    }
    const bool json = format == "json";

    // Well-formedness gates snapshot checking: the semantics of an
    // ill-formed hierarchy is undefined, so the snapshot is not evaluated.
    const std::vector<metacheck::Violation> modelViolations = metacheck::checkModel(*model);
    if (!modelViolations.empty()) {
        if (json) {
            nlohmann::json report{{"model", model->name()},
                                  {"snapshot", nullptr},
                                  {"valid", false},
                                  {"violations", violationsToJson(modelViolations)}};
            std::cout << report.dump(2) << "\n";
        } else {
            printViolations(modelViolations);
        }
        return kViolations;
    }

    std::optional<std::string> snapshotText = readFile(snapshotPath);
    if (!snapshotText) {
        std::cerr << "error: cannot open '" << snapshotPath << "'\n";
        return kUsage;
    }
    metacheck::ParseResult<metacheck::Snapshot> parsed =
        metacheck::parseSnapshot(*snapshotText, *model, snapshotPath);
    if (!parsed.ok()) {
        std::cerr << metacheck::renderParseError(*parsed.error) << "\n";
        return kParseFailure;
    }

    const std::vector<metacheck::Violation> violations =
        metacheck::checkSnapshot(*model, *parsed.value);
    if (json) {
        nlohmann::json report{{"model", model->name()},
                              {"snapshot", parsed.value->name()},
                              {"valid", violations.empty()},
                              {"violations", violationsToJson(violations)}};
        std::cout << report.dump(2) << "\n";
    } else if (violations.empty()) {
        std::cout << "OK\n";
    } else {
        printViolations(violations);
    }
    return violations.empty() ? kOk : kViolations;
}

int cmdEnumerate(const std::string& modelPath, int instances, const std::string& filter,
                 const std::optional<std::uint64_t>& flagCap) {
    int exitCode = kOk;
    std::optional<metacheck::Model> model = loadModel(modelPath, exitCode);
    if (!model) {
        return exitCode;
    }
    const std::vector<metacheck::Violation> modelViolations = metacheck::checkModel(*model);
    if (!modelViolations.empty()) {
        printViolations(modelViolations);
        return kViolations;
    }
    std::uint64_t cap = 0;
    if (!resolveCap(flagCap, cap)) {
        return kUsage;
    }

    std::uint64_t matched = 0;
    std::ostringstream out;
    try {
        metacheck::forEachSnapshot(*model, instances, cap,
                                   [&](const metacheck::Snapshot& snapshot) {
                                       const bool valid =
                                           metacheck::checkSnapshot(*model, snapshot).empty();
                                       if (filter == "all" || (filter == "valid") == valid) {
                                           out << metacheck::renderSnapshot(snapshot) << "\n";
                                           ++matched;
                                       }
                                   });
    } catch (const metacheck::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    out << "total: " << matched << "\n";
    std::cout << out.str();
    return kOk;
}

int cmdCrossCheck(const std::string& modelPath, int instances,
                  const std::optional<std::uint64_t>& flagCap) {
    int exitCode = kOk;
    std::optional<metacheck::Model> model = loadModel(modelPath, exitCode);
    if (!model) {
        return exitCode;
    }
    const std::vector<metacheck::Violation> modelViolations = metacheck::checkModel(*model);
    if (!modelViolations.empty()) {
        printViolations(modelViolations);
        return kViolations;
    }
    std::uint64_t cap = 0;
    if (!resolveCap(flagCap, cap)) {
        return kUsage;
    }

    metacheck::CrossCheckReport report;
    try {
        report = metacheck::crossCheck(*model, instances, cap);
    } catch (const metacheck::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    std::cout << "agreeing: " << report.agreeing << "/" << report.totalSnapshots << "\n";
    for (const metacheck::Disagreement& d : report.disagreements) {
        std::cout << "disagreement: checker=" << (d.checkerVerdict ? "valid" : "invalid")
                  << " oracle=" << (d.oracleVerdict ? "valid" : "invalid") << "\n"
                  << d.snapshotText;
    }
    return report.disagreements.empty() ? kOk : kViolations;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Class-model well-formedness and snapshot conformance checker"};
    app.require_subcommand(1);

    std::string validatePath;
    CLI::App* validate =
        app.add_subcommand("validate-model", "Check a model's well-formedness");
    validate->add_option("model", validatePath, "model file (.mdl)")->required();

    std::string checkModelPath;
    std::string checkSnapshotPath;
    std::string checkFormat = "text";
    CLI::App* check = app.add_subcommand("check", "Check a snapshot against a model");
    check->add_option("model", checkModelPath, "model file (.mdl)")->required();
    check->add_option("snapshot", checkSnapshotPath, "snapshot file (.snap)")->required();
    check->add_option("--format", checkFormat, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string enumerateModelPath;
    int enumerateInstances = 0;
    std::string enumerateFilter = "all";
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "Enumerate snapshots over a model");
    enumerate->add_option("model", enumerateModelPath, "model file (.mdl)")->required();
    enumerate->add_option("--instances", enumerateInstances, "number of instances")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--filter", enumerateFilter, "which snapshots to print")
        ->check(CLI::IsMember({"valid", "invalid", "all"}));

    std::string crosscheckModelPath;
    int crosscheckInstances = 0;
    std::optional<std::uint64_t> crosscheckCap;
    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "Compare the checker against the set-semantics definition");
    crosscheck->add_option("model", crosscheckModelPath, "model file (.mdl)")->required();
    crosscheck->add_option("--instances", crosscheckInstances, "number of instances")
        ->required()
        ->check(CLI::NonNegativeNumber);
    crosscheck->add_option("--cap", crosscheckCap, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (validate->parsed()) {
        return cmdValidateModel(validatePath);
    }
    if (check->parsed()) {
        return cmdCheck(checkModelPath, checkSnapshotPath, checkFormat);
    }
    if (enumerate->parsed()) {
        return cmdEnumerate(enumerateModelPath, enumerateInstances, enumerateFilter,
                            std::nullopt);
    }
    if (crosscheck->parsed()) {
        return cmdCrossCheck(crosscheckModelPath, crosscheckInstances, crosscheckCap);
    }
    return kUsage;
}
