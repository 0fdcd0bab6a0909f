// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "metacheck/model.hpp"
#include "metacheck/snapshot.hpp"
#include "metacheck/textformats.hpp"

#include "support/randmodels.hpp"
#include "support/testutil.hpp"

using metacheck::ClassifierId;
using metacheck::GeneralizationId;
using metacheck::GroupId;
using metacheck::Model;
using metacheck::ParseResult;
using metacheck::Snapshot;
using testsupport::parseModelOrThrow;
using testsupport::parseSnapshotOrThrow;

namespace {

std::string withCrlf(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '\n') {
            out += "\r\n";
        } else {
            out += c;
        }
    }
    return out;
}

} // namespace

TEST_CASE("parseModel accepts the smallest non-empty model") {
    const Model m = parseModelOrThrow("model m\nclass A abstract\nclass B\ngen g1 : B -> A\n");
    CHECK(m.name() == "m");
    CHECK(m.classifiers().size() == 2);
    CHECK(m.classifier(ClassifierId("A")).isAbstract);
    CHECK_FALSE(m.classifier(ClassifierId("B")).isAbstract);
    const auto& g = m.generalization(GeneralizationId("g1"));
    CHECK(g.child == ClassifierId("B"));
    CHECK(g.parent == ClassifierId("A"));
    CHECK(m.overlappingGroups().empty());
}

TEST_CASE("parseModel reports undefined names with exact locations") {
    SUBCASE("undefined child classifier") {
        const auto r = metacheck::parseModel("model m\nclass A\ngen g1 : B -> A\n", "f.mdl");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->file == "f.mdl");
        CHECK(r.error->line == 3);
        CHECK(r.error->column == 10); // the B token
        CHECK(r.error->message.find("undefined classifier") != std::string::npos);
        CHECK(metacheck::renderParseError(*r.error).starts_with("f.mdl:3:10: "));
    }
    SUBCASE("undefined generalization in overlapping") {
        const auto r = metacheck::parseModel(
            "model m\nclass A\nclass B\ngen g1 : B -> A\noverlapping g1 gZ\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 5);
        CHECK(r.error->message.find("undefined generalization") != std::string::npos);
    }
    SUBCASE("duplicate classifier") {
        const auto r = metacheck::parseModel("model m\nclass A\nclass A\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 3);
        CHECK(r.error->message.find("duplicate") != std::string::npos);
    }
    SUBCASE("duplicate generalization id") {
        const auto r = metacheck::parseModel(
            "model m\nclass A\nclass B\ngen g1 : B -> A\ngen g1 : A -> B\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 5);
    }
}

TEST_CASE("parseModel enforces the line grammar") {
    SUBCASE("missing model header") {
        const auto r = metacheck::parseModel("class A\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 1);
    }
    SUBCASE("unknown directive") {
        const auto r = metacheck::parseModel("model m\nclasss A\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 2);
    }
    SUBCASE("gen without arrow") {
        const auto r = metacheck::parseModel("model m\nclass A\nclass B\ngen g1 : B A\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 4);
    }
    SUBCASE("trailing tokens rejected") {
        const auto r = metacheck::parseModel("model m\nclass A extra\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 2);
    }
    SUBCASE("overlapping needs two names") {
        const auto r = metacheck::parseModel(
            "model m\nclass A\nclass B\ngen g1 : B -> A\noverlapping g1\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 5);
    }
    SUBCASE("overlapping rejects a repeated name") {
        const auto r = metacheck::parseModel(
            "model m\nclass A\nclass B\ngen g1 : B -> A\noverlapping g1 g1\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 5);
    }
    SUBCASE("bad identifier") {
        const auto r = metacheck::parseModel("model m\nclass 9A\n");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 2);
    }
    SUBCASE("every rejection carries a positive line number") {
        const std::vector<std::string> bad{
            "", "model\n", "model m extra\n", "model m\ngen\n", "model m\nclass A\nclass A\n",
            "model m\nclass A\ngen g : A ->\n", "model m\noverlapping\n"};
        for (const std::string& text : bad) {
            const auto r = metacheck::parseModel(text);
            REQUIRE_FALSE(r.ok());
            CHECK(r.error->line >= 1);
            CHECK(r.error->column >= 1);
        }
    }
}

TEST_CASE("parseModel builds overlapping groups with og ids in declaration order") {
    const Model m = parseModelOrThrow(
        "model m\nclass A\nclass B\nclass C\nclass D\n"
        "gen gB : B -> A\ngen gC : C -> A\ngen gD : D -> A\n"
        "overlapping gC gD\noverlapping gB gC gD\n");
    REQUIRE(m.overlappingGroups().size() == 2);
    const auto& og1 = m.overlappingGroup(GroupId("og1"));
    CHECK(og1.members == std::set<GeneralizationId>{GeneralizationId("gC"),
                                                    GeneralizationId("gD")});
    const auto& og2 = m.overlappingGroup(GroupId("og2"));
    CHECK(og2.members.size() == 3);
}

TEST_CASE("parseSnapshot resolves against the model") {
    const Model m = parseModelOrThrow("model m\nclass A\nclass B\ngen g1 : B -> A\n");
    SUBCASE("simple instance") {
        const Snapshot s = parseSnapshotOrThrow("snapshot s\ninstance i1 : B, A\n", m);
        CHECK(s.name() == "s");
        REQUIRE(s.instances().size() == 1);
        CHECK(s.instance(metacheck::InstanceId("i1")).classifiers ==
              std::set<ClassifierId>{ClassifierId("A"), ClassifierId("B")});
    }
    SUBCASE("undefined classifier") {
        const auto r = metacheck::parseSnapshot("snapshot s\ninstance i1 : Z\n", m);
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 2);
        CHECK(r.error->message.find("undefined classifier") != std::string::npos);
    }
    SUBCASE("zero instances is legal") {
        const Snapshot s = parseSnapshotOrThrow("snapshot s\n", m);
        CHECK(s.instances().empty());
    }
    SUBCASE("duplicate instance id") {
        const auto r =
            metacheck::parseSnapshot("snapshot s\ninstance i : A\ninstance i : B\n", m);
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 3);
    }
    SUBCASE("repeated classifier in one line is rejected") {
        const auto r = metacheck::parseSnapshot("snapshot s\ninstance i : A, A\n", m);
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 2);
    }
    SUBCASE("empty classifier list is impossible") {
        const auto r = metacheck::parseSnapshot("snapshot s\ninstance i :\n", m);
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->line == 2);
    }
}

TEST_CASE("comments, blank lines, and CRLF do not change the parse") {
    const std::string plain = "model m\nclass A\nclass B\ngen g1 : B -> A\n";
    const std::string commented =
        "# header comment\n\nmodel m   # trailing\n\nclass A\n# middle\nclass B\n"
        "gen g1 : B -> A  # edge\n\n";
    const Model a = parseModelOrThrow(plain);
    CHECK(a == parseModelOrThrow(commented));
    CHECK(a == parseModelOrThrow(withCrlf(plain)));

    const std::string snapPlain = "snapshot s\ninstance i : B, A\n";
    const std::string snapCommented = "\n# c\nsnapshot s\ninstance i : B, A # ok\n";
    CHECK(parseSnapshotOrThrow(snapPlain, a) == parseSnapshotOrThrow(snapCommented, a));
    CHECK(parseSnapshotOrThrow(snapPlain, a) == parseSnapshotOrThrow(withCrlf(snapPlain), a));
}

TEST_CASE("render emits the canonical form and round-trips") {
    const Model m = parseModelOrThrow(
        "# comment\nmodel overlap5\nclass A\nclass B\nclass C\nclass D\nclass E\n"
        "gen gB : B -> A\ngen gC : C -> A\ngen gD : D -> A\n"
        "gen gEC : E -> C\ngen gED : E -> D\noverlapping gC gD\n");
    const std::string rendered = metacheck::renderModel(m);
    CHECK(rendered ==
          "model overlap5\n"
          "class A\n"
          "class B\n"
          "class C\n"
          "class D\n"
          "class E\n"
          "gen gB : B -> A\n"
          "gen gC : C -> A\n"
          "gen gD : D -> A\n"
          "gen gEC : E -> C\n"
          "gen gED : E -> D\n"
          "overlapping gC gD\n");
    CHECK(parseModelOrThrow(rendered) == m);
    CHECK(metacheck::renderModel(parseModelOrThrow(rendered)) == rendered);

    const Snapshot s =
        parseSnapshotOrThrow("snapshot ok1\ninstance i : E, C, D, A\n", m);
    const std::string srendered = metacheck::renderSnapshot(s);
    CHECK(srendered == "snapshot ok1\ninstance i : A, C, D, E\n");
    CHECK(parseSnapshotOrThrow(srendered, m) == s);
}

TEST_CASE("abstract flag round-trips") {
    const Model m = parseModelOrThrow("model m\nclass A abstract\nclass B\ngen g : B -> A\n");
    const std::string rendered = metacheck::renderModel(m);
    CHECK(rendered.find("class A abstract\n") != std::string::npos);
    CHECK(parseModelOrThrow(rendered) == m);
}

TEST_CASE("group ids render in numeric declaration order") {
    // Eleven groups force og10/og11 to sort after og2 .. og9.
    std::string text = "model m\n";
    for (int i = 1; i <= 12; ++i) {
        text += "class c" + std::to_string(i) + "\n";
    }
    for (int i = 2; i <= 12; ++i) {
        text += "gen g" + std::to_string(i) + " : c" + std::to_string(i) + " -> c1\n";
    }
    for (int i = 2; i <= 12; ++i) {
        text += "overlapping g" + std::to_string(i) + " g" +
                std::to_string(i == 12 ? 2 : i + 1) + "\n";
    }
    const Model m = parseModelOrThrow(text);
    REQUIRE(m.overlappingGroups().size() == 11);
    const std::string rendered = metacheck::renderModel(m);
    CHECK(parseModelOrThrow(rendered) == m);
    CHECK(metacheck::renderModel(parseModelOrThrow(rendered)) == rendered);
}

TEST_CASE("parse-render round-trip holds on random parser-shaped models") {
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 200; ++trial) {
        const Model m = testsupport::randomAcyclicModel(rng, 6, 0.4, 0.25, 0.5);
        const std::string rendered = metacheck::renderModel(m);
        const Model reparsed = parseModelOrThrow(rendered);
        CHECK(reparsed == m);
        CHECK(metacheck::renderModel(reparsed) == rendered);
    }
}
