// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include "metacheck/textformats.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

namespace metacheck {

std::string renderParseError(const ParseError& error) {
    return error.file + ":" + std::to_string(error.line) + ":" + std::to_string(error.column) +
           ": " + error.message;
}

namespace {

enum class TokenKind { Ident, Colon, Arrow, Comma };

struct Token {
    TokenKind kind;
    std::string text;
    int column; // 1-based
};

struct Line {
    int number; // 1-based
    std::vector<Token> tokens;
};

[[nodiscard]] ParseError errorAt(const std::string& file, const Line& line, const Token& token,
                                 std::string message) {
    return ParseError{file, line.number, token.column, std::move(message)};
}

bool isIdentStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool isIdentRest(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Tokenizes one physical line. `#` starts a comment running to end of line.
bool tokenizeLine(std::string_view text, const std::string& file, int lineNumber,
                  std::vector<Token>& out, ParseError& error) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '#') {
            break;
        }
        if (c == ' ' || c == '\t') {
            ++pos;
            continue;
        }
        int column = static_cast<int>(pos) + 1;
        if (isIdentStart(c)) {
            std::size_t end = pos + 1;
            while (end < text.size() && isIdentRest(text[end])) {
                ++end;
            }
            out.push_back(Token{TokenKind::Ident, std::string(text.substr(pos, end - pos)),
                                column});
            pos = end;
        } else if (c == ':') {
            out.push_back(Token{TokenKind::Colon, ":", column});
            ++pos;
        } else if (c == ',') {
            out.push_back(Token{TokenKind::Comma, ",", column});
            ++pos;
        } else if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
            out.push_back(Token{TokenKind::Arrow, "->", column});
            pos += 2;
        } else {
            error = ParseError{file, lineNumber, column,
                               std::string("unexpected character '") + c + "'"};
            return false;
        }
    }
    return true;
}

/// Splits into significant lines; accepts LF and CRLF.
bool splitLines(std::string_view text, const std::string& file, std::vector<Line>& out,
                ParseError& error) {
    int lineNumber = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = eol == std::string_view::npos ? text.substr(pos)
                                                             : text.substr(pos, eol - pos);
        ++lineNumber;
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        std::vector<Token> tokens;
        if (!tokenizeLine(raw, file, lineNumber, tokens, error)) {
            return false;
        }
        if (!tokens.empty()) {
            out.push_back(Line{lineNumber, std::move(tokens)});
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }
    return true;
}

/// Pull the token at `index` as an identifier; positions an error at the
/// token (or at end of line when the line is exhausted).
bool expectIdent(const std::string& file, const Line& line, std::size_t index,
                 const std::string& what, std::string& out, ParseError& error) {
    if (index >= line.tokens.size()) {
        const Token& last = line.tokens.back();
        error = ParseError{file, line.number,
                           last.column + static_cast<int>(last.text.size()),
                           "expected " + what};
        return false;
    }
    const Token& token = line.tokens[index];
    if (token.kind != TokenKind::Ident) {
        error = errorAt(file, line, token, "expected " + what);
        return false;
    }
    out = token.text;
    return true;
}

bool expectKind(const std::string& file, const Line& line, std::size_t index, TokenKind kind,
                const std::string& what, ParseError& error) {
    if (index >= line.tokens.size()) {
        const Token& last = line.tokens.back();
        error = ParseError{file, line.number,
                           last.column + static_cast<int>(last.text.size()),
                           "expected " + what};
        return false;
    }
    if (line.tokens[index].kind != kind) {
        error = errorAt(file, line, line.tokens[index], "expected " + what);
        return false;
    }
    return true;
}

bool expectEnd(const std::string& file, const Line& line, std::size_t index,
               ParseError& error) {
    if (index < line.tokens.size()) {
        error = errorAt(file, line, line.tokens[index], "unexpected trailing tokens");
        return false;
    }
    return true;
}

} // namespace

ParseResult<Model> parseModel(std::string_view text, std::string_view filename) {
    const std::string file{filename};
    ParseResult<Model> result;
    ParseError error;
    std::vector<Line> lines;
    if (!splitLines(text, file, lines, error)) {
        result.error = error;
        return result;
    }
    if (lines.empty()) {
        result.error = ParseError{file, 1, 1, "expected 'model <name>'"};
        return result;
    }

    auto fail = [&](ParseError e) {
        result.error = std::move(e);
        return result;
    };

    const Line& header = lines.front();
    if (header.tokens[0].text != "model") {
        return fail(errorAt(file, header, header.tokens[0], "expected 'model <name>'"));
    }
    std::string modelName;
    if (!expectIdent(file, header, 1, "model name", modelName, error)) {
        return fail(error);
    }
    if (!expectEnd(file, header, 2, error)) {
        return fail(error);
    }

    ModelBuilder builder{modelName};
    std::set<std::string> classifiers;
    std::set<std::string> generalizations;
    int groupCount = 0;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const Token& keyword = line.tokens[0];
        if (keyword.text == "class") {
            std::string name;
            if (!expectIdent(file, line, 1, "classifier name", name, error)) {
                return fail(error);
            }
            bool isAbstract = false;
            std::size_t next = 2;
            if (next < line.tokens.size() && line.tokens[next].kind == TokenKind::Ident &&
                line.tokens[next].text == "abstract") {
                isAbstract = true;
                ++next;
            }
            if (!expectEnd(file, line, next, error)) {
                return fail(error);
            }
            if (!classifiers.insert(name).second) {
                return fail(errorAt(file, line, line.tokens[1],
                                    "duplicate classifier '" + name + "'"));
            }
            builder.addClassifier(name, isAbstract);
        } else if (keyword.text == "gen") {
            std::string name;
            std::string child;
            std::string parent;
            if (!expectIdent(file, line, 1, "generalization name", name, error) ||
                !expectKind(file, line, 2, TokenKind::Colon, "':'", error) ||
                !expectIdent(file, line, 3, "child classifier", child, error) ||
                !expectKind(file, line, 4, TokenKind::Arrow, "'->'", error) ||
                !expectIdent(file, line, 5, "parent classifier", parent, error) ||
                !expectEnd(file, line, 6, error)) {
                return fail(error);
            }
            if (!generalizations.insert(name).second) {
                return fail(errorAt(file, line, line.tokens[1],
                                    "duplicate generalization '" + name + "'"));
            }
            if (!classifiers.contains(child)) {
                return fail(errorAt(file, line, line.tokens[3],
                                    "undefined classifier '" + child + "'"));
            }
            if (!classifiers.contains(parent)) {
                return fail(errorAt(file, line, line.tokens[5],
                                    "undefined classifier '" + parent + "'"));
            }
            builder.addGeneralization(name, child, parent);
        } else if (keyword.text == "overlapping") {
            std::vector<std::string> members;
            std::set<std::string> seen;
            for (std::size_t ti = 1; ti < line.tokens.size(); ++ti) {
                const Token& token = line.tokens[ti];
                if (token.kind != TokenKind::Ident) {
                    return fail(errorAt(file, line, token, "expected generalization name"));
                }
                if (!generalizations.contains(token.text)) {
                    return fail(errorAt(file, line, token,
                                        "undefined generalization '" + token.text + "'"));
                }
                if (!seen.insert(token.text).second) {
                    return fail(errorAt(file, line, token,
                                        "duplicate generalization '" + token.text +
                                            "' in overlapping constraint"));
                }
                members.push_back(token.text);
            }
            if (members.size() < 2) {
                const Token& last = line.tokens.back();
                return fail(ParseError{file, line.number,
                                       last.column + static_cast<int>(last.text.size()),
                                       "overlapping constraint needs at least two "
                                       "generalizations"});
            }
            ++groupCount;
            builder.addOverlappingGroup("og" + std::to_string(groupCount), members);
        } else {
            return fail(errorAt(file, line, keyword,
                                "expected 'class', 'gen', or 'overlapping'"));
        }
    }

    result.value = builder.build();
    return result;
}

ParseResult<Snapshot> parseSnapshot(std::string_view text, const Model& model,
                                    std::string_view filename) {
    const std::string file{filename};
    ParseResult<Snapshot> result;
    ParseError error;
    std::vector<Line> lines;
    if (!splitLines(text, file, lines, error)) {
        result.error = error;
        return result;
    }
    if (lines.empty()) {
        result.error = ParseError{file, 1, 1, "expected 'snapshot <name>'"};
        return result;
    }

    auto fail = [&](ParseError e) {
        result.error = std::move(e);
        return result;
    };

    const Line& header = lines.front();
    if (header.tokens[0].text != "snapshot") {
        return fail(errorAt(file, header, header.tokens[0], "expected 'snapshot <name>'"));
    }
    std::string snapshotName;
    if (!expectIdent(file, header, 1, "snapshot name", snapshotName, error)) {
        return fail(error);
    }
    if (!expectEnd(file, header, 2, error)) {
        return fail(error);
    }

    SnapshotBuilder builder{snapshotName, model};
    std::set<std::string> instances;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const Token& keyword = line.tokens[0];
        if (keyword.text != "instance") {
            return fail(errorAt(file, line, keyword, "expected 'instance'"));
        }
        std::string name;
        if (!expectIdent(file, line, 1, "instance name", name, error) ||
            !expectKind(file, line, 2, TokenKind::Colon, "':'", error)) {
            return fail(error);
        }
        if (!instances.insert(name).second) {
            return fail(errorAt(file, line, line.tokens[1], "duplicate instance '" + name + "'"));
        }
        std::vector<std::string> classifiers;
        std::set<std::string> seen;
        std::size_t ti = 3;
        while (true) {
            std::string classifierName;
            if (!expectIdent(file, line, ti, "classifier name", classifierName, error)) {
                return fail(error);
            }
            if (!model.hasClassifier(ClassifierId{classifierName})) {
                return fail(errorAt(file, line, line.tokens[ti],
                                    "undefined classifier '" + classifierName + "'"));
            }
            if (!seen.insert(classifierName).second) {
                return fail(errorAt(file, line, line.tokens[ti],
                                    "duplicate classifier '" + classifierName +
                                        "' in instance"));
            }
            classifiers.push_back(classifierName);
            ++ti;
            if (ti >= line.tokens.size()) {
                break;
            }
            if (!expectKind(file, line, ti, TokenKind::Comma, "','", error)) {
                return fail(error);
            }
            ++ti;
        }
        builder.addInstance(name, classifiers);
    }

    result.value = builder.build();
    return result;
}

std::string renderModel(const Model& model) {
    std::string out = "model " + model.name() + "\n";
    for (const auto& [id, classifier] : model.classifiers()) {
        out += "class " + id.str();
        if (classifier.isAbstract) {
            out += " abstract";
        }
        out += "\n";
    }
    for (const auto& [id, gen] : model.generalizations()) {
        out += "gen " + id.str() + " : " + gen.child.str() + " -> " + gen.parent.str() + "\n";
    }
    // Canonical group ids og1..ogN must re-parse in numeric order, so order
    // groups by (id length, id): "og2" before "og10".
    std::vector<GroupId> groupIds;
    for (const auto& [id, group] : model.overlappingGroups()) {
        groupIds.push_back(id);
    }
    std::sort(groupIds.begin(), groupIds.end(), [](const GroupId& a, const GroupId& b) {
        if (a.str().size() != b.str().size()) {
            return a.str().size() < b.str().size();
        }
        return a.str() < b.str();
    });
    for (const GroupId& id : groupIds) {
        out += "overlapping";
        for (const GeneralizationId& member : model.overlappingGroup(id).members) {
            out += " " + member.str();
        }
        out += "\n";
    }
    return out;
}

std::string renderSnapshot(const Snapshot& snapshot) {
    std::string out = "snapshot " + snapshot.name() + "\n";
    for (const auto& [id, instance] : snapshot.instances()) {
        out += "instance " + id.str() + " :";
        bool first = true;
        for (const ClassifierId& c : instance.classifiers) {
            out += first ? " " : ", ";
            out += c.str();
            first = false;
        }
        out += "\n";
    }
    return out;
}

} // namespace metacheck
