#pragma once

// Small parser for the rendered rule-list text, used by tests to make
// structural assertions about fitted models without pinning every byte.

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ruleset_text {

struct ParsedCondition {
    std::string attr;
    std::string op; // "<=" or ">="
    double value = 0.0;
};

struct ParsedRule {
    std::vector<ParsedCondition> conditions;
    std::string predicted;
    double covered = 0.0;
    double misclassified = 0.0;
};

struct ParsedRuleset {
    std::vector<ParsedRule> rules; // default rule last, with no conditions
    int declared_count = -1;       // from the "Number of Rules" trailer
};

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline ParsedRule parse_rule_line(const std::string& line) {
    ParsedRule rule;
    const auto arrow = line.find("=>");
    if (arrow == std::string::npos) throw std::runtime_error("rule line without arrow: " + line);
    std::string lhs = line.substr(0, arrow);
    size_t pos = 0;
    while ((pos = lhs.find('(', pos)) != std::string::npos) {
        const auto close = lhs.find(')', pos);
        if (close == std::string::npos) throw std::runtime_error("unbalanced condition: " + line);
        std::istringstream cond(lhs.substr(pos + 1, close - pos - 1));
        ParsedCondition pc;
        cond >> pc.attr >> pc.op >> pc.value;
        if (!cond || (pc.op != "<=" && pc.op != ">="))
            throw std::runtime_error("bad condition in: " + line);
        rule.conditions.push_back(pc);
        pos = close + 1;
    }
    std::string rhs = line.substr(arrow + 2);
    const auto eq = rhs.find("result=");
    const auto paren = rhs.find('(');
    if (eq == std::string::npos || paren == std::string::npos)
        throw std::runtime_error("bad consequent: " + line);
    rule.predicted = rhs.substr(eq + 7, rhs.find(' ', eq) - (eq + 7));
    const auto slash = rhs.find('/', paren);
    rule.covered = std::strtod(rhs.c_str() + paren + 1, nullptr);
    rule.misclassified = std::strtod(rhs.c_str() + slash + 1, nullptr);
    return rule;
}

// Accepts any separator of five or more '=' characters under the banner.
inline ParsedRuleset parse(const std::string& text) {
    ParsedRuleset out;
    const auto lines = split_lines(text);
    size_t i = 0;
    if (i >= lines.size() || lines[i] != "JRIP rules:") throw std::runtime_error("missing banner");
    ++i;
    if (i >= lines.size() || lines[i].size() < 5 ||
        lines[i].find_first_not_of('=') != std::string::npos)
        throw std::runtime_error("missing separator");
    ++i;
    if (i >= lines.size() || !lines[i].empty()) throw std::runtime_error("missing blank line");
    ++i;
    while (i < lines.size() && !lines[i].empty()) {
        out.rules.push_back(parse_rule_line(lines[i]));
        ++i;
    }
    while (i < lines.size()) {
        const auto& line = lines[i];
        const auto tag = line.find("Number of Rules :");
        if (tag != std::string::npos) {
            out.declared_count = std::atoi(line.c_str() + tag + 17);
            break;
        }
        ++i;
    }
    if (out.declared_count < 0) throw std::runtime_error("missing rule-count trailer");
    return out;
}

} // namespace ruleset_text
