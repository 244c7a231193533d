#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "grammod/error.hpp"
#include "grammod/graph.hpp"
#include "grammod/rule.hpp"

namespace grammod {

struct GmlOptions {
    /// Reject unknown keys. When false they are skipped, with a note to
    /// *warn when set.
    bool strict = true;
    std::ostream* warn = nullptr;
};

/// Parses a "graph [ ... ]" document: nodes become vertices, edges become
/// undirected edges (source/target order carries no meaning). Throws
/// ParseError with position on syntax errors and invariant violations.
GraphPtr parseGraphGML(std::string_view text, std::string name = "", const GmlOptions& opts = {});

/// Parses a "rule [ left [...] context [...] right [...] ]" document.
/// With the sections read as element sets keyed by id, L = left + context,
/// R = right + context, and an element listed in both left and right is a
/// (possibly label-changing) context element. invert swaps the left and
/// right sections before interpretation. ruleID becomes the rule name.
RulePtr parseRuleGML(std::string_view text, bool invert = false, const GmlOptions& opts = {});

/// GML text that reparses to an isomorphic graph.
std::string writeGML(const Graph& g);

/// Rule GML with the minimal left/context/right split: unchanged context
/// elements appear only in the context section.
std::string writeGML(const Rule& r);

} // namespace grammod
