#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grammod/config.hpp"
#include "grammod/graph.hpp"
#include "grammod/registry.hpp"
#include "grammod/rule.hpp"

namespace grammod {

/// Raised for name-resolution and command-usage problems (CLI exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Named graphs and rules for a CLI session. Sessions are reproduced by
/// replaying a manifest file that lists every load, one per line:
///
///   gml "path/to/graph.gml" name "Ethanol4"
///   smiles "C=O" name "Formaldehyde"
///   dfs "[R]{x}C([O-])CC=O"
///   rulegml "rules/ketoEnol.gml" invert name "ketoEnol_B"
///
/// with "#" comments. For gml/rulegml the payload is a file path; for
/// smiles/dfs it is the string itself. Every loaded graph registers its
/// isomorphism class.
class Workspace {
public:
    Config config;

    std::string loadGraphGmlFile(const std::string& path, std::string name = "");
    std::string loadGraphGmlString(std::string_view text, std::string name = "");
    std::string loadSmiles(std::string_view text, std::string name = "");
    std::string loadGraphDfs(std::string_view text, std::string name = "");
    std::string loadRuleGmlFile(const std::string& path, bool invert = false,
                                std::string name = "");
    std::string loadRuleGmlString(std::string_view text, bool invert = false,
                                  std::string name = "");

    void replayManifest(const std::string& path);
    static std::string manifestLine(const std::string& kind, const std::string& payload,
                                    bool invert, const std::string& name);

    GraphPtr findGraph(const std::string& name) const; // throws UsageError
    RulePtr findRule(const std::string& name) const;
    bool hasGraph(const std::string& name) const;
    bool hasRule(const std::string& name) const;

    const std::vector<std::pair<std::string, GraphPtr>>& graphs() const { return graphs_; }
    const std::vector<std::pair<std::string, RulePtr>>& rules() const { return rules_; }
    std::vector<GraphPtr> allGraphs() const;
    std::vector<RulePtr> allRules() const;

    GraphRegistry& registry() { return registry_; }

private:
    std::string addGraph(GraphPtr g, std::string name);
    std::string addRule(RulePtr r, std::string name);

    GraphRegistry registry_;
    std::vector<std::pair<std::string, GraphPtr>> graphs_;
    std::vector<std::pair<std::string, RulePtr>> rules_;
};

std::string readFile(const std::string& path); // throws std::runtime_error

} // namespace grammod
