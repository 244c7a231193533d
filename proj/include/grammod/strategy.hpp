#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grammod/config.hpp"
#include "grammod/dg.hpp"
#include "grammod/graph.hpp"
#include "grammod/registry.hpp"
#include "grammod/rule.hpp"

namespace grammod {

/// Closed predicate over a candidate derivation's left/right graph
/// multisets: all/any of one side satisfy an atomic comparison.
struct DerivationPredicate {
    enum class Quant { All, Any };
    enum class Side { Left, Right };
    enum class Atom { NumVertices, NumEdges, VLabelCount };
    enum class Cmp { Le, Lt, Eq, Ge, Gt };

    Quant quant = Quant::All;
    Side side = Side::Right;
    Atom atom = Atom::NumVertices;
    std::string label; // VLabelCount only
    Cmp cmp = Cmp::Le;
    long value = 0;

    bool eval(const std::vector<GraphPtr>& left, const std::vector<GraphPtr>& right) const;
    std::string str() const;
};

struct Strategy;
using StrategyPtr = std::shared_ptr<const Strategy>;

/// AST of the exploration language. Evaluation computes on (subset,
/// universe) states of graph classes; see DerivationGraphEvaluator.
struct Strategy {
    enum class Kind {
        Sequence,       // children: 2+
        Parallel,       // children: 1+, same input, merged output
        Rule,           // rule
        AddSubset,      // graphs
        AddUniverse,    // graphs
        FilterSubset,   // filter
        FilterUniverse, // filter
        LeftPredicate,  // predicate + child
        RightPredicate, // predicate + child
        Repeat,         // optional bound + child
        Revive          // child
    };

    Kind kind = Kind::Sequence;
    std::vector<StrategyPtr> children;
    RulePtr rule;
    std::vector<GraphPtr> graphs;
    std::function<bool(const Graph&)> filter;
    std::string filterDesc;
    DerivationPredicate predicate;
    std::optional<std::int64_t> bound;
};

namespace strat {

StrategyPtr sequence(StrategyPtr a, StrategyPtr b);
StrategyPtr parallel(std::vector<StrategyPtr> children);
StrategyPtr rule(RulePtr r);
/// A collection of rules becomes a parallel strategy over rule strategies.
StrategyPtr rules(const std::vector<RulePtr>& rs);
StrategyPtr addSubset(std::vector<GraphPtr> graphs);
StrategyPtr addUniverse(std::vector<GraphPtr> graphs);
StrategyPtr filterSubset(std::function<bool(const Graph&)> f, std::string desc = "");
StrategyPtr filterUniverse(std::function<bool(const Graph&)> f, std::string desc = "");
StrategyPtr leftPredicate(DerivationPredicate p, StrategyPtr sub);
StrategyPtr rightPredicate(DerivationPredicate p, StrategyPtr sub);
StrategyPtr repeat(StrategyPtr sub, std::optional<std::int64_t> bound = std::nullopt);
StrategyPtr revive(StrategyPtr sub);

} // namespace strat

/// Execution state: the active subset and the full universe, both sets of
/// graph classes in insertion order. subset is always a subset of universe.
struct GraphState {
    std::vector<int> subset;
    std::vector<int> universe;

    bool inSubset(int classId) const;
    bool inUniverse(int classId) const;
};

/// Runs a strategy from the empty state, recording every accepted
/// derivation into a derivation graph. The evaluator owns the class
/// registry, seeded with the starting graphs (in order) at construction.
class DerivationGraphEvaluator {
public:
    DerivationGraphEvaluator(std::vector<GraphPtr> startingGraphs, StrategyPtr strategy,
                             Config config = {});

    /// Executes the strategy and freezes the derivation graph. Calling it
    /// twice is an error.
    void calc();

    bool calculated() const { return calculated_; }
    const DerivationGraph& dg() const;
    const GraphState& finalState() const;
    GraphRegistry& registry() { return registry_; }
    /// Classes of the starting graphs (the "inputs" of the run).
    const std::vector<int>& startClasses() const { return startClasses_; }

private:
    struct Ctx;
    GraphState evalNode(const StrategyPtr& node, const GraphState& in, Ctx& ctx);
    GraphState evalRule(const Strategy& node, const GraphState& in, Ctx& ctx);

    std::vector<GraphPtr> startingGraphs_;
    StrategyPtr strategy_;
    Config config_;
    GraphRegistry registry_;
    std::vector<int> startClasses_;
    DerivationGraph dg_;
    GraphState finalState_;
    bool calculated_ = false;
};

/// Name resolution for strategy programs; both may return several objects
/// for a collection name (e.g. "inputRules").
struct StrategyResolver {
    std::function<std::vector<GraphPtr>(const std::string&)> graphs;
    std::function<std::vector<RulePtr>(const std::string&)> rules;
};

/// Parses the textual strategy language:
///   strat := seq | seq ">>" strat
///   seq   := "[" strat ("," strat)* "]" | ruleRef
///          | "addSubset(" refs ")" | "addUniverse(" refs ")"
///          | "filterSubset(" gpred ")" | "filterUniverse(" gpred ")"
///          | "leftPredicate[" dpred "](" strat ")"
///          | "rightPredicate[" dpred "](" strat ")"
///          | "repeat" ("[" int "]")? "(" strat ")" | "revive(" strat ")"
///   dpred := ("all"|"any") "(" ("left"|"right") "," atom cmp int ")"
///   gpred := atom cmp int
///   atom  := "numVertices" | "numEdges" | "vLabelCount(" quoted ")"
///   cmp   := "<=" | "<" | "==" | ">=" | ">"
/// Left predicates may only reference the left side (they run before heads
/// exist).
StrategyPtr parseStrategy(std::string_view text, const StrategyResolver& resolver);

} // namespace grammod
