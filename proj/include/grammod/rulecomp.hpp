#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grammod/config.hpp"
#include "grammod/rule.hpp"

namespace grammod {

/// A common subgraph D of R1 and L2, given as the correspondences between
/// their elements (core indices into the two rules). Edge pairs imply that
/// the endpoint vertices are paired.
struct Overlap {
    std::vector<std::pair<int, int>> vertexPairs; // (p1 core vertex, p2 core vertex)
    std::vector<std::pair<int, int>> edgePairs;   // (p1 core edge, p2 core edge)
};

/// The composition operators: D empty; L2 (or a nonempty subset of its
/// components) embedded in R1; R1 (or a component subset) embedded in L2;
/// or any nonempty common subgraph.
enum class RcOperator { Parallel, SuperFull, Super, SubFull, Sub, Common };

std::string to_string(RcOperator op);

enum class ComposeFailure { Mismatch, TransientElement, ParallelEdge };

struct ComposeResult {
    RulePtr rule; // null on failure
    std::optional<ComposeFailure> failure;
    std::string message;
};

/// Composes p1 and p2 along the overlap by overlaying p2 onto a copy of p1:
/// unmatched left elements of p2 join the composite as context that must
/// pre-exist, p2's deletions demote presence (Context -> LeftOnly, and a
/// p1-created element vanishes entirely), p2's label changes update right
/// labels, and p2's creations add right-only elements. Fails when an element
/// would exist only in the intermediate graph, when labels mismatch on the
/// overlap, or when either side would acquire a parallel edge (no pushout).
ComposeResult composeOverOverlap(const Rule& p1, const Rule& p2, const Overlap& overlap);

/// Return false to stop the enumeration.
using OverlapVisitor = std::function<bool(const Overlap&)>;

/// Enumerates the overlaps the operator admits, deterministically. Common
/// overlaps are capped at config.commonOverlapCap elements and optionally
/// restricted to connected D; edges whose endpoints are both paired and that
/// exist on both sides are always identified, since leaving them unpaired
/// can only produce parallel-edge failures downstream.
void enumerateOverlaps(const Rule& p1, const Rule& p2, RcOperator op, const Config& config,
                       const OverlapVisitor& visit);

/// (empty <- empty -> G), (G <- empty -> empty), (G <- G -> G).
RulePtr makeBindRule(const GraphPtr& g);
RulePtr makeUnbindRule(const GraphPtr& g);
RulePtr makeIdRule(const GraphPtr& g);

struct RcExpression;
using RcExpressionPtr = std::shared_ptr<const RcExpression>;

/// Expression tree: binary operator nodes over rule lists; leaves are rule
/// lists or bind/unbind/id of graph lists (one rule per graph).
struct RcExpression {
    enum class Kind { Binary, Rules, Bind, Unbind, Id };
    Kind kind = Kind::Rules;
    RcOperator op = RcOperator::Parallel; // Binary
    RcExpressionPtr lhs, rhs;             // Binary
    std::vector<RulePtr> rules;           // Rules
    std::vector<GraphPtr> graphs;         // Bind/Unbind/Id
};

RcExpressionPtr rcRules(std::vector<RulePtr> rules);
RcExpressionPtr rcBind(std::vector<GraphPtr> graphs);
RcExpressionPtr rcUnbind(std::vector<GraphPtr> graphs);
RcExpressionPtr rcId(std::vector<GraphPtr> graphs);
RcExpressionPtr rcBinary(RcOperator op, RcExpressionPtr lhs, RcExpressionPtr rhs);

/// Evaluates composition expressions. Each sub-expression coerces to a rule
/// list; a binary node produces the union over all pairs and all overlaps of
/// the successful compositions, deduplicated by rule isomorphism. Results
/// isomorphic to a known rule are reported as that rule.
class RcEvaluator {
public:
    explicit RcEvaluator(std::vector<RulePtr> knownRules, Config config = {});

    std::vector<RulePtr> eval(const RcExpression& exp);

private:
    void addResult(std::vector<RulePtr>& out, RulePtr r) const;

    std::vector<RulePtr> knownRules_;
    Config config_;
};

/// Name resolution for expression text; both resolvers throw on unknown
/// names. rules() may return several rules for a collection name.
struct RcResolver {
    std::function<std::vector<GraphPtr>(const std::string&)> graphs;
    std::function<std::vector<RulePtr>(const std::string&)> rules;
};

/// Parses the textual expression language:
///   exp := term (op term)*, left associative, one precedence level
///   op  := *rcParallel* | *rcSuper* | *rcSuper(allowPartial=false)*
///        | *rcSub* | *rcSub(allowPartial=false)* | *rcCommon*
///   term := ( exp ) | rcBind(refs) | rcUnbind(refs) | rcId(refs)
///         | [ ref, ... ] | ref
/// where refs are comma-separated identifiers or quoted strings.
RcExpressionPtr parseRcExpression(std::string_view text, const RcResolver& resolver);

} // namespace grammod
