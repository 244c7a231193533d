#pragma once

#include <functional>
#include <vector>

#include "grammod/config.hpp"
#include "grammod/graph.hpp"
#include "grammod/registry.hpp"
#include "grammod/rule.hpp"

namespace grammod {

struct UniverseEntry {
    int classId = -1;
    GraphPtr graph;
};

struct TailCopy {
    int classId = -1;
    GraphPtr graph;
};

/// An injective occurrence of a rule's left side in a host assembled from
/// copies of universe graphs. Copies are allocated in first-use order; the
/// host is their disjoint union, with copy j's vertices occupying the global
/// id range [copyOffset(j), copyOffset(j) + |copy j|).
///
/// Every copy receives at least one image vertex, so the derivation is
/// proper by construction.
struct DerivationMatch {
    RulePtr rule;
    std::vector<TailCopy> copies;
    std::vector<int> coreCopy;       // rule core vertex -> copy index (-1 outside L)
    std::vector<int> coreHostVertex; // rule core vertex -> vertex within the copy
    std::vector<int> activeClasses;  // sorted active classes at enumeration time

    int copyOffset(int j) const;
    int totalHostVertices() const;
    /// Global host id of a left-present core vertex.
    int globalImage(int coreVertex) const;
};

struct Derivation {
    DerivationMatch match;
    std::vector<int> tailClasses;     // sorted, with multiplicity
    std::vector<int> headClasses;     // sorted, with multiplicity
    std::vector<GraphPtr> headGraphs; // connected components of the result
};

/// True iff every host edge incident to the image of a deleted vertex is
/// itself the image of a left-side edge. The identification condition is
/// vacuous for injective matches.
bool checkDangling(const Rule& rule, const DerivationMatch& match);

/// True iff no created edge between two preserved vertices would land on a
/// vertex pair already joined by a host edge outside the image of L; such a
/// pushout object does not exist in simple graphs.
bool checkPushoutExists(const Rule& rule, const DerivationMatch& match);

/// Full from-scratch recheck: ranges, per-host injectivity, label and
/// adjacency preservation, properness, dangling and pushout existence.
bool validateDerivationMatch(const Rule& rule, const DerivationMatch& match);

struct ApplyResult {
    /// The whole result graph H. Surviving host vertices keep their global
    /// host ids as external ids; created vertices get fresh ids past them.
    GraphPtr result;
    std::vector<GraphPtr> heads;   // connected components of result
    std::vector<int> comatchRight; // core vertex -> external id in result (-1 outside R)
};

/// Rewrites the assembled host: deletes images of left-only elements,
/// applies label changes, adds right-only elements. The preconditions
/// (dangling, pushout existence) are a programming error when violated.
ApplyResult applyDerivation(const Rule& rule, const DerivationMatch& match);

/// The assembled host G as one graph, external ids = global host ids.
GraphPtr buildHostGraph(const DerivationMatch& match);

/// The interface graph D: host minus deleted elements, labels still the old
/// ones (label changes pending).
GraphPtr buildInterfaceGraph(const Rule& rule, const DerivationMatch& match);

/// Return false to stop the enumeration.
using DerivationVisitor = std::function<bool(const Derivation&)>;
/// Left-predicate hook: runs after validity checks, before heads are built.
using TailFilter = std::function<bool(const DerivationMatch&)>;

/// Enumerates all proper derivations of the rule over multisets of universe
/// graphs with at least one tail class in activeClasses, deduplicated at
/// (tails multiset, heads multiset) granularity. Invalid candidate matches
/// are silently skipped. Head components are registered in the registry.
///
/// Deterministic: components are matched in order, copies in first-use
/// order, fresh copies follow the universe order.
void enumerateDerivations(const RulePtr& rule, const std::vector<UniverseEntry>& universe,
                          const std::vector<int>& activeClasses, GraphRegistry& registry,
                          const Config& config, const DerivationVisitor& visit,
                          const TailFilter& tailFilter = nullptr);

} // namespace grammod
