#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <set>
#include <string>
#include <vector>

#include "grammod/derivation.hpp"
#include "grammod/graph.hpp"
#include "grammod/registry.hpp"
#include "grammod/rule.hpp"

namespace grammod {

/// Directed multi-hypergraph over graph isomorphism classes; hyperedges are
/// proper derivations. Frozen after construction: exports are pure and safe
/// to run concurrently.
struct DerivationGraph {
    struct ClassInfo {
        int id = -1;
        GraphPtr graph;
        std::string name;
    };
    struct Hyperedge {
        int id = -1;
        std::string ruleName;
        RulePtr rule;                            // null for imported graphs
        std::vector<int> tails, heads;           // sorted class ids with multiplicity
        std::vector<DerivationMatch> witnesses;  // first (or all) matches found
    };

    std::vector<ClassInfo> classes;
    std::vector<Hyperedge> hyperedges;

    const ClassInfo* classById(int id) const;
    const Hyperedge* hyperedgeById(int id) const;
};

/// Accumulates classes (in first-touch order) and hyperedges (deduplicated
/// on (rule, tails, heads)) during a strategy run.
class DgBuilder {
public:
    explicit DgBuilder(GraphRegistry& registry) : registry_(registry) {}

    void touchClass(int classId);
    /// Records the derivation; returns false if the hyperedge already
    /// existed (an extra witness is kept when storeAllMatches).
    bool record(const Derivation& d, bool storeAllMatches);
    DerivationGraph freeze();

private:
    GraphRegistry& registry_;
    DerivationGraph dg_;
    std::set<int> touched_;
    std::map<std::tuple<const Rule*, std::vector<int>, std::vector<int>>, int> seen_;
    bool frozen_ = false;
};

/// Export customization hooks. Label hooks append to the default label in
/// push order; the last visibility hook short-circuits conjunctively; the
/// last non-empty colour wins.
struct DGExportOptions {
    using VertexText = std::function<std::string(const Graph&, const DerivationGraph&)>;
    using VertexFlag = std::function<bool(const Graph&, const DerivationGraph&)>;
    using EdgeText =
        std::function<std::string(const DerivationGraph::Hyperedge&, const DerivationGraph&)>;
    using EdgeFlag =
        std::function<bool(const DerivationGraph::Hyperedge&, const DerivationGraph&)>;

    std::vector<VertexText> vertexLabelHooks;
    std::vector<VertexText> vertexColourHooks;
    std::vector<VertexFlag> vertexVisibleHooks;
    std::vector<EdgeText> edgeLabelHooks;
    std::vector<EdgeFlag> edgeVisibleHooks;

    void pushVertexLabel(VertexText f) { vertexLabelHooks.push_back(std::move(f)); }
    void pushVertexColour(VertexText f) { vertexColourHooks.push_back(std::move(f)); }
    void pushVertexVisible(VertexFlag f) { vertexVisibleHooks.push_back(std::move(f)); }
    void pushEdgeLabel(EdgeText f) { edgeLabelHooks.push_back(std::move(f)); }
    void pushEdgeVisible(EdgeFlag f) { edgeVisibleHooks.push_back(std::move(f)); }
};

/// Plain digraph DOT. One node per visible class, labelled with the graph
/// name (plus pushed hooks) and carrying the GML as a tooltip. A hyperedge
/// with one tail and one head renders as a single labelled arc; larger ones
/// get a synthetic box node "he<k>". Hidden vertices hide their incident
/// hyperedges; multiplicities annotate the arcs.
std::string exportDOT(const DerivationGraph& dg, const DGExportOptions& opts = {});

/// Lossless JSON dump (schema "grammod-dg/1") with embedded GML per class.
std::string exportJSON(const DerivationGraph& dg);

/// Rebuilds a derivation graph from exportJSON output. Witnesses are not
/// serialized, so the imported graph supports everything but DPO export.
DerivationGraph importJSON(std::string_view text);

/// Full DPO diagram data for one hyperedge as JSON (schema "grammod-dpo/1"):
/// the rule, the bottom span (G, D, H) as GML with stable vertex ids, the
/// pending label changes on D, and both vertical match maps.
std::string exportDerivationDPO(const DerivationGraph& dg, int hyperedgeId);

} // namespace grammod
