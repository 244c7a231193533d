#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grammod {

class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

/// Labelled simple undirected graph: no loops, no parallel edges, nonempty
/// text labels on vertices and edges. Vertices are dense indices 0..n-1.
/// The ids supplied at construction time are kept as external ids so error
/// messages and serialization can refer back to the input.
///
/// Graphs are immutable after construction and safe to share across threads.
class Graph {
public:
    struct Edge {
        int src = 0; // src < dst
        int dst = 0;
        std::string label;
    };

    const std::string& name() const { return name_; }
    int numVertices() const { return static_cast<int>(vertexLabels_.size()); }
    int numEdges() const { return static_cast<int>(edges_.size()); }

    const std::string& vertexLabel(int v) const { return vertexLabels_[v]; }
    /// Process-wide interned code for the vertex label; equal codes iff
    /// equal labels. Used by the matching engine.
    int vertexLabelCode(int v) const { return vertexLabelCodes_[v]; }
    int externalId(int v) const { return externalIds_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    int edgeLabelCode(int e) const { return edgeLabelCodes_[e]; }

    /// (neighbour, edge index) pairs, sorted by neighbour id.
    const std::vector<std::pair<int, int>>& incident(int v) const { return incident_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }

    bool hasEdge(int u, int v) const { return edgeIndex(u, v) >= 0; }
    /// Index into edges() of the edge between u and v, or -1.
    int edgeIndex(int u, int v) const;
    /// Label of the edge between u and v, or nullptr.
    const std::string* edgeLabel(int u, int v) const;

    /// Number of vertices whose full label equals the argument.
    int vLabelCount(std::string_view label) const;

    bool connected() const;

private:
    friend class GraphBuilder;
    Graph() = default;

    std::string name_;
    std::vector<std::string> vertexLabels_;
    std::vector<int> vertexLabelCodes_;
    std::vector<int> externalIds_;
    std::vector<Edge> edges_;
    std::vector<int> edgeLabelCodes_;
    std::vector<std::vector<std::pair<int, int>>> incident_;
};

/// Incremental construction with invariant checking. Throws
/// std::invalid_argument on duplicate ids, unknown endpoints, loops,
/// parallel edges, and empty labels.
class GraphBuilder {
public:
    /// Returns the dense index assigned to the vertex.
    int addVertex(int externalId, std::string label);
    void addEdge(int externalSrc, int externalDst, std::string label);

    bool hasVertex(int externalId) const;
    int numVertices() const { return static_cast<int>(graph_.vertexLabels_.size()); }

    GraphPtr build(std::string name = "");

private:
    int denseOf(int externalId) const;

    Graph graph_;
    std::vector<std::pair<int, int>> externalToDense_; // sorted on demand? linear scan
    bool built_ = false;
};

/// Connected components in deterministic order: the component containing the
/// lowest vertex id first. Component vertices keep their relative order and
/// their external ids.
std::vector<GraphPtr> connectedComponents(const Graph& g);

/// Disjoint union; vertex i of part k maps to offset(k) + i where offset is
/// the running vertex-count sum. External ids are the global indices.
GraphPtr disjointUnion(const std::vector<GraphPtr>& parts, std::string name = "");

} // namespace grammod
