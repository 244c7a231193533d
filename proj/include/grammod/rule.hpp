#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "grammod/graph.hpp"

namespace grammod {

class Rule;
using RulePtr = std::shared_ptr<const Rule>;

/// Which sides of a rule an element belongs to. Context elements appear on
/// both sides and may change label between them.
enum class Membership { LeftOnly, Context, RightOnly };

inline bool presentInLeft(Membership m) { return m != Membership::RightOnly; }
inline bool presentInRight(Membership m) { return m != Membership::LeftOnly; }

/// A DPO span (L <- K -> R) stored as one core graph with per-element
/// membership and a label pair. K is the set of Context elements; the
/// embeddings of K into L and R are identities on the shared core ids, so
/// they are injective by construction.
///
/// L and R are each simple, but the core may hold two edges between the same
/// endpoints when one is LeftOnly and the other RightOnly (delete one edge,
/// create another in its place) - a genuinely different rule from a
/// label-changing Context edge, which keeps the edge in K.
///
/// Rules are immutable after construction.
class Rule {
public:
    struct Vertex {
        int externalId = 0;
        Membership membership = Membership::Context;
        std::string leftLabel;  // empty iff RightOnly
        std::string rightLabel; // empty iff LeftOnly
    };
    struct Edge {
        int src = 0; // core vertex indices, src < dst
        int dst = 0;
        Membership membership = Membership::Context;
        std::string leftLabel;
        std::string rightLabel;
    };

    const std::string& name() const { return name_; }
    int numVertices() const { return static_cast<int>(vertices_.size()); }
    int numEdges() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& coreEdges() const { return edges_; }

    /// Side views as plain graphs (labels are the side's labels).
    const Graph& left() const { return *left_; }
    const Graph& right() const { return *right_; }
    const Graph& context() const { return *context_; }

    // Core <-> view index maps; -1 where the element is absent from a side.
    int coreOfLeftVertex(int v) const { return coreOfLeftV_[v]; }
    int leftVertexOfCore(int c) const { return leftVOfCore_[c]; }
    int coreOfRightVertex(int v) const { return coreOfRightV_[v]; }
    int rightVertexOfCore(int c) const { return rightVOfCore_[c]; }
    int coreOfLeftEdge(int e) const { return coreOfLeftE_[e]; }
    int leftEdgeOfCore(int c) const { return leftEOfCore_[c]; }
    int coreOfRightEdge(int e) const { return coreOfRightE_[e]; }
    int rightEdgeOfCore(int c) const { return rightEOfCore_[c]; }

    /// True if any vertex or edge is a Context element with differing labels.
    bool changesLabels() const;

private:
    friend class RuleBuilder;
    Rule() = default;

    void buildViews();

    std::string name_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;

    GraphPtr left_, right_, context_;
    std::vector<int> coreOfLeftV_, leftVOfCore_;
    std::vector<int> coreOfRightV_, rightVOfCore_;
    std::vector<int> coreOfLeftE_, leftEOfCore_;
    std::vector<int> coreOfRightE_, rightEOfCore_;
};

/// Construction with per-element invariant checking (labels matching the
/// membership, endpoints present on every side an edge claims, per-side
/// simplicity). Throws std::invalid_argument naming the offending element.
class RuleBuilder {
public:
    void addVertex(int externalId, Membership m, std::string leftLabel, std::string rightLabel);
    void addEdge(int externalSrc, int externalDst, Membership m, std::string leftLabel,
                 std::string rightLabel);
    RulePtr build(std::string name = "");

private:
    int coreOf(int externalId) const;

    std::vector<Rule::Vertex> vertices_;
    struct PendingEdge {
        int extSrc, extDst;
        Membership membership;
        std::string leftLabel, rightLabel;
    };
    std::vector<PendingEdge> edges_;
    bool built_ = false;
};

/// Swaps the two sides: memberships LeftOnly <-> RightOnly and the label
/// pairs. Inverting twice gives a rule isomorphic to the original.
RulePtr invertRule(const Rule& r);

/// Rule morphisms are commuting triples of graph morphisms on (L, K, R).
/// Monomorphism existence certifies that p1 is at least as general as p2.
std::size_t ruleMonomorphisms(const Rule& p1, const Rule& p2, std::size_t maxNumMatches = 1);
std::size_t ruleIsomorphisms(const Rule& p1, const Rule& p2, std::size_t maxNumMatches = 1);
bool ruleIsomorphic(const Rule& p1, const Rule& p2);

} // namespace grammod
