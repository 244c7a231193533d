#include "grammod/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace grammod {

namespace {

// label codes are process-wide so any two graphs can be compared by code
int internLabel(const std::string& label) {
    static std::mutex mutex;
    static std::map<std::string, int> table;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = table.emplace(label, static_cast<int>(table.size()));
    (void)inserted;
    return it->second;
}

} // namespace

int Graph::edgeIndex(int u, int v) const {
    if (u < 0 || u >= numVertices() || v < 0 || v >= numVertices())
        return -1;
    for (const auto& [w, e] : incident_[u])
        if (w == v)
            return e;
    return -1;
}

const std::string* Graph::edgeLabel(int u, int v) const {
    int e = edgeIndex(u, v);
    return e >= 0 ? &edges_[e].label : nullptr;
}

int Graph::vLabelCount(std::string_view label) const {
    int n = 0;
    for (const auto& l : vertexLabels_)
        if (l == label)
            ++n;
    return n;
}

bool Graph::connected() const {
    if (numVertices() <= 1)
        return true;
    std::vector<char> seen(numVertices(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : incident_[v]) {
            (void)e;
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == numVertices();
}

int GraphBuilder::denseOf(int externalId) const {
    for (const auto& [ext, dense] : externalToDense_)
        if (ext == externalId)
            return dense;
    return -1;
}

bool GraphBuilder::hasVertex(int externalId) const {
    return denseOf(externalId) >= 0;
}

int GraphBuilder::addVertex(int externalId, std::string label) {
    if (built_)
        throw std::logic_error("GraphBuilder used after build()");
    if (label.empty())
        throw std::invalid_argument("empty label on vertex " + std::to_string(externalId));
    if (hasVertex(externalId))
        throw std::invalid_argument("duplicate vertex id " + std::to_string(externalId));
    int dense = static_cast<int>(graph_.vertexLabels_.size());
    graph_.vertexLabelCodes_.push_back(internLabel(label));
    graph_.vertexLabels_.push_back(std::move(label));
    graph_.externalIds_.push_back(externalId);
    graph_.incident_.emplace_back();
    externalToDense_.emplace_back(externalId, dense);
    return dense;
}

void GraphBuilder::addEdge(int externalSrc, int externalDst, std::string label) {
    if (built_)
        throw std::logic_error("GraphBuilder used after build()");
    if (label.empty())
        throw std::invalid_argument("empty label on edge " + std::to_string(externalSrc) + " -- "
                                    + std::to_string(externalDst));
    int u = denseOf(externalSrc);
    int v = denseOf(externalDst);
    if (u < 0)
        throw std::invalid_argument("edge endpoint " + std::to_string(externalSrc)
                                    + " is not a declared vertex");
    if (v < 0)
        throw std::invalid_argument("edge endpoint " + std::to_string(externalDst)
                                    + " is not a declared vertex");
    if (u == v)
        throw std::invalid_argument("loop edge on vertex " + std::to_string(externalSrc));
    for (const auto& [w, e] : graph_.incident_[u]) {
        (void)e;
        if (w == v)
            throw std::invalid_argument("duplicate edge " + std::to_string(externalSrc) + " -- "
                                        + std::to_string(externalDst));
    }
    int e = static_cast<int>(graph_.edges_.size());
    graph_.edgeLabelCodes_.push_back(internLabel(label));
    graph_.edges_.push_back(Graph::Edge{std::min(u, v), std::max(u, v), std::move(label)});
    graph_.incident_[u].emplace_back(v, e);
    graph_.incident_[v].emplace_back(u, e);
}

GraphPtr GraphBuilder::build(std::string name) {
    if (built_)
        throw std::logic_error("GraphBuilder used after build()");
    built_ = true;
    graph_.name_ = std::move(name);
    for (auto& inc : graph_.incident_)
        std::sort(inc.begin(), inc.end());
    return std::make_shared<const Graph>(std::move(graph_));
}

std::vector<GraphPtr> connectedComponents(const Graph& g) {
    std::vector<int> comp(g.numVertices(), -1);
    int numComps = 0;
    for (int v = 0; v < g.numVertices(); ++v) {
        if (comp[v] >= 0)
            continue;
        std::vector<int> stack{v};
        comp[v] = numComps;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.incident(u)) {
                (void)e;
                if (comp[w] < 0) {
                    comp[w] = numComps;
                    stack.push_back(w);
                }
            }
        }
        ++numComps;
    }
    std::vector<GraphBuilder> builders(numComps);
    for (int v = 0; v < g.numVertices(); ++v)
        builders[comp[v]].addVertex(g.externalId(v), g.vertexLabel(v));
    for (const auto& e : g.edges())
        builders[comp[e.src]].addEdge(g.externalId(e.src), g.externalId(e.dst), e.label);
    std::vector<GraphPtr> out;
    out.reserve(numComps);
    for (int c = 0; c < numComps; ++c) {
        std::string name = g.name();
        if (numComps > 1 && !name.empty())
            name += "#" + std::to_string(c);
        out.push_back(builders[c].build(std::move(name)));
    }
    return out;
}

GraphPtr disjointUnion(const std::vector<GraphPtr>& parts, std::string name) {
    GraphBuilder b;
    int offset = 0;
    for (const auto& p : parts) {
        for (int v = 0; v < p->numVertices(); ++v)
            b.addVertex(offset + v, p->vertexLabel(v));
        for (const auto& e : p->edges())
            b.addEdge(offset + e.src, offset + e.dst, e.label);
        offset += p->numVertices();
    }
    return b.build(std::move(name));
}

} // namespace grammod
