#include "grammod/registry.hpp"

#include <algorithm>

#include "grammod/morphism.hpp"

namespace grammod {

std::string GraphRegistry::invariantKey(const Graph& g) const {
    // sorted neighbourhood signatures: label plus the sorted incident
    // (edge label, neighbour label) pairs. Isomorphism-invariant, and sharp
    // enough to keep the buckets of near-isomers short.
    std::vector<std::string> signatures;
    signatures.reserve(g.numVertices());
    for (int v = 0; v < g.numVertices(); ++v) {
        std::vector<std::string> around;
        around.reserve(g.degree(v));
        for (const auto& [w, e] : g.incident(v))
            around.push_back(g.edge(e).label + "~" + g.vertexLabel(w));
        std::sort(around.begin(), around.end());
        std::string sig = g.vertexLabel(v) + "(";
        for (const auto& a : around)
            sig += a + ",";
        sig += ")";
        signatures.push_back(std::move(sig));
    }
    std::sort(signatures.begin(), signatures.end());
    std::string key = std::to_string(g.numVertices()) + ";" + std::to_string(g.numEdges()) + ";";
    for (const auto& s : signatures)
        key += s + "|";
    return key;
}

namespace {

// bucket members already share vertex/edge label multisets and degree
// sequences through the key, so skip the prechecks of countIsomorphisms
bool representativeIsomorphic(const Graph& a, const Graph& b) {
    MorphismOptions opts;
    opts.induced = true;
    opts.exactDegrees = true;
    bool found = false;
    enumerateMorphisms(a, b, opts, [&](const Morphism&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace

int GraphRegistry::registerGraph(const GraphPtr& g) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::string key = invariantKey(*g);
    auto& bucket = buckets_[key];
    for (int id : bucket)
        if (representativeIsomorphic(*entries_[id].rep, *g))
            return id;
    int id = static_cast<int>(entries_.size());
    std::string name = g->name().empty() ? "g" + std::to_string(id) : g->name();
    entries_.push_back(Entry{g, std::move(name)});
    bucket.push_back(id);
    return id;
}

int GraphRegistry::findClass(const Graph& g) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = buckets_.find(invariantKey(g));
    if (it == buckets_.end())
        return -1;
    for (int id : it->second)
        if (representativeIsomorphic(*entries_[id].rep, g))
            return id;
    return -1;
}

GraphPtr GraphRegistry::graphOf(int classId) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.at(classId).rep;
}

std::string GraphRegistry::nameOf(int classId) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.at(classId).name;
}

int GraphRegistry::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return static_cast<int>(entries_.size());
}

} // namespace grammod
