#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "grammod/graph.hpp"

namespace grammod {

/// Registry of graph isomorphism classes. Graph equality means isomorphism
/// everywhere in this project; the registry keys candidates by a cheap
/// invariant (sizes, sorted label multisets, degree sequence) and falls back
/// to pairwise isomorphism checks within a bucket.
///
/// Class ids are assigned in first-registration order. The single
/// synchronized structure of the engine; all other data is immutable.
class GraphRegistry {
public:
    /// Class id of g, registering a new class if no isomorphic graph is
    /// known. The first registered representative and its name stick.
    int registerGraph(const GraphPtr& g);

    /// Class id of an isomorphic registered graph, or -1.
    int findClass(const Graph& g) const;

    GraphPtr graphOf(int classId) const;
    std::string nameOf(int classId) const;
    int size() const;

private:
    std::string invariantKey(const Graph& g) const;

    struct Entry {
        GraphPtr rep;
        std::string name;
    };

    mutable std::mutex mutex_;
    std::vector<Entry> entries_;
    std::map<std::string, std::vector<int>> buckets_;
};

} // namespace grammod
