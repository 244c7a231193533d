#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "grammod/graph.hpp"

namespace grammod {

/// Injective label-preserving graph morphism: every pattern edge maps to a
/// host edge between the image vertices.
struct Morphism {
    const Graph* pattern = nullptr;
    const Graph* host = nullptr;
    std::vector<int> vertexMap; // pattern vertex -> host vertex

    /// Induced map on edges: pattern edge index -> host edge index.
    std::vector<int> edgeMap() const;
};

struct MorphismOptions {
    /// Require the reverse adjacency check as well (isomorphism-style search:
    /// no host edge between image vertices without a pattern preimage).
    bool induced = false;
    /// Require deg(pattern v) == deg(host image) instead of <=.
    bool exactDegrees = false;
    /// Overrides the default label-equality test. Must imply whatever label
    /// discipline the caller needs; the engine no longer compares labels when
    /// a custom predicate is set.
    std::function<bool(int patternVertex, int hostVertex)> vertexCompat;
    std::function<bool(int patternEdge, int hostEdge)> edgeCompat;
    /// Host vertices that may not be used (byte per host vertex, nonzero =
    /// forbidden). May alias caller state but must stay valid for the call.
    const std::vector<char>* hostForbidden = nullptr;
    /// Pre-assigned (pattern, host) vertex pairs; validated before search.
    std::vector<std::pair<int, int>> seed;
};

/// Return false to stop the enumeration early.
using MorphismVisitor = std::function<bool(const Morphism&)>;

/// Deterministic backtracking search (VF2-style): the next pattern vertex is
/// the smallest-id one adjacent to the mapped set, candidates are tried in
/// ascending host id. Returns false iff the visitor stopped the search.
bool enumerateMorphisms(const Graph& pattern, const Graph& host, const MorphismOptions& opts,
                        const MorphismVisitor& visit);

void enumerateMonomorphisms(const Graph& pattern, const Graph& host, const MorphismVisitor& visit);

/// Number of distinct monomorphisms pattern -> host, saturating at
/// maxNumMatches. The default mirrors a plain existence check.
std::size_t countMonomorphisms(const Graph& pattern, const Graph& host,
                               std::size_t maxNumMatches = 1);

/// Number of distinct isomorphisms g1 -> g2, saturating at maxNumMatches.
/// 0 when vertex/edge counts, label multisets, or degree sequences differ.
std::size_t countIsomorphisms(const Graph& g1, const Graph& g2, std::size_t maxNumMatches = 1);

bool isomorphic(const Graph& g1, const Graph& g2);

} // namespace grammod
