#include "grammod/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace grammod {

std::vector<int> Morphism::edgeMap() const {
    std::vector<int> em(pattern->numEdges(), -1);
    for (int e = 0; e < pattern->numEdges(); ++e) {
        const auto& pe = pattern->edge(e);
        em[e] = host->edgeIndex(vertexMap[pe.src], vertexMap[pe.dst]);
    }
    return em;
}

namespace {

struct Search {
    const Graph& pattern;
    const Graph& host;
    const MorphismOptions& opts;
    const MorphismVisitor& visit;

    std::vector<int> p2h;
    std::vector<int> h2p;
    int mapped = 0;
    bool stopped = false;

    Search(const Graph& p, const Graph& h, const MorphismOptions& o, const MorphismVisitor& v)
        : pattern(p), host(h), opts(o), visit(v),
          p2h(p.numVertices(), -1), h2p(h.numVertices(), -1) {}

    bool vertexOk(int pv, int hv) const {
        if (h2p[hv] >= 0)
            return false;
        if (opts.hostForbidden && (*opts.hostForbidden)[hv])
            return false;
        if (opts.exactDegrees ? pattern.degree(pv) != host.degree(hv)
                              : pattern.degree(pv) > host.degree(hv))
            return false;
        if (opts.vertexCompat)
            return opts.vertexCompat(pv, hv);
        return pattern.vertexLabelCode(pv) == host.vertexLabelCode(hv);
    }

    bool edgeOk(int pe, int he) const {
        if (opts.edgeCompat)
            return opts.edgeCompat(pe, he);
        return pattern.edgeLabelCode(pe) == host.edgeLabelCode(he);
    }

    // Adjacency consistency between pv->hv and everything mapped so far.
    bool adjacentOk(int pv, int hv) const {
        for (const auto& [pw, pe] : pattern.incident(pv)) {
            int hw = p2h[pw];
            if (hw < 0)
                continue;
            int he = host.edgeIndex(hv, hw);
            if (he < 0 || !edgeOk(pe, he))
                return false;
        }
        if (opts.induced) {
            for (const auto& [hw, he] : host.incident(hv)) {
                (void)he;
                int pw = h2p[hw];
                if (pw >= 0 && !pattern.hasEdge(pv, pw))
                    return false;
            }
        }
        return true;
    }

    void assign(int pv, int hv) {
        p2h[pv] = hv;
        h2p[hv] = pv;
        ++mapped;
    }

    void unassign(int pv, int hv) {
        p2h[pv] = -1;
        h2p[hv] = -1;
        --mapped;
    }

    // Smallest-id unmapped pattern vertex adjacent to the mapped set, falling
    // back to the smallest unmapped vertex (start of a new component).
    int nextVertex() const {
        int fallback = -1;
        for (int v = 0; v < pattern.numVertices(); ++v) {
            if (p2h[v] >= 0)
                continue;
            if (fallback < 0)
                fallback = v;
            for (const auto& [w, e] : pattern.incident(v)) {
                (void)e;
                if (p2h[w] >= 0)
                    return v;
            }
        }
        return fallback;
    }

    void run() {
        if (mapped == pattern.numVertices()) {
            Morphism m{&pattern, &host, p2h};
            if (!visit(m))
                stopped = true;
            return;
        }
        int pv = nextVertex();
        int anchor = -1; // mapped neighbour, restricts the candidate set
        for (const auto& [w, e] : pattern.incident(pv)) {
            (void)e;
            if (p2h[w] >= 0) {
                anchor = w;
                break;
            }
        }
        if (anchor >= 0) {
            for (const auto& [hv, he] : host.incident(p2h[anchor])) {
                (void)he;
                if (!vertexOk(pv, hv) || !adjacentOk(pv, hv))
                    continue;
                assign(pv, hv);
                run();
                unassign(pv, hv);
                if (stopped)
                    return;
            }
        } else {
            for (int hv = 0; hv < host.numVertices(); ++hv) {
                if (!vertexOk(pv, hv) || !adjacentOk(pv, hv))
                    continue;
                assign(pv, hv);
                run();
                unassign(pv, hv);
                if (stopped)
                    return;
            }
        }
    }
};

std::vector<std::string> sortedVertexLabels(const Graph& g) {
    std::vector<std::string> out;
    out.reserve(g.numVertices());
    for (int v = 0; v < g.numVertices(); ++v)
        out.push_back(g.vertexLabel(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sortedEdgeLabels(const Graph& g) {
    std::vector<std::string> out;
    out.reserve(g.numEdges());
    for (const auto& e : g.edges())
        out.push_back(e.label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> sortedDegrees(const Graph& g) {
    std::vector<int> out;
    out.reserve(g.numVertices());
    for (int v = 0; v < g.numVertices(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool enumerateMorphisms(const Graph& pattern, const Graph& host, const MorphismOptions& opts,
                        const MorphismVisitor& visit) {
    Search s(pattern, host, opts, visit);
    for (const auto& [pv, hv] : opts.seed) {
        if (pv < 0 || pv >= pattern.numVertices() || hv < 0 || hv >= host.numVertices())
            throw std::invalid_argument("morphism seed out of range");
        if (s.p2h[pv] >= 0 || s.h2p[hv] >= 0)
            throw std::invalid_argument("morphism seed is not injective");
        if (!s.vertexOk(pv, hv) || !s.adjacentOk(pv, hv))
            return true; // seed infeasible: no morphisms, enumeration completed
        s.assign(pv, hv);
    }
    s.run();
    return !s.stopped;
}

void enumerateMonomorphisms(const Graph& pattern, const Graph& host, const MorphismVisitor& visit) {
    enumerateMorphisms(pattern, host, MorphismOptions{}, visit);
}

std::size_t countMonomorphisms(const Graph& pattern, const Graph& host,
                               std::size_t maxNumMatches) {
    if (maxNumMatches == 0)
        return 0;
    std::size_t count = 0;
    enumerateMorphisms(pattern, host, MorphismOptions{}, [&](const Morphism&) {
        ++count;
        return count < maxNumMatches;
    });
    return count;
}

std::size_t countIsomorphisms(const Graph& g1, const Graph& g2, std::size_t maxNumMatches) {
    if (maxNumMatches == 0)
        return 0;
    if (g1.numVertices() != g2.numVertices() || g1.numEdges() != g2.numEdges())
        return 0;
    if (sortedVertexLabels(g1) != sortedVertexLabels(g2))
        return 0;
    if (sortedEdgeLabels(g1) != sortedEdgeLabels(g2))
        return 0;
    if (sortedDegrees(g1) != sortedDegrees(g2))
        return 0;
    MorphismOptions opts;
    opts.induced = true;
    opts.exactDegrees = true;
    std::size_t count = 0;
    enumerateMorphisms(g1, g2, opts, [&](const Morphism&) {
        ++count;
        return count < maxNumMatches;
    });
    return count;
}

bool isomorphic(const Graph& g1, const Graph& g2) {
    return countIsomorphisms(g1, g2, 1) == 1;
}

} // namespace grammod
