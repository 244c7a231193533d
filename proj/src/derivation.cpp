#include "grammod/derivation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "grammod/morphism.hpp"

namespace grammod {

int DerivationMatch::copyOffset(int j) const {
    int off = 0;
    for (int i = 0; i < j; ++i)
        off += copies[i].graph->numVertices();
    return off;
}

int DerivationMatch::totalHostVertices() const {
    return copyOffset(static_cast<int>(copies.size()));
}

int DerivationMatch::globalImage(int coreVertex) const {
    int j = coreCopy[coreVertex];
    if (j < 0)
        return -1;
    return copyOffset(j) + coreHostVertex[coreVertex];
}

bool checkDangling(const Rule& rule, const DerivationMatch& match) {
    for (int c = 0; c < rule.numVertices(); ++c) {
        if (rule.vertex(c).membership != Membership::LeftOnly)
            continue;
        int leftDegree = 0;
        for (const auto& e : rule.coreEdges())
            if (presentInLeft(e.membership) && (e.src == c || e.dst == c))
                ++leftDegree;
        const Graph& host = *match.copies[match.coreCopy[c]].graph;
        if (host.degree(match.coreHostVertex[c]) != leftDegree)
            return false;
    }
    return true;
}

bool checkPushoutExists(const Rule& rule, const DerivationMatch& match) {
    for (const auto& e : rule.coreEdges()) {
        if (e.membership != Membership::RightOnly)
            continue;
        const auto& u = rule.vertex(e.src);
        const auto& v = rule.vertex(e.dst);
        if (u.membership != Membership::Context || v.membership != Membership::Context)
            continue; // an endpoint is created: no host edge can exist there
        if (match.coreCopy[e.src] != match.coreCopy[e.dst])
            continue; // different copies are disjoint
        // A left-present edge between the pair is necessarily LeftOnly (the
        // right side is simple) and is deleted, making room.
        bool leftEdge = false;
        for (const auto& f : rule.coreEdges())
            if (presentInLeft(f.membership) && f.src == e.src && f.dst == e.dst)
                leftEdge = true;
        if (leftEdge)
            continue;
        const Graph& host = *match.copies[match.coreCopy[e.src]].graph;
        if (host.hasEdge(match.coreHostVertex[e.src], match.coreHostVertex[e.dst]))
            return false;
    }
    return true;
}

bool validateDerivationMatch(const Rule& rule, const DerivationMatch& match) {
    int n = rule.numVertices();
    if (static_cast<int>(match.coreCopy.size()) != n
        || static_cast<int>(match.coreHostVertex.size()) != n)
        return false;
    std::vector<std::vector<char>> used(match.copies.size());
    for (std::size_t j = 0; j < match.copies.size(); ++j)
        used[j].assign(match.copies[j].graph->numVertices(), 0);
    for (int c = 0; c < n; ++c) {
        const auto& v = rule.vertex(c);
        bool inLeft = presentInLeft(v.membership);
        if ((match.coreCopy[c] >= 0) != inLeft)
            return false;
        if (!inLeft)
            continue;
        int j = match.coreCopy[c];
        if (j >= static_cast<int>(match.copies.size()))
            return false;
        const Graph& host = *match.copies[j].graph;
        int hv = match.coreHostVertex[c];
        if (hv < 0 || hv >= host.numVertices())
            return false;
        if (used[j][hv])
            return false; // not injective
        used[j][hv] = 1;
        if (host.vertexLabel(hv) != v.leftLabel)
            return false;
    }
    // every copy hit (properness)
    for (const auto& u : used) {
        bool hit = false;
        for (char c : u)
            hit |= c != 0;
        if (!hit)
            return false;
    }
    // adjacency and edge labels
    for (const auto& e : rule.coreEdges()) {
        if (!presentInLeft(e.membership))
            continue;
        if (match.coreCopy[e.src] != match.coreCopy[e.dst])
            return false;
        const Graph& host = *match.copies[match.coreCopy[e.src]].graph;
        const std::string* label =
            host.edgeLabel(match.coreHostVertex[e.src], match.coreHostVertex[e.dst]);
        if (!label || *label != e.leftLabel)
            return false;
    }
    return checkDangling(rule, match) && checkPushoutExists(rule, match);
}

GraphPtr buildHostGraph(const DerivationMatch& match) {
    GraphBuilder b;
    int off = 0;
    for (const auto& copy : match.copies) {
        for (int v = 0; v < copy.graph->numVertices(); ++v)
            b.addVertex(off + v, copy.graph->vertexLabel(v));
        for (const auto& e : copy.graph->edges())
            b.addEdge(off + e.src, off + e.dst, e.label);
        off += copy.graph->numVertices();
    }
    return b.build();
}

namespace {

// Host edges deleted by the rewrite, as global (min, max) id pairs.
std::set<std::pair<int, int>> deletedEdgeImages(const Rule& rule, const DerivationMatch& match) {
    std::set<std::pair<int, int>> out;
    for (const auto& e : rule.coreEdges()) {
        if (e.membership != Membership::LeftOnly)
            continue;
        int a = match.globalImage(e.src);
        int b = match.globalImage(e.dst);
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

} // namespace

GraphPtr buildInterfaceGraph(const Rule& rule, const DerivationMatch& match) {
    std::vector<char> deletedVertex(match.totalHostVertices(), 0);
    for (int c = 0; c < rule.numVertices(); ++c)
        if (rule.vertex(c).membership == Membership::LeftOnly)
            deletedVertex[match.globalImage(c)] = 1;
    auto deletedEdges = deletedEdgeImages(rule, match);

    GraphBuilder b;
    int off = 0;
    for (const auto& copy : match.copies) {
        for (int v = 0; v < copy.graph->numVertices(); ++v)
            if (!deletedVertex[off + v])
                b.addVertex(off + v, copy.graph->vertexLabel(v));
        for (const auto& e : copy.graph->edges()) {
            int a = off + e.src, b2 = off + e.dst;
            if (deletedVertex[a] || deletedVertex[b2])
                continue;
            if (deletedEdges.count({std::min(a, b2), std::max(a, b2)}))
                continue;
            b.addEdge(a, b2, e.label);
        }
        off += copy.graph->numVertices();
    }
    return b.build();
}

ApplyResult applyDerivation(const Rule& rule, const DerivationMatch& match) {
    if (!checkDangling(rule, match))
        throw std::logic_error("applyDerivation: dangling condition violated");
    if (!checkPushoutExists(rule, match))
        throw std::logic_error("applyDerivation: pushout does not exist");

    int hostSize = match.totalHostVertices();
    std::vector<char> deletedVertex(hostSize, 0);
    std::vector<const std::string*> relabel(hostSize, nullptr);
    for (int c = 0; c < rule.numVertices(); ++c) {
        const auto& v = rule.vertex(c);
        if (v.membership == Membership::LeftOnly)
            deletedVertex[match.globalImage(c)] = 1;
        else if (v.membership == Membership::Context && v.leftLabel != v.rightLabel)
            relabel[match.globalImage(c)] = &v.rightLabel;
    }
    auto deletedEdges = deletedEdgeImages(rule, match);
    std::map<std::pair<int, int>, const std::string*> relabelEdge;
    for (const auto& e : rule.coreEdges()) {
        if (e.membership == Membership::Context && e.leftLabel != e.rightLabel) {
            int a = match.globalImage(e.src);
            int b = match.globalImage(e.dst);
            relabelEdge[{std::min(a, b), std::max(a, b)}] = &e.rightLabel;
        }
    }

    GraphBuilder b;
    int off = 0;
    for (const auto& copy : match.copies) {
        for (int v = 0; v < copy.graph->numVertices(); ++v) {
            int g = off + v;
            if (!deletedVertex[g])
                b.addVertex(g, relabel[g] ? *relabel[g] : copy.graph->vertexLabel(v));
        }
        off += copy.graph->numVertices();
    }
    off = 0;
    for (const auto& copy : match.copies) {
        for (const auto& e : copy.graph->edges()) {
            int a = off + e.src, c = off + e.dst;
            auto key = std::make_pair(std::min(a, c), std::max(a, c));
            if (deletedVertex[a] || deletedVertex[c] || deletedEdges.count(key))
                continue;
            auto it = relabelEdge.find(key);
            b.addEdge(a, c, it != relabelEdge.end() ? *it->second : e.label);
        }
        off += copy.graph->numVertices();
    }

    std::vector<int> comatch(rule.numVertices(), -1);
    int next = hostSize;
    for (int c = 0; c < rule.numVertices(); ++c) {
        const auto& v = rule.vertex(c);
        if (v.membership == Membership::RightOnly) {
            b.addVertex(next, v.rightLabel);
            comatch[c] = next++;
        } else if (presentInRight(v.membership)) {
            comatch[c] = match.globalImage(c);
        }
    }
    for (const auto& e : rule.coreEdges())
        if (e.membership == Membership::RightOnly)
            b.addEdge(comatch[e.src], comatch[e.dst], e.rightLabel);

    ApplyResult out;
    out.result = b.build();
    out.heads = connectedComponents(*out.result);
    out.comatchRight = std::move(comatch);
    return out;
}

namespace {

struct Enumerator {
    const RulePtr& rule;
    const std::vector<UniverseEntry>& universe;
    GraphRegistry& registry;
    const Config& config;
    const DerivationVisitor& visit;
    const TailFilter& tailFilter;
    std::vector<int> active; // sorted

    struct Component {
        GraphPtr graph;
        std::vector<int> coreOf; // component vertex -> core vertex
    };
    std::vector<Component> components;

    struct Copy {
        int classId;
        GraphPtr graph;
        std::vector<char> used;
        bool active;
    };
    std::deque<Copy> copies; // deque: stable addresses for hostForbidden
    std::vector<int> coreCopy, coreHost;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    // embeddings of a component into a fresh copy of a class, in search order
    std::map<std::pair<std::size_t, int>, std::vector<std::vector<int>>> freshMatches;
    int activeCopies = 0;
    bool stopped = false;

    Enumerator(const RulePtr& r, const std::vector<UniverseEntry>& u,
               const std::vector<int>& activeClasses, GraphRegistry& reg, const Config& cfg,
               const DerivationVisitor& v, const TailFilter& tf)
        : rule(r), universe(u), registry(reg), config(cfg), visit(v), tailFilter(tf),
          active(activeClasses) {
        std::sort(active.begin(), active.end());
        splitLeftComponents();
        coreCopy.assign(rule->numVertices(), -1);
        coreHost.assign(rule->numVertices(), -1);
    }

    void splitLeftComponents() {
        const Graph& left = rule->left();
        for (const auto& part : connectedComponents(left)) {
            Component comp;
            comp.graph = part;
            comp.coreOf.resize(part->numVertices());
            // component external ids are the rule's external ids; map back
            for (int v = 0; v < part->numVertices(); ++v) {
                int core = -1;
                for (int c = 0; c < rule->numVertices(); ++c)
                    if (rule->vertex(c).externalId == part->externalId(v)
                        && presentInLeft(rule->vertex(c).membership))
                        core = c;
                comp.coreOf[v] = core;
            }
            components.push_back(std::move(comp));
        }
    }

    bool isActiveClass(int classId) const {
        return std::binary_search(active.begin(), active.end(), classId);
    }

    void finish() {
        if (components.empty())
            return; // no tails, so no active educt; not enumerated
        if (activeCopies == 0)
            return;
        DerivationMatch match;
        match.rule = rule;
        for (const auto& copy : copies)
            match.copies.push_back(TailCopy{copy.classId, copy.graph});
        match.coreCopy = coreCopy;
        match.coreHostVertex = coreHost;
        match.activeClasses = active;
        if (!checkDangling(*rule, match) || !checkPushoutExists(*rule, match))
            return;
        if (tailFilter && !tailFilter(match))
            return;

        ApplyResult applied = applyDerivation(*rule, match);
        Derivation d;
        d.match = std::move(match);
        for (const auto& copy : copies)
            d.tailClasses.push_back(copy.classId);
        std::sort(d.tailClasses.begin(), d.tailClasses.end());
        for (const auto& head : applied.heads) {
            d.headClasses.push_back(registry.registerGraph(head));
            d.headGraphs.push_back(head);
        }
        std::sort(d.headClasses.begin(), d.headClasses.end());
        // storeAllMatches wants every witness, so dedup moves to the caller
        if (!config.storeAllMatches && !seen.emplace(d.tailClasses, d.headClasses).second)
            return;
        if (!visit(d))
            stopped = true;
    }

    void commit(std::size_t ci, std::size_t j, const std::vector<int>& map) {
        const Component& comp = components[ci];
        for (int v = 0; v < comp.graph->numVertices(); ++v) {
            copies[j].used[map[v]] = 1;
            coreCopy[comp.coreOf[v]] = static_cast<int>(j);
            coreHost[comp.coreOf[v]] = map[v];
        }
        recurse(ci + 1);
        for (int v = 0; v < comp.graph->numVertices(); ++v) {
            copies[j].used[map[v]] = 0;
            coreCopy[comp.coreOf[v]] = -1;
            coreHost[comp.coreOf[v]] = -1;
        }
    }

    void embed(std::size_t ci, std::size_t j) {
        MorphismOptions opts;
        opts.hostForbidden = &copies[j].used;
        enumerateMorphisms(*components[ci].graph, *copies[j].graph, opts,
                           [&](const Morphism& m) {
                               commit(ci, j, m.vertexMap);
                               return !stopped;
                           });
    }

    // A fresh copy has no used vertices, so its match list depends only on
    // the (component, class) pair and can be replayed across assignments.
    const std::vector<std::vector<int>>& embeddingsIntoFresh(std::size_t ci,
                                                             const UniverseEntry& entry) {
        auto key = std::make_pair(ci, entry.classId);
        auto it = freshMatches.find(key);
        if (it != freshMatches.end())
            return it->second;
        std::vector<std::vector<int>> matches;
        enumerateMorphisms(*components[ci].graph, *entry.graph, MorphismOptions{},
                           [&](const Morphism& m) {
                               matches.push_back(m.vertexMap);
                               return true;
                           });
        return freshMatches.emplace(key, std::move(matches)).first->second;
    }

    void recurse(std::size_t ci) {
        if (stopped)
            return;
        if (ci == components.size()) {
            finish();
            return;
        }
        // the last component cannot rescue a host with no active copy:
        // everything it could join or open would have to be active
        bool needActive = activeCopies == 0 && ci + 1 == components.size();
        for (std::size_t j = 0; j < copies.size(); ++j) {
            if (needActive && !copies[j].active)
                continue;
            embed(ci, j);
            if (stopped)
                return;
        }
        for (const auto& entry : universe) {
            if (entry.graph->numVertices() > config.maxHostGraphVertices)
                continue;
            bool entryActive = isActiveClass(entry.classId);
            if (needActive && !entryActive)
                continue;
            const auto& matches = embeddingsIntoFresh(ci, entry);
            if (matches.empty())
                continue;
            copies.push_back(Copy{entry.classId, entry.graph,
                                  std::vector<char>(entry.graph->numVertices(), 0),
                                  entryActive});
            activeCopies += entryActive;
            for (const auto& map : matches) {
                commit(ci, copies.size() - 1, map);
                if (stopped)
                    break;
            }
            activeCopies -= entryActive;
            copies.pop_back();
            if (stopped)
                return;
        }
    }
};

} // namespace

void enumerateDerivations(const RulePtr& rule, const std::vector<UniverseEntry>& universe,
                          const std::vector<int>& activeClasses, GraphRegistry& registry,
                          const Config& config, const DerivationVisitor& visit,
                          const TailFilter& tailFilter) {
    Enumerator e(rule, universe, activeClasses, registry, config, visit, tailFilter);
    e.recurse(0);
}

} // namespace grammod
