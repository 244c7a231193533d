#include "grammod/rulecomp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "grammod/error.hpp"
#include "grammod/morphism.hpp"

namespace grammod {

std::string to_string(RcOperator op) {
    switch (op) {
    case RcOperator::Parallel:
        return "rcParallel";
    case RcOperator::SuperFull:
        return "rcSuper(allowPartial=false)";
    case RcOperator::Super:
        return "rcSuper";
    case RcOperator::SubFull:
        return "rcSub(allowPartial=false)";
    case RcOperator::Sub:
        return "rcSub";
    case RcOperator::Common:
        return "rcCommon";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// composition

namespace {

struct ResVertex {
    Membership m;
    std::string left, right;
    bool removed = false;
};

struct ResEdge {
    int src, dst; // indices into the vertex table
    Membership m;
    std::string left, right;
    bool removed = false;
};

ComposeResult failure(ComposeFailure kind, std::string message) {
    return ComposeResult{nullptr, kind, std::move(message)};
}

} // namespace

ComposeResult composeOverOverlap(const Rule& p1, const Rule& p2, const Overlap& overlap) {
    // Overlap validity: matched elements must be right-present in p1,
    // left-present in p2, and agree on the joining label.
    std::vector<int> map2v(p2.numVertices(), -1);
    std::vector<int> map2e(p2.numEdges(), -1);
    std::vector<char> used1v(p1.numVertices(), 0), used1e(p1.numEdges(), 0);
    for (const auto& [c1, c2] : overlap.vertexPairs) {
        const auto& a = p1.vertex(c1);
        const auto& b = p2.vertex(c2);
        if (!presentInRight(a.membership) || !presentInLeft(b.membership))
            return failure(ComposeFailure::Mismatch, "overlap pairs a non-overlappable vertex");
        if (a.rightLabel != b.leftLabel)
            return failure(ComposeFailure::Mismatch,
                           "label mismatch on overlap vertex: '" + a.rightLabel + "' vs '"
                               + b.leftLabel + "'");
        if (map2v[c2] >= 0 || used1v[c1])
            return failure(ComposeFailure::Mismatch, "overlap is not injective");
        used1v[c1] = 1;
        map2v[c2] = c1;
    }
    for (const auto& [e1, e2] : overlap.edgePairs) {
        const auto& a = p1.edge(e1);
        const auto& b = p2.edge(e2);
        if (!presentInRight(a.membership) || !presentInLeft(b.membership))
            return failure(ComposeFailure::Mismatch, "overlap pairs a non-overlappable edge");
        if (a.rightLabel != b.leftLabel)
            return failure(ComposeFailure::Mismatch, "label mismatch on overlap edge");
        bool endpointsMatch = (map2v[b.src] == a.src && map2v[b.dst] == a.dst)
                              || (map2v[b.src] == a.dst && map2v[b.dst] == a.src);
        if (!endpointsMatch)
            return failure(ComposeFailure::Mismatch,
                           "overlap edge without corresponding endpoints");
        if (map2e[e2] >= 0 || used1e[e1])
            return failure(ComposeFailure::Mismatch, "overlap is not injective");
        used1e[e1] = 1;
        map2e[e2] = e1;
    }

    // start from a copy of p1
    std::vector<ResVertex> vs;
    std::vector<ResEdge> es;
    for (const auto& v : p1.vertices())
        vs.push_back(ResVertex{v.membership, v.leftLabel, v.rightLabel});
    for (const auto& e : p1.coreEdges())
        es.push_back(ResEdge{e.src, e.dst, e.membership, e.leftLabel, e.rightLabel});

    // (a) unmatched left elements of p2 must pre-exist: add as context
    std::vector<int> v2res(p2.numVertices(), -1);
    std::vector<int> e2res(p2.numEdges(), -1);
    for (int c2 = 0; c2 < p2.numVertices(); ++c2) {
        const auto& b = p2.vertex(c2);
        if (map2v[c2] >= 0) {
            v2res[c2] = map2v[c2];
        } else if (presentInLeft(b.membership)) {
            v2res[c2] = static_cast<int>(vs.size());
            vs.push_back(ResVertex{Membership::Context, b.leftLabel, b.leftLabel});
        }
    }
    for (int e2 = 0; e2 < p2.numEdges(); ++e2) {
        const auto& b = p2.edge(e2);
        if (map2e[e2] >= 0) {
            e2res[e2] = map2e[e2];
        } else if (presentInLeft(b.membership)) {
            e2res[e2] = static_cast<int>(es.size());
            es.push_back(ResEdge{v2res[b.src], v2res[b.dst], Membership::Context, b.leftLabel,
                                 b.leftLabel});
        }
    }

    // (b) p2's deletions demote presence
    for (int c2 = 0; c2 < p2.numVertices(); ++c2) {
        if (p2.vertex(c2).membership != Membership::LeftOnly)
            continue;
        ResVertex& r = vs[v2res[c2]];
        if (r.m == Membership::RightOnly) {
            r.removed = true; // created by p1, destroyed by p2: transient
        } else {
            r.m = Membership::LeftOnly;
            r.right.clear();
        }
    }
    for (int e2 = 0; e2 < p2.numEdges(); ++e2) {
        if (p2.edge(e2).membership != Membership::LeftOnly)
            continue;
        ResEdge& r = es[e2res[e2]];
        if (r.m == Membership::RightOnly) {
            r.removed = true;
        } else {
            r.m = Membership::LeftOnly;
            r.right.clear();
        }
    }

    // (c) p2's label changes update right labels
    for (int c2 = 0; c2 < p2.numVertices(); ++c2) {
        const auto& b = p2.vertex(c2);
        if (b.membership == Membership::Context)
            vs[v2res[c2]].right = b.rightLabel;
    }
    for (int e2 = 0; e2 < p2.numEdges(); ++e2) {
        const auto& b = p2.edge(e2);
        if (b.membership == Membership::Context)
            es[e2res[e2]].right = b.rightLabel;
    }

    // (d) p2's creations
    for (int c2 = 0; c2 < p2.numVertices(); ++c2) {
        const auto& b = p2.vertex(c2);
        if (b.membership != Membership::RightOnly)
            continue;
        v2res[c2] = static_cast<int>(vs.size());
        vs.push_back(ResVertex{Membership::RightOnly, "", b.rightLabel});
    }
    for (int e2 = 0; e2 < p2.numEdges(); ++e2) {
        const auto& b = p2.edge(e2);
        if (b.membership != Membership::RightOnly)
            continue;
        e2res[e2] = static_cast<int>(es.size());
        es.push_back(ResEdge{v2res[b.src], v2res[b.dst], Membership::RightOnly, "",
                             b.rightLabel});
    }

    // validate: no edge may reference a removed endpoint or one missing from
    // a side the edge is present on, and each side must stay simple
    std::set<std::pair<int, int>> leftPairs, rightPairs;
    for (const auto& e : es) {
        if (e.removed)
            continue;
        const ResVertex& u = vs[e.src];
        const ResVertex& v = vs[e.dst];
        if (u.removed || v.removed)
            return failure(ComposeFailure::TransientElement,
                           "edge attached to an element that exists only in the intermediate "
                           "graph");
        std::pair<int, int> key = std::minmax(e.src, e.dst);
        if (presentInLeft(e.m)) {
            if (!presentInLeft(u.m) || !presentInLeft(v.m))
                return failure(ComposeFailure::TransientElement,
                               "pre-existing edge requires an endpoint created by the first "
                               "rule");
            if (!leftPairs.insert(key).second)
                return failure(ComposeFailure::ParallelEdge, "parallel edge on the left side");
        }
        if (presentInRight(e.m)) {
            if (!presentInRight(u.m) || !presentInRight(v.m))
                return failure(ComposeFailure::TransientElement,
                               "created edge requires an endpoint deleted by the second rule");
            if (!rightPairs.insert(key).second)
                return failure(ComposeFailure::ParallelEdge, "parallel edge on the right side");
        }
    }

    // assemble, renumbering the survivors
    RuleBuilder builder;
    std::vector<int> newId(vs.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].removed)
            continue;
        newId[i] = next++;
        builder.addVertex(newId[i], vs[i].m, vs[i].left, vs[i].right);
    }
    for (const auto& e : es) {
        if (e.removed)
            continue;
        builder.addEdge(newId[e.src], newId[e.dst], e.m, e.left, e.right);
    }
    std::string name;
    if (p1.name().empty())
        name = p2.name();
    else if (p2.name().empty())
        name = p1.name();
    else
        name = p1.name() + " . " + p2.name();
    return ComposeResult{builder.build(std::move(name)), std::nullopt, ""};
}

// ---------------------------------------------------------------------------
// overlap enumeration

namespace {

// Pattern graph over a subset of one side's components, with bookkeeping to
// translate matches back to core elements.
struct SidePattern {
    GraphPtr graph;
    std::vector<int> coreOfVertex; // pattern vertex -> core vertex
    std::vector<int> coreOfEdge;   // pattern edge -> core edge
};

SidePattern buildSidePattern(const Rule& p, bool leftSide, const std::vector<char>& pick,
                             const std::vector<int>& componentOfViewVertex) {
    const Graph& view = leftSide ? p.left() : p.right();
    SidePattern out;
    GraphBuilder b;
    for (int v = 0; v < view.numVertices(); ++v) {
        if (!pick[componentOfViewVertex[v]])
            continue;
        b.addVertex(v, view.vertexLabel(v));
        out.coreOfVertex.push_back(leftSide ? p.coreOfLeftVertex(v) : p.coreOfRightVertex(v));
    }
    for (int e = 0; e < view.numEdges(); ++e) {
        const auto& edge = view.edge(e);
        if (!pick[componentOfViewVertex[edge.src]])
            continue;
        b.addEdge(edge.src, edge.dst, edge.label);
        out.coreOfEdge.push_back(leftSide ? p.coreOfLeftEdge(e) : p.coreOfRightEdge(e));
    }
    out.graph = b.build();
    return out;
}

std::vector<int> componentIndex(const Graph& g, int& count) {
    std::vector<int> comp(g.numVertices(), -1);
    count = 0;
    for (int v = 0; v < g.numVertices(); ++v) {
        if (comp[v] >= 0)
            continue;
        std::vector<int> stack{v};
        comp[v] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.incident(u)) {
                (void)e;
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

// Embedding-style overlaps: chosen components of the pattern side fully and
// jointly embedded into the host side. patternIsL2 selects the direction:
// p2's left side into p1's right side, or the reverse.
bool emitEmbeddingOverlaps(const Rule& p1, const Rule& p2, bool patternIsL2, bool partial,
                           const OverlapVisitor& visit) {
    const Rule& patternRule = patternIsL2 ? p2 : p1;
    bool patternLeftSide = patternIsL2;
    const Graph& patternView = patternLeftSide ? patternRule.left() : patternRule.right();
    const Graph& hostView = patternIsL2 ? p1.right() : p2.left();

    int numComps = 0;
    std::vector<int> compOf = componentIndex(patternView, numComps);

    std::vector<std::vector<char>> picks;
    if (!partial) {
        picks.push_back(std::vector<char>(std::max(numComps, 1), 1));
    } else {
        for (unsigned mask = 1; mask < (1u << numComps); ++mask) {
            std::vector<char> pick(numComps, 0);
            for (int c = 0; c < numComps; ++c)
                pick[c] = static_cast<char>((mask >> c) & 1u);
            picks.push_back(std::move(pick));
        }
    }

    for (const auto& pick : picks) {
        SidePattern pat = buildSidePattern(patternRule, patternLeftSide, pick, compOf);
        bool keepGoing = enumerateMorphisms(
            *pat.graph, hostView, MorphismOptions{}, [&](const Morphism& m) {
                Overlap o;
                for (int v = 0; v < pat.graph->numVertices(); ++v) {
                    int hostCore = patternIsL2 ? p1.coreOfRightVertex(m.vertexMap[v])
                                               : p2.coreOfLeftVertex(m.vertexMap[v]);
                    int patCore = pat.coreOfVertex[v];
                    if (patternIsL2)
                        o.vertexPairs.emplace_back(hostCore, patCore);
                    else
                        o.vertexPairs.emplace_back(patCore, hostCore);
                }
                auto em = m.edgeMap();
                for (int e = 0; e < pat.graph->numEdges(); ++e) {
                    int hostCore = patternIsL2 ? p1.coreOfRightEdge(em[e])
                                               : p2.coreOfLeftEdge(em[e]);
                    int patCore = pat.coreOfEdge[e];
                    if (patternIsL2)
                        o.edgePairs.emplace_back(hostCore, patCore);
                    else
                        o.edgePairs.emplace_back(patCore, hostCore);
                }
                return visit(o);
            });
        if (!keepGoing)
            return false;
    }
    return true;
}

// All nonempty common subgraphs of R1 and L2, as partial injective vertex
// correspondences. An edge present on both sides between paired vertices is
// identified when its labels agree, and prunes the branch when they differ:
// leaving such an edge unpaired could only ever yield a parallel-edge
// failure in the composition.
struct CommonEnumerator {
    const Rule& p1;
    const Rule& p2;
    const Config& config;
    const OverlapVisitor& visit;
    const Graph& r1;
    const Graph& l2;
    std::vector<int> assign; // r1 view vertex -> l2 view vertex or -1
    std::vector<char> usedL2;
    int assigned = 0;
    bool stopped = false;

    CommonEnumerator(const Rule& a, const Rule& b, const Config& cfg, const OverlapVisitor& v)
        : p1(a), p2(b), config(cfg), visit(v), r1(a.right()), l2(b.left()),
          assign(r1.numVertices(), -1), usedL2(l2.numVertices(), 0) {}

    bool edgesCompatible(int v1, int v2) const {
        for (const auto& [w1, e1] : r1.incident(v1)) {
            if (assign[w1] < 0)
                continue;
            int e2 = l2.edgeIndex(v2, assign[w1]);
            if (e2 >= 0 && r1.edge(e1).label != l2.edge(e2).label)
                return false;
        }
        return true;
    }

    bool overlapConnected(const Overlap& o) const {
        if (o.vertexPairs.size() <= 1)
            return true;
        std::map<int, std::vector<int>> coreAdj;
        for (const auto& [e1, e2] : o.edgePairs) {
            (void)e2;
            const auto& edge = p1.edge(e1);
            coreAdj[edge.src].push_back(edge.dst);
            coreAdj[edge.dst].push_back(edge.src);
        }
        std::set<int> seen;
        std::vector<int> stack{o.vertexPairs[0].first};
        seen.insert(o.vertexPairs[0].first);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto it = coreAdj.find(v);
            if (it == coreAdj.end())
                continue;
            for (int w : it->second)
                if (seen.insert(w).second)
                    stack.push_back(w);
        }
        return seen.size() == o.vertexPairs.size();
    }

    void emit() {
        Overlap o;
        for (int v1 = 0; v1 < r1.numVertices(); ++v1) {
            if (assign[v1] < 0)
                continue;
            o.vertexPairs.emplace_back(p1.coreOfRightVertex(v1),
                                       p2.coreOfLeftVertex(assign[v1]));
        }
        if (o.vertexPairs.empty())
            return;
        for (int e1 = 0; e1 < r1.numEdges(); ++e1) {
            const auto& edge = r1.edge(e1);
            if (assign[edge.src] < 0 || assign[edge.dst] < 0)
                continue;
            int e2 = l2.edgeIndex(assign[edge.src], assign[edge.dst]);
            if (e2 >= 0)
                o.edgePairs.emplace_back(p1.coreOfRightEdge(e1), p2.coreOfLeftEdge(e2));
        }
        if (static_cast<int>(o.vertexPairs.size() + o.edgePairs.size())
            > config.commonOverlapCap)
            return;
        if (config.commonConnected && !overlapConnected(o))
            return;
        if (!visit(o))
            stopped = true;
    }

    void recurse(int v1) {
        if (stopped)
            return;
        if (v1 == r1.numVertices()) {
            emit();
            return;
        }
        if (assigned < config.commonOverlapCap) {
            for (int v2 = 0; v2 < l2.numVertices(); ++v2) {
                if (usedL2[v2] || r1.vertexLabel(v1) != l2.vertexLabel(v2))
                    continue;
                assign[v1] = v2;
                if (edgesCompatible(v1, v2)) {
                    usedL2[v2] = 1;
                    ++assigned;
                    recurse(v1 + 1);
                    --assigned;
                    usedL2[v2] = 0;
                }
                assign[v1] = -1;
                if (stopped)
                    return;
            }
        }
        recurse(v1 + 1); // leave v1 unmatched
    }
};

} // namespace

void enumerateOverlaps(const Rule& p1, const Rule& p2, RcOperator op, const Config& config,
                       const OverlapVisitor& visit) {
    switch (op) {
    case RcOperator::Parallel:
        visit(Overlap{});
        return;
    case RcOperator::SuperFull:
        emitEmbeddingOverlaps(p1, p2, true, false, visit);
        return;
    case RcOperator::Super:
        emitEmbeddingOverlaps(p1, p2, true, true, visit);
        return;
    case RcOperator::SubFull:
        emitEmbeddingOverlaps(p1, p2, false, false, visit);
        return;
    case RcOperator::Sub:
        emitEmbeddingOverlaps(p1, p2, false, true, visit);
        return;
    case RcOperator::Common: {
        CommonEnumerator e(p1, p2, config, visit);
        e.recurse(0);
        return;
    }
    }
}

// ---------------------------------------------------------------------------
// special rules and expressions

RulePtr makeBindRule(const GraphPtr& g) {
    RuleBuilder b;
    for (int v = 0; v < g->numVertices(); ++v)
        b.addVertex(v, Membership::RightOnly, "", g->vertexLabel(v));
    for (const auto& e : g->edges())
        b.addEdge(e.src, e.dst, Membership::RightOnly, "", e.label);
    return b.build(g->name().empty() ? "" : "bind(" + g->name() + ")");
}

RulePtr makeUnbindRule(const GraphPtr& g) {
    RuleBuilder b;
    for (int v = 0; v < g->numVertices(); ++v)
        b.addVertex(v, Membership::LeftOnly, g->vertexLabel(v), "");
    for (const auto& e : g->edges())
        b.addEdge(e.src, e.dst, Membership::LeftOnly, e.label, "");
    return b.build(g->name().empty() ? "" : "unbind(" + g->name() + ")");
}

RulePtr makeIdRule(const GraphPtr& g) {
    RuleBuilder b;
    for (int v = 0; v < g->numVertices(); ++v)
        b.addVertex(v, Membership::Context, g->vertexLabel(v), g->vertexLabel(v));
    for (const auto& e : g->edges())
        b.addEdge(e.src, e.dst, Membership::Context, e.label, e.label);
    return b.build(g->name().empty() ? "" : "id(" + g->name() + ")");
}

namespace {

RcExpressionPtr makeExp(RcExpression e) {
    return std::make_shared<const RcExpression>(std::move(e));
}

} // namespace

RcExpressionPtr rcRules(std::vector<RulePtr> rules) {
    RcExpression e;
    e.kind = RcExpression::Kind::Rules;
    e.rules = std::move(rules);
    return makeExp(std::move(e));
}

RcExpressionPtr rcBind(std::vector<GraphPtr> graphs) {
    RcExpression e;
    e.kind = RcExpression::Kind::Bind;
    e.graphs = std::move(graphs);
    return makeExp(std::move(e));
}

RcExpressionPtr rcUnbind(std::vector<GraphPtr> graphs) {
    RcExpression e;
    e.kind = RcExpression::Kind::Unbind;
    e.graphs = std::move(graphs);
    return makeExp(std::move(e));
}

RcExpressionPtr rcId(std::vector<GraphPtr> graphs) {
    RcExpression e;
    e.kind = RcExpression::Kind::Id;
    e.graphs = std::move(graphs);
    return makeExp(std::move(e));
}

RcExpressionPtr rcBinary(RcOperator op, RcExpressionPtr lhs, RcExpressionPtr rhs) {
    RcExpression e;
    e.kind = RcExpression::Kind::Binary;
    e.op = op;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    return makeExp(std::move(e));
}

RcEvaluator::RcEvaluator(std::vector<RulePtr> knownRules, Config config)
    : knownRules_(std::move(knownRules)), config_(config) {}

void RcEvaluator::addResult(std::vector<RulePtr>& out, RulePtr r) const {
    for (const auto& known : knownRules_) {
        if (ruleIsomorphic(*known, *r)) {
            r = known;
            break;
        }
    }
    for (const auto& existing : out)
        if (ruleIsomorphic(*existing, *r))
            return;
    out.push_back(std::move(r));
}

std::vector<RulePtr> RcEvaluator::eval(const RcExpression& exp) {
    switch (exp.kind) {
    case RcExpression::Kind::Rules:
        return exp.rules;
    case RcExpression::Kind::Bind: {
        std::vector<RulePtr> out;
        for (const auto& g : exp.graphs)
            out.push_back(makeBindRule(g));
        return out;
    }
    case RcExpression::Kind::Unbind: {
        std::vector<RulePtr> out;
        for (const auto& g : exp.graphs)
            out.push_back(makeUnbindRule(g));
        return out;
    }
    case RcExpression::Kind::Id: {
        std::vector<RulePtr> out;
        for (const auto& g : exp.graphs)
            out.push_back(makeIdRule(g));
        return out;
    }
    case RcExpression::Kind::Binary:
        break;
    }
    std::vector<RulePtr> lhs = eval(*exp.lhs);
    std::vector<RulePtr> rhs = eval(*exp.rhs);
    std::vector<RulePtr> out;
    for (const auto& p1 : lhs) {
        for (const auto& p2 : rhs) {
            enumerateOverlaps(*p1, *p2, exp.op, config_, [&](const Overlap& o) {
                ComposeResult res = composeOverOverlap(*p1, *p2, o);
                if (res.rule)
                    addResult(out, res.rule);
                return true;
            });
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// expression parsing

namespace {

struct RcLexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    struct Token {
        enum Kind { Ident, String, Op, LParen, RParen, LBracket, RBracket, Comma, End } kind;
        std::string text; // identifier, string content, or operator body
        int line = 1, col = 1;
    };

    explicit RcLexer(std::string_view t) : text(t) {}

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skipSpace() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token next() {
        skipSpace();
        Token t;
        t.line = line;
        t.col = col;
        if (pos >= text.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = text[pos];
        switch (c) {
        case '(':
            advance();
            t.kind = Token::LParen;
            return t;
        case ')':
            advance();
            t.kind = Token::RParen;
            return t;
        case '[':
            advance();
            t.kind = Token::LBracket;
            return t;
        case ']':
            advance();
            t.kind = Token::RBracket;
            return t;
        case ',':
            advance();
            t.kind = Token::Comma;
            return t;
        case '*': {
            advance();
            std::string body;
            while (pos < text.size() && text[pos] != '*') {
                body.push_back(text[pos]);
                advance();
            }
            if (pos >= text.size())
                throw ParseError("unterminated operator", t.line, t.col);
            advance(); // closing '*'
            t.kind = Token::Op;
            t.text = std::move(body);
            return t;
        }
        case '"': {
            advance();
            std::string s;
            while (pos < text.size() && text[pos] != '"') {
                char d = text[pos];
                if (d == '\\' && pos + 1 < text.size()) {
                    advance();
                    d = text[pos];
                }
                s.push_back(d);
                advance();
            }
            if (pos >= text.size())
                throw ParseError("unterminated string", t.line, t.col);
            advance();
            t.kind = Token::String;
            t.text = std::move(s);
            return t;
        }
        default:
            break;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos < text.size()
                   && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                s.push_back(text[pos]);
                advance();
            }
            t.kind = Token::Ident;
            t.text = std::move(s);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
};

RcOperator parseOperatorBody(const std::string& body, int line, int col) {
    std::string s;
    for (char c : body)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "rcparallel")
        return RcOperator::Parallel;
    if (s == "rcsuper")
        return RcOperator::Super;
    if (s == "rcsuper(allowpartial=false)")
        return RcOperator::SuperFull;
    if (s == "rcsub")
        return RcOperator::Sub;
    if (s == "rcsub(allowpartial=false)")
        return RcOperator::SubFull;
    if (s == "rccommon")
        return RcOperator::Common;
    throw ParseError("unknown composition operator '*" + body + "*'", line, col);
}

struct RcParser {
    RcLexer lexer;
    RcLexer::Token tok;
    const RcResolver& resolver;

    RcParser(std::string_view text, const RcResolver& r) : lexer(text), resolver(r) {
        tok = lexer.next();
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok.line, tok.col); }

    void expect(RcLexer::Token::Kind kind, const char* what) {
        if (tok.kind != kind)
            fail(std::string("expected ") + what);
        tok = lexer.next();
    }

    std::vector<std::string> parseRefList() {
        std::vector<std::string> refs;
        while (true) {
            if (tok.kind != RcLexer::Token::Ident && tok.kind != RcLexer::Token::String)
                fail("expected a name");
            refs.push_back(tok.text);
            tok = lexer.next();
            if (tok.kind != RcLexer::Token::Comma)
                return refs;
            tok = lexer.next();
        }
    }

    std::vector<GraphPtr> resolveGraphs(const std::vector<std::string>& refs, int line, int col) {
        std::vector<GraphPtr> out;
        for (const auto& r : refs) {
            auto gs = resolver.graphs ? resolver.graphs(r) : std::vector<GraphPtr>{};
            if (gs.empty())
                throw ParseError("unknown graph '" + r + "'", line, col);
            out.insert(out.end(), gs.begin(), gs.end());
        }
        return out;
    }

    RcExpressionPtr parseTerm() {
        int line = tok.line, col = tok.col;
        if (tok.kind == RcLexer::Token::LParen) {
            tok = lexer.next();
            RcExpressionPtr e = parseExpression();
            expect(RcLexer::Token::RParen, "')'");
            return e;
        }
        if (tok.kind == RcLexer::Token::LBracket) {
            tok = lexer.next();
            std::vector<std::string> refs = parseRefList();
            expect(RcLexer::Token::RBracket, "']'");
            std::vector<RulePtr> rules;
            for (const auto& r : refs) {
                auto rs = resolver.rules ? resolver.rules(r) : std::vector<RulePtr>{};
                if (rs.empty())
                    throw ParseError("unknown rule '" + r + "'", line, col);
                rules.insert(rules.end(), rs.begin(), rs.end());
            }
            return rcRules(std::move(rules));
        }
        if (tok.kind == RcLexer::Token::Ident
            && (tok.text == "rcBind" || tok.text == "rcUnbind" || tok.text == "rcId")) {
            std::string fn = tok.text;
            tok = lexer.next();
            expect(RcLexer::Token::LParen, "'('");
            std::vector<std::string> refs = parseRefList();
            expect(RcLexer::Token::RParen, "')'");
            std::vector<GraphPtr> graphs = resolveGraphs(refs, line, col);
            if (fn == "rcBind")
                return rcBind(std::move(graphs));
            if (fn == "rcUnbind")
                return rcUnbind(std::move(graphs));
            return rcId(std::move(graphs));
        }
        if (tok.kind == RcLexer::Token::Ident || tok.kind == RcLexer::Token::String) {
            std::string name = tok.text;
            tok = lexer.next();
            auto rs = resolver.rules ? resolver.rules(name) : std::vector<RulePtr>{};
            if (rs.empty())
                throw ParseError("unknown rule '" + name + "'", line, col);
            return rcRules(std::move(rs));
        }
        fail("expected an expression");
    }

    RcExpressionPtr parseExpression() {
        RcExpressionPtr e = parseTerm();
        while (tok.kind == RcLexer::Token::Op) {
            RcOperator op = parseOperatorBody(tok.text, tok.line, tok.col);
            tok = lexer.next();
            RcExpressionPtr rhs = parseTerm();
            e = rcBinary(op, std::move(e), std::move(rhs));
        }
        return e;
    }

    RcExpressionPtr parse() {
        RcExpressionPtr e = parseExpression();
        if (tok.kind != RcLexer::Token::End)
            fail("trailing content after expression");
        return e;
    }
};

} // namespace

RcExpressionPtr parseRcExpression(std::string_view text, const RcResolver& resolver) {
    RcParser p(text, resolver);
    return p.parse();
}

} // namespace grammod
