#include "grammod/rule.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "grammod/morphism.hpp"

namespace grammod {

namespace {

std::string edgeDesc(int extSrc, int extDst) {
    return "edge " + std::to_string(extSrc) + " -- " + std::to_string(extDst);
}

} // namespace

bool Rule::changesLabels() const {
    for (const auto& v : vertices_)
        if (v.membership == Membership::Context && v.leftLabel != v.rightLabel)
            return true;
    for (const auto& e : edges_)
        if (e.membership == Membership::Context && e.leftLabel != e.rightLabel)
            return true;
    return false;
}

void Rule::buildViews() {
    GraphBuilder lb, rb, kb;
    leftVOfCore_.assign(vertices_.size(), -1);
    rightVOfCore_.assign(vertices_.size(), -1);
    leftEOfCore_.assign(edges_.size(), -1);
    rightEOfCore_.assign(edges_.size(), -1);
    for (int c = 0; c < numVertices(); ++c) {
        const auto& v = vertices_[c];
        if (presentInLeft(v.membership)) {
            leftVOfCore_[c] = static_cast<int>(coreOfLeftV_.size());
            coreOfLeftV_.push_back(c);
            lb.addVertex(v.externalId, v.leftLabel);
        }
        if (presentInRight(v.membership)) {
            rightVOfCore_[c] = static_cast<int>(coreOfRightV_.size());
            coreOfRightV_.push_back(c);
            rb.addVertex(v.externalId, v.rightLabel);
        }
        if (v.membership == Membership::Context)
            kb.addVertex(v.externalId, v.leftLabel);
    }
    for (int c = 0; c < numEdges(); ++c) {
        const auto& e = edges_[c];
        int extSrc = vertices_[e.src].externalId;
        int extDst = vertices_[e.dst].externalId;
        if (presentInLeft(e.membership)) {
            leftEOfCore_[c] = static_cast<int>(coreOfLeftE_.size());
            coreOfLeftE_.push_back(c);
            lb.addEdge(extSrc, extDst, e.leftLabel);
        }
        if (presentInRight(e.membership)) {
            rightEOfCore_[c] = static_cast<int>(coreOfRightE_.size());
            coreOfRightE_.push_back(c);
            rb.addEdge(extSrc, extDst, e.rightLabel);
        }
        if (e.membership == Membership::Context)
            kb.addEdge(extSrc, extDst, e.leftLabel);
    }
    left_ = lb.build(name_);
    right_ = rb.build(name_);
    context_ = kb.build(name_);
}

int RuleBuilder::coreOf(int externalId) const {
    for (int c = 0; c < static_cast<int>(vertices_.size()); ++c)
        if (vertices_[c].externalId == externalId)
            return c;
    return -1;
}

void RuleBuilder::addVertex(int externalId, Membership m, std::string leftLabel,
                            std::string rightLabel) {
    if (built_)
        throw std::logic_error("RuleBuilder used after build()");
    std::string desc = "vertex " + std::to_string(externalId);
    if (coreOf(externalId) >= 0)
        throw std::invalid_argument("duplicate " + desc);
    if (presentInLeft(m) && leftLabel.empty())
        throw std::invalid_argument(desc + ": missing left label");
    if (presentInRight(m) && rightLabel.empty())
        throw std::invalid_argument(desc + ": missing right label");
    if (!presentInLeft(m) && !leftLabel.empty())
        throw std::invalid_argument(desc + ": left label on a right-only element");
    if (!presentInRight(m) && !rightLabel.empty())
        throw std::invalid_argument(desc + ": right label on a left-only element");
    vertices_.push_back(Rule::Vertex{externalId, m, std::move(leftLabel), std::move(rightLabel)});
}

void RuleBuilder::addEdge(int externalSrc, int externalDst, Membership m, std::string leftLabel,
                          std::string rightLabel) {
    if (built_)
        throw std::logic_error("RuleBuilder used after build()");
    std::string desc = edgeDesc(externalSrc, externalDst);
    if (externalSrc == externalDst)
        throw std::invalid_argument("loop " + desc);
    if (presentInLeft(m) && leftLabel.empty())
        throw std::invalid_argument(desc + ": missing left label");
    if (presentInRight(m) && rightLabel.empty())
        throw std::invalid_argument(desc + ": missing right label");
    if (!presentInLeft(m) && !leftLabel.empty())
        throw std::invalid_argument(desc + ": left label on a right-only element");
    if (!presentInRight(m) && !rightLabel.empty())
        throw std::invalid_argument(desc + ": right label on a left-only element");
    edges_.push_back(PendingEdge{externalSrc, externalDst, m, std::move(leftLabel),
                                 std::move(rightLabel)});
}

RulePtr RuleBuilder::build(std::string name) {
    if (built_)
        throw std::logic_error("RuleBuilder used after build()");
    built_ = true;
    Rule rule;
    rule.name_ = std::move(name);
    rule.vertices_ = std::move(vertices_);

    std::map<std::pair<int, int>, int> leftPairs, rightPairs;
    for (const auto& pe : edges_) {
        std::string desc = edgeDesc(pe.extSrc, pe.extDst);
        int src = -1, dst = -1;
        for (int c = 0; c < static_cast<int>(rule.vertices_.size()); ++c) {
            if (rule.vertices_[c].externalId == pe.extSrc)
                src = c;
            if (rule.vertices_[c].externalId == pe.extDst)
                dst = c;
        }
        if (src < 0)
            throw std::invalid_argument(desc + ": endpoint " + std::to_string(pe.extSrc)
                                        + " is not a declared vertex");
        if (dst < 0)
            throw std::invalid_argument(desc + ": endpoint " + std::to_string(pe.extDst)
                                        + " is not a declared vertex");
        if (presentInLeft(pe.membership)
            && !(presentInLeft(rule.vertices_[src].membership)
                 && presentInLeft(rule.vertices_[dst].membership)))
            throw std::invalid_argument(desc + ": endpoint not present on the left side");
        if (presentInRight(pe.membership)
            && !(presentInRight(rule.vertices_[src].membership)
                 && presentInRight(rule.vertices_[dst].membership)))
            throw std::invalid_argument(desc + ": endpoint not present on the right side");
        std::pair<int, int> pk = std::minmax(src, dst);
        if (presentInLeft(pe.membership) && !leftPairs.emplace(pk, 1).second)
            throw std::invalid_argument("parallel " + desc + " on the left side");
        if (presentInRight(pe.membership) && !rightPairs.emplace(pk, 1).second)
            throw std::invalid_argument("parallel " + desc + " on the right side");
        rule.edges_.push_back(Rule::Edge{std::min(src, dst), std::max(src, dst), pe.membership,
                                         pe.leftLabel, pe.rightLabel});
    }
    rule.buildViews();
    return std::make_shared<const Rule>(std::move(rule));
}

RulePtr invertRule(const Rule& r) {
    RuleBuilder b;
    auto flip = [](Membership m) {
        switch (m) {
        case Membership::LeftOnly:
            return Membership::RightOnly;
        case Membership::RightOnly:
            return Membership::LeftOnly;
        case Membership::Context:
            return Membership::Context;
        }
        return Membership::Context;
    };
    for (const auto& v : r.vertices())
        b.addVertex(v.externalId, flip(v.membership), v.rightLabel, v.leftLabel);
    for (const auto& e : r.coreEdges())
        b.addEdge(r.vertex(e.src).externalId, r.vertex(e.dst).externalId, flip(e.membership),
                  e.rightLabel, e.leftLabel);
    return b.build(r.name());
}

namespace {

std::size_t countRuleMorphisms(const Rule& p1, const Rule& p2, std::size_t maxNumMatches,
                               bool iso) {
    if (maxNumMatches == 0)
        return 0;
    if (iso) {
        auto counts = [](const Rule& p) {
            int lv = 0, kv = 0, rv = 0, le = 0, ke = 0, re = 0;
            for (const auto& v : p.vertices()) {
                lv += presentInLeft(v.membership);
                rv += presentInRight(v.membership);
                kv += v.membership == Membership::Context;
            }
            for (const auto& e : p.coreEdges()) {
                le += presentInLeft(e.membership);
                re += presentInRight(e.membership);
                ke += e.membership == Membership::Context;
            }
            return std::array<int, 6>{lv, kv, rv, le, ke, re};
        };
        if (counts(p1) != counts(p2))
            return 0;
    }

    const Graph& L1 = p1.left();
    const Graph& L2 = p2.left();
    const Graph& R1 = p1.right();
    const Graph& R2 = p2.right();

    auto leftVertexCompat = [&](int v1, int v2) {
        const auto& a = p1.vertex(p1.coreOfLeftVertex(v1));
        const auto& b = p2.vertex(p2.coreOfLeftVertex(v2));
        if (a.leftLabel != b.leftLabel)
            return false;
        bool k1 = a.membership == Membership::Context;
        bool k2 = b.membership == Membership::Context;
        if (k1 && (!k2 || a.rightLabel != b.rightLabel))
            return false;
        if (iso && k2 && !k1)
            return false;
        return true;
    };
    auto leftEdgeCompat = [&](int e1, int e2) {
        const auto& a = p1.edge(p1.coreOfLeftEdge(e1));
        const auto& b = p2.edge(p2.coreOfLeftEdge(e2));
        if (a.leftLabel != b.leftLabel)
            return false;
        bool k1 = a.membership == Membership::Context;
        bool k2 = b.membership == Membership::Context;
        if (k1 && (!k2 || a.rightLabel != b.rightLabel))
            return false;
        if (iso && k2 && !k1)
            return false;
        return true;
    };
    auto rightVertexCompat = [&](int v1, int v2) {
        const auto& a = p1.vertex(p1.coreOfRightVertex(v1));
        const auto& b = p2.vertex(p2.coreOfRightVertex(v2));
        if (a.rightLabel != b.rightLabel)
            return false;
        bool k1 = a.membership == Membership::Context;
        bool k2 = b.membership == Membership::Context;
        if (k1 && !k2)
            return false; // left labels were already matched through mL
        if (iso && k2 && !k1)
            return false;
        return true;
    };
    auto rightEdgeCompat = [&](int e1, int e2) {
        const auto& a = p1.edge(p1.coreOfRightEdge(e1));
        const auto& b = p2.edge(p2.coreOfRightEdge(e2));
        if (a.rightLabel != b.rightLabel)
            return false;
        bool k1 = a.membership == Membership::Context;
        bool k2 = b.membership == Membership::Context;
        if (k1 && (!k2 || a.leftLabel != b.leftLabel))
            return false;
        if (iso && k2 && !k1)
            return false;
        return true;
    };

    MorphismOptions optsL;
    optsL.induced = iso;
    optsL.exactDegrees = iso;
    optsL.vertexCompat = leftVertexCompat;
    optsL.edgeCompat = leftEdgeCompat;

    std::size_t count = 0;
    enumerateMorphisms(L1, L2, optsL, [&](const Morphism& mL) {
        MorphismOptions optsR;
        optsR.induced = iso;
        optsR.exactDegrees = iso;
        optsR.vertexCompat = rightVertexCompat;
        optsR.edgeCompat = rightEdgeCompat;
        // mK is determined by mL on K; seed the right-side search with it.
        for (int c = 0; c < p1.numVertices(); ++c) {
            if (p1.vertex(c).membership != Membership::Context)
                continue;
            int imageCore = p2.coreOfLeftVertex(mL.vertexMap[p1.leftVertexOfCore(c)]);
            optsR.seed.emplace_back(p1.rightVertexOfCore(c), p2.rightVertexOfCore(imageCore));
        }
        enumerateMorphisms(R1, R2, optsR, [&](const Morphism&) {
            ++count;
            return count < maxNumMatches;
        });
        return count < maxNumMatches;
    });
    return count;
}

} // namespace

std::size_t ruleMonomorphisms(const Rule& p1, const Rule& p2, std::size_t maxNumMatches) {
    return countRuleMorphisms(p1, p2, maxNumMatches, false);
}

std::size_t ruleIsomorphisms(const Rule& p1, const Rule& p2, std::size_t maxNumMatches) {
    return countRuleMorphisms(p1, p2, maxNumMatches, true);
}

bool ruleIsomorphic(const Rule& p1, const Rule& p2) {
    return ruleIsomorphisms(p1, p2, 1) == 1;
}

} // namespace grammod
