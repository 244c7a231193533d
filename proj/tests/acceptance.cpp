// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion runs standalone with its own fixtures and, where
// the check is oracle-based, an independent implementation of the checked
// computation (see oracles.hpp and the sequential executor below).

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "grammod/chem.hpp"
#include "grammod/derivation.hpp"
#include "grammod/dg.hpp"
#include "grammod/gml.hpp"
#include "grammod/morphism.hpp"
#include "grammod/rulecomp.hpp"
#include "grammod/smiles.hpp"
#include "grammod/strategy.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace grammod;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond)
        throw Failure(msg);
}

template <typename T>
void requireEq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream ss;
        ss << what << ": got " << got << ", want " << want;
        throw Failure(ss.str());
    }
}

// ---------------------------------------------------------------------------
// criterion 1: the four ethanols

void criterion1() {
    std::vector<GraphPtr> ethanols = {
        parseSMILES("CCO", "Ethanol1"),
        parseGraphDFS("[C]([H])([H])([H])[C]([H])([H])[O][H]", "Ethanol2"),
        parseGraphDFS("CCO", "Ethanol3"),
        parseGraphGML(fixtures::ethanolGML, "Ethanol4"),
    };
    for (const auto& a : ethanols) {
        for (const auto& b : ethanols) {
            require(countIsomorphisms(*a, *b, 1337) >= 1,
                    a->name() + " vs " + b->name() + ": no isomorphism");
            requireEq<std::size_t>(countIsomorphisms(*a, *b), 1,
                                   a->name() + " vs " + b->name() + " with the default cap");
        }
    }
}

// ---------------------------------------------------------------------------
// criterion 2: morphism counts against the all-injections oracle

void criterion2() {
    std::mt19937 rng(987654321);
    std::vector<std::string> vlabels{"A", "B", "C"};
    std::vector<std::string> elabels{"-", "="};
    for (int i = 0; i < 50; ++i) {
        GraphPtr pattern = oracles::randomGraph(rng, 4, vlabels, elabels);
        GraphPtr host = oracles::randomGraph(rng, 6, vlabels, elabels);
        std::size_t cap = 1000000;
        requireEq(countMonomorphisms(*pattern, *host, cap),
                  oracles::bruteCountMorphisms(*pattern, *host, false),
                  "monomorphism count, pair " + std::to_string(i));
        requireEq(countIsomorphisms(*pattern, *host, cap),
                  oracles::bruteCountMorphisms(*pattern, *host, true),
                  "isomorphism count, pair " + std::to_string(i));
    }
}

// ---------------------------------------------------------------------------
// criterion 3: methyl counting

void criterion3() {
    GraphPtr methyl = parseSMILES("[CH3]");
    GraphPtr mol1 = parseSMILES("CC(C)CO");
    std::size_t automorphisms = countIsomorphisms(*methyl, *methyl, 1337);
    std::size_t monos = countMonomorphisms(*methyl, *mol1, 1337);
    requireEq<std::size_t>(automorphisms, 6, "|Aut(methyl)|");
    requireEq<std::size_t>(monos, 12, "methyl monomorphisms into CC(C)CO");
    requireEq<std::size_t>(monos / automorphisms, 2, "methyl group count");
}

// ---------------------------------------------------------------------------
// criterion 4: caffeine

void criterion4() {
    GraphPtr caffeine = parseSMILES("Cn1cnc2c1c(=O)n(c(=O)n2C)C");
    requireEq(caffeine->numVertices(), 24, "caffeine vertex count");
    requireEq(caffeine->vLabelCount("C"), 8, "caffeine C count");
    requireEq(caffeine->vLabelCount("N"), 4, "caffeine N count");
    requireEq(caffeine->vLabelCount("O"), 2, "caffeine O count");
    requireEq(caffeine->vLabelCount("H"), 10, "caffeine H count");
}

// ---------------------------------------------------------------------------
// criterion 5: the keto-enol derivation on acetaldehyde

void criterion5() {
    RulePtr rule = fixtures::ketoEnolCharged(); // the charged GML, verbatim
    GraphRegistry registry;
    GraphPtr acetaldehyde = fixtures::acetaldehyde();
    int hostClass = registry.registerGraph(acetaldehyde);
    std::vector<Derivation> found;
    enumerateDerivations(rule, {UniverseEntry{hostClass, acetaldehyde}}, {hostClass}, registry,
                         Config{}, [&](const Derivation& d) {
                             found.push_back(d);
                             return true;
                         });
    requireEq<std::size_t>(found.size(), 1, "derivation classes");
    requireEq<std::size_t>(found[0].headGraphs.size(), 2, "heads");
    bool proton = false;
    for (const auto& h : found[0].headGraphs)
        proton = proton || (h->numVertices() == 1 && h->vertexLabel(0) == "H+");
    require(proton, "no single-vertex H+ head");
}

// ---------------------------------------------------------------------------
// criterion 6: pushout-existence rejection

void criterion6() {
    RuleBuilder b;
    b.addVertex(1, Membership::Context, "A", "A");
    b.addVertex(2, Membership::Context, "A", "A");
    b.addEdge(1, 2, Membership::RightOnly, "", "-");
    RulePtr join = b.build("join");

    GraphRegistry registry;
    GraphPtr joined = fixtures::edgeGraph("A", "A", "-", "joined");
    int joinedClass = registry.registerGraph(joined);
    int onJoinedPair = 0;
    enumerateDerivations(join, {UniverseEntry{joinedClass, joined}}, {joinedClass}, registry,
                         Config{}, [&](const Derivation& d) {
                             // only the single-copy tails target the already
                             // joined pair
                             if (d.tailClasses == std::vector<int>{joinedClass})
                                 ++onJoinedPair;
                             return true;
                         });
    requireEq(onJoinedPair, 0, "derivations onto an already-joined pair");

    GraphPtr lone = fixtures::vertexGraph("A", "lone");
    int loneClass = registry.registerGraph(lone);
    int onUnjoined = 0;
    enumerateDerivations(join, {UniverseEntry{loneClass, lone}}, {loneClass}, registry,
                         Config{}, [&](const Derivation&) {
                             ++onUnjoined;
                             return true;
                         });
    require(onUnjoined >= 1, "no derivation joining two lone vertices");
}

// ---------------------------------------------------------------------------
// criterion 7: hyperedge re-validation over a strategy run

DerivationGraphEvaluator formoseRun(int iterations, long maxVertices) {
    std::vector<GraphPtr> inputs = {fixtures::formaldehyde(), fixtures::glycolaldehyde()};
    DerivationPredicate pred;
    pred.quant = DerivationPredicate::Quant::All;
    pred.side = DerivationPredicate::Side::Right;
    pred.atom = DerivationPredicate::Atom::NumVertices;
    pred.cmp = DerivationPredicate::Cmp::Le;
    pred.value = maxVertices;
    StrategyPtr rules = strat::rules(fixtures::formoseRules());
    StrategyPtr inner = iterations > 0 ? strat::repeat(rules, iterations) : strat::repeat(rules);
    StrategyPtr program =
        strat::sequence(strat::sequence(strat::addUniverse({inputs[0]}),
                                        strat::addSubset({inputs[1]})),
                        strat::rightPredicate(pred, inner));
    return DerivationGraphEvaluator(inputs, program);
}

void criterion7() {
    DerivationGraphEvaluator eval = formoseRun(3, 20);
    eval.calc();
    const DerivationGraph& dg = eval.dg();
    require(!dg.hyperedges.empty(), "the run recorded no derivations");
    int violations = 0;
    for (const auto& e : dg.hyperedges) {
        if (e.witnesses.empty()) {
            ++violations;
            continue;
        }
        const DerivationMatch& w = e.witnesses.front();
        // reconstruct the host and replay the derivation through the
        // independent oracle: injectivity, labels, adjacency, properness,
        // dangling, pushout existence, and at least one active tail at
        // record time are all checked there
        oracles::OracleHost host;
        int offset = 0;
        for (const auto& copy : w.copies) {
            host.copyClasses.push_back(copy.classId);
            host.copyGraphs.push_back(copy.graph.get());
            host.offsets.push_back(offset);
            offset += copy.graph->numVertices();
        }
        host.totalVertices = offset;
        const Graph& left = e.rule->left();
        std::vector<int> leftImage(left.numVertices(), -1);
        bool mapped = true;
        for (int v = 0; v < left.numVertices(); ++v) {
            int core = e.rule->coreOfLeftVertex(v);
            if (w.coreCopy[core] < 0) {
                mapped = false;
                break;
            }
            leftImage[v] = host.offsets[w.coreCopy[core]] + w.coreHostVertex[core];
        }
        oracles::DerivationKey key;
        if (!mapped
            || !oracles::oracleApply(*e.rule, host, leftImage, w.activeClasses,
                                     eval.registry(), key)
            || key.first != e.tails || key.second != e.heads)
            ++violations;
    }
    requireEq(violations, 0, "re-validation violations over "
                                 + std::to_string(dg.hyperedges.size()) + " hyperedges");
}

// ---------------------------------------------------------------------------
// criterion 8: composition soundness against sequential application

// One DPO application on a concrete host graph through a fixed left-view
// vertex map. Survivors keep the host's external ids; created vertices get
// fresh ids. Independent of composeOverOverlap (the code under test).
struct ConcreteResult {
    GraphPtr graph;
    std::map<int, int> comatch;                // core vertex -> result external id
    std::set<std::pair<int, int>> comatchEdges; // external-id pairs covered by R edges
};

std::optional<ConcreteResult> applyAt(const Rule& rule, const Graph& host,
                                      const std::vector<int>& leftImage) {
    const Graph& left = rule.left();
    for (int v = 0; v < left.numVertices(); ++v)
        if (host.vertexLabel(leftImage[v]) != left.vertexLabel(v))
            return std::nullopt;
    for (const auto& e : left.edges()) {
        const std::string* label = host.edgeLabel(leftImage[e.src], leftImage[e.dst]);
        if (!label || *label != e.label)
            return std::nullopt;
    }
    auto imageOfCore = [&](int core) { return leftImage[rule.leftVertexOfCore(core)]; };
    std::set<int> deletedVertices;
    std::set<std::pair<int, int>> leftEdgeImages, deletedEdges;
    for (int c = 0; c < rule.numVertices(); ++c)
        if (rule.vertex(c).membership == Membership::LeftOnly)
            deletedVertices.insert(imageOfCore(c));
    for (const auto& e : rule.coreEdges()) {
        if (!presentInLeft(e.membership))
            continue;
        int a = imageOfCore(e.src), b = imageOfCore(e.dst);
        std::pair<int, int> key = std::minmax(a, b);
        leftEdgeImages.insert(key);
        if (e.membership == Membership::LeftOnly)
            deletedEdges.insert(key);
    }
    for (const auto& e : host.edges()) { // dangling
        if (!deletedVertices.count(e.src) && !deletedVertices.count(e.dst))
            continue;
        if (!leftEdgeImages.count({e.src, e.dst}))
            return std::nullopt;
    }
    for (const auto& e : rule.coreEdges()) { // pushout existence
        if (e.membership != Membership::RightOnly)
            continue;
        if (rule.vertex(e.src).membership != Membership::Context
            || rule.vertex(e.dst).membership != Membership::Context)
            continue;
        int a = imageOfCore(e.src), b = imageOfCore(e.dst);
        std::pair<int, int> key = std::minmax(a, b);
        if (host.hasEdge(a, b) && !deletedEdges.count(key))
            return std::nullopt;
    }

    std::map<int, std::string> vertices; // external id -> label
    int maxExt = -1;
    for (int v = 0; v < host.numVertices(); ++v) {
        maxExt = std::max(maxExt, host.externalId(v));
        if (!deletedVertices.count(v))
            vertices[host.externalId(v)] = host.vertexLabel(v);
    }
    std::map<std::pair<int, int>, std::string> edges;
    for (const auto& e : host.edges()) {
        if (deletedVertices.count(e.src) || deletedVertices.count(e.dst))
            continue;
        std::pair<int, int> key = std::minmax(e.src, e.dst);
        if (deletedEdges.count(key))
            continue;
        std::pair<int, int> extKey =
            std::minmax(host.externalId(e.src), host.externalId(e.dst));
        edges[extKey] = e.label;
    }
    ConcreteResult out;
    int next = maxExt + 1;
    for (int c = 0; c < rule.numVertices(); ++c) {
        const auto& v = rule.vertex(c);
        if (v.membership == Membership::RightOnly) {
            vertices[next] = v.rightLabel;
            out.comatch[c] = next++;
        } else if (v.membership == Membership::Context) {
            int ext = host.externalId(imageOfCore(c));
            vertices[ext] = v.rightLabel;
            out.comatch[c] = ext;
        }
    }
    for (const auto& e : rule.coreEdges()) {
        if (!presentInRight(e.membership))
            continue;
        std::pair<int, int> extKey =
            std::minmax(out.comatch.at(e.src), out.comatch.at(e.dst));
        edges[extKey] = e.rightLabel;
        out.comatchEdges.insert(extKey);
    }
    GraphBuilder b;
    for (const auto& [id, label] : vertices)
        b.addVertex(id, label);
    for (const auto& [key, label] : edges)
        b.addEdge(key.first, key.second, label);
    out.graph = b.build();
    return out;
}

// Head multisets from applying p1 then p2 on the disjoint union of the tail
// copies, through matches whose intersection with p1's comatch is exactly
// the overlap, with every copy touched by the combined match.
std::set<std::vector<int>> sequentialHeads(const Rule& p1, const Rule& p2, const Overlap& o,
                                           const std::vector<GraphPtr>& tails,
                                           GraphRegistry& registry) {
    std::set<std::vector<int>> results;
    GraphPtr g0 = disjointUnion(tails);
    int totalG0 = g0->numVertices();
    std::vector<int> copyOf(totalG0);
    {
        int offset = 0, copy = 0;
        for (const auto& t : tails) {
            for (int v = 0; v < t->numVertices(); ++v)
                copyOf[offset + v] = copy;
            offset += t->numVertices();
            ++copy;
        }
    }

    enumerateMorphisms(p1.left(), *g0, MorphismOptions{}, [&](const Morphism& m1) {
        auto r1 = applyAt(p1, *g0, m1.vertexMap);
        if (!r1)
            return true;
        const Graph& h1 = *r1->graph;
        std::map<int, int> h1DenseOfExt;
        for (int v = 0; v < h1.numVertices(); ++v)
            h1DenseOfExt[h1.externalId(v)] = v;
        std::set<int> comatchExt;
        for (const auto& [core, ext] : r1->comatch)
            comatchExt.insert(ext);

        MorphismOptions opts;
        std::set<int> matchedL2Vertices;
        std::set<int> matchedL2Edges;
        bool seedable = true;
        for (const auto& [c1, c2] : o.vertexPairs) {
            matchedL2Vertices.insert(c2);
            auto it = r1->comatch.find(c1);
            if (it == r1->comatch.end()) {
                seedable = false;
                break;
            }
            opts.seed.emplace_back(p2.leftVertexOfCore(c2), h1DenseOfExt.at(it->second));
        }
        for (const auto& [e1, e2] : o.edgePairs) {
            (void)e1;
            matchedL2Edges.insert(e2);
        }
        if (!seedable)
            return true;

        enumerateMorphisms(p2.left(), h1, opts, [&](const Morphism& m2) {
            // the match intersection with the comatch must be exactly D
            for (int v = 0; v < p2.left().numVertices(); ++v) {
                if (matchedL2Vertices.count(p2.coreOfLeftVertex(v)))
                    continue;
                if (comatchExt.count(h1.externalId(m2.vertexMap[v])))
                    return true;
            }
            for (int e = 0; e < p2.left().numEdges(); ++e) {
                if (matchedL2Edges.count(p2.coreOfLeftEdge(e)))
                    continue;
                const auto& edge = p2.left().edge(e);
                std::pair<int, int> extKey =
                    std::minmax(h1.externalId(m2.vertexMap[edge.src]),
                                h1.externalId(m2.vertexMap[edge.dst]));
                if (r1->comatchEdges.count(extKey))
                    return true;
            }
            auto r2 = applyAt(p2, h1, m2.vertexMap);
            if (!r2)
                return true;
            // every tail copy must be touched by the combined match
            std::vector<char> covered(tails.size(), 0);
            for (int v = 0; v < p1.left().numVertices(); ++v)
                covered[copyOf[m1.vertexMap[v]]] = 1;
            for (int v = 0; v < p2.left().numVertices(); ++v) {
                int ext = h1.externalId(m2.vertexMap[v]);
                if (ext < totalG0)
                    covered[copyOf[ext]] = 1;
            }
            for (char c : covered)
                if (!c)
                    return true;
            std::vector<int> heads;
            for (const auto& head : connectedComponents(*r2->graph))
                heads.push_back(registry.registerGraph(head));
            std::sort(heads.begin(), heads.end());
            results.insert(std::move(heads));
            return true;
        });
        return true;
    });
    return results;
}

void criterion8() {
    std::vector<RulePtr> rules = fixtures::formoseRules();
    GraphRegistry registry;
    std::vector<GraphPtr> pool = {fixtures::formaldehyde(), fixtures::glycolaldehyde(),
                                  parseSMILES("OC=CO", "Enediol")};
    std::vector<int> poolClasses;
    for (const auto& g : pool)
        poolClasses.push_back(registry.registerGraph(g));

    // deterministically sample overlaps across rule pairs
    std::mt19937 rng(20250131);
    struct Sample {
        RulePtr p1, p2;
        Overlap overlap;
    };
    std::vector<Sample> samples;
    while (samples.size() < 30) {
        const RulePtr& p1 = rules[rng() % rules.size()];
        const RulePtr& p2 = rules[rng() % rules.size()];
        RcOperator op = rng() % 2 == 0 ? RcOperator::Super : RcOperator::Common;
        std::vector<Overlap> overlaps;
        enumerateOverlaps(*p1, *p2, op, Config{}, [&](const Overlap& o) {
            overlaps.push_back(o);
            return true;
        });
        if (overlaps.empty())
            continue;
        samples.push_back(Sample{p1, p2, overlaps[rng() % overlaps.size()]});
    }

    int discrepancies = 0;
    int nonTrivial = 0; // samples where some derivation actually arose
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const Sample& sample = samples[s];
        ComposeResult composed = composeOverOverlap(*sample.p1, *sample.p2, sample.overlap);
        int maxCopies;
        if (composed.rule) {
            maxCopies = static_cast<int>(connectedComponents(composed.rule->left()).size());
        } else {
            maxCopies = static_cast<int>(connectedComponents(sample.p1->left()).size()
                                         + connectedComponents(sample.p2->left()).size());
        }

        // engine side: group derivation heads by tail multiset
        std::map<std::vector<int>, std::set<std::vector<int>>> engineByTails;
        if (composed.rule) {
            std::vector<UniverseEntry> universe;
            for (std::size_t i = 0; i < pool.size(); ++i)
                universe.push_back(UniverseEntry{poolClasses[i], pool[i]});
            enumerateDerivations(composed.rule, universe, poolClasses, registry, Config{},
                                 [&](const Derivation& d) {
                                     engineByTails[d.tailClasses].insert(d.headClasses);
                                     return true;
                                 });
        }

        // sequential side, for every tail multiset up to the copy bound
        std::map<std::vector<int>, std::set<std::vector<int>>> seqByTails;
        std::vector<int> pick;
        auto enumerate = [&](auto&& self, std::size_t from, int remaining) -> void {
            if (!pick.empty()) {
                std::vector<GraphPtr> tails;
                std::vector<int> tailClasses;
                for (int i : pick) {
                    tails.push_back(pool[i]);
                    tailClasses.push_back(poolClasses[i]);
                }
                std::sort(tailClasses.begin(), tailClasses.end());
                auto heads =
                    sequentialHeads(*sample.p1, *sample.p2, sample.overlap, tails, registry);
                if (!heads.empty())
                    seqByTails[tailClasses].insert(heads.begin(), heads.end());
            }
            if (remaining == 0)
                return;
            for (std::size_t i = from; i < pool.size(); ++i) {
                pick.push_back(static_cast<int>(i));
                self(self, i, remaining - 1);
                pick.pop_back();
            }
        };
        enumerate(enumerate, 0, maxCopies);

        if (!engineByTails.empty())
            ++nonTrivial;
        if (engineByTails != seqByTails) {
            ++discrepancies;
            std::cerr << "  sample " << s << " (" << sample.p1->name() << " . "
                      << sample.p2->name() << ", |D|=" << sample.overlap.vertexPairs.size()
                      << "+" << sample.overlap.edgePairs.size()
                      << (composed.rule ? ", composed" : ", failed: " + composed.message)
                      << "): engine " << engineByTails.size() << " tail multisets, sequential "
                      << seqByTails.size() << "\n";
        }
    }
    requireEq(discrepancies, 0, "soundness discrepancies over 30 sampled overlaps");
    require(nonTrivial >= 5, "too few samples produced derivations ("
                                 + std::to_string(nonTrivial) + "); the check has no teeth");
}

// ---------------------------------------------------------------------------
// criterion 9: the overall formose rule

void criterion9() {
    GraphPtr glyc = fixtures::glycolaldehyde();
    GraphPtr form = fixtures::formaldehyde();
    RulePtr ketoF = fixtures::ketoEnolF();
    RulePtr ketoB = fixtures::ketoEnolB();
    RulePtr aldolF = fixtures::aldolAddF();
    RulePtr aldolB = fixtures::aldolAddB();

    auto super = [](RcExpressionPtr lhs, RcExpressionPtr rhs) {
        return rcBinary(RcOperator::Super, std::move(lhs), std::move(rhs));
    };
    auto superFull = [](RcExpressionPtr lhs, RcExpressionPtr rhs) {
        return rcBinary(RcOperator::SuperFull, std::move(lhs), std::move(rhs));
    };
    auto par = [](RcExpressionPtr lhs, RcExpressionPtr rhs) {
        return rcBinary(RcOperator::Parallel, std::move(lhs), std::move(rhs));
    };

    RcExpressionPtr exp = super(rcId({glyc}), rcRules({ketoF}));
    exp = par(exp, rcId({form}));
    exp = superFull(exp, rcRules({aldolF}));
    exp = super(exp, rcRules({ketoF}));
    exp = par(exp, rcId({form}));
    exp = superFull(exp, rcRules({aldolF}));
    exp = super(exp, rcRules({ketoF}));
    exp = super(exp, rcRules({ketoB}));
    exp = super(exp, rcRules({aldolB}));
    exp = super(exp, rcRules({ketoB}));
    exp = superFull(exp, par(rcId({glyc}), rcId({glyc})));

    RcEvaluator rc({ketoF, ketoB, aldolF, aldolB});
    std::vector<RulePtr> rules = rc.eval(*exp);
    require(!rules.empty(), "the pathway expression evaluated to no rules");

    GraphRegistry registry;
    int glycClass = registry.registerGraph(glyc);
    int formClass = registry.registerGraph(form);
    std::vector<int> wantLeft = {glycClass, formClass, formClass};
    std::sort(wantLeft.begin(), wantLeft.end());
    std::vector<int> wantRight = {glycClass, glycClass};

    bool found = false;
    for (const auto& rule : rules) {
        std::vector<int> left, right;
        for (const auto& comp : connectedComponents(rule->left()))
            left.push_back(registry.registerGraph(comp));
        for (const auto& comp : connectedComponents(rule->right()))
            right.push_back(registry.registerGraph(comp));
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        found = found || (left == wantLeft && right == wantRight);
    }
    require(found, "no composed rule with left {glycolaldehyde, 2 formaldehyde} and right "
                   "{2 glycolaldehyde} among "
                       + std::to_string(rules.size()) + " results");
}

// ---------------------------------------------------------------------------
// criterion 10: the size constraint holds over the full exploration

void criterion10() {
    DerivationGraphEvaluator eval = formoseRun(0, 20); // unbounded repeat
    eval.calc();
    const DerivationGraph& dg = eval.dg();
    require(dg.hyperedges.size() >= 10, "the exploration stayed trivially small");
    for (const auto& c : dg.classes) {
        bool isInput = false;
        for (int s : eval.startClasses())
            isInput = isInput || s == c.id;
        if (!isInput)
            require(c.graph->numVertices() <= 20,
                    "class " + c.name + " has " + std::to_string(c.graph->numVertices())
                        + " vertices");
    }
}

// ---------------------------------------------------------------------------
// criterion 11: export validity

void criterion11() {
    DerivationGraphEvaluator eval = formoseRun(2, 16);
    eval.calc();
    const DerivationGraph& dg = eval.dg();

    std::string error;
    require(oracles::checkDot(exportDOT(dg), error), "plain DOT: " + error);
    DGExportOptions opts;
    opts.pushVertexLabel([](const Graph& g, const DerivationGraph&) {
        return "#C=" + std::to_string(g.vLabelCount("C"));
    });
    opts.pushVertexVisible(
        [](const Graph& g, const DerivationGraph&) { return g.vLabelCount("C") <= 4; });
    opts.pushVertexColour([](const Graph& g, const DerivationGraph&) {
        return g.vLabelCount("C") == 4 ? "blue" : "";
    });
    require(oracles::checkDot(exportDOT(dg, opts), error), "hooked DOT: " + error);

    DerivationGraph back = importJSON(exportJSON(dg));
    requireEq(back.classes.size(), dg.classes.size(), "class count after round trip");
    std::multiset<std::tuple<std::string, std::vector<int>, std::vector<int>>> a, b;
    for (const auto& e : dg.hyperedges)
        a.insert({e.ruleName, e.tails, e.heads});
    for (const auto& e : back.hyperedges)
        b.insert({e.ruleName, e.tails, e.heads});
    require(a == b, "hyperedge multiset changed in the round trip");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
    double timeLimit; // seconds; 0 = no limit
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "four-ethanol equivalence", criterion1, 1.0},
        {2, "morphism oracle equivalence", criterion2, 10.0},
        {3, "methyl counting", criterion3, 0.0},
        {4, "caffeine parse", criterion4, 0.0},
        {5, "keto-enol derivation", criterion5, 0.0},
        {6, "pushout-existence rejection", criterion6, 0.0},
        {7, "derivation re-validation", criterion7, 60.0},
        {8, "composition soundness oracle", criterion8, 120.0},
        {9, "overall formose rule", criterion9, 0.0},
        {10, "constraint enforcement", criterion10, 0.0},
        {11, "export validity", criterion11, 0.0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        bool ok = true;
        try {
            c.run();
        } catch (const std::exception& e) {
            ok = false;
            message = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.timeLimit > 0 && seconds > c.timeLimit) {
            ok = false;
            message = "exceeded the " + std::to_string(c.timeLimit) + "s budget";
        }
        std::printf("%s %2d  %-32s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                    message.empty() ? "" : "  ", message.c_str());
        failures += !ok;
    }
    if (failures)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
