#include <doctest.h>

#include <random>

#include "grammod/graph.hpp"
#include "grammod/morphism.hpp"
#include "grammod/registry.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace grammod;

TEST_CASE("graph construction") {
    GraphBuilder b;
    b.addVertex(0, "C");
    b.addVertex(1, "O");
    b.addEdge(0, 1, "=");
    GraphPtr g = b.build("co");
    CHECK(g->numVertices() == 2);
    CHECK(g->numEdges() == 1);
    CHECK(g->vertexLabel(0) == "C");
    CHECK(*g->edgeLabel(0, 1) == "=");
    CHECK(*g->edgeLabel(1, 0) == "=");
    CHECK(g->connected());
}

TEST_CASE("graph construction rejects invariant violations") {
    SUBCASE("loop") {
        GraphBuilder b;
        b.addVertex(0, "C");
        CHECK_THROWS_AS(b.addEdge(0, 0, "-"), std::invalid_argument);
    }
    SUBCASE("parallel edge, source/target order irrelevant") {
        GraphBuilder b;
        b.addVertex(0, "C");
        b.addVertex(1, "C");
        b.addEdge(0, 1, "-");
        CHECK_THROWS_AS(b.addEdge(1, 0, "="), std::invalid_argument);
    }
    SUBCASE("duplicate id") {
        GraphBuilder b;
        b.addVertex(3, "C");
        CHECK_THROWS_AS(b.addVertex(3, "O"), std::invalid_argument);
    }
    SUBCASE("unknown endpoint") {
        GraphBuilder b;
        b.addVertex(0, "C");
        CHECK_THROWS_AS(b.addEdge(0, 9, "-"), std::invalid_argument);
    }
    SUBCASE("empty labels") {
        GraphBuilder b;
        CHECK_THROWS_AS(b.addVertex(0, ""), std::invalid_argument);
        b.addVertex(1, "A");
        b.addVertex(2, "A");
        CHECK_THROWS_AS(b.addEdge(1, 2, ""), std::invalid_argument);
    }
}

TEST_CASE("connected components") {
    SUBCASE("empty graph") {
        GraphPtr g = GraphBuilder().build();
        CHECK(connectedComponents(*g).empty());
    }
    SUBCASE("connected graph is its own single component") {
        GraphPtr g = fixtures::formaldehyde();
        auto comps = connectedComponents(*g);
        REQUIRE(comps.size() == 1);
        CHECK(isomorphic(*comps[0], *g));
    }
    SUBCASE("two molecules, ordered by lowest original vertex id") {
        GraphBuilder b;
        b.addVertex(0, "C");
        b.addVertex(1, "O");
        b.addVertex(2, "H");
        b.addVertex(3, "H");
        b.addEdge(0, 1, "=");
        b.addEdge(0, 2, "-");
        b.addEdge(0, 3, "-");
        b.addVertex(4, "H");
        b.addVertex(5, "H");
        b.addEdge(4, 5, "-");
        GraphPtr g = b.build("mix");
        auto comps = connectedComponents(*g);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0]->numVertices() == 4);
        CHECK(comps[1]->numVertices() == 2);
        CHECK(isomorphic(*disjointUnion(comps), *g));
    }
}

TEST_CASE("vLabelCount") {
    GraphPtr formaldehyde = fixtures::formaldehyde();
    CHECK(formaldehyde->vLabelCount("H") == 2);
    CHECK(formaldehyde->vLabelCount("N") == 0);
    CHECK(fixtures::caffeine()->vLabelCount("C") == 8);
}

TEST_CASE("monomorphism counting") {
    GraphPtr carbonyl = parseSMILES("[C]=O");
    GraphPtr mol = parseSMILES("CC(=O)C"); // one ketone group
    CHECK(countMonomorphisms(*carbonyl, *mol, 1337) == 1);

    GraphPtr methyl = parseSMILES("[CH3]");
    CHECK(countMonomorphisms(*methyl, *methyl, 1337) == 6);
    GraphPtr mol1 = parseSMILES("CC(C)CO");
    CHECK(countMonomorphisms(*methyl, *mol1, 1337) == 12);
    SUBCASE("default cap stops at the first morphism") {
        CHECK(countMonomorphisms(*methyl, *mol1) == 1);
    }
}

TEST_CASE("isomorphism counting") {
    GraphPtr methyl = parseSMILES("[CH3]");
    CHECK(countIsomorphisms(*methyl, *methyl, 1337) == 6);
    CHECK(countIsomorphisms(*fixtures::vertexGraph("K"), *fixtures::vertexGraph("X"), 10) == 0);
    GraphPtr mol1 = parseSMILES("CC(C)CO");
    GraphPtr mol2 = parseSMILES("C(CC)CO");
    CHECK(countIsomorphisms(*mol1, *mol2, 10) == 0);
}

TEST_CASE("morphism enumeration") {
    SUBCASE("single vertex into formaldehyde") {
        int count = 0;
        enumerateMonomorphisms(*fixtures::vertexGraph("C"), *fixtures::formaldehyde(),
                               [&](const Morphism&) {
                                   ++count;
                                   return true;
                               });
        CHECK(count == 1);
    }
    SUBCASE("no morphisms into the empty graph") {
        int count = 0;
        enumerateMonomorphisms(*fixtures::vertexGraph("C"), *GraphBuilder().build(),
                               [&](const Morphism&) {
                                   ++count;
                                   return true;
                               });
        CHECK(count == 0);
    }
    SUBCASE("swap symmetry of an A-A edge") {
        GraphPtr g = fixtures::edgeGraph("A", "A", "-");
        int count = 0;
        enumerateMonomorphisms(*g, *g, [&](const Morphism& m) {
            CHECK(m.vertexMap.size() == 2);
            ++count;
            return true;
        });
        CHECK(count == 2);
    }
    SUBCASE("enumeration is deterministic") {
        GraphPtr pattern = parseSMILES("[CH2]");
        GraphPtr host = fixtures::ethanol();
        std::vector<std::vector<int>> run1, run2;
        enumerateMonomorphisms(*pattern, *host, [&](const Morphism& m) {
            run1.push_back(m.vertexMap);
            return true;
        });
        enumerateMonomorphisms(*pattern, *host, [&](const Morphism& m) {
            run2.push_back(m.vertexMap);
            return true;
        });
        CHECK(run1 == run2);
        CHECK(!run1.empty());
    }
    SUBCASE("visitor can stop early") {
        GraphPtr methyl = parseSMILES("[CH3]");
        int count = 0;
        enumerateMonomorphisms(*methyl, *methyl, [&](const Morphism&) {
            ++count;
            return count < 3;
        });
        CHECK(count == 3);
    }
}

TEST_CASE("morphism counts match the brute-force oracle") {
    std::mt19937 rng(20240817);
    std::vector<std::string> vlabels{"A", "B", "C"};
    std::vector<std::string> elabels{"-", "="};
    for (int i = 0; i < 60; ++i) {
        GraphPtr pattern = oracles::randomGraph(rng, 4, vlabels, elabels);
        GraphPtr host = oracles::randomGraph(rng, 6, vlabels, elabels);
        std::size_t big = 1000000;
        CAPTURE(i);
        CHECK(countMonomorphisms(*pattern, *host, big)
              == oracles::bruteCountMorphisms(*pattern, *host, false));
        CHECK(countIsomorphisms(*pattern, *host, big)
              == oracles::bruteCountMorphisms(*pattern, *host, true));
    }
}

TEST_CASE("growing the pattern never helps it match") {
    std::mt19937 rng(7);
    std::vector<std::string> vlabels{"A", "B"};
    std::vector<std::string> elabels{"-"};
    for (int i = 0; i < 20; ++i) {
        GraphPtr host = oracles::randomGraph(rng, 6, vlabels, elabels);
        GraphPtr pattern = oracles::randomGraph(rng, 3, vlabels, elabels);
        // one extra vertex: existence of a match is antitone
        GraphBuilder b;
        for (int v = 0; v < pattern->numVertices(); ++v)
            b.addVertex(v, pattern->vertexLabel(v));
        for (const auto& e : pattern->edges())
            b.addEdge(e.src, e.dst, e.label);
        b.addVertex(pattern->numVertices(), "A");
        GraphPtr bigger = b.build();
        if (countMonomorphisms(*bigger, *host, 1) == 1)
            CHECK(countMonomorphisms(*pattern, *host, 1) == 1);
        // one extra edge on the same vertices: the full count is antitone
        if (pattern->numVertices() >= 2 && !pattern->hasEdge(0, 1)) {
            GraphBuilder b2;
            for (int v = 0; v < pattern->numVertices(); ++v)
                b2.addVertex(v, pattern->vertexLabel(v));
            for (const auto& e : pattern->edges())
                b2.addEdge(e.src, e.dst, e.label);
            b2.addEdge(0, 1, "-");
            GraphPtr withEdge = b2.build();
            CHECK(countMonomorphisms(*withEdge, *host, 1000000)
                  <= countMonomorphisms(*pattern, *host, 1000000));
        }
    }
}

TEST_CASE("isomorphism is symmetric") {
    std::mt19937 rng(99);
    std::vector<std::string> vlabels{"A", "B"};
    std::vector<std::string> elabels{"-", "="};
    for (int i = 0; i < 30; ++i) {
        GraphPtr g1 = oracles::randomGraph(rng, 5, vlabels, elabels);
        GraphPtr g2 = oracles::randomGraph(rng, 5, vlabels, elabels);
        CHECK((countIsomorphisms(*g1, *g2, 1) > 0) == (countIsomorphisms(*g2, *g1, 1) > 0));
    }
}

TEST_CASE("identity automorphism always exists") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 20; ++i) {
        GraphPtr g = oracles::randomGraph(rng, 6, {"A", "B", "C"}, {"-", "="});
        CHECK(countIsomorphisms(*g, *g, 1000000) >= 1);
    }
}

TEST_CASE("registry groups graphs by isomorphism class") {
    GraphRegistry registry;
    int a = registry.registerGraph(parseSMILES("CCO", "Ethanol"));
    int b = registry.registerGraph(parseSMILES("OCC")); // same molecule, different traversal
    int c = registry.registerGraph(parseSMILES("C=O"));
    CHECK(a == b);
    CHECK(a != c);
    CHECK(registry.size() == 2);
    CHECK(registry.nameOf(a) == "Ethanol"); // first registration wins
    CHECK(registry.findClass(*parseSMILES("OCC")) == a);
    CHECK(registry.findClass(*parseSMILES("C#N")) == -1);
}
