#include <doctest.h>

#include <sstream>

#include "grammod/error.hpp"
#include "grammod/gml.hpp"
#include "grammod/morphism.hpp"
#include "grammod/rule.hpp"
#include "grammod/smiles.hpp"

#include "fixtures.hpp"

using namespace grammod;

TEST_CASE("graph GML parsing") {
    SUBCASE("ethanol fixture") {
        GraphPtr g = parseGraphGML(fixtures::ethanolGML, "Ethanol4");
        CHECK(g->numVertices() == 9);
        CHECK(g->numEdges() == 8);
        CHECK(isomorphic(*g, *fixtures::ethanol()));
    }
    SUBCASE("single vertex") {
        GraphPtr g = parseGraphGML("graph [ node [ id 0 label \"A\" ] ]");
        CHECK(g->numVertices() == 1);
        CHECK(g->numEdges() == 0);
    }
    SUBCASE("empty graph") {
        CHECK(parseGraphGML("graph [ ]")->numVertices() == 0);
    }
    SUBCASE("comments") {
        GraphPtr g = parseGraphGML("graph [ # a comment\n node [ id 0 label \"A\" ] ]");
        CHECK(g->numVertices() == 1);
    }
    SUBCASE("edge with unknown node id") {
        CHECK_THROWS_AS(parseGraphGML("graph [ node [ id 0 label \"A\" ] "
                                      "edge [ source 0 target 9 label \"-\" ] ]"),
                        ParseError);
    }
    SUBCASE("duplicate node id") {
        CHECK_THROWS_AS(parseGraphGML("graph [ node [ id 0 label \"A\" ] "
                                      "node [ id 0 label \"B\" ] ]"),
                        ParseError);
    }
    SUBCASE("duplicate edge pair") {
        CHECK_THROWS_AS(parseGraphGML("graph [ node [ id 0 label \"A\" ] "
                                      "node [ id 1 label \"B\" ] "
                                      "edge [ source 0 target 1 label \"-\" ] "
                                      "edge [ source 1 target 0 label \"=\" ] ]"),
                        ParseError);
    }
    SUBCASE("missing label") {
        CHECK_THROWS_AS(parseGraphGML("graph [ node [ id 0 ] ]"), ParseError);
    }
    SUBCASE("unknown key is rejected in strict mode") {
        CHECK_THROWS_AS(parseGraphGML("graph [ node [ id 0 label \"A\" weight 3 ] ]"),
                        ParseError);
        GmlOptions lax;
        lax.strict = false;
        std::ostringstream warnings;
        lax.warn = &warnings;
        CHECK(parseGraphGML("graph [ node [ id 0 label \"A\" weight 3 ] ]", "", lax)
                  ->numVertices()
              == 1);
        CHECK(warnings.str().find("weight") != std::string::npos);
    }
    SUBCASE("errors carry positions") {
        try {
            parseGraphGML("graph [\n  node [ id 0 ]\n]");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
}

TEST_CASE("rule GML parsing") {
    SUBCASE("the keto-enol rule with charges") {
        RulePtr r = fixtures::ketoEnolCharged();
        CHECK(r->left().numVertices() == 4);
        CHECK(r->left().numEdges() == 3);
        CHECK(r->right().numEdges() == 2);
        CHECK(r->context().numVertices() == 4); // all vertices are kept
        int labelChangers = 0;
        for (const auto& v : r->vertices())
            if (v.membership == Membership::Context && v.leftLabel != v.rightLabel) {
                ++labelChangers;
                CHECK(((v.leftLabel == "O" && v.rightLabel == "O-")
                       || (v.leftLabel == "H" && v.rightLabel == "H+")));
            }
        CHECK(labelChangers == 2);
    }
    SUBCASE("vertex-deleting rule") {
        RulePtr r = parseRuleGML("rule [ left [ node [ id 1 label \"A\" ] ] ]");
        CHECK(r->left().numVertices() == 1);
        CHECK(r->context().numVertices() == 0);
        CHECK(r->right().numVertices() == 0);
    }
    SUBCASE("vertex-creating and identity rules") {
        RulePtr create = parseRuleGML("rule [ right [ node [ id 1 label \"A\" ] ] ]");
        CHECK(create->left().numVertices() == 0);
        CHECK(create->right().numVertices() == 1);
        RulePtr identity = parseRuleGML("rule [ context [ node [ id 1 label \"A\" ] ] ]");
        CHECK(identity->left().numVertices() == 1);
        CHECK(identity->right().numVertices() == 1);
    }
    SUBCASE("ruleID becomes the name") {
        CHECK(fixtures::ketoEnolF()->name() == "Keto-enol isomerization");
    }
    SUBCASE("invert swaps the sides") {
        RulePtr f = fixtures::ketoEnolF();
        RulePtr b = fixtures::ketoEnolB();
        CHECK(f->left().numEdges() == 3);
        CHECK(b->left().numEdges() == 3);
        CHECK(ruleIsomorphisms(*f, *b, 10) == 0);
        CHECK(ruleIsomorphisms(*invertRule(*f), *b, 10) >= 1);
    }
    SUBCASE("python-style comments") {
        RulePtr r = parseRuleGML("rule [\n# comment\n context [ node [ id 1 label \"A\" ] ] ]");
        CHECK(r->context().numVertices() == 1);
    }
    SUBCASE("element in left and context simultaneously") {
        CHECK_THROWS_AS(parseRuleGML("rule [ left [ node [ id 1 label \"A\" ] ] "
                                     "context [ node [ id 1 label \"A\" ] ] ]"),
                        ParseError);
    }
    SUBCASE("edge endpoint missing from a side") {
        // edge in context, endpoint only in left
        CHECK_THROWS_AS(parseRuleGML("rule [ left [ node [ id 1 label \"A\" ] ] "
                                     "context [ node [ id 2 label \"B\" ] "
                                     "edge [ source 1 target 2 label \"-\" ] ] ]"),
                        ParseError);
    }
    SUBCASE("parallel edges within a side") {
        CHECK_THROWS_AS(parseRuleGML("rule [ left [ node [ id 1 label \"A\" ] "
                                     "node [ id 2 label \"A\" ] "
                                     "edge [ source 1 target 2 label \"-\" ] "
                                     "edge [ source 2 target 1 label \"=\" ] ] ]"),
                        ParseError);
    }
    SUBCASE("label-changing edge with deleted endpoints") {
        CHECK_THROWS_AS(parseRuleGML("rule [ left [ node [ id 1 label \"A\" ] "
                                     "node [ id 2 label \"A\" ] "
                                     "edge [ source 1 target 2 label \"-\" ] ] "
                                     "right [ edge [ source 1 target 2 label \"=\" ] ] ]"),
                        ParseError);
    }
}

TEST_CASE("SMILES parsing") {
    SUBCASE("formaldehyde") {
        GraphPtr g = parseSMILES("C=O");
        CHECK(g->numVertices() == 4);
        CHECK(g->numEdges() == 3);
    }
    SUBCASE("bracket atoms suppress implicit hydrogens") {
        GraphPtr g = parseSMILES("[C]=O");
        CHECK(g->numVertices() == 2);
        CHECK(g->numEdges() == 1);
    }
    SUBCASE("caffeine") {
        GraphPtr g = fixtures::caffeine();
        CHECK(g->numVertices() == 24);
    }
    SUBCASE("branches") {
        CHECK(parseSMILES("CC(C)CO")->numVertices() == 15); // C4H10O
    }
    SUBCASE("benzene ring closure with aromatic bonds") {
        GraphPtr g = parseSMILES("c1ccccc1");
        CHECK(g->numVertices() == 12);
        CHECK(g->numEdges() == 12);
        int aromatic = 0;
        for (const auto& e : g->edges())
            aromatic += e.label == ":";
        CHECK(aromatic == 6);
    }
    SUBCASE("two-digit ring closure") {
        CHECK(isomorphic(*parseSMILES("C%12CC%12"), *parseSMILES("C1CC1")));
    }
    SUBCASE("charges land in the label") {
        GraphPtr g = parseSMILES("[O-]");
        CHECK(g->vertexLabel(0) == "O-");
        CHECK(parseSMILES("[NH4+]")->numVertices() == 5);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parseSMILES("C(C"), ParseError);
        CHECK_THROWS_AS(parseSMILES("CC)C"), ParseError);
        CHECK_THROWS_AS(parseSMILES("C1CC"), ParseError);
        CHECK_THROWS_AS(parseSMILES("Xx"), ParseError);
        CHECK_THROWS_AS(parseSMILES("C=1CC#1"), ParseError); // conflicting ring bonds
        CHECK_THROWS_AS(parseSMILES("C.C"), ParseError);
        CHECK_THROWS_AS(parseSMILES("C/C=C/C"), ParseError);
        CHECK_THROWS_AS(parseSMILES("[13C]"), ParseError);
    }
}

TEST_CASE("GraphDFS parsing") {
    SUBCASE("explicit ethanol") {
        GraphPtr g = parseGraphDFS("[C]([H])([H])([H])[C]([H])([H])[O][H]");
        CHECK(g->numVertices() == 9);
        CHECK(isomorphic(*g, *fixtures::ethanol()));
    }
    SUBCASE("implicit hydrogens") {
        CHECK(isomorphic(*parseGraphDFS("CCO"), *fixtures::ethanol()));
    }
    SUBCASE("verbatim labels") {
        GraphPtr g = parseGraphDFS("[R]{x}C([O-])CC=O");
        CHECK(g->vLabelCount("R") == 1);
        CHECK(g->vLabelCount("O-") == 1);
        bool foundX = false;
        for (const auto& e : g->edges())
            foundX = foundX || e.label == "x";
        CHECK(foundX);
        // the R vertex is joined by the x edge
        for (int v = 0; v < g->numVertices(); ++v) {
            if (g->vertexLabel(v) != "R")
                continue;
            REQUIRE(g->degree(v) == 1);
            CHECK(g->edge(g->incident(v)[0].second).label == "x");
        }
    }
    SUBCASE("empty bracket labels are rejected") {
        CHECK_THROWS_AS(parseGraphDFS("[]"), ParseError);
        CHECK_THROWS_AS(parseGraphDFS("[A]{}[B]"), ParseError);
    }
}

TEST_CASE("GML writing round-trips") {
    SUBCASE("graphs") {
        GraphPtr g = fixtures::formaldehyde();
        CHECK(isomorphic(*parseGraphGML(writeGML(*g)), *g));
        CHECK(parseGraphGML(writeGML(*GraphBuilder().build()))->numVertices() == 0);
    }
    SUBCASE("rules keep their split minimal") {
        RulePtr r = fixtures::ketoEnolCharged();
        std::string gml = writeGML(*r);
        // unchanged context elements only in the context section
        CHECK(gml.find("context [") != std::string::npos);
        RulePtr back = parseRuleGML(gml);
        CHECK(ruleIsomorphisms(*r, *back, 1) == 1);
    }
    SUBCASE("all formose rules round-trip") {
        for (const auto& r : fixtures::formoseRules())
            CHECK(ruleIsomorphisms(*r, *parseRuleGML(writeGML(*r)), 1) == 1);
    }
    SUBCASE("delete+create edge pairs normalize to label changes") {
        // the dialect cannot keep the edge out of the interface: the written
        // form reparses as the application-equivalent label-change rule
        RuleBuilder b;
        b.addVertex(1, Membership::Context, "A", "A");
        b.addVertex(2, Membership::Context, "A", "A");
        b.addEdge(1, 2, Membership::LeftOnly, "-", "");
        b.addEdge(1, 2, Membership::RightOnly, "", "=");
        RulePtr replace = b.build();
        RulePtr reparsed = parseRuleGML(writeGML(*replace));
        CHECK(reparsed->context().numEdges() == 1);
        CHECK(ruleIsomorphisms(*replace, *reparsed, 1) == 0);
        RuleBuilder expect;
        expect.addVertex(1, Membership::Context, "A", "A");
        expect.addVertex(2, Membership::Context, "A", "A");
        expect.addEdge(1, 2, Membership::Context, "-", "=");
        CHECK(ruleIsomorphisms(*expect.build(), *reparsed, 1) == 1);
    }
    SUBCASE("labels with quotes survive") {
        GraphPtr g = fixtures::vertexGraph("say \"hi\"");
        CHECK(isomorphic(*parseGraphGML(writeGML(*g)), *g));
    }
}

TEST_CASE("the four ethanols are pairwise isomorphic") {
    std::vector<GraphPtr> ethanols = {
        parseSMILES("CCO", "Ethanol1"),
        parseGraphDFS("[C]([H])([H])([H])[C]([H])([H])[O][H]", "Ethanol2"),
        parseGraphDFS("CCO", "Ethanol3"),
        parseGraphGML(fixtures::ethanolGML, "Ethanol4"),
    };
    for (const auto& a : ethanols)
        for (const auto& b : ethanols)
            CHECK(countIsomorphisms(*a, *b) == 1);
}
