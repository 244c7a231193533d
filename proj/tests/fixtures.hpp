#pragma once

// Shared molecule and rule fixtures for the test suites.

#include <string>
#include <vector>

#include "grammod/gml.hpp"
#include "grammod/graph.hpp"
#include "grammod/rule.hpp"
#include "grammod/smiles.hpp"

namespace fixtures {

using namespace grammod;

inline const char* ethanolGML = R"(graph [
    node [ id 0 label "C" ]   node [ id 1 label "C" ]   node [ id 2 label "O" ]
    node [ id 3 label "H" ]   node [ id 4 label "H" ]   node [ id 5 label "H" ]
    node [ id 6 label "H" ]   node [ id 7 label "H" ]   node [ id 8 label "H" ]
    edge [ source 1 target 0 label "-" ]   edge [ source 2 target 1 label "-" ]
    edge [ source 3 target 0 label "-" ]   edge [ source 4 target 0 label "-" ]
    edge [ source 5 target 0 label "-" ]   edge [ source 6 target 1 label "-" ]
    edge [ source 7 target 1 label "-" ]   edge [ source 8 target 2 label "-" ]
])";

// keto-enol rule with explicit charges; vertex 4 ends up isolated
inline const char* ketoEnolChargedGML = R"(rule [
   left [
      edge [ source 1 target 4 label "-" ]
      edge [ source 1 target 2 label "-" ]
      edge [ source 2 target 3 label "=" ]
      node [ id 3 label "O" ]
      node [ id 4 label "H" ]
   ]
   context [
      node [ id 1 label "C" ]
      node [ id 2 label "C" ]
   ]
   right [
      edge [ source 1 target 2 label "=" ]
      edge [ source 2 target 3 label "-" ]
      node [ id 3 label "O-" ]
      node [ id 4 label "H+" ]
   ]
])";

inline const char* ketoEnolGML = R"(rule [   ruleID "Keto-enol isomerization"
    left [      edge [ source 1 target 4 label "-" ]   edge [ source 1 target 2 label "-" ]
                edge [ source 2 target 3 label "=" ]                                      ]
    context [   node [ id 1 label "C" ]   node [ id 2 label "C" ]
                node [ id 3 label "O" ]   node [ id 4 label "H" ]                         ]
    right [     edge [ source 1 target 2 label "=" ]   edge [ source 2 target 3 label "-" ]
                edge [ source 3 target 4 label "-" ]                                      ]
])";

inline const char* aldolAddGML = R"(rule [   ruleID "Aldol Addition"
    left [      edge [ source 1 target 2 label "=" ]   edge [ source 2 target 3 label "-" ]
                edge [ source 3 target 4 label "-" ]   edge [ source 5 target 6 label "=" ]   ]
    context [   node [ id 1 label "C" ]   node [ id 2 label "C" ]   node [ id 3 label "O" ]
                node [ id 4 label "H" ]   node [ id 5 label "O" ]   node [ id 6 label "C" ]   ]
    right [     edge [ source 1 target 2 label "-" ]   edge [ source 2 target 3 label "=" ]
                edge [ source 5 target 6 label "-" ]
                edge [ source 4 target 5 label "-" ]   edge [ source 6 target 1 label "-" ]   ]
])";

inline GraphPtr formaldehyde() { return parseSMILES("C=O", "Formaldehyde"); }
inline GraphPtr glycolaldehyde() { return parseSMILES("OCC=O", "Glycolaldehyde"); }
inline GraphPtr acetaldehyde() { return parseSMILES("CC=O", "Acetaldehyde"); }
inline GraphPtr ethanol() { return parseSMILES("CCO", "Ethanol"); }
inline GraphPtr caffeine() { return parseSMILES("Cn1cnc2c1c(=O)n(c(=O)n2C)C", "Caffeine"); }

inline RulePtr ketoEnolF() { return parseRuleGML(ketoEnolGML); }
inline RulePtr ketoEnolB() { return parseRuleGML(ketoEnolGML, true); }
inline RulePtr aldolAddF() { return parseRuleGML(aldolAddGML); }
inline RulePtr aldolAddB() { return parseRuleGML(aldolAddGML, true); }
inline RulePtr ketoEnolCharged() { return parseRuleGML(ketoEnolChargedGML); }

inline std::vector<RulePtr> formoseRules() {
    return {ketoEnolF(), ketoEnolB(), aldolAddF(), aldolAddB()};
}

// single labelled vertex
inline GraphPtr vertexGraph(const std::string& label, const std::string& name = "") {
    GraphBuilder b;
    b.addVertex(0, label);
    return b.build(name);
}

// two labelled vertices joined by an edge
inline GraphPtr edgeGraph(const std::string& v1, const std::string& v2, const std::string& e,
                          const std::string& name = "") {
    GraphBuilder b;
    b.addVertex(0, v1);
    b.addVertex(1, v2);
    b.addEdge(0, 1, e);
    return b.build(name);
}

} // namespace fixtures
