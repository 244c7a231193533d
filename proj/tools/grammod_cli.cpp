// grammod: DPO graph transformation over multisets of connected labelled
// graphs. Subcommands: load, morphism, apply, compose, explore, export.
// Exit codes: 0 success, 1 runtime failure, 2 usage or parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grammod/config.hpp"
#include "grammod/derivation.hpp"
#include "grammod/dg.hpp"
#include "grammod/error.hpp"
#include "grammod/gml.hpp"
#include "grammod/morphism.hpp"
#include "grammod/rulecomp.hpp"
#include "grammod/strategy.hpp"
#include "grammod/workspace.hpp"

namespace fs = std::filesystem;
using namespace grammod;

namespace {

struct CommonOpts {
    std::string manifest;
    std::string configFile;
    std::string outDir = ".";
};

void addCommonOptions(CLI::App* cmd, CommonOpts& opts, bool withOut) {
    cmd->add_option("--manifest,-m", opts.manifest, "Manifest file listing loads to replay");
    cmd->add_option("--config,-c", opts.configFile, "Config file (key=value lines)");
    if (withOut)
        cmd->add_option("--out,-o", opts.outDir, "Output directory (GRAMMOD_OUT overrides)");
}

void initWorkspace(Workspace& ws, const CommonOpts& opts) {
    if (!opts.configFile.empty())
        ws.config = parseConfigFile(opts.configFile);
    if (!opts.manifest.empty() && fs::exists(opts.manifest))
        ws.replayManifest(opts.manifest);
}

std::string outputDir(const CommonOpts& opts) {
    if (const char* env = std::getenv("GRAMMOD_OUT"); env && *env)
        return env;
    return opts.outDir;
}

void writeFileOrThrow(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string sanitizeFileName(const std::string& name) {
    std::string out;
    for (char c : name)
        out.push_back(
            std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_');
    return out.empty() ? "unnamed" : out;
}

RcResolver rcResolverFor(const Workspace& ws) {
    RcResolver r;
    r.graphs = [&ws](const std::string& name) -> std::vector<GraphPtr> {
        if (name == "inputGraphs")
            return ws.allGraphs();
        return {ws.findGraph(name)};
    };
    r.rules = [&ws](const std::string& name) -> std::vector<RulePtr> {
        if (name == "inputRules")
            return ws.allRules();
        return {ws.findRule(name)};
    };
    return r;
}

StrategyResolver strategyResolverFor(const Workspace& ws) {
    StrategyResolver r;
    r.graphs = [&ws](const std::string& name) -> std::vector<GraphPtr> {
        if (name == "inputGraphs")
            return ws.allGraphs();
        return {ws.findGraph(name)};
    };
    r.rules = [&ws](const std::string& name) -> std::vector<RulePtr> {
        if (name == "inputRules")
            return ws.allRules();
        return {ws.findRule(name)};
    };
    return r;
}

// hook flag values "LBL:N" and "LBL:N:COLOUR"
std::pair<std::string, long> parseLabelCount(const std::string& s) {
    auto colon = s.rfind(':');
    if (colon == std::string::npos)
        throw UsageError("expected LABEL:N, got '" + s + "'");
    return {s.substr(0, colon), std::stol(s.substr(colon + 1))};
}

DGExportOptions buildExportOptions(const std::vector<std::string>& labelCounts,
                                   const std::vector<std::string>& vertexVisibleMax,
                                   const std::vector<std::string>& edgeVisibleMax,
                                   const std::vector<std::string>& colourEq) {
    DGExportOptions opts;
    for (const auto& lbl : labelCounts) {
        opts.pushVertexLabel([lbl](const Graph& g, const DerivationGraph&) {
            return "#" + lbl + "=" + std::to_string(g.vLabelCount(lbl));
        });
    }
    for (const auto& s : vertexVisibleMax) {
        auto [lbl, n] = parseLabelCount(s);
        opts.pushVertexVisible([lbl = lbl, n = n](const Graph& g, const DerivationGraph&) {
            return g.vLabelCount(lbl) <= n;
        });
    }
    for (const auto& s : edgeVisibleMax) {
        auto [lbl, n] = parseLabelCount(s);
        opts.pushEdgeVisible(
            [lbl = lbl, n = n](const DerivationGraph::Hyperedge& e, const DerivationGraph& dg) {
                for (int c : e.tails)
                    if (dg.classById(c)->graph->vLabelCount(lbl) > n)
                        return false;
                for (int c : e.heads)
                    if (dg.classById(c)->graph->vLabelCount(lbl) > n)
                        return false;
                return true;
            });
    }
    for (const auto& s : colourEq) {
        auto first = s.find(':');
        auto second = s.find(':', first == std::string::npos ? s.size() : first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw UsageError("expected LABEL:N:COLOUR, got '" + s + "'");
        std::string lbl = s.substr(0, first);
        long n = std::stol(s.substr(first + 1, second - first - 1));
        std::string colour = s.substr(second + 1);
        opts.pushVertexColour(
            [lbl, n, colour](const Graph& g, const DerivationGraph&) -> std::string {
                return g.vLabelCount(lbl) == n ? colour : "";
            });
    }
    return opts;
}

std::string classNames(GraphRegistry& registry, const std::vector<int>& classes) {
    std::string out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i > 0)
            out += " + ";
        out += registry.nameOf(classes[i]);
    }
    return out;
}

} // namespace

int runCli(int argc, char** argv) {
    CLI::App app{"DPO graph transformation of multisets of connected labelled graphs"};
    app.require_subcommand(1);

    // ---- load ----
    CommonOpts loadOpts;
    std::string loadGml, loadSmilesStr, loadDfs, loadRuleGml, loadName;
    bool loadInvert = false;
    auto* cmdLoad =
        app.add_subcommand("load", "Load a graph or rule and record it in the manifest");
    addCommonOptions(cmdLoad, loadOpts, false);
    auto* optGml = cmdLoad->add_option("--gml", loadGml, "Graph GML file");
    auto* optSmiles = cmdLoad->add_option("--smiles", loadSmilesStr, "SMILES string");
    auto* optDfs = cmdLoad->add_option("--dfs", loadDfs, "GraphDFS string");
    auto* optRule = cmdLoad->add_option("--rule-gml", loadRuleGml, "Rule GML file");
    cmdLoad->add_flag("--invert", loadInvert, "Swap the rule's left and right sides");
    cmdLoad->add_option("--name", loadName, "Name to register the object under");
    optGml->excludes(optSmiles)->excludes(optDfs)->excludes(optRule);
    optSmiles->excludes(optDfs)->excludes(optRule);
    optDfs->excludes(optRule);

    cmdLoad->callback([&]() {
        Workspace ws;
        initWorkspace(ws, loadOpts);
        std::string kind, payload, name;
        if (!loadGml.empty()) {
            kind = "gml";
            payload = loadGml;
            name = ws.loadGraphGmlFile(loadGml, loadName);
        } else if (!loadSmilesStr.empty()) {
            kind = "smiles";
            payload = loadSmilesStr;
            name = ws.loadSmiles(loadSmilesStr, loadName);
        } else if (!loadDfs.empty()) {
            kind = "dfs";
            payload = loadDfs;
            name = ws.loadGraphDfs(loadDfs, loadName);
        } else if (!loadRuleGml.empty()) {
            kind = "rulegml";
            payload = loadRuleGml;
            name = ws.loadRuleGmlFile(loadRuleGml, loadInvert, loadName);
        } else {
            throw UsageError("load needs one of --gml, --smiles, --dfs, --rule-gml");
        }
        if (kind == "rulegml") {
            RulePtr r = ws.findRule(name);
            std::cout << "loaded rule '" << name << "' (|L|=" << r->left().numVertices()
                      << ", |K|=" << r->context().numVertices()
                      << ", |R|=" << r->right().numVertices() << ")\n";
        } else {
            GraphPtr g = ws.findGraph(name);
            std::cout << "loaded graph '" << name << "' (" << g->numVertices() << " vertices, "
                      << g->numEdges() << " edges)\n";
        }
        if (!loadOpts.manifest.empty()) {
            std::ofstream out(loadOpts.manifest, std::ios::app);
            if (!out)
                throw std::runtime_error("cannot write manifest: " + loadOpts.manifest);
            out << Workspace::manifestLine(kind, payload, loadInvert, loadName) << "\n";
        }
    });

    // ---- morphism ----
    CommonOpts morphOpts;
    std::string morphKind, morphPattern, morphHost;
    std::int64_t morphMax = -1;
    auto* cmdMorph = app.add_subcommand("morphism", "Count morphisms between two loaded graphs");
    addCommonOptions(cmdMorph, morphOpts, false);
    cmdMorph->add_option("kind", morphKind, "mono or iso")->required();
    cmdMorph->add_option("pattern", morphPattern)->required();
    cmdMorph->add_option("host", morphHost)->required();
    cmdMorph->add_option("--max", morphMax, "Stop counting at this many matches");
    cmdMorph->callback([&]() {
        Workspace ws;
        initWorkspace(ws, morphOpts);
        std::size_t max = morphMax >= 0 ? static_cast<std::size_t>(morphMax)
                                        : static_cast<std::size_t>(ws.config.maxMatches);
        GraphPtr pattern = ws.findGraph(morphPattern);
        GraphPtr host = ws.findGraph(morphHost);
        std::size_t count;
        if (morphKind == "mono")
            count = countMonomorphisms(*pattern, *host, max);
        else if (morphKind == "iso")
            count = countIsomorphisms(*pattern, *host, max);
        else
            throw UsageError("morphism kind must be 'mono' or 'iso'");
        std::cout << count << "\n";
    });

    // ---- apply ----
    CommonOpts applyOpts;
    std::string applyRule;
    std::vector<std::string> applyGraphs;
    bool applyAll = false;
    auto* cmdApply = app.add_subcommand("apply", "Enumerate proper derivations of a rule");
    addCommonOptions(cmdApply, applyOpts, true);
    cmdApply->add_option("rule", applyRule)->required();
    cmdApply->add_option("graphs", applyGraphs, "Host graphs (the universe)")->required();
    cmdApply->add_flag("--all", applyAll, "Write every head graph as GML");
    cmdApply->callback([&]() {
        Workspace ws;
        initWorkspace(ws, applyOpts);
        RulePtr rule = ws.findRule(applyRule);
        std::vector<UniverseEntry> universe;
        std::vector<int> active;
        for (const auto& name : applyGraphs) {
            GraphPtr g = ws.findGraph(name);
            int classId = ws.registry().registerGraph(g);
            bool known = false;
            for (const auto& e : universe)
                known = known || e.classId == classId;
            if (!known) {
                universe.push_back(UniverseEntry{classId, ws.registry().graphOf(classId)});
                active.push_back(classId);
            }
        }
        int count = 0;
        std::map<int, GraphPtr> headDump;
        enumerateDerivations(rule, universe, active, ws.registry(), ws.config,
                             [&](const Derivation& d) {
                                 std::cout << classNames(ws.registry(), d.tailClasses) << " => "
                                           << classNames(ws.registry(), d.headClasses) << "\n";
                                 ++count;
                                 if (applyAll)
                                     for (int c : d.headClasses)
                                         headDump.emplace(c, ws.registry().graphOf(c));
                                 return true;
                             });
        std::cout << count << " derivations\n";
        if (applyAll) {
            fs::create_directories(outputDir(applyOpts));
            for (const auto& [classId, g] : headDump) {
                std::string file = outputDir(applyOpts) + "/"
                                   + sanitizeFileName(ws.registry().nameOf(classId)) + ".gml";
                writeFileOrThrow(file, writeGML(*g));
            }
        }
    });

    // ---- compose ----
    CommonOpts composeOpts;
    std::string composeFile;
    auto* cmdCompose =
        app.add_subcommand("compose", "Evaluate a rule composition expression file");
    addCommonOptions(cmdCompose, composeOpts, true);
    cmdCompose->add_option("expression", composeFile, "Expression file")->required();
    cmdCompose->callback([&]() {
        Workspace ws;
        initWorkspace(ws, composeOpts);
        std::string text = readFile(composeFile);
        if (text.find_first_not_of(" \t\r\n") == std::string::npos)
            throw UsageError("empty expression file: " + composeFile);
        RcExpressionPtr exp = parseRcExpression(text, rcResolverFor(ws));
        RcEvaluator evaluator(ws.allRules(), ws.config);
        std::vector<RulePtr> rules = evaluator.eval(*exp);
        fs::create_directories(outputDir(composeOpts));
        for (std::size_t i = 0; i < rules.size(); ++i) {
            std::cout << rules[i]->name() << "\n";
            writeFileOrThrow(outputDir(composeOpts) + "/rule_" + std::to_string(i) + ".gml",
                             writeGML(*rules[i]));
        }
        std::cout << rules.size() << " rules\n";
    });

    // ---- explore ----
    CommonOpts exploreOpts;
    std::string exploreFile;
    bool exploreDpoAll = false;
    std::vector<int> exploreDpo;
    auto* cmdExplore =
        app.add_subcommand("explore", "Run a strategy program and export the derivation graph");
    addCommonOptions(cmdExplore, exploreOpts, true);
    cmdExplore->add_option("program", exploreFile, "Strategy program file")->required();
    cmdExplore->add_flag("--dpo-all", exploreDpoAll, "Write a DPO diagram per hyperedge");
    cmdExplore->add_option("--dpo", exploreDpo, "Write DPO diagrams for these hyperedge ids");
    cmdExplore->callback([&]() {
        Workspace ws;
        initWorkspace(ws, exploreOpts);
        StrategyPtr strategy = parseStrategy(readFile(exploreFile), strategyResolverFor(ws));
        DerivationGraphEvaluator evaluator(ws.allGraphs(), strategy, ws.config);
        evaluator.calc();
        const DerivationGraph& dg = evaluator.dg();
        std::string dir = outputDir(exploreOpts);
        fs::create_directories(dir);
        writeFileOrThrow(dir + "/dg.json", exportJSON(dg));
        writeFileOrThrow(dir + "/dg.dot", exportDOT(dg));
        if (exploreDpoAll)
            for (const auto& e : dg.hyperedges)
                exploreDpo.push_back(e.id);
        for (int id : exploreDpo)
            writeFileOrThrow(dir + "/dpo_" + std::to_string(id) + ".json",
                             exportDerivationDPO(dg, id));
        std::cout << "classes=" << dg.classes.size() << " hyperedges=" << dg.hyperedges.size()
                  << "\n";
    });

    // ---- export ----
    CommonOpts exportOpts;
    std::string exportGraph, exportRule, exportDg, exportDot, exportJsonPath, exportOut;
    std::vector<std::string> hookLabelCounts, hookVertexVisible, hookEdgeVisible, hookColour;
    auto* cmdExport = app.add_subcommand("export", "Write graphs, rules, or derivation graphs");
    addCommonOptions(cmdExport, exportOpts, false);
    cmdExport->add_option("--graph", exportGraph, "Loaded graph to dump as GML");
    cmdExport->add_option("--rule", exportRule, "Loaded rule to dump as GML");
    cmdExport->add_option("--dg", exportDg, "Derivation graph JSON file to re-export");
    cmdExport->add_option("--dot", exportDot, "DOT output path for --dg");
    cmdExport->add_option("--json", exportJsonPath, "JSON output path for --dg");
    cmdExport->add_option("--output", exportOut, "Output file ('-' for stdout)");
    cmdExport->add_option("--push-vertex-label-count", hookLabelCounts,
                          "Append '#LBL=<count>' to vertex labels (value: LBL)");
    cmdExport->add_option("--push-vertex-visible-max", hookVertexVisible,
                          "Hide classes with vLabelCount(LBL) > N (value: LBL:N)");
    cmdExport->add_option("--push-edge-visible-max", hookEdgeVisible,
                          "Hide hyperedges touching classes with vLabelCount(LBL) > N");
    cmdExport->add_option("--push-vertex-colour-eq", hookColour,
                          "Colour classes with vLabelCount(LBL) == N (value: LBL:N:COLOUR)");
    cmdExport->callback([&]() {
        Workspace ws;
        initWorkspace(ws, exportOpts);
        auto emit = [&](const std::string& content) {
            if (exportOut.empty() || exportOut == "-")
                std::cout << content;
            else
                writeFileOrThrow(exportOut, content);
        };
        if (!exportGraph.empty()) {
            emit(writeGML(*ws.findGraph(exportGraph)));
            return;
        }
        if (!exportRule.empty()) {
            emit(writeGML(*ws.findRule(exportRule)));
            return;
        }
        if (!exportDg.empty()) {
            DerivationGraph dg = importJSON(readFile(exportDg));
            if (!exportDot.empty()) {
                DGExportOptions opts = buildExportOptions(hookLabelCounts, hookVertexVisible,
                                                          hookEdgeVisible, hookColour);
                writeFileOrThrow(exportDot, exportDOT(dg, opts));
            }
            if (!exportJsonPath.empty())
                writeFileOrThrow(exportJsonPath, exportJSON(dg));
            if (exportDot.empty() && exportJsonPath.empty())
                throw UsageError("--dg needs --dot and/or --json");
            return;
        }
        throw UsageError("export needs one of --graph, --rule, --dg");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2, help exits 0
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return runCli(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
