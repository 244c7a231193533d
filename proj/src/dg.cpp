#include "grammod/dg.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "grammod/gml.hpp"

namespace grammod {

using nlohmann::json;

const DerivationGraph::ClassInfo* DerivationGraph::classById(int id) const {
    for (const auto& c : classes)
        if (c.id == id)
            return &c;
    return nullptr;
}

const DerivationGraph::Hyperedge* DerivationGraph::hyperedgeById(int id) const {
    for (const auto& e : hyperedges)
        if (e.id == id)
            return &e;
    return nullptr;
}

void DgBuilder::touchClass(int classId) {
    if (frozen_)
        throw std::logic_error("derivation graph is frozen");
    if (!touched_.insert(classId).second)
        return;
    dg_.classes.push_back(DerivationGraph::ClassInfo{classId, registry_.graphOf(classId),
                                                     registry_.nameOf(classId)});
}

bool DgBuilder::record(const Derivation& d, bool storeAllMatches) {
    if (frozen_)
        throw std::logic_error("derivation graph is frozen");
    for (int c : d.tailClasses)
        touchClass(c);
    for (int c : d.headClasses)
        touchClass(c);
    auto key = std::make_tuple(d.match.rule.get(), d.tailClasses, d.headClasses);
    auto it = seen_.find(key);
    if (it != seen_.end()) {
        if (storeAllMatches)
            dg_.hyperedges[it->second].witnesses.push_back(d.match);
        return false;
    }
    DerivationGraph::Hyperedge e;
    e.id = static_cast<int>(dg_.hyperedges.size());
    e.rule = d.match.rule;
    e.ruleName = d.match.rule ? d.match.rule->name() : "";
    e.tails = d.tailClasses;
    e.heads = d.headClasses;
    e.witnesses.push_back(d.match);
    seen_.emplace(std::move(key), e.id);
    dg_.hyperedges.push_back(std::move(e));
    return true;
}

DerivationGraph DgBuilder::freeze() {
    frozen_ = true;
    return std::move(dg_);
}

namespace {

std::string dotEscape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string exportDOT(const DerivationGraph& dg, const DGExportOptions& opts) {
    std::string out = "digraph dg {\n";

    std::map<int, bool> visible;
    for (const auto& c : dg.classes) {
        bool v = true;
        for (const auto& hook : opts.vertexVisibleHooks)
            v = v && hook(*c.graph, dg);
        visible[c.id] = v;
        if (!v)
            continue;
        std::string label = c.name;
        for (const auto& hook : opts.vertexLabelHooks) {
            std::string extra = hook(*c.graph, dg);
            if (!extra.empty())
                label += ", " + extra;
        }
        std::string colour;
        for (const auto& hook : opts.vertexColourHooks) {
            std::string c2 = hook(*c.graph, dg);
            if (!c2.empty())
                colour = c2;
        }
        out += "  v" + std::to_string(c.id) + " [label=\"" + dotEscape(label) + "\"";
        if (!colour.empty())
            out += ", color=\"" + dotEscape(colour) + "\"";
        out += ", tooltip=\"" + dotEscape(writeGML(*c.graph)) + "\"];\n";
    }

    for (const auto& e : dg.hyperedges) {
        bool v = true;
        for (int c : e.tails)
            v = v && visible[c];
        for (int c : e.heads)
            v = v && visible[c];
        for (const auto& hook : opts.edgeVisibleHooks)
            v = v && hook(e, dg);
        if (!v)
            continue;
        std::string label = e.ruleName;
        for (const auto& hook : opts.edgeLabelHooks) {
            std::string extra = hook(e, dg);
            if (!extra.empty())
                label += label.empty() ? extra : ", " + extra;
        }
        auto multiplicities = [](const std::vector<int>& ids) {
            std::map<int, int> m;
            for (int id : ids)
                ++m[id];
            return m;
        };
        if (e.tails.size() == 1 && e.heads.size() == 1) {
            out += "  v" + std::to_string(e.tails[0]) + " -> v" + std::to_string(e.heads[0])
                   + " [label=\"" + dotEscape(label) + "\"];\n";
            continue;
        }
        std::string he = "he" + std::to_string(e.id);
        out += "  " + he + " [shape=box, label=\"" + dotEscape(label) + "\"];\n";
        for (const auto& [c, mult] : multiplicities(e.tails)) {
            out += "  v" + std::to_string(c) + " -> " + he;
            if (mult > 1)
                out += " [label=\"x" + std::to_string(mult) + "\"]";
            out += ";\n";
        }
        for (const auto& [c, mult] : multiplicities(e.heads)) {
            out += "  " + he + " -> v" + std::to_string(c);
            if (mult > 1)
                out += " [label=\"x" + std::to_string(mult) + "\"]";
            out += ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string exportJSON(const DerivationGraph& dg) {
    json doc;
    doc["schema"] = "grammod-dg/1";
    doc["classes"] = json::array();
    for (const auto& c : dg.classes) {
        doc["classes"].push_back(
            json{{"id", c.id}, {"name", c.name}, {"gml", writeGML(*c.graph)}});
    }
    doc["hyperedges"] = json::array();
    for (const auto& e : dg.hyperedges) {
        doc["hyperedges"].push_back(
            json{{"id", e.id}, {"rule", e.ruleName}, {"tails", e.tails}, {"heads", e.heads}});
    }
    return doc.dump(2) + "\n";
}

DerivationGraph importJSON(std::string_view text) {
    json doc = json::parse(text);
    if (doc.at("schema").get<std::string>() != "grammod-dg/1")
        throw std::runtime_error("unsupported derivation-graph schema");
    DerivationGraph dg;
    for (const auto& c : doc.at("classes")) {
        DerivationGraph::ClassInfo info;
        info.id = c.at("id").get<int>();
        info.name = c.at("name").get<std::string>();
        info.graph = parseGraphGML(c.at("gml").get<std::string>(), info.name);
        dg.classes.push_back(std::move(info));
    }
    for (const auto& e : doc.at("hyperedges")) {
        DerivationGraph::Hyperedge edge;
        edge.id = e.at("id").get<int>();
        edge.ruleName = e.at("rule").get<std::string>();
        edge.tails = e.at("tails").get<std::vector<int>>();
        edge.heads = e.at("heads").get<std::vector<int>>();
        for (int c : edge.tails)
            if (!dg.classById(c))
                throw std::runtime_error("hyperedge tail refers to unknown class");
        for (int c : edge.heads)
            if (!dg.classById(c))
                throw std::runtime_error("hyperedge head refers to unknown class");
        dg.hyperedges.push_back(std::move(edge));
    }
    return dg;
}

std::string exportDerivationDPO(const DerivationGraph& dg, int hyperedgeId) {
    const auto* edge = dg.hyperedgeById(hyperedgeId);
    if (!edge)
        throw std::runtime_error("unknown hyperedge id " + std::to_string(hyperedgeId));
    if (edge->witnesses.empty() || !edge->rule)
        throw std::runtime_error("hyperedge " + std::to_string(hyperedgeId)
                                 + " stores no witness match");
    const DerivationMatch& match = edge->witnesses.front();
    const Rule& rule = *edge->rule;

    GraphPtr g = buildHostGraph(match);
    GraphPtr d = buildInterfaceGraph(rule, match);
    ApplyResult applied = applyDerivation(rule, match);

    json doc;
    doc["schema"] = "grammod-dpo/1";
    doc["rule"] = json{{"name", rule.name()}, {"gml", writeGML(rule)}};
    doc["G"] = json{{"gml", writeGML(*g)}};

    json labelChanges = json::object();
    labelChanges["vertices"] = json::array();
    labelChanges["edges"] = json::array();
    for (int c = 0; c < rule.numVertices(); ++c) {
        const auto& v = rule.vertex(c);
        if (v.membership == Membership::Context && v.leftLabel != v.rightLabel)
            labelChanges["vertices"].push_back(json{{"id", match.globalImage(c)},
                                                    {"left", v.leftLabel},
                                                    {"right", v.rightLabel}});
    }
    for (const auto& e : rule.coreEdges()) {
        if (e.membership == Membership::Context && e.leftLabel != e.rightLabel)
            labelChanges["edges"].push_back(json{{"src", match.globalImage(e.src)},
                                                 {"dst", match.globalImage(e.dst)},
                                                 {"left", e.leftLabel},
                                                 {"right", e.rightLabel}});
    }
    doc["D"] = json{{"gml", writeGML(*d)}, {"labelChanges", labelChanges}};
    doc["H"] = json{{"gml", writeGML(*applied.result)}};

    json matchLeft = json::array();
    for (int c = 0; c < rule.numVertices(); ++c)
        if (presentInLeft(rule.vertex(c).membership))
            matchLeft.push_back(json::array(
                {rule.vertex(c).externalId, match.globalImage(c)}));
    json matchRight = json::array();
    for (int c = 0; c < rule.numVertices(); ++c)
        if (presentInRight(rule.vertex(c).membership))
            matchRight.push_back(json::array(
                {rule.vertex(c).externalId, applied.comatchRight[c]}));
    doc["matchLeft"] = matchLeft;
    doc["matchRight"] = matchRight;
    return doc.dump(2) + "\n";
}

} // namespace grammod
