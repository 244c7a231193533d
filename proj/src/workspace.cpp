#include "grammod/workspace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "grammod/error.hpp"
#include "grammod/gml.hpp"
#include "grammod/smiles.hpp"

namespace grammod {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

// graphs have their display name rebuilt into the object so exports carry it
GraphPtr withName(const GraphPtr& g, const std::string& name) {
    if (g->name() == name)
        return g;
    GraphBuilder b;
    for (int v = 0; v < g->numVertices(); ++v)
        b.addVertex(g->externalId(v), g->vertexLabel(v));
    for (const auto& e : g->edges())
        b.addEdge(g->externalId(e.src), g->externalId(e.dst), e.label);
    return b.build(name);
}

RulePtr withName(const RulePtr& r, const std::string& name) {
    if (r->name() == name)
        return r;
    RuleBuilder b;
    for (const auto& v : r->vertices())
        b.addVertex(v.externalId, v.membership, v.leftLabel, v.rightLabel);
    for (const auto& e : r->coreEdges())
        b.addEdge(r->vertex(e.src).externalId, r->vertex(e.dst).externalId, e.membership,
                  e.leftLabel, e.rightLabel);
    return b.build(name);
}

} // namespace

std::string Workspace::addGraph(GraphPtr g, std::string name) {
    if (name.empty())
        name = g->name();
    if (name.empty())
        name = "g" + std::to_string(graphs_.size());
    if (hasGraph(name))
        throw UsageError("duplicate graph name '" + name + "'");
    g = withName(g, name);
    registry_.registerGraph(g);
    graphs_.emplace_back(name, std::move(g));
    return name;
}

std::string Workspace::addRule(RulePtr r, std::string name) {
    if (name.empty())
        name = r->name();
    if (name.empty())
        name = "r" + std::to_string(rules_.size());
    if (hasRule(name))
        throw UsageError("duplicate rule name '" + name + "'");
    r = withName(r, name);
    rules_.emplace_back(name, std::move(r));
    return name;
}

std::string Workspace::loadGraphGmlFile(const std::string& path, std::string name) {
    return addGraph(parseGraphGML(readFile(path), name), name);
}

std::string Workspace::loadGraphGmlString(std::string_view text, std::string name) {
    return addGraph(parseGraphGML(text, name), name);
}

std::string Workspace::loadSmiles(std::string_view text, std::string name) {
    GraphPtr g = parseSMILES(text, name.empty() ? std::string(text) : name);
    return addGraph(std::move(g), std::move(name));
}

std::string Workspace::loadGraphDfs(std::string_view text, std::string name) {
    GraphPtr g = parseGraphDFS(text, name.empty() ? std::string(text) : name);
    return addGraph(std::move(g), std::move(name));
}

std::string Workspace::loadRuleGmlFile(const std::string& path, bool invert, std::string name) {
    return addRule(parseRuleGML(readFile(path), invert), std::move(name));
}

std::string Workspace::loadRuleGmlString(std::string_view text, bool invert, std::string name) {
    return addRule(parseRuleGML(text, invert), std::move(name));
}

namespace {

std::string quoteField(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

struct ManifestLineParser {
    const std::string& line;
    int lineNo;
    std::size_t pos = 0;

    void skipSpace() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
    }

    bool done() {
        skipSpace();
        return pos >= line.size();
    }

    std::string word() {
        skipSpace();
        if (pos >= line.size())
            throw ParseError("unexpected end of manifest line", lineNo, static_cast<int>(pos) + 1);
        if (line[pos] == '"') {
            ++pos;
            std::string s;
            while (pos < line.size() && line[pos] != '"') {
                char c = line[pos];
                if (c == '\\' && pos + 1 < line.size())
                    c = line[++pos];
                s.push_back(c);
                ++pos;
            }
            if (pos >= line.size())
                throw ParseError("unterminated string in manifest", lineNo,
                                 static_cast<int>(pos) + 1);
            ++pos;
            return s;
        }
        std::string s;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            s.push_back(line[pos]);
            ++pos;
        }
        return s;
    }
};

} // namespace

std::string Workspace::manifestLine(const std::string& kind, const std::string& payload,
                                    bool invert, const std::string& name) {
    std::string out = kind + " " + quoteField(payload);
    if (invert)
        out += " invert";
    if (!name.empty())
        out += " name " + quoteField(name);
    return out;
}

void Workspace::replayManifest(const std::string& path) {
    std::istringstream in(readFile(path));
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        ManifestLineParser p{line, lineNo};
        if (p.done())
            continue;
        std::string kind = p.word();
        std::string payload = p.word();
        bool invert = false;
        std::string name;
        while (!p.done()) {
            std::string key = p.word();
            if (key == "invert") {
                invert = true;
            } else if (key == "name") {
                name = p.word();
            } else {
                throw ParseError("unknown manifest field '" + key + "'", lineNo, 1);
            }
        }
        try {
            if (kind == "gml")
                loadGraphGmlFile(payload, name);
            else if (kind == "smiles")
                loadSmiles(payload, name);
            else if (kind == "dfs")
                loadGraphDfs(payload, name);
            else if (kind == "rulegml")
                loadRuleGmlFile(payload, invert, name);
            else
                throw ParseError("unknown manifest entry kind '" + kind + "'", lineNo, 1);
        } catch (const ParseError&) {
            throw;
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineNo) + ": " + e.what());
        }
    }
}

GraphPtr Workspace::findGraph(const std::string& name) const {
    for (const auto& [n, g] : graphs_)
        if (n == name)
            return g;
    throw UsageError("unknown graph '" + name + "'");
}

RulePtr Workspace::findRule(const std::string& name) const {
    for (const auto& [n, r] : rules_)
        if (n == name)
            return r;
    throw UsageError("unknown rule '" + name + "'");
}

bool Workspace::hasGraph(const std::string& name) const {
    for (const auto& [n, g] : graphs_) {
        (void)g;
        if (n == name)
            return true;
    }
    return false;
}

bool Workspace::hasRule(const std::string& name) const {
    for (const auto& [n, r] : rules_) {
        (void)r;
        if (n == name)
            return true;
    }
    return false;
}

std::vector<GraphPtr> Workspace::allGraphs() const {
    std::vector<GraphPtr> out;
    out.reserve(graphs_.size());
    for (const auto& [n, g] : graphs_) {
        (void)n;
        out.push_back(g);
    }
    return out;
}

std::vector<RulePtr> Workspace::allRules() const {
    std::vector<RulePtr> out;
    out.reserve(rules_.size());
    for (const auto& [n, r] : rules_) {
        (void)n;
        out.push_back(r);
    }
    return out;
}

} // namespace grammod
