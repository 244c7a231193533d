#include "grammod/gml.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <ostream>

#include <vector>

namespace grammod {

namespace {

struct GmlEntry {
    enum class Kind { Int, String, List };
    std::string key;
    Kind kind = Kind::Int;
    long intValue = 0;
    std::string strValue;
    std::vector<GmlEntry> list;
    int line = 0, col = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    struct Token {
        enum Kind { Ident, Int, String, LBracket, RBracket, End } kind;
        std::string text;
        long intValue = 0;
        int line = 1, col = 1;
    };

    Token next() {
        skipWhitespaceAndComments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = text_[pos_];
        if (c == '[') {
            advance();
            t.kind = Token::LBracket;
            return t;
        }
        if (c == ']') {
            advance();
            t.kind = Token::RBracket;
            return t;
        }
        if (c == '"') {
            advance();
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                char d = text_[pos_];
                if (d == '\\' && pos_ + 1 < text_.size()) {
                    advance();
                    d = text_[pos_];
                }
                s.push_back(d);
                advance();
            }
            if (pos_ >= text_.size())
                throw ParseError("unterminated string", t.line, t.col);
            advance(); // closing quote
            t.kind = Token::String;
            t.text = std::move(s);
            return t;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string s(1, c);
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s.push_back(text_[pos_]);
                advance();
            }
            if (s == "-")
                throw ParseError("stray '-'", t.line, t.col);
            t.kind = Token::Int;
            t.intValue = std::stol(s);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
                       || text_[pos_] == '_')) {
                s.push_back(text_[pos_]);
                advance();
            }
            t.kind = Token::Ident;
            t.text = std::move(s);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipWhitespaceAndComments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

    GmlEntry parseDocument() {
        GmlEntry root = parseEntry();
        if (tok_.kind != Lexer::Token::End)
            throw ParseError("trailing content after document", tok_.line, tok_.col);
        return root;
    }

private:
    GmlEntry parseEntry() {
        if (tok_.kind != Lexer::Token::Ident)
            throw ParseError("expected a key", tok_.line, tok_.col);
        GmlEntry e;
        e.key = tok_.text;
        e.line = tok_.line;
        e.col = tok_.col;
        tok_ = lexer_.next();
        switch (tok_.kind) {
        case Lexer::Token::Int:
            e.kind = GmlEntry::Kind::Int;
            e.intValue = tok_.intValue;
            tok_ = lexer_.next();
            break;
        case Lexer::Token::String:
            e.kind = GmlEntry::Kind::String;
            e.strValue = tok_.text;
            tok_ = lexer_.next();
            break;
        case Lexer::Token::LBracket: {
            tok_ = lexer_.next();
            e.kind = GmlEntry::Kind::List;
            while (tok_.kind != Lexer::Token::RBracket) {
                if (tok_.kind == Lexer::Token::End)
                    throw ParseError("unterminated list for key '" + e.key + "'", e.line, e.col);
                e.list.push_back(parseEntry());
            }
            tok_ = lexer_.next();
            break;
        }
        default:
            throw ParseError("expected a value for key '" + e.key + "'", tok_.line, tok_.col);
        }
        return e;
    }

    Lexer lexer_;
    Lexer::Token tok_;
};

[[noreturn]] void fail(const GmlEntry& at, const std::string& msg) {
    throw ParseError(msg, at.line, at.col);
}

void unknownKey(const GmlEntry& e, const std::string& where, const GmlOptions& opts) {
    if (opts.strict)
        fail(e, "unknown key '" + e.key + "' in " + where);
    if (opts.warn)
        *opts.warn << "warning: ignoring unknown key '" << e.key << "' in " << where << "\n";
}

const std::vector<GmlEntry>& asList(const GmlEntry& e) {
    if (e.kind != GmlEntry::Kind::List)
        fail(e, "'" + e.key + "' must be a [ ... ] list");
    return e.list;
}

long asInt(const GmlEntry& e) {
    if (e.kind != GmlEntry::Kind::Int)
        fail(e, "'" + e.key + "' must be an integer");
    return e.intValue;
}

const std::string& asString(const GmlEntry& e) {
    if (e.kind != GmlEntry::Kind::String)
        fail(e, "'" + e.key + "' must be a quoted string");
    return e.strValue;
}

struct GmlNode {
    int id = 0;
    std::string label;
    int line = 0, col = 0;
};

struct GmlEdge {
    int source = 0, target = 0;
    std::string label;
    int line = 0, col = 0;
};

GmlNode readNode(const GmlEntry& e, const GmlOptions& opts) {
    GmlNode n;
    n.line = e.line;
    n.col = e.col;
    std::optional<long> id;
    std::optional<std::string> label;
    for (const auto& sub : asList(e)) {
        if (sub.key == "id")
            id = asInt(sub);
        else if (sub.key == "label")
            label = asString(sub);
        else
            unknownKey(sub, "node", opts);
    }
    if (!id)
        fail(e, "node without id");
    if (!label)
        fail(e, "node " + std::to_string(*id) + " without label");
    n.id = static_cast<int>(*id);
    n.label = *label;
    return n;
}

GmlEdge readEdge(const GmlEntry& e, const GmlOptions& opts) {
    GmlEdge out;
    out.line = e.line;
    out.col = e.col;
    std::optional<long> source, target;
    std::optional<std::string> label;
    for (const auto& sub : asList(e)) {
        if (sub.key == "source")
            source = asInt(sub);
        else if (sub.key == "target")
            target = asInt(sub);
        else if (sub.key == "label")
            label = asString(sub);
        else
            unknownKey(sub, "edge", opts);
    }
    if (!source || !target)
        fail(e, "edge without source/target");
    if (!label)
        fail(e, "edge " + std::to_string(*source) + " -- " + std::to_string(*target)
                    + " without label");
    out.source = static_cast<int>(*source);
    out.target = static_cast<int>(*target);
    out.label = *label;
    return out;
}

struct Section {
    std::vector<GmlNode> nodes;
    std::vector<GmlEdge> edges;
};

Section readSection(const GmlEntry& e, const GmlOptions& opts) {
    Section s;
    for (const auto& sub : asList(e)) {
        if (sub.key == "node")
            s.nodes.push_back(readNode(sub, opts));
        else if (sub.key == "edge")
            s.edges.push_back(readEdge(sub, opts));
        else
            unknownKey(sub, "'" + e.key + "'", opts);
    }
    return s;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

GraphPtr parseGraphGML(std::string_view text, std::string name, const GmlOptions& opts) {
    GmlEntry root = Parser(text).parseDocument();
    if (root.key != "graph")
        fail(root, "expected a 'graph' document, got '" + root.key + "'");
    Section s = readSection(root, opts);
    GraphBuilder b;
    for (const auto& n : s.nodes) {
        try {
            b.addVertex(n.id, n.label);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what(), n.line, n.col);
        }
    }
    for (const auto& e : s.edges) {
        try {
            b.addEdge(e.source, e.target, e.label);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what(), e.line, e.col);
        }
    }
    return b.build(std::move(name));
}

RulePtr parseRuleGML(std::string_view text, bool invert, const GmlOptions& opts) {
    GmlEntry root = Parser(text).parseDocument();
    if (root.key != "rule")
        fail(root, "expected a 'rule' document, got '" + root.key + "'");

    std::string ruleId;
    std::optional<Section> left, context, right;
    for (const auto& sub : asList(root)) {
        if (sub.key == "ruleID") {
            ruleId = asString(sub);
        } else if (sub.key == "left" || sub.key == "context" || sub.key == "right") {
            // invert swaps the left and right sections before interpretation
            std::string key = sub.key;
            if (invert)
                key = key == "left" ? "right" : key == "right" ? "left" : key;
            auto& slot = key == "left" ? left : key == "context" ? context : right;
            if (slot)
                fail(sub, "duplicate '" + sub.key + "' section");
            slot = readSection(sub, opts);
        } else {
            unknownKey(sub, "rule", opts);
        }
    }
    Section l = left.value_or(Section{});
    Section k = context.value_or(Section{});
    Section r = right.value_or(Section{});

    struct VertexSpec {
        std::optional<std::string> left, context, right;
        int line = 0, col = 0;
    };
    std::map<int, VertexSpec> vertexSpecs;
    auto addVertexSpec = [&](const GmlNode& n, int which) { // 0=left 1=context 2=right
        auto& spec = vertexSpecs[n.id];
        if (spec.line == 0) {
            spec.line = n.line;
            spec.col = n.col;
        }
        auto& slot = which == 0 ? spec.left : which == 1 ? spec.context : spec.right;
        if (slot)
            throw ParseError("vertex " + std::to_string(n.id) + " listed twice in a section",
                             n.line, n.col);
        slot = n.label;
    };
    for (const auto& n : l.nodes)
        addVertexSpec(n, 0);
    for (const auto& n : k.nodes)
        addVertexSpec(n, 1);
    for (const auto& n : r.nodes)
        addVertexSpec(n, 2);

    struct EdgeSpec {
        int source = 0, target = 0;
        std::optional<std::string> left, context, right;
        int line = 0, col = 0;
    };
    std::map<std::pair<int, int>, EdgeSpec> edgeSpecs;
    auto addEdgeSpec = [&](const GmlEdge& e, int which) {
        std::pair<int, int> key = std::minmax(e.source, e.target);
        auto& spec = edgeSpecs[key];
        if (spec.line == 0) {
            spec.source = e.source;
            spec.target = e.target;
            spec.line = e.line;
            spec.col = e.col;
        }
        auto& slot = which == 0 ? spec.left : which == 1 ? spec.context : spec.right;
        if (slot)
            throw ParseError("edge " + std::to_string(e.source) + " -- "
                                 + std::to_string(e.target) + " listed twice in a section",
                             e.line, e.col);
        slot = e.label;
    };
    for (const auto& e : l.edges)
        addEdgeSpec(e, 0);
    for (const auto& e : k.edges)
        addEdgeSpec(e, 1);
    for (const auto& e : r.edges)
        addEdgeSpec(e, 2);

    RuleBuilder b;
    try {
        for (const auto& [id, spec] : vertexSpecs) {
            if (spec.context && (spec.left || spec.right))
                throw ParseError("vertex " + std::to_string(id)
                                     + " in left/right and context simultaneously",
                                 spec.line, spec.col);
            if (spec.context)
                b.addVertex(id, Membership::Context, *spec.context, *spec.context);
            else if (spec.left && spec.right)
                b.addVertex(id, Membership::Context, *spec.left, *spec.right);
            else if (spec.left)
                b.addVertex(id, Membership::LeftOnly, *spec.left, "");
            else
                b.addVertex(id, Membership::RightOnly, "", *spec.right);
        }
        for (const auto& [key, spec] : edgeSpecs) {
            (void)key;
            if (spec.context && (spec.left || spec.right))
                throw ParseError("edge " + std::to_string(spec.source) + " -- "
                                     + std::to_string(spec.target)
                                     + " in left/right and context simultaneously",
                                 spec.line, spec.col);
            try {
                if (spec.context)
                    b.addEdge(spec.source, spec.target, Membership::Context, *spec.context,
                              *spec.context);
                else if (spec.left && spec.right)
                    b.addEdge(spec.source, spec.target, Membership::Context, *spec.left,
                              *spec.right);
                else if (spec.left)
                    b.addEdge(spec.source, spec.target, Membership::LeftOnly, *spec.left, "");
                else
                    b.addEdge(spec.source, spec.target, Membership::RightOnly, "", *spec.right);
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), spec.line, spec.col);
            }
        }
        return b.build(ruleId);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), root.line, root.col);
    }
}

std::string writeGML(const Graph& g) {
    std::string out = "graph [\n";
    for (int v = 0; v < g.numVertices(); ++v)
        out += "  node [ id " + std::to_string(g.externalId(v)) + " label "
               + quoted(g.vertexLabel(v)) + " ]\n";
    for (const auto& e : g.edges())
        out += "  edge [ source " + std::to_string(g.externalId(e.src)) + " target "
               + std::to_string(g.externalId(e.dst)) + " label " + quoted(e.label) + " ]\n";
    out += "]\n";
    return out;
}

// A delete+create edge pair on one vertex pair lands in both the left and
// right sections, which reparses as a label-changing context edge: the
// closest rule this dialect can express, with identical application
// behaviour but a larger interface.
std::string writeGML(const Rule& r) {
    std::string left, context, right;
    auto nodeLine = [](int id, const std::string& label) {
        return "    node [ id " + std::to_string(id) + " label " + quoted(label) + " ]\n";
    };
    auto edgeLine = [](int src, int dst, const std::string& label) {
        return "    edge [ source " + std::to_string(src) + " target " + std::to_string(dst)
               + " label " + quoted(label) + " ]\n";
    };
    for (const auto& v : r.vertices()) {
        switch (v.membership) {
        case Membership::LeftOnly:
            left += nodeLine(v.externalId, v.leftLabel);
            break;
        case Membership::RightOnly:
            right += nodeLine(v.externalId, v.rightLabel);
            break;
        case Membership::Context:
            if (v.leftLabel == v.rightLabel) {
                context += nodeLine(v.externalId, v.leftLabel);
            } else {
                left += nodeLine(v.externalId, v.leftLabel);
                right += nodeLine(v.externalId, v.rightLabel);
            }
            break;
        }
    }
    for (const auto& e : r.coreEdges()) {
        int src = r.vertex(e.src).externalId;
        int dst = r.vertex(e.dst).externalId;
        switch (e.membership) {
        case Membership::LeftOnly:
            left += edgeLine(src, dst, e.leftLabel);
            break;
        case Membership::RightOnly:
            right += edgeLine(src, dst, e.rightLabel);
            break;
        case Membership::Context:
            if (e.leftLabel == e.rightLabel) {
                context += edgeLine(src, dst, e.leftLabel);
            } else {
                left += edgeLine(src, dst, e.leftLabel);
                right += edgeLine(src, dst, e.rightLabel);
            }
            break;
        }
    }
    std::string out = "rule [\n";
    if (!r.name().empty())
        out += "  ruleID " + quoted(r.name()) + "\n";
    if (!left.empty())
        out += "  left [\n" + left + "  ]\n";
    if (!context.empty())
        out += "  context [\n" + context + "  ]\n";
    if (!right.empty())
        out += "  right [\n" + right + "  ]\n";
    out += "]\n";
    return out;
}

} // namespace grammod
