#include "grammod/strategy.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <set>
#include <stdexcept>

#include "grammod/derivation.hpp"
#include "grammod/error.hpp"

namespace grammod {

// ---------------------------------------------------------------------------
// predicates

namespace {

long atomValue(const Graph& g, DerivationPredicate::Atom atom, const std::string& label) {
    switch (atom) {
    case DerivationPredicate::Atom::NumVertices:
        return g.numVertices();
    case DerivationPredicate::Atom::NumEdges:
        return g.numEdges();
    case DerivationPredicate::Atom::VLabelCount:
        return g.vLabelCount(label);
    }
    return 0;
}

bool compare(long lhs, DerivationPredicate::Cmp cmp, long rhs) {
    switch (cmp) {
    case DerivationPredicate::Cmp::Le:
        return lhs <= rhs;
    case DerivationPredicate::Cmp::Lt:
        return lhs < rhs;
    case DerivationPredicate::Cmp::Eq:
        return lhs == rhs;
    case DerivationPredicate::Cmp::Ge:
        return lhs >= rhs;
    case DerivationPredicate::Cmp::Gt:
        return lhs > rhs;
    }
    return false;
}

std::string cmpStr(DerivationPredicate::Cmp cmp) {
    switch (cmp) {
    case DerivationPredicate::Cmp::Le:
        return "<=";
    case DerivationPredicate::Cmp::Lt:
        return "<";
    case DerivationPredicate::Cmp::Eq:
        return "==";
    case DerivationPredicate::Cmp::Ge:
        return ">=";
    case DerivationPredicate::Cmp::Gt:
        return ">";
    }
    return "?";
}

} // namespace

bool DerivationPredicate::eval(const std::vector<GraphPtr>& left,
                               const std::vector<GraphPtr>& right) const {
    const auto& graphs = side == Side::Left ? left : right;
    for (const auto& g : graphs) {
        bool holds = compare(atomValue(*g, atom, label), cmp, value);
        if (quant == Quant::All && !holds)
            return false;
        if (quant == Quant::Any && holds)
            return true;
    }
    return quant == Quant::All;
}

std::string DerivationPredicate::str() const {
    std::string atomStr;
    switch (atom) {
    case Atom::NumVertices:
        atomStr = "numVertices";
        break;
    case Atom::NumEdges:
        atomStr = "numEdges";
        break;
    case Atom::VLabelCount:
        atomStr = "vLabelCount(\"" + label + "\")";
        break;
    }
    return std::string(quant == Quant::All ? "all" : "any") + "("
           + (side == Side::Left ? "left" : "right") + ", " + atomStr + " " + cmpStr(cmp) + " "
           + std::to_string(value) + ")";
}

// ---------------------------------------------------------------------------
// AST builders

namespace strat {

namespace {

StrategyPtr make(Strategy s) {
    return std::make_shared<const Strategy>(std::move(s));
}

} // namespace

StrategyPtr sequence(StrategyPtr a, StrategyPtr b) {
    Strategy s;
    s.kind = Strategy::Kind::Sequence;
    s.children = {std::move(a), std::move(b)};
    return make(std::move(s));
}

StrategyPtr parallel(std::vector<StrategyPtr> children) {
    if (children.empty())
        throw std::invalid_argument("parallel strategy needs at least one child");
    Strategy s;
    s.kind = Strategy::Kind::Parallel;
    s.children = std::move(children);
    return make(std::move(s));
}

StrategyPtr rule(RulePtr r) {
    Strategy s;
    s.kind = Strategy::Kind::Rule;
    s.rule = std::move(r);
    return make(std::move(s));
}

StrategyPtr rules(const std::vector<RulePtr>& rs) {
    std::vector<StrategyPtr> children;
    children.reserve(rs.size());
    for (const auto& r : rs)
        children.push_back(rule(r));
    if (children.size() == 1)
        return children.front();
    return parallel(std::move(children));
}

StrategyPtr addSubset(std::vector<GraphPtr> graphs) {
    Strategy s;
    s.kind = Strategy::Kind::AddSubset;
    s.graphs = std::move(graphs);
    return make(std::move(s));
}

StrategyPtr addUniverse(std::vector<GraphPtr> graphs) {
    Strategy s;
    s.kind = Strategy::Kind::AddUniverse;
    s.graphs = std::move(graphs);
    return make(std::move(s));
}

StrategyPtr filterSubset(std::function<bool(const Graph&)> f, std::string desc) {
    Strategy s;
    s.kind = Strategy::Kind::FilterSubset;
    s.filter = std::move(f);
    s.filterDesc = std::move(desc);
    return make(std::move(s));
}

StrategyPtr filterUniverse(std::function<bool(const Graph&)> f, std::string desc) {
    Strategy s;
    s.kind = Strategy::Kind::FilterUniverse;
    s.filter = std::move(f);
    s.filterDesc = std::move(desc);
    return make(std::move(s));
}

StrategyPtr leftPredicate(DerivationPredicate p, StrategyPtr sub) {
    Strategy s;
    s.kind = Strategy::Kind::LeftPredicate;
    s.predicate = std::move(p);
    s.children = {std::move(sub)};
    return make(std::move(s));
}

StrategyPtr rightPredicate(DerivationPredicate p, StrategyPtr sub) {
    Strategy s;
    s.kind = Strategy::Kind::RightPredicate;
    s.predicate = std::move(p);
    s.children = {std::move(sub)};
    return make(std::move(s));
}

StrategyPtr repeat(StrategyPtr sub, std::optional<std::int64_t> bound) {
    if (bound && *bound < 0)
        throw std::invalid_argument("repeat bound must be >= 0");
    Strategy s;
    s.kind = Strategy::Kind::Repeat;
    s.bound = bound;
    s.children = {std::move(sub)};
    return make(std::move(s));
}

StrategyPtr revive(StrategyPtr sub) {
    Strategy s;
    s.kind = Strategy::Kind::Revive;
    s.children = {std::move(sub)};
    return make(std::move(s));
}

} // namespace strat

// ---------------------------------------------------------------------------
// evaluation

bool GraphState::inSubset(int classId) const {
    return std::find(subset.begin(), subset.end(), classId) != subset.end();
}

bool GraphState::inUniverse(int classId) const {
    return std::find(universe.begin(), universe.end(), classId) != universe.end();
}

namespace {

void insertUnique(std::vector<int>& v, int x) {
    if (std::find(v.begin(), v.end(), x) == v.end())
        v.push_back(x);
}

std::string pathString(const std::vector<std::string>& path) {
    std::string out;
    for (const auto& p : path) {
        if (!out.empty())
            out += " > ";
        out += p;
    }
    return out.empty() ? "<root>" : out;
}

} // namespace

struct DerivationGraphEvaluator::Ctx {
    DgBuilder dg;
    std::vector<const DerivationPredicate*> leftPreds;
    std::vector<const DerivationPredicate*> rightPreds;
    std::vector<std::set<int>*> reviveScopes;
    std::vector<std::string> path;

    explicit Ctx(GraphRegistry& registry) : dg(registry) {}
};

DerivationGraphEvaluator::DerivationGraphEvaluator(std::vector<GraphPtr> startingGraphs,
                                                   StrategyPtr strategy, Config config)
    : startingGraphs_(std::move(startingGraphs)), strategy_(std::move(strategy)),
      config_(config) {
    if (!strategy_)
        throw std::invalid_argument("null strategy");
    for (const auto& g : startingGraphs_)
        insertUnique(startClasses_, registry_.registerGraph(g));
}

const DerivationGraph& DerivationGraphEvaluator::dg() const {
    if (!calculated_)
        throw std::logic_error("calc() has not been run");
    return dg_;
}

const GraphState& DerivationGraphEvaluator::finalState() const {
    if (!calculated_)
        throw std::logic_error("calc() has not been run");
    return finalState_;
}

void DerivationGraphEvaluator::calc() {
    if (calculated_)
        throw std::logic_error("calc() already called");
    Ctx ctx(registry_);
    GraphState empty;
    finalState_ = evalNode(strategy_, empty, ctx);
    dg_ = ctx.dg.freeze();
    calculated_ = true;
}

GraphState DerivationGraphEvaluator::evalRule(const Strategy& node, const GraphState& in,
                                              Ctx& ctx) {
    std::vector<UniverseEntry> universe;
    universe.reserve(in.universe.size());
    for (int classId : in.universe)
        universe.push_back(UniverseEntry{classId, registry_.graphOf(classId)});

    GraphState out;
    out.universe = in.universe;

    auto tailGraphsOf = [](const DerivationMatch& m) {
        std::vector<GraphPtr> tails;
        tails.reserve(m.copies.size());
        for (const auto& c : m.copies)
            tails.push_back(c.graph);
        return tails;
    };

    TailFilter tailFilter;
    if (!ctx.leftPreds.empty()) {
        tailFilter = [&](const DerivationMatch& m) {
            std::vector<GraphPtr> tails = tailGraphsOf(m);
            for (const auto* p : ctx.leftPreds)
                if (!p->eval(tails, {}))
                    return false;
            return true;
        };
    }

    enumerateDerivations(
        node.rule, universe, in.subset, registry_, config_,
        [&](const Derivation& d) {
            std::vector<GraphPtr> tails = tailGraphsOf(d.match);
            for (const auto* p : ctx.rightPreds)
                if (!p->eval(tails, d.headGraphs))
                    return true; // rejected candidate, keep enumerating
            ctx.dg.record(d, config_.storeAllMatches);
            for (auto* scope : ctx.reviveScopes)
                scope->insert(d.tailClasses.begin(), d.tailClasses.end());
            for (int head : d.headClasses) {
                if (config_.subsetNewOnly && in.inUniverse(head))
                    continue;
                insertUnique(out.subset, head);
            }
            for (int head : d.headClasses)
                insertUnique(out.universe, head);
            return true;
        },
        tailFilter);
    return out;
}

GraphState DerivationGraphEvaluator::evalNode(const StrategyPtr& nodePtr, const GraphState& in,
                                              Ctx& ctx) {
    const Strategy& node = *nodePtr;
    GraphState out;
    switch (node.kind) {
    case Strategy::Kind::Sequence: {
        ctx.path.push_back("sequence");
        GraphState cur = in;
        for (const auto& child : node.children)
            cur = evalNode(child, cur, ctx);
        ctx.path.pop_back();
        out = std::move(cur);
        break;
    }
    case Strategy::Kind::Parallel: {
        ctx.path.push_back("parallel");
        out.universe = in.universe;
        for (const auto& child : node.children) {
            GraphState res = evalNode(child, in, ctx);
            for (int c : res.subset)
                insertUnique(out.subset, c);
            for (int c : res.universe)
                insertUnique(out.universe, c);
        }
        ctx.path.pop_back();
        break;
    }
    case Strategy::Kind::Rule:
        ctx.path.push_back("rule(" + node.rule->name() + ")");
        out = evalRule(node, in, ctx);
        ctx.path.pop_back();
        break;
    case Strategy::Kind::AddSubset:
    case Strategy::Kind::AddUniverse: {
        out = in;
        for (const auto& g : node.graphs) {
            int classId = registry_.registerGraph(g);
            ctx.dg.touchClass(classId);
            insertUnique(out.universe, classId);
            if (node.kind == Strategy::Kind::AddSubset)
                insertUnique(out.subset, classId);
        }
        break;
    }
    case Strategy::Kind::FilterSubset:
    case Strategy::Kind::FilterUniverse: {
        ctx.path.push_back(node.kind == Strategy::Kind::FilterSubset ? "filterSubset"
                                                                     : "filterUniverse");
        auto keep = [&](int classId) {
            try {
                return node.filter(*registry_.graphOf(classId));
            } catch (const std::exception& e) {
                throw std::runtime_error("predicate evaluation failed at "
                                         + pathString(ctx.path) + ": " + e.what());
            }
        };
        out = in;
        if (node.kind == Strategy::Kind::FilterUniverse) {
            out.universe.erase(
                std::remove_if(out.universe.begin(), out.universe.end(),
                               [&](int c) { return !keep(c); }),
                out.universe.end());
        }
        out.subset.erase(std::remove_if(out.subset.begin(), out.subset.end(),
                                        [&](int c) { return !keep(c); }),
                         out.subset.end());
        ctx.path.pop_back();
        break;
    }
    case Strategy::Kind::LeftPredicate:
    case Strategy::Kind::RightPredicate: {
        bool isLeft = node.kind == Strategy::Kind::LeftPredicate;
        ctx.path.push_back((isLeft ? std::string("leftPredicate[") : "rightPredicate[")
                           + node.predicate.str() + "]");
        auto& stack = isLeft ? ctx.leftPreds : ctx.rightPreds;
        stack.push_back(&node.predicate);
        out = evalNode(node.children[0], in, ctx);
        stack.pop_back();
        ctx.path.pop_back();
        break;
    }
    case Strategy::Kind::Repeat: {
        ctx.path.push_back("repeat");
        std::int64_t bound = node.bound.value_or(config_.repeatCap);
        GraphState cur = in;
        bool fixpoint = false;
        for (std::int64_t i = 0; i < bound && !fixpoint; ++i) {
            GraphState next = evalNode(node.children[0], cur, ctx);
            bool grew = false;
            for (int c : next.universe)
                grew = grew || !cur.inUniverse(c);
            cur = std::move(next);
            fixpoint = cur.subset.empty() || !grew;
        }
        if (!node.bound && !fixpoint)
            std::cerr << "warning: repeat reached the iteration cap (" << config_.repeatCap
                      << ")\n";
        ctx.path.pop_back();
        out = std::move(cur);
        break;
    }
    case Strategy::Kind::Revive: {
        ctx.path.push_back("revive");
        std::set<int> used;
        ctx.reviveScopes.push_back(&used);
        out = evalNode(node.children[0], in, ctx);
        ctx.reviveScopes.pop_back();
        for (int c : in.subset)
            if (!used.count(c) && out.inUniverse(c))
                insertUnique(out.subset, c);
        ctx.path.pop_back();
        break;
    }
    }
    // machine check: the state invariant holds after every node
    for (int c : out.subset)
        if (!out.inUniverse(c))
            throw std::logic_error("state invariant violated: subset not within universe at "
                                   + pathString(ctx.path));
    return out;
}

// ---------------------------------------------------------------------------
// strategy parsing

namespace {

struct StratLexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    struct Token {
        enum Kind {
            Ident,
            String,
            Int,
            Seq, // >>
            Cmp, // <= < == >= >
            LParen,
            RParen,
            LBracket,
            RBracket,
            Comma,
            End
        } kind;
        std::string text;
        long intValue = 0;
        int line = 1, col = 1;
    };

    explicit StratLexer(std::string_view t) : text(t) {}

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
        auto two = [&](char a, char b) {
            return c == a && pos + 1 < text.size() && text[pos + 1] == b;
        };
        if (two('>', '>')) {
            advance();
            advance();
            t.kind = Token::Seq;
            return t;
        }
        if (two('<', '=') || two('>', '=') || two('=', '=')) {
            t.kind = Token::Cmp;
            t.text = std::string{c, text[pos + 1]};
            advance();
            advance();
            return t;
        }
        if (c == '<' || c == '>') {
            advance();
            t.kind = Token::Cmp;
            t.text = std::string(1, c);
            return t;
        }
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
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                s.push_back(text[pos]);
                advance();
            }
            t.kind = Token::Int;
            t.intValue = std::stol(s);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
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

struct StratParser {
    StratLexer lexer;
    StratLexer::Token tok;
    const StrategyResolver& resolver;

    StratParser(std::string_view text, const StrategyResolver& r) : lexer(text), resolver(r) {
        tok = lexer.next();
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok.line, tok.col); }

    void expect(StratLexer::Token::Kind kind, const char* what) {
        if (tok.kind != kind)
            fail(std::string("expected ") + what);
        tok = lexer.next();
    }

    DerivationPredicate::Cmp parseCmp() {
        if (tok.kind != StratLexer::Token::Cmp)
            fail("expected a comparison operator");
        std::string s = tok.text;
        tok = lexer.next();
        if (s == "<=")
            return DerivationPredicate::Cmp::Le;
        if (s == "<")
            return DerivationPredicate::Cmp::Lt;
        if (s == "==")
            return DerivationPredicate::Cmp::Eq;
        if (s == ">=")
            return DerivationPredicate::Cmp::Ge;
        return DerivationPredicate::Cmp::Gt;
    }

    void parseAtom(DerivationPredicate& p) {
        if (tok.kind != StratLexer::Token::Ident)
            fail("expected numVertices, numEdges or vLabelCount");
        std::string name = tok.text;
        tok = lexer.next();
        if (name == "numVertices") {
            p.atom = DerivationPredicate::Atom::NumVertices;
        } else if (name == "numEdges") {
            p.atom = DerivationPredicate::Atom::NumEdges;
        } else if (name == "vLabelCount") {
            p.atom = DerivationPredicate::Atom::VLabelCount;
            expect(StratLexer::Token::LParen, "'('");
            if (tok.kind != StratLexer::Token::String)
                fail("expected a quoted label");
            p.label = tok.text;
            tok = lexer.next();
            expect(StratLexer::Token::RParen, "')'");
        } else {
            fail("unknown predicate atom '" + name + "'");
        }
    }

    long parseInt() {
        if (tok.kind != StratLexer::Token::Int)
            fail("expected an integer");
        long v = tok.intValue;
        tok = lexer.next();
        return v;
    }

    DerivationPredicate parseDerivationPredicate() {
        DerivationPredicate p;
        if (tok.kind != StratLexer::Token::Ident || (tok.text != "all" && tok.text != "any"))
            fail("expected 'all' or 'any'");
        p.quant = tok.text == "all" ? DerivationPredicate::Quant::All
                                    : DerivationPredicate::Quant::Any;
        tok = lexer.next();
        expect(StratLexer::Token::LParen, "'('");
        if (tok.kind != StratLexer::Token::Ident || (tok.text != "left" && tok.text != "right"))
            fail("expected 'left' or 'right'");
        p.side = tok.text == "left" ? DerivationPredicate::Side::Left
                                    : DerivationPredicate::Side::Right;
        tok = lexer.next();
        expect(StratLexer::Token::Comma, "','");
        parseAtom(p);
        p.cmp = parseCmp();
        p.value = parseInt();
        expect(StratLexer::Token::RParen, "')'");
        return p;
    }

    std::function<bool(const Graph&)> parseGraphPredicate(std::string& desc) {
        DerivationPredicate p; // reuse the atom/cmp machinery
        parseAtom(p);
        p.cmp = parseCmp();
        p.value = parseInt();
        desc = p.str();
        auto atom = p.atom;
        auto label = p.label;
        auto cmp = p.cmp;
        auto value = p.value;
        return [atom, label, cmp, value](const Graph& g) {
            return compare(atomValue(g, atom, label), cmp, value);
        };
    }

    std::vector<std::string> parseRefList() {
        std::vector<std::string> refs;
        while (true) {
            if (tok.kind != StratLexer::Token::Ident && tok.kind != StratLexer::Token::String)
                fail("expected a name");
            refs.push_back(tok.text);
            tok = lexer.next();
            if (tok.kind != StratLexer::Token::Comma)
                return refs;
            tok = lexer.next();
        }
    }

    std::vector<GraphPtr> resolveGraphs(int line, int col) {
        std::vector<GraphPtr> out;
        for (const auto& r : parseRefList()) {
            auto gs = resolver.graphs ? resolver.graphs(r) : std::vector<GraphPtr>{};
            if (gs.empty())
                throw ParseError("unknown graph '" + r + "'", line, col);
            out.insert(out.end(), gs.begin(), gs.end());
        }
        return out;
    }

    StrategyPtr parseTerm() {
        int line = tok.line, col = tok.col;
        if (tok.kind == StratLexer::Token::LBracket) {
            tok = lexer.next();
            std::vector<StrategyPtr> children;
            children.push_back(parseStrat());
            while (tok.kind == StratLexer::Token::Comma) {
                tok = lexer.next();
                children.push_back(parseStrat());
            }
            expect(StratLexer::Token::RBracket, "']'");
            return strat::parallel(std::move(children));
        }
        if (tok.kind == StratLexer::Token::String) {
            std::string name = tok.text;
            tok = lexer.next();
            return ruleLeaf(name, line, col);
        }
        if (tok.kind != StratLexer::Token::Ident)
            fail("expected a strategy");
        std::string name = tok.text;
        tok = lexer.next();
        if (name == "addSubset" || name == "addUniverse") {
            expect(StratLexer::Token::LParen, "'('");
            std::vector<GraphPtr> graphs = resolveGraphs(line, col);
            expect(StratLexer::Token::RParen, "')'");
            return name == "addSubset" ? strat::addSubset(std::move(graphs))
                                       : strat::addUniverse(std::move(graphs));
        }
        if (name == "filterSubset" || name == "filterUniverse") {
            expect(StratLexer::Token::LParen, "'('");
            std::string desc;
            auto f = parseGraphPredicate(desc);
            expect(StratLexer::Token::RParen, "')'");
            return name == "filterSubset" ? strat::filterSubset(std::move(f), desc)
                                          : strat::filterUniverse(std::move(f), desc);
        }
        if (name == "leftPredicate" || name == "rightPredicate") {
            expect(StratLexer::Token::LBracket, "'['");
            DerivationPredicate p = parseDerivationPredicate();
            expect(StratLexer::Token::RBracket, "']'");
            if (name == "leftPredicate" && p.side != DerivationPredicate::Side::Left)
                throw ParseError("left predicates may only reference the left side", line, col);
            expect(StratLexer::Token::LParen, "'('");
            StrategyPtr sub = parseStrat();
            expect(StratLexer::Token::RParen, "')'");
            return name == "leftPredicate" ? strat::leftPredicate(p, std::move(sub))
                                           : strat::rightPredicate(p, std::move(sub));
        }
        if (name == "repeat") {
            std::optional<std::int64_t> bound;
            if (tok.kind == StratLexer::Token::LBracket) {
                tok = lexer.next();
                bound = parseInt();
                expect(StratLexer::Token::RBracket, "']'");
            }
            expect(StratLexer::Token::LParen, "'('");
            StrategyPtr sub = parseStrat();
            expect(StratLexer::Token::RParen, "')'");
            return strat::repeat(std::move(sub), bound);
        }
        if (name == "revive") {
            expect(StratLexer::Token::LParen, "'('");
            StrategyPtr sub = parseStrat();
            expect(StratLexer::Token::RParen, "')'");
            return strat::revive(std::move(sub));
        }
        return ruleLeaf(name, line, col);
    }

    StrategyPtr ruleLeaf(const std::string& name, int line, int col) {
        auto rs = resolver.rules ? resolver.rules(name) : std::vector<RulePtr>{};
        if (rs.empty())
            throw ParseError("unknown rule '" + name + "'", line, col);
        return strat::rules(rs);
    }

    StrategyPtr parseStrat() {
        StrategyPtr s = parseTerm();
        while (tok.kind == StratLexer::Token::Seq) {
            tok = lexer.next();
            StrategyPtr rhs = parseTerm();
            s = strat::sequence(std::move(s), std::move(rhs));
        }
        return s;
    }

    StrategyPtr parse() {
        StrategyPtr s = parseStrat();
        if (tok.kind != StratLexer::Token::End)
            fail("trailing content after strategy");
        return s;
    }
};

} // namespace

StrategyPtr parseStrategy(std::string_view text, const StrategyResolver& resolver) {
    StratParser p(text, resolver);
    return p.parse();
}

} // namespace grammod
