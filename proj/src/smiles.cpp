#include "grammod/smiles.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "grammod/chem.hpp"
#include "grammod/error.hpp"

namespace grammod {

namespace {

// Shared depth-first builder for SMILES and GraphDFS. Both notations record
// a pre-order traversal with parenthesised branches and numbered ring
// closures; they differ only in their atom and bond tokens.
struct DfsParser {
    std::string_view text;
    bool graphDfs; // GraphDFS token rules instead of strict SMILES
    std::size_t pos = 0;

    DfsParser(std::string_view t, bool dfs) : text(t), graphDfs(dfs) {}

    struct Atom {
        std::string label;
        bool aromatic = false;
        bool shorthand = false; // organic-subset atom: gets implicit hydrogens
        int explicitH = 0;      // bracket-atom hydrogen count
    };
    struct Bond {
        int a = 0, b = 0;
        std::string label;
    };
    struct RingSite {
        int atom = 0;
        std::optional<std::string> bond;
        int col = 0;
    };

    std::vector<Atom> atoms;
    std::vector<Bond> bonds;
    std::map<int, RingSite> openRings;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, 1, static_cast<int>(at) + 1);
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    static bool isBondChar(char c) { return c == '-' || c == '=' || c == '#' || c == ':'; }

    // --- atom tokens ---------------------------------------------------

    std::optional<Atom> tryShorthandAtom() {
        char c = peek();
        // two-letter organic-subset symbols first
        if (c == 'C' && pos + 1 < text.size() && text[pos + 1] == 'l') {
            pos += 2;
            return Atom{"Cl", false, true, 0};
        }
        if (c == 'B' && pos + 1 < text.size() && text[pos + 1] == 'r') {
            pos += 2;
            return Atom{"Br", false, true, 0};
        }
        switch (c) {
        case 'B':
        case 'C':
        case 'N':
        case 'O':
        case 'P':
        case 'S':
        case 'F':
        case 'I':
            ++pos;
            return Atom{std::string(1, c), false, true, 0};
        case 'b':
        case 'c':
        case 'n':
        case 'o':
        case 'p':
        case 's':
            ++pos;
            return Atom{std::string(1, static_cast<char>(std::toupper(c))), true, true, 0};
        default:
            return std::nullopt;
        }
    }

    Atom parseBracketAtomSmiles() {
        std::size_t start = pos;
        ++pos; // '['
        if (eof())
            fail("unterminated bracket atom", start);
        if (std::isdigit(static_cast<unsigned char>(peek())))
            fail("isotopes are not supported", pos);
        Atom a;
        char c = peek();
        if (std::islower(static_cast<unsigned char>(c))) {
            if (c != 'b' && c != 'c' && c != 'n' && c != 'o' && c != 'p' && c != 's')
                fail(std::string("unknown aromatic atom symbol '") + c + "'", pos);
            a.aromatic = true;
            a.label = std::string(1, static_cast<char>(std::toupper(c)));
            ++pos;
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            std::string sym(1, c);
            ++pos;
            if (!eof() && std::islower(static_cast<unsigned char>(peek()))) {
                std::string two = sym + peek();
                if (atomIdOfSymbol(two) != AtomData::Invalid) {
                    sym = two;
                    ++pos;
                }
            }
            if (atomIdOfSymbol(sym) == AtomData::Invalid)
                fail("unknown atom symbol '" + sym + "'", start + 1);
            a.label = sym;
        } else {
            fail("expected an element symbol in bracket atom", pos);
        }
        // hydrogen count: H with optional digit (only meaningful for non-H atoms)
        if (!eof() && peek() == 'H' && a.label != "H") {
            ++pos;
            a.explicitH = 1;
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                a.explicitH = peek() - '0';
                ++pos;
            }
        }
        // charge: optional digit then sign, or sign then optional digit
        int charge = 0;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            char sign = peek();
            ++pos;
            int magnitude = 1;
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                magnitude = peek() - '0';
                ++pos;
            }
            charge = sign == '+' ? magnitude : -magnitude;
        }
        if (eof() || peek() != ']')
            fail("expected ']' in bracket atom", pos);
        ++pos;
        if (charge != 0) {
            if (charge > 1 || charge < -1)
                a.label += std::to_string(std::abs(charge));
            a.label += charge > 0 ? "+" : "-";
        }
        return a;
    }

    Atom parseVerbatimAtom() { // GraphDFS "[...]"
        std::size_t start = pos;
        ++pos; // '['
        std::string label;
        while (!eof() && peek() != ']') {
            label.push_back(peek());
            ++pos;
        }
        if (eof())
            fail("unterminated '[' label", start);
        ++pos;
        if (label.empty())
            fail("empty vertex label '[]'", start);
        return Atom{std::move(label), false, false, 0};
    }

    std::optional<Atom> tryAtom() {
        char c = peek();
        if (c == '[')
            return graphDfs ? parseVerbatimAtom() : parseBracketAtomSmiles();
        if (auto a = tryShorthandAtom())
            return a;
        return std::nullopt;
    }

    // --- bond tokens ---------------------------------------------------

    std::optional<std::string> tryBond() {
        if (eof())
            return std::nullopt;
        char c = peek();
        if (isBondChar(c)) {
            ++pos;
            return std::string(1, c);
        }
        if (graphDfs && c == '{') {
            std::size_t start = pos;
            ++pos;
            std::string label;
            while (!eof() && peek() != '}') {
                label.push_back(peek());
                ++pos;
            }
            if (eof())
                fail("unterminated '{' label", start);
            ++pos;
            if (label.empty())
                fail("empty edge label '{}'", start);
            return label;
        }
        if (!graphDfs && (c == '/' || c == '\\'))
            fail("stereo bonds are not supported", pos);
        return std::nullopt;
    }

    // --- structure -----------------------------------------------------

    std::string defaultBond(int a, int b) const {
        return atoms[a].aromatic && atoms[b].aromatic ? ":" : "-";
    }

    void addBond(int a, int b, std::size_t at, const std::optional<std::string>& label) {
        for (const auto& bond : bonds)
            if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a))
                fail("duplicate edge between atoms", at);
        if (a == b)
            fail("ring closure forms a loop", at);
        bonds.push_back(Bond{a, b, label ? *label : defaultBond(a, b)});
    }

    void closeRing(int number, int atom, std::optional<std::string> bond, std::size_t at) {
        auto it = openRings.find(number);
        if (it == openRings.end()) {
            openRings.emplace(number,
                              RingSite{atom, std::move(bond), static_cast<int>(at)});
            return;
        }
        RingSite site = it->second;
        openRings.erase(it);
        std::optional<std::string> label;
        if (site.bond && bond) {
            if (*site.bond != *bond)
                fail("conflicting bond symbols on ring closure " + std::to_string(number), at);
            label = *site.bond;
        } else if (site.bond) {
            label = *site.bond;
        } else if (bond) {
            label = *bond;
        }
        addBond(site.atom, atom, at, label);
    }

    void parseRingClosure(int fromAtom, std::optional<std::string> bond) {
        std::size_t at = pos;
        int number;
        if (peek() == '%') {
            ++pos;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected two digits after '%'", at);
            int d1 = peek() - '0';
            ++pos;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected two digits after '%'", at);
            int d2 = peek() - '0';
            ++pos;
            number = d1 * 10 + d2;
        } else {
            number = peek() - '0';
            ++pos;
        }
        closeRing(number, fromAtom, std::move(bond), at);
    }

    void run() {
        std::vector<int> branchStack;
        int prev = -1;
        std::optional<std::string> pendingBond;
        std::size_t pendingBondAt = 0;

        while (!eof()) {
            char c = peek();
            if (c == '(') {
                if (prev < 0)
                    fail("branch before any atom", pos);
                if (pendingBond)
                    fail("bond symbol before '('", pendingBondAt);
                branchStack.push_back(prev);
                ++pos;
                continue;
            }
            if (c == ')') {
                if (branchStack.empty())
                    fail("unbalanced ')'", pos);
                if (pendingBond)
                    fail("dangling bond before ')'", pendingBondAt);
                prev = branchStack.back();
                branchStack.pop_back();
                ++pos;
                continue;
            }
            if (c == '.')
                fail("disconnected components ('.') are not supported", pos);
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
                if (prev < 0)
                    fail("ring closure before any atom", pos);
                parseRingClosure(prev, std::move(pendingBond));
                pendingBond.reset();
                continue;
            }
            if (auto bond = tryBond()) {
                if (pendingBond)
                    fail("two bond symbols in a row", pos);
                if (prev < 0)
                    fail("bond before any atom", pos);
                pendingBond = std::move(bond);
                pendingBondAt = pos;
                continue;
            }
            std::size_t atomAt = pos;
            if (auto atom = tryAtom()) {
                int idx = static_cast<int>(atoms.size());
                atoms.push_back(std::move(*atom));
                if (prev >= 0)
                    addBond(prev, idx, atomAt, pendingBond);
                pendingBond.reset();
                prev = idx;
                continue;
            }
            fail(std::string("unexpected character '") + c + "'", pos);
        }
        if (!branchStack.empty())
            fail("unbalanced '('", text.size());
        if (pendingBond)
            fail("dangling bond at end of input", pendingBondAt);
        if (!openRings.empty()) {
            const auto& [number, site] = *openRings.begin();
            fail("unmatched ring closure digit " + std::to_string(number), site.col);
        }
    }

    GraphPtr build(std::string name) {
        run();
        // implicit hydrogens for shorthand atoms
        std::vector<int> hydrogens(atoms.size(), 0);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const Atom& a = atoms[i];
            if (a.shorthand) {
                double sum = 0;
                for (const auto& b : bonds)
                    if (b.a == static_cast<int>(i) || b.b == static_cast<int>(i))
                        sum += bondOrderOf(bondTypeOf(b.label));
                hydrogens[i] =
                    implicitHydrogenCount(atomIdOfSymbol(a.label), sum, a.aromatic);
            } else {
                hydrogens[i] = a.explicitH;
            }
        }
        GraphBuilder gb;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            gb.addVertex(static_cast<int>(i), atoms[i].label);
        int next = static_cast<int>(atoms.size());
        for (const auto& b : bonds)
            gb.addEdge(b.a, b.b, b.label);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            for (int h = 0; h < hydrogens[i]; ++h) {
                gb.addVertex(next, "H");
                gb.addEdge(static_cast<int>(i), next, "-");
                ++next;
            }
        }
        return gb.build(std::move(name));
    }
};

} // namespace

GraphPtr parseSMILES(std::string_view text, std::string name) {
    DfsParser p{text, false};
    return p.build(std::move(name));
}

GraphPtr parseGraphDFS(std::string_view text, std::string name) {
    DfsParser p{text, true};
    return p.build(std::move(name));
}

} // namespace grammod
