#include "grammod/chem.hpp"

#include <array>
#include <cctype>
#include <cmath>

namespace grammod {

namespace {

// Index = element number - 1.
constexpr std::array<std::string_view, 118> kSymbols = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si",
    "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni",
    "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo",
    "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba",
    "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb",
    "Lu", "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
    "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm", "Bk", "Cf",
    "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn",
    "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

constexpr int kB = 5, kC = 6, kN = 7, kO = 8, kF = 9, kP = 15, kS = 16, kCl = 17, kBr = 35,
              kI = 53;

} // namespace

int atomIdOfSymbol(std::string_view symbol) {
    for (std::size_t i = 0; i < kSymbols.size(); ++i)
        if (kSymbols[i] == symbol)
            return static_cast<int>(i) + 1;
    return AtomData::Invalid;
}

std::string_view symbolOfAtomId(int atomId) {
    if (atomId < 1 || atomId > static_cast<int>(kSymbols.size()))
        return {};
    return kSymbols[atomId - 1];
}

bool inOrganicSubset(int atomId) {
    switch (atomId) {
    case kB:
    case kC:
    case kN:
    case kO:
    case kF:
    case kP:
    case kS:
    case kCl:
    case kBr:
    case kI:
        return true;
    default:
        return false;
    }
}

AtomData atomDataOf(std::string_view vertexLabel) {
    std::string_view s = vertexLabel;
    if (s.empty())
        return {};
    int charge = 0;
    char last = s.back();
    if (last == '+' || last == '-') {
        int magnitude = 1;
        s.remove_suffix(1);
        if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back()))) {
            magnitude = s.back() - '0';
            s.remove_suffix(1);
        }
        charge = last == '+' ? magnitude : -magnitude;
    }
    int atomId = atomIdOfSymbol(s);
    if (atomId == AtomData::Invalid)
        return {};
    return AtomData{atomId, charge};
}

BondType bondTypeOf(std::string_view edgeLabel) {
    if (edgeLabel == "-")
        return BondType::Single;
    if (edgeLabel == "=")
        return BondType::Double;
    if (edgeLabel == "#")
        return BondType::Triple;
    if (edgeLabel == ":")
        return BondType::Aromatic;
    return BondType::Invalid;
}

double bondOrderOf(BondType bt) {
    switch (bt) {
    case BondType::Single:
        return 1.0;
    case BondType::Double:
        return 2.0;
    case BondType::Triple:
        return 3.0;
    case BondType::Aromatic:
        return 1.5;
    case BondType::Invalid:
        return 1.0;
    }
    return 1.0;
}

int implicitHydrogenCount(int atomId, double bondOrderSum, bool aromatic) {
    static constexpr std::array<int, 3> none = {0, 0, 0};
    std::array<int, 3> valences = none;
    switch (atomId) {
    case kB:
        valences = {3, 0, 0};
        break;
    case kC:
        valences = {4, 0, 0};
        break;
    case kN:
        valences = {3, 5, 0};
        break;
    case kO:
        valences = {2, 0, 0};
        break;
    case kP:
        valences = {3, 5, 0};
        break;
    case kS:
        valences = {2, 4, 6};
        break;
    case kF:
    case kCl:
    case kBr:
    case kI:
        valences = {1, 0, 0};
        break;
    default:
        return 0;
    }
    for (int v : valences) {
        if (v == 0)
            break;
        if (v >= bondOrderSum)
            return static_cast<int>(std::floor(v - bondOrderSum));
        if (aromatic)
            break; // no valence promotion inside aromatic systems
    }
    return 0;
}

} // namespace grammod
