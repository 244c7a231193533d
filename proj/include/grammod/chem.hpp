#pragma once

#include <string>
#include <string_view>

namespace grammod {

/// Chemical reading of a vertex label: element symbol plus an optional
/// trailing charge. Labels that do not parse are Invalid rather than errors,
/// so non-chemical graphs can flow through the same interfaces.
struct AtomData {
    static constexpr int Invalid = 0;

    int atomId = Invalid; // element number 1..118, or Invalid
    int charge = 0;

    bool valid() const { return atomId != Invalid; }
};

enum class BondType { Invalid, Single, Double, Triple, Aromatic };

/// Parses "<Symbol>[<digit>][+|-]", e.g. "C", "O-", "H+", "Fe2+".
/// Anything else yields (Invalid, 0).
AtomData atomDataOf(std::string_view vertexLabel);

/// Exactly "-", "=", "#", ":"; anything else is Invalid.
BondType bondTypeOf(std::string_view edgeLabel);

/// 1, 2, 3, 1.5 for the four chemical bonds; unknown labels count as a
/// single bond when summing valences.
double bondOrderOf(BondType bt);

/// Element number for a periodic-table symbol, or AtomData::Invalid.
int atomIdOfSymbol(std::string_view symbol);
/// Symbol for an element number; empty for Invalid.
std::string_view symbolOfAtomId(int atomId);

/// True for the organic subset B, C, N, O, P, S, F, Cl, Br, I.
bool inOrganicSubset(int atomId);

/// Implicit hydrogen count from the default-valence table
/// (B 3, C 4, N 3/5, O 2, P 3/5, S 2/4/6, halogens 1): the lowest valence
/// >= the bond-order sum, minus that sum, floored; negative deficits clamp
/// to 0. Aromatic atoms never promote past their lowest valence, which is
/// what makes N-substituted and fused aromatic rings come out right.
/// Elements outside the organic subset get 0.
int implicitHydrogenCount(int atomId, double bondOrderSum, bool aromatic);

} // namespace grammod
