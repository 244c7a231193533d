#pragma once

#include <string>
#include <string_view>

#include "grammod/graph.hpp"

namespace grammod {

/// Molecule graph from a SMILES string: atoms, bonds -, =, #, :, branches,
/// ring closures 0-9 and %nn, bracket atoms with H-count and charge.
/// Implicit hydrogens are expanded to explicit "H" vertices joined by "-"
/// edges; lowercase aromatic atoms get uppercase element labels and ":"
/// edges between aromatic neighbours. Isotopes, stereo marks, wildcards and
/// dot-disconnection are not supported and raise ParseError.
GraphPtr parseSMILES(std::string_view text, std::string name = "");

/// General labelled graph from the SMILES-like GraphDFS notation:
/// "[...]"  verbatim vertex label (no implicit hydrogens),
/// "{...}"  verbatim label for the immediately following edge,
/// and otherwise the SMILES structure (organic-subset shorthand atoms with
/// implicit hydrogens, branches, ring closures, bond symbols). Edges with
/// non-chemical labels count as single bonds towards the valence sum.
GraphPtr parseGraphDFS(std::string_view text, std::string name = "");

} // namespace grammod
