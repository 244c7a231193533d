#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace grammod {

/// Engine knobs, exposed through the CLI config file as key=value lines
/// with "#" comments.
struct Config {
    /// Default match cap for the morphism-counting CLI command.
    std::int64_t maxMatches = 1;
    /// Cap on the number of elements (vertices + edges) of a common
    /// overlap enumerated for the most general composition operator.
    int commonOverlapCap = 8;
    /// Restrict common overlaps to connected ones.
    bool commonConnected = false;
    /// Safety bound for unbounded repeat strategies.
    std::int64_t repeatCap = std::int64_t{1} << 20;
    /// Restrict a rule strategy's output subset to classes the universe did
    /// not already contain.
    bool subsetNewOnly = false;
    /// Keep a witness match for every derivation found, not just the first
    /// per hyperedge.
    bool storeAllMatches = false;
    /// Universe graphs above this vertex count are skipped as hosts.
    int maxHostGraphVertices = 1024;
};

/// Parses key=value config text. Unknown keys or malformed values throw
/// ParseError with the offending line.
Config parseConfig(std::string_view text);
Config parseConfigFile(const std::string& path);

} // namespace grammod
