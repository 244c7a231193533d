#pragma once

#include <stdexcept>
#include <string>

namespace grammod {

/// Error raised by the text parsers (GML, SMILES, GraphDFS, expression and
/// strategy languages). Carries a 1-based position into the source text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column "
                             + std::to_string(col) + ")"),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace grammod
