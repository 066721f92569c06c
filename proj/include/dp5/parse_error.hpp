#pragma once

#include <stdexcept>
#include <string>

namespace dp5 {

/// Malformed input file; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string field, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what),
          line(line),
          field(std::move(field)) {}
    int line;
    std::string field;
};

}  // namespace dp5
