#ifndef ZSFELL_ERRORS_HPP
#define ZSFELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zsfell {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: dangling identifiers, shape mismatches, tables
/// defined off their declared domain. Distinct from law violations, which
/// are reported through ValidationReport instead of thrown.
struct StructuralError : Error {
  explicit StructuralError(const std::string& what) : Error(what) {}
};

/// A well-formed value was used outside an operation's domain, e.g.
/// composing non-composable arrows.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Text interchange parse failure; carries the 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& what, int line_no)
      : Error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  int line;
};

}  // namespace zsfell

#endif
