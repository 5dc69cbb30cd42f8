#ifndef HODGELAB_ERRORS_HPP
#define HODGELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hodgelab {

/// Diagnostic categories, mapped to distinct process exit codes by the CLI.
enum class Diagnostic {
  usage = 2,            // bad flags / unknown command
  parse = 3,            // malformed mesh or sample file (carries line/column)
  label = 4,            // boundary labeling violates its invariants
  geometry = 5,         // degenerate or missing geometry
  non_manifold = 6,     // facet incident to three or more top simplices
  invalid_input = 7,    // precondition violation on an operation
  numerical = 8,        // rank-tolerance failure, solver breakdown
};

class Error : public std::runtime_error {
public:
  Error(Diagnostic code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Diagnostic code() const { return code_; }

private:
  Diagnostic code_;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line, int column)
      : Error(Diagnostic::parse,
              "parse error at line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line(line), column(column) {}
  int line;
  int column;
};

struct LabelError : Error {
  explicit LabelError(const std::string& what) : Error(Diagnostic::label, what) {}
};

struct GeometryError : Error {
  explicit GeometryError(const std::string& what) : Error(Diagnostic::geometry, what) {}
};

struct NonManifoldError : Error {
  explicit NonManifoldError(const std::string& what) : Error(Diagnostic::non_manifold, what) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(Diagnostic::invalid_input, what) {}
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& what) : Error(Diagnostic::numerical, what) {}
};

}  // namespace hodgelab

#endif
