#pragma once

#include <stdexcept>
#include <string>

namespace fitforge {

// Library errors carry a stable name so the CLI can surface them verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t pos)
      : Error("syntax-error", what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

inline Error unknown_variable(const std::string& name) {
  return Error("unknown-variable", "unknown variable '" + name + "'");
}

inline Error zero_polynomial() {
  return Error("zero-polynomial", "operation undefined on the zero polynomial");
}

inline Error zero_ideal(const std::string& ctx) {
  return Error("zero-ideal", "zero ideal not allowed: " + ctx);
}

inline Error unit_detection_unsupported(const std::string& ctx) {
  return Error("unit-detection-unsupported",
               "cannot decide whether the ideal is the unit ideal: " + ctx);
}

inline Error mixed_variable_entries() {
  return Error("mixed-variable-entries",
               "Smith normal form needs entries in one variable or integer constants");
}

}  // namespace fitforge
