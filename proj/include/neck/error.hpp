#ifndef NECK_ERROR_HPP
#define NECK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace neck {

enum class ErrorKind {
  Parse,          // quiver/expression text could not be parsed
  Composability,  // arrow sequence does not compose
  Domain,         // value does not belong to the ambient quiver
  Divisibility,   // polynomial not divisible by h
  Integrality,    // half-integer or negative h-exponent
  Dimension,      // mismatched dimension vectors
  Usage,          // bad CLI invocation
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Composability: return "composability";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Divisibility: return "divisibility";
    case ErrorKind::Integrality: return "integrality";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace neck

#endif
