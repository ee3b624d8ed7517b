#pragma once

#include <stdexcept>
#include <string>

namespace wzw {

// Every failure the core raises derives from Error and carries a category
// the C API maps onto a status code.
enum class ErrorKind {
  InvalidArgument,
  Parse,
  Precision,
  Integrality,
  Unsupported,
  Infeasible,
  Ambiguous,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Integrality: return "integrality";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Ambiguous: return "ambiguous";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wzw
