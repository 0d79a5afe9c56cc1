#pragma once

#include <stdexcept>
#include <string>

namespace sandgroup {

/// Broad failure classes; the numeric values double as CLI exit codes.
enum class ErrorKind {
  invalid_input = 2,  // malformed text/JSON, bad embeddings, size mismatches
  infeasible = 3,     // well-formed but unsatisfiable (lengths, flows, chips)
  bound_exceeded = 4  // enumeration or toppling limits
};

/// Library error. `tag` is a short stable identifier such as "bridge" or
/// "infeasible lengths" that callers and tests match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string tag, const std::string& detail = {})
      : std::runtime_error(detail.empty() ? tag : tag + ": " + detail),
        kind_(kind),
        tag_(std::move(tag)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& tag() const noexcept { return tag_; }

 private:
  ErrorKind kind_;
  std::string tag_;
};

inline const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::bound_exceeded: return "bound_exceeded";
  }
  return "unknown";
}

}  // namespace sandgroup
