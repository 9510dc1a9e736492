#include "eblab/error.hpp"

namespace eblab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_size: return "invalid-size";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::not_a_chain: return "not-a-chain";
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::not_bl: return "not-bl";
    case ErrorKind::not_ebl: return "not-ebl";
    case ErrorKind::not_a_subalgebra: return "not-a-subalgebra";
    case ErrorKind::precondition_violated: return "precondition-violated";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::too_many_variables: return "too-many-variables";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<Assignment> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace eblab
