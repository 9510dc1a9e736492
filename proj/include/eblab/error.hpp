#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eblab/report.hpp"

namespace eblab {

enum class ErrorKind {
  invalid_size,
  size_limit,
  not_a_chain,
  malformed_input,
  not_bl,
  not_ebl,
  not_a_subalgebra,
  precondition_violated,
  not_applicable,
  too_many_variables,
  syntax_error,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` selects the
/// failure class; `witness()` carries the offending assignment when the
/// failure was found by an exhaustive check.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<Assignment> witness = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Assignment>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::optional<Assignment> witness_;
};

}  // namespace eblab
