#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "eblab/algebra.hpp"
#include "eblab/epistemic.hpp"

namespace eblab {

enum class OutputMode { human, machine, both };

struct RunConfig {
  std::size_t size_cap = kDefaultSizeCap;
  unsigned workers = 0;  // 0 = available parallelism
  OutputMode mode = OutputMode::both;
  EnumerationMethod method = EnumerationMethod::pairs;

  unsigned effective_workers() const;
};

/// key=value lines (`size-cap`, `worker-count`, `output-mode`, `method`),
/// '#' comments. Throws Error(malformed_input).
RunConfig read_config(std::istream& in, RunConfig base = {});

std::optional<OutputMode> parse_output_mode(std::string_view text);
std::optional<EnumerationMethod> parse_method(std::string_view text);

}  // namespace eblab
