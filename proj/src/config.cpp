#include "eblab/config.hpp"

#include <charconv>
#include <istream>
#include <string>

#include "eblab/error.hpp"
#include "eblab/parallel.hpp"

namespace eblab {

unsigned RunConfig::effective_workers() const {
  return workers == 0 ? available_workers() : workers;
}

std::optional<OutputMode> parse_output_mode(std::string_view text) {
  if (text == "human") return OutputMode::human;
  if (text == "machine") return OutputMode::machine;
  if (text == "both") return OutputMode::both;
  return std::nullopt;
}

std::optional<EnumerationMethod> parse_method(std::string_view text) {
  if (text == "pairs") return EnumerationMethod::pairs;
  if (text == "brute") return EnumerationMethod::brute;
  if (text == "both") return EnumerationMethod::both;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t to_count(std::string_view value, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    throw Error(ErrorKind::malformed_input,
                "config line " + std::to_string(line) + ": '" + std::string(value) +
                    "' is not a non-negative integer");
  }
  return v;
}

}  // namespace

RunConfig read_config(std::istream& in, RunConfig config) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::malformed_input,
                  "config line " + std::to_string(line) + ": expected key=value");
    }
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (key == "size-cap") {
      config.size_cap = to_count(value, line);
    } else if (key == "worker-count") {
      config.workers = static_cast<unsigned>(to_count(value, line));
    } else if (key == "output-mode") {
      const auto mode = parse_output_mode(value);
      if (!mode) throw Error(ErrorKind::malformed_input, "config line " + std::to_string(line) + ": unknown output mode");
      config.mode = *mode;
    } else if (key == "method") {
      const auto method = parse_method(value);
      if (!method) throw Error(ErrorKind::malformed_input, "config line " + std::to_string(line) + ": unknown method");
      config.method = *method;
    } else {
      throw Error(ErrorKind::malformed_input,
                  "config line " + std::to_string(line) + ": unknown key '" + std::string(key) + "'");
    }
  }
  return config;
}

}  // namespace eblab
