#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace equindex::cli {

enum class OutputFormat { text, json };

struct CliConfig {
  std::optional<std::string> input_path;
  std::optional<std::string> preset;
  /// Unset means: the spec's own order (or the default of 10).
  std::optional<int> order;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> output_path;
  /// Debug: evaluate a preset through the brute-force references instead.
  bool oracle = false;
};

/// Exit status: 0 on success, 1 for bad input or a mathematical error,
/// 2 for I/O failures.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equindex::cli
