#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macrofin/params.hpp"

namespace macrofin {

/// Raised by load_config. `kind` distinguishes malformed lines, unknown keys
/// and range violations; for validation failures `violations` lists every
/// offending field.
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { parse, unknown_key, validation };

  ConfigError(Kind kind, std::string message, int line = 0, std::string key = {},
              std::vector<Violation> violations = {});

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  Kind kind_;
  int line_;
  std::string key_;
  std::vector<Violation> violations_;
};

struct LoadedConfig {
  ModelParams params;
  SimConfig sim;
};

/// Parses a flat `key = value` document (`#` starts a comment). Keys not
/// present keep their defaults. Throws ConfigError.
LoadedConfig load_config(std::string_view text);

/// Applies one `key=value` assignment on top of an existing configuration
/// without validating. Throws ConfigError on unknown keys or bad values.
void apply_setting(LoadedConfig& cfg, std::string_view key, std::string_view value,
                   int line = 0);

/// Splits "key=value"; throws ConfigError(parse) when there is no '='.
std::pair<std::string, std::string> split_assignment(std::string_view text, int line = 0);

/// Throws ConfigError(validation) aggregating all violations, if any.
void require_valid(const LoadedConfig& cfg);

/// Writes every key with round-trip precision, one per line.
std::string serialize(const LoadedConfig& cfg);

/// Single-line `key=value` rendering of the resolved configuration, used for
/// output headers.
std::string describe_inline(const LoadedConfig& cfg);

}  // namespace macrofin
