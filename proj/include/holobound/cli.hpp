#pragma once

#include "holobound/bounds.hpp"
#include "holobound/json_io.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace holobound::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 2,
  kResourceError = 3,
  kUsageError = 64,
};

enum class OutputFormat { json, table };

struct Caps {
  unsigned field_size = kMaxFieldSize;
  std::size_t closure_order = kMaxClosureOrder;
  std::size_t jordan_order = kMaxJordanOrder;
};

/// Defaults for ambient constants, Jordan mode, caps and output format.
struct Config {
  AmbientSpace ambient;
  JordanMode jordan = jordan::Schur{};
  Caps caps;
  OutputFormat output = OutputFormat::json;
};

/// Parses the config document; unknown keys are rejected with
/// Error(domain, "json.unknown_key").
Config parse_config(const io::json& doc);

struct Environment {
  /// Value of HOLOBOUND_CONFIG, consulted when --config is absent.
  std::optional<std::string> config_env;
  /// Runs the acceptance suite for `selftest`; returns its exit status.
  std::function<int(std::ostream&)> selftest;
};

/// Runs one command line (without the program name). The result goes to
/// `out`, diagnostics and structured errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace holobound::cli
