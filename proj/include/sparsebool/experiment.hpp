#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparsebool/fourier.hpp"

namespace sparsebool {

/// Malformed invocation or configuration (CLI exit code 2). Everything else
/// thrown from an experiment is a domain error (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment kinds accepted by run_experiment:
///   sparsify, listdecode, learn, test, restriction, lower-bound, event-e,
///   tester-budget, bands.
/// Each kind has a fixed key set; unknown keys and a missing seed on a
/// randomized kind raise UsageError.
void validate_config(const nlohmann::json& config);

/// FNV-1a over the canonical dump of the config without its "out" key.
std::string config_hash(const nlohmann::json& config);

/// Runs a validated config and returns the CSV text.
std::string run_experiment(const nlohmann::json& config);

/// A truth-table path if the file exists, otherwise a zoo spec such as
/// "double-and:n=6" or "dno:n=6,seed=3".
TruthTable load_function(const std::string& input);

/// "a:b:step" (inclusive) or a single integer.
std::vector<int> parse_grid(const std::string& text);

}  // namespace sparsebool
