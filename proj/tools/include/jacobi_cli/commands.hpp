#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "jacobi/bipoly.hpp"

namespace jacobi::cli {

using nlohmann::json;

inline constexpr const char* kToolName = "jacobi";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // internal error or failed self-test
  kExitValidation = 2,
  kExitUnsupported = 3,
  kExitTracking = 4,
};

struct Options {
  Form form = Form::W;
  std::optional<std::uint64_t> seed;
};

struct CommandResult {
  json document;
  int exit_code = kExitOk;
  std::string csv;  // campaigns only
};

/// Runs charpoly, detect, decide, monodromy or campaign on a parsed input
/// document. ValidationError, UnsupportedError and TrackingError propagate
/// except where a command reports them in its document (decide on a
/// repeated diagonal).
CommandResult run_command(const std::string& command, const json& input, std::string_view input_text,
                          const Options& opts);

/// Map an exception escaping run_command to an exit code.
int exit_code_for(const std::exception& e);

/// Short text rendering of a report document.
std::string render_text(const json& document);

}  // namespace jacobi::cli
