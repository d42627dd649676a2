#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace basicforms::jobs {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kValidationError = 2,
  kCheckFailed = 3,
  kComputationError = 4,
};

/// Command line settings that take precedence over the job document.
struct Overrides {
  std::optional<std::string> command;
  std::optional<double> bind_a;
  std::optional<double> tol;
  /// Directory used to resolve relative plot table paths.
  std::filesystem::path base_dir = ".";
};

struct JobResult {
  int exit_code = kOk;
  Json report;
};

inline constexpr const char* kCommands[] = {"basis", "cohomology", "stages", "criterion", "gauge", "orbifold", "symplectic"};

/// Runs a job given as JSON text. Never throws; failures are reported in the
/// report's `error` block with the matching exit code.
[[nodiscard]] JobResult run_job(std::string_view json_text, const Overrides& overrides = {});
[[nodiscard]] JobResult run_job_file(const std::filesystem::path& path, Overrides overrides = {});

/// Pretty-printed report with a trailing newline.
[[nodiscard]] std::string render_report(const Json& report);

}  // namespace basicforms::jobs
