#include "jobs.hpp"

#include "basicforms/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace jobs = basicforms::jobs;

int main(int argc, char** argv) {
  CLI::App app{"Basic differential forms of Lie group actions: solve, verify and report."};
  app.require_subcommand(1);
  app.set_version_flag("--version", basicforms::kVersion);

  std::string job_file, out_file;
  std::optional<double> bind_a, tol;
  for (const char* name : jobs::kCommands) {
    CLI::App* sub = app.add_subcommand(name, std::string("run a '") + name + "' job");
    sub->add_option("--job", job_file, "job file (JSON)")->required();
    sub->add_option("--out", out_file, "write the report here instead of standard output");
    sub->add_option("--bind-a", bind_a, "numeric value for the parameter a in numeric checks");
    sub->add_option("--tol", tol, "override the pass tolerance");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return jobs::kValidationError;
  }

  jobs::Overrides overrides;
  overrides.command = app.get_subcommands().front()->get_name();
  overrides.bind_a = bind_a;
  overrides.tol = tol;
  jobs::JobResult result = jobs::run_job_file(job_file, overrides);
  const std::string text = jobs::render_report(result.report);

  if (result.report.contains("error")) std::cerr << "basicforms: " << result.report["error"]["message"].get<std::string>() << "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
      std::cerr << "basicforms: cannot write '" << out_file << "'\n";
      return jobs::kValidationError;
    }
    out << text;
  }
  return result.exit_code;
}
