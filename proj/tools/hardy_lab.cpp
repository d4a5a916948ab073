// hardy-lab: run the numerical experiments from flat config files and emit
// the results as JSON or CSV.
//
// Exit codes: 0 when every assertion in the record passes, 2 when at least
// one assertion fails, 1 on configuration or usage errors.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hardy/experiments.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& format_name,
                const std::string& out_path, int parallel) {
  const hardy::Config config = hardy::Config::parse_file(config_path);
  const hardy::ResultRecord record = hardy::run(config, parallel);
  const hardy::OutputFormat format = hardy::parse_format(format_name);
  const std::string payload = hardy::emit(record, format);

  std::string target = out_path;
  if (target.empty()) target = config.get_string_or("output_path", "");
  if (target.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(target);
    if (!out) {
      throw hardy::ConfigError("cannot open output path: " + target);
    }
    out << payload;
  }
  return record.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hardy-lab: Toeplitz/Hardy-space numerical experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format_name = "json";
  std::string out_path;
  int parallel = 1;

  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment from a config file");
  run_cmd->add_option("--config", config_path, "path to the flat key=value config")->required();
  run_cmd->add_option("--format", format_name, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_option("--out", out_path, "write the record here instead of stdout");
  run_cmd->add_option("--parallel", parallel, "optimizer restarts evaluated concurrently")
      ->check(CLI::PositiveNumber);

  CLI::App* list_cmd = app.add_subcommand("list", "print the registered experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (list_cmd->parsed()) {
      for (const std::string& name : hardy::experiment_names()) {
        std::cout << name << "\n";
      }
      return 0;
    }
    return run_command(config_path, format_name, out_path, parallel);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
