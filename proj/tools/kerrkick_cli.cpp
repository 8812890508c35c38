// kerrkick: stroboscopic simulation of a pulse-driven Kerr coupler.
//
//   kerrkick run  [--config PATH] [--mode M] [--alpha A] ... [--out PATH]
//   kerrkick show [--config PATH] [flags...]     print the resolved config
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-contract violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kerrkick/kerrkick.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerics = 3;

struct Flags {
  std::string config_path;
  kerrkick::ConfigOverrides overrides;
};

void add_config_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_path, "Config file (key = value per line)");
  // flag name -> config key
  static const std::pair<const char*, const char*> kFlags[] = {
      {"--mode", "mode"},           {"--alpha", "alpha"},
      {"--epsilon", "epsilon"},     {"--T", "T"},
      {"--chi-a", "chi_a"},         {"--chi-b", "chi_b"},
      {"--kicks", "kicks"},         {"--cutoff-a", "cutoff_a"},
      {"--cutoff-b", "cutoff_b"},   {"--ordering", "ordering"},
      {"--out", "out"},             {"--scan-param", "scan_param"},
      {"--scan-start", "scan_start"}, {"--scan-stop", "scan_stop"},
      {"--scan-steps", "scan_steps"},
  };
  for (const auto& [flag, key] : kFlags) {
    const std::string k = key;
    cmd->add_option_function<std::string>(
        flag, [&flags, k](const std::string& v) { flags.overrides[k] = v; }, "Overrides config key '" + k + "'");
  }
}

kerrkick::RunConfig resolve(const Flags& flags) {
  std::string text;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw kerrkick::ConfigError("cannot read config file '" + flags.config_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return kerrkick::parse_config(text, flags.overrides);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kicked Kerr coupler simulator"};
  app.require_subcommand(1);

  Flags run_flags;
  auto* run_cmd = app.add_subcommand("run", "Run a simulation and write CSV");
  add_config_flags(run_cmd, run_flags);

  Flags show_flags;
  auto* show_cmd = app.add_subcommand("show", "Print the resolved configuration");
  add_config_flags(show_cmd, show_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*show_cmd) {
      std::cout << kerrkick::to_config_text(resolve(show_flags));
      return 0;
    }
    const auto cfg = resolve(run_flags);
    kerrkick::run_to_output(cfg, std::cout, std::cerr);
    return 0;
  } catch (const kerrkick::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const kerrkick::SingularCoupling& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const kerrkick::ContractViolation& e) {
    std::cerr << "numerical contract violation: " << e.what() << '\n';
    return kExitNumerics;
  } catch (const kerrkick::ConvergenceError& e) {
    std::cerr << "numerical contract violation: " << e.what() << '\n';
    return kExitNumerics;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
