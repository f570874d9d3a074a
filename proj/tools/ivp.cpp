#include "ivp/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <map>

namespace {

struct Bound {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> switches;
  std::vector<std::string> positionals;
  bool json = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with integer-valued polynomials and matrices over Int(Z)"};
  app.require_subcommand(1);
  app.allow_extras(false);

  const auto& infos = ivp::cli::commands();
  std::map<std::string, Bound> bound;
  for (const auto& info : infos) {
    Bound& b = bound[info.name];
    b.app = app.add_subcommand(info.name, info.summary);
    b.app->add_flag("--json", b.json, "machine-readable output");
    for (const auto& f : info.flags) b.app->add_option("--" + f, b.values[f]);
    for (const auto& f : info.bool_flags) b.app->add_flag("--" + f, b.switches[f]);
    if (info.max_positionals > 0) {
      auto* opt = b.app->add_option("args", b.positionals);
      opt->expected(0, static_cast<int>(info.max_positionals));
    }
    b.app->positionals_at_end(false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (auto& [name, b] : bound) {
    if (!b.app->parsed()) continue;
    ivp::cli::CommandRequest req;
    req.subcommand = name;
    req.json = b.json;
    req.positionals = b.positionals;
    for (const auto& [key, value] : b.values)
      if (b.app->get_option("--" + key)->count() > 0) req.flags[key] = value;
    for (const auto& [key, on] : b.switches)
      if (on) req.flags[key] = "true";
    if (req.flags.count("stdin"))
      req.stdin_text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    const auto result = ivp::cli::run(req);
    (result.exit_code == 0 || req.json ? std::cout : std::cerr) << result.output;
    return result.exit_code;
  }
  return 2;
}
