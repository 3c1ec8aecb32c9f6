// schemata: run the worked examples and the law suite from the command line.
//
// Exit codes: 0 success, 1 domain error, 2 fuel exhausted, 3 usage error.

#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schemata/gallery.hpp"
#include "schemata/laws.hpp"

namespace {

int fail(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace schemata;

  CLI::App app{"Recursion-scheme examples and law checks", "schemata"};
  app.require_subcommand(1, 1);

  std::uint64_t fuel = Fuel::kDefault;
  std::uint64_t seed = 42;
  std::size_t depth = 20;
  app.add_option("--fuel", fuel, "Step budget for possibly divergent computations")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--seed", seed, "Seed for random generation");
  app.add_option("--depth", depth, "How many elements of codata to print");

  std::vector<std::string> args;
  for (const auto& entry : gallery::entries()) {
    auto* sub = app.add_subcommand(entry.name, entry.usage + "  (" + entry.scheme + ")");
    sub->add_option("args", args);
    sub->fallthrough();
  }
  auto* laws = app.add_subcommand("laws", "Run the law suite and print one line per law");
  laws->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(3, e.what());
  }

  try {
    if (laws->parsed()) {
      bool all = true;
      for (const auto& report : run_law_suite(seed)) {
        std::cout << report.summary() << "\n";
        all = all && report.passed();
      }
      return all ? 0 : 1;
    }
    auto* chosen = app.get_subcommands().front();
    const auto* entry = gallery::find_entry(chosen->get_name());
    gallery::RunOptions opts{Fuel(fuel), seed, depth};
    std::cout << entry->run(args, opts) << "\n";
    return 0;
  } catch (const FuelExhausted& e) {
    return fail(2, e.what());
  } catch (const gallery::UsageError& e) {
    return fail(3, e.what());
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
}
