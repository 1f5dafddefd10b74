// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include "permlab/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

int main(int argc, char **argv) {
  CLI::App app{"permlab acceptance criteria"};
  std::string only;
  permlab::verify::AcceptanceOptions options;
  app.add_option("--only", only, "comma-separated criterion numbers");
  app.add_option("--cache-dir", options.cache_dir, "directory for persisted closure tables");
  app.add_option("--seed", options.seed, "seed for the randomized checks");
  CLI11_PARSE(app, argc, argv);

  std::stringstream ss(only);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty())
      options.only.insert(std::stoi(item));

  bool all_passed = true;
  options.on_result = [&](const permlab::verify::CriterionResult &r) {
    std::cout << permlab::verify::format_line(r) << std::endl;
    all_passed = all_passed && r.passed;
  };
  permlab::verify::run_acceptance(options);
  return all_passed ? 0 : 1;
}
