#include <iostream>

#include <CLI11.hpp>

#include "hindex/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Indices of 1-forms on isolated singularities"};
  std::string command;
  std::string path;
  hindex::RunOptions opts;
  long radial = 0;
  std::size_t module = 0;

  app.add_option("command", command, "egz | hom | radial | nu | hilbert | milnor | tau | all | format")
      ->required()
      ->check(CLI::IsMember({"egz", "hom", "radial", "nu", "hilbert", "milnor", "tau", "all", "format"}));
  app.add_option("germ", path, "germ file")->required();
  app.add_option("--seed", opts.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--order", opts.order, "degrevlex | lex | local | wdegrevlex:w1,... | wlocal:w1,...")
      ->capture_default_str();
  app.add_option("--precision", opts.precision, "starting series precision (doubled up to 256)")
      ->capture_default_str();
  app.add_option("--bound", opts.bound, "truncation bound for nu_direct (tau uses at most 8)")->capture_default_str();
  auto* radial_opt = app.add_option("--radial", radial, "user-supplied radial index; nu = hom - radial");
  app.add_flag("--minimize", opts.minimize, "min index over 7 perturbations omega + dl/1000 (heuristic)");
  auto* module_opt = app.add_option("--module", module, "hilbert: only Omega^p");
  app.add_option("--terms", opts.terms, "hilbert: prefix length")->capture_default_str();
  app.add_flag("--timing", opts.timing, "add wall-clock milliseconds to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }
  if (*radial_opt) opts.radial = radial;
  if (*module_opt) opts.module = module;

  try {
    hindex::GermFile g = hindex::load_germ(path);
    if (command == "format") {
      std::cout << hindex::format_germ(g);
      return 0;
    }
    std::cout << hindex::run(command, g, opts).dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "hindex: " << e.what() << "\n";
    std::cout << hindex::error_report(e).dump(2) << "\n";
    return hindex::exit_code(e);
  }
}
