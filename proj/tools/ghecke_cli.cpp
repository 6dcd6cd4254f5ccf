#include "ghecke/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for extended graded Hecke algebras"};
  ghecke::CliOptions opt;
  std::string config;
  std::size_t truncation = 0, max_dim = 0;
  std::string catalog, k_override;
  bool no_cache = false;

  app.add_option("command", opt.command,
                 "datum | group | molien | hh-findim | hc-findim | crossed-census | hp | induce | irr0 | verify-basis");
  app.add_option("--config", config, "configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", opt.out_dir, "output directory")->capture_default_str();
  auto* t = app.add_option("--truncation", truncation, "Poincare series truncation degree");
  auto* m = app.add_option("--max-dim", max_dim, "bound on the order of W'");
  auto* c = app.add_option("--catalog", catalog, "discrete series catalog file")->check(CLI::ExistingFile);
  auto* k = app.add_option("--k-override", k_override, "parameters, e.g. 1,3/2 or a single value");
  app.add_flag("--no-cache", no_cache, "ignore and do not write the report cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ghecke::kExitError;
  }
  if (!config.empty()) opt.config_path = config;
  if (*t) opt.truncation = truncation;
  if (*m) opt.max_dim = max_dim;
  if (*c) opt.catalog_path = catalog;
  if (*k) opt.k_override = k_override;
  opt.use_cache = !no_cache;
  return ghecke::run(opt, std::cout, std::cerr);
}
