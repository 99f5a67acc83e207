// substrata: command-line front end. See README.md for the verbs.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "substrata/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Strata and substrata of GL_n and Sp_2n from Weyl group data"};
  app.require_subcommand(1);

  substrata::RunConfig cfg;
  std::string flavor, regime = "p0odd", format = "text";

  const std::map<std::string, std::string> help{
      {"chartable", "character table of W"},
      {"fakedeg", "fake degrees and n_E of every irreducible of W"},
      {"substrata", "class data grouped by V'"},
      {"strata", "class data grouped by V''"},
      {"check", "properties of the induction and the xi matrix conjecture"},
      {"compare-regimes", "compare Rep_* and its partition between p0odd and p2"},
      {"validate-data", "replay the data invariants against the engine"},
  };
  for (const auto& verb : substrata::known_verbs()) {
    auto* cmd = app.add_subcommand(verb, help.count(verb) ? help.at(verb) : std::string{});
    cmd->add_option("--type", cfg.type, "Lie type with rank, e.g. C3 or A4");
    cmd->add_option("--flavor", flavor, "GL or Sp (default: Sp for type C, GL for type A)");
    cmd->add_option("--regime", regime, "p0odd or p2 (ignored for GL)");
    cmd->add_option("--format", format, "text or json");
    cmd->add_option("--data", cfg.data_dir, "data directory (default: $SUBSTRATA_DATA_DIR or the built-in path)");
    cmd->callback([&cfg, verb] { cfg.verb = verb; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!flavor.empty()) cfg.flavor = substrata::parse_flavor(flavor);
    cfg.regime = substrata::parse_regime(regime);
    cfg.format = substrata::parse_format(format);
  } catch (const substrata::Error& e) {
    std::cerr << "substrata: " << e.what() << "\n";
    return 2;
  }
  return substrata::run(cfg, std::cout, std::cerr);
}
