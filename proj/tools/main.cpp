#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "torusq/experiment.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

torusq::ExperimentConfig load_config(const std::string& path,
                                     const std::string& outdir_override) {
  torusq::ExperimentConfig cfg = torusq::parse_config(read_file(path));
  if (!outdir_override.empty()) cfg.outdir = outdir_override;
  return cfg;
}

void list_baker_orbits(int period) {
  if (period < 1 || period > 20) {
    throw std::invalid_argument("baker orbit listing supports periods 1..20");
  }
  int index = 0;
  for (long long value = 0; value < (1LL << period); ++value) {
    std::string code(period, '0');
    for (int i = 0; i < period; ++i) {
      if (value & (1LL << (period - 1 - i))) code[i] = '1';
    }
    // One representative per cyclic class: the smallest rotation.
    bool canonical = true;
    std::string rotated = code;
    for (int r = 1; r < period && canonical; ++r) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      if (rotated < code) canonical = false;
    }
    if (!canonical) continue;
    torusq::PeriodicOrbit orbit;
    try {
      orbit = torusq::baker_orbit_from_bits(code);
    } catch (const std::invalid_argument&) {
      continue;  // non-primitive code
    }
    std::cout << "orbit " << index++ << " code=" << code << " points:";
    for (const auto& point : orbit.points) {
      std::cout << " (" << point.q.str() << "," << point.p.str() << ")";
    }
    std::cout << '\n';
  }
}

void list_cat_orbits(int period) {
  const auto orbits = torusq::cat_orbits(period);
  for (size_t i = 0; i < orbits.size(); ++i) {
    std::cout << "orbit " << i << " source=" << orbits[i].source << " points:";
    for (const auto& point : orbits[i].points) {
      std::cout << " (" << point.q.str() << "," << point.p.str() << ")";
    }
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torusq: open quantum maps on the torus"};
  app.require_subcommand(1);

  std::string run_config, run_outdir;
  bool run_quiet = false;
  CLI::App* run = app.add_subcommand("run", "run a decay experiment from a config file");
  run->add_option("config", run_config, "config file (key=value lines)")->required();
  run->add_option("--outdir", run_outdir, "override the configured output directory");
  run->add_flag("--quiet", run_quiet, "suppress progress output");

  std::string cmp_config, cmp_outdir;
  bool cmp_quiet = false;
  CLI::App* compare = app.add_subcommand(
      "compare", "evolve eigenstate, periodic-orbit mode and scar side by side");
  compare->add_option("config", cmp_config, "config file (key=value lines)")->required();
  compare->add_option("--outdir", cmp_outdir, "override the configured output directory");
  compare->add_flag("--quiet", cmp_quiet, "suppress progress output");

  std::string orbits_map;
  int orbits_period = 0;
  CLI::App* orbits = app.add_subcommand("orbits", "list periodic orbits as exact fractions");
  orbits->add_option("map", orbits_map, "baker or cat")
      ->required()
      ->check(CLI::IsMember({"baker", "cat"}));
  orbits->add_option("period", orbits_period, "orbit period")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const auto cfg = load_config(run_config, run_outdir);
      const auto records = torusq::run_decay_experiment(cfg);
      if (!run_quiet) {
        std::cout << "wrote " << cfg.outdir << "/decay.csv (" << records.size()
                  << " rows)\n";
      }
    } else if (compare->parsed()) {
      const auto cfg = load_config(cmp_config, cmp_outdir);
      const auto result = torusq::run_comparison(cfg);
      if (!cmp_quiet) {
        std::cout << "wrote " << cfg.outdir << "/comparison.csv ("
                  << result.records.size() << " rows), overlap |<scar|eig>| = "
                  << result.overlap_abs << '\n';
      }
    } else if (orbits->parsed()) {
      if (orbits_map == "baker") {
        list_baker_orbits(orbits_period);
      } else {
        list_cat_orbits(orbits_period);
      }
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
