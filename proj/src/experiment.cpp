#include "torusq/experiment.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace torusq {

namespace {

constexpr int kHusimiResolution = 100;

std::string format_g17(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw std::runtime_error("format_g17 failed");
  return std::string(buf, res.ptr);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc() || res.ptr != end) {
    throw std::invalid_argument("config: key '" + key + "' expects an integer, got '" +
                                value + "'");
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key + "' expects a number, got '" +
                                value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("config: key '" + key + "' expects true/false, got '" +
                              value + "'");
}

std::vector<PhasePoint> parse_centers(const std::string& value) {
  std::vector<PhasePoint> centers;
  std::stringstream stream(value);
  std::string token;
  while (std::getline(stream, token, ';')) {
    token = trim(token);
    if (token.empty()) continue;
    const auto comma = token.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("config: key 'centers' expects q,p pairs separated "
                                  "by ';', got '" + value + "'");
    }
    centers.push_back({parse_double("centers", trim(token.substr(0, comma))),
                       parse_double("centers", trim(token.substr(comma + 1)))});
  }
  if (centers.empty()) {
    throw std::invalid_argument("config: key 'centers' is empty");
  }
  return centers;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config: empty key in '" + line + "'");
    if (entries.count(key)) {
      throw std::invalid_argument("config: duplicate key '" + key + "'");
    }
    entries[key] = value;
  }

  static const std::map<std::string, int> known = {
      {"map", 0},     {"N", 0},           {"epsilon", 0},
      {"steps", 0},   {"initial", 0},     {"orbit", 0},
      {"centers", 0}, {"outdir", 0},      {"wigner_dump", 0},
      {"husimi_dump", 0}, {"fixed_grayscale", 0}};
  for (const auto& [key, value] : entries) {
    if (!known.count(key)) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  for (const char* required : {"map", "N", "epsilon", "initial"}) {
    if (!entries.count(required)) {
      throw std::invalid_argument(std::string("config: missing required key '") +
                                  required + "'");
    }
  }

  ExperimentConfig cfg;
  const std::string& map_name = entries.at("map");
  if (map_name == "baker") {
    cfg.map = MapKind::baker;
  } else if (map_name == "cat") {
    cfg.map = MapKind::cat;
  } else {
    throw std::invalid_argument("config: key 'map' must be baker or cat, got '" +
                                map_name + "'");
  }

  cfg.dimension = parse_int("N", entries.at("N"));
  if (cfg.dimension < 1) {
    throw std::invalid_argument("config: key 'N' must be positive");
  }
  if (cfg.map == MapKind::baker && cfg.dimension % 2 != 0) {
    throw std::invalid_argument("config: key 'N' must be even for the baker map, got " +
                                std::to_string(cfg.dimension));
  }

  cfg.epsilon = parse_double("epsilon", entries.at("epsilon"));
  if (cfg.epsilon <= 0.0) {
    throw std::invalid_argument("config: key 'epsilon' must be positive");
  }

  if (entries.count("steps")) {
    cfg.steps = parse_int("steps", entries.at("steps"));
    if (cfg.steps < 0) {
      throw std::invalid_argument("config: key 'steps' must be >= 0");
    }
  }

  const std::string& initial = entries.at("initial");
  static const std::map<std::string, InitialKind> initials = {
      {"scar", InitialKind::scar},
      {"pom", InitialKind::pom},
      {"eigenstate", InitialKind::eigenstate},
      {"coherent", InitialKind::coherent},
      {"cat_superposition", InitialKind::cat_superposition}};
  const auto it = initials.find(initial);
  if (it == initials.end()) {
    throw std::invalid_argument("config: key 'initial' must be one of scar, pom, "
                                "eigenstate, coherent, cat_superposition; got '" +
                                initial + "'");
  }
  cfg.initial = it->second;

  const bool needs_orbit = cfg.initial == InitialKind::scar ||
                           cfg.initial == InitialKind::pom ||
                           cfg.initial == InitialKind::eigenstate;
  if (needs_orbit) {
    if (!entries.count("orbit")) {
      throw std::invalid_argument("config: missing required key 'orbit' for initial=" +
                                  initial);
    }
    const std::string& orbit = entries.at("orbit");
    if (cfg.map == MapKind::baker) {
      cfg.orbit_code = orbit;
    } else {
      const auto comma = orbit.find(',');
      if (comma == std::string::npos) {
        throw std::invalid_argument(
            "config: key 'orbit' for the cat map expects period,index; got '" +
            orbit + "'");
      }
      cfg.orbit_period = parse_int("orbit", trim(orbit.substr(0, comma)));
      cfg.orbit_index = parse_int("orbit", trim(orbit.substr(comma + 1)));
    }
  }

  const bool needs_centers = cfg.initial == InitialKind::coherent ||
                             cfg.initial == InitialKind::cat_superposition;
  if (needs_centers) {
    if (!entries.count("centers")) {
      throw std::invalid_argument(
          "config: missing required key 'centers' for initial=" + initial);
    }
    cfg.centers = parse_centers(entries.at("centers"));
    if (cfg.initial == InitialKind::cat_superposition && cfg.centers.size() != 2) {
      throw std::invalid_argument(
          "config: key 'centers' needs exactly two points for cat_superposition");
    }
  }

  if (entries.count("outdir")) cfg.outdir = entries.at("outdir");
  if (entries.count("wigner_dump"))
    cfg.wigner_dump = parse_bool("wigner_dump", entries.at("wigner_dump"));
  if (entries.count("husimi_dump"))
    cfg.husimi_dump = parse_bool("husimi_dump", entries.at("husimi_dump"));
  if (entries.count("fixed_grayscale"))
    cfg.fixed_grayscale = parse_bool("fixed_grayscale", entries.at("fixed_grayscale"));
  return cfg;
}

namespace {

TorusSpace space_for(const ExperimentConfig& cfg) {
  return cfg.map == MapKind::baker ? TorusSpace(cfg.dimension, 0.5, 0.5)
                                   : TorusSpace(cfg.dimension, 0.0, 0.0);
}

Propagator propagator_for(const ExperimentConfig& cfg, const TorusSpace& space) {
  return cfg.map == MapKind::baker ? quantize_baker(space) : quantize_cat(space);
}

PeriodicOrbit orbit_for(const ExperimentConfig& cfg) {
  if (cfg.map == MapKind::baker) return baker_orbit_from_bits(cfg.orbit_code);
  const std::vector<PeriodicOrbit> orbits = cat_orbits(cfg.orbit_period);
  if (cfg.orbit_index < 0 || cfg.orbit_index >= static_cast<int>(orbits.size())) {
    throw std::invalid_argument("config: orbit index " +
                                std::to_string(cfg.orbit_index) + " out of range, " +
                                std::to_string(orbits.size()) + " orbits of period " +
                                std::to_string(cfg.orbit_period));
  }
  return orbits[cfg.orbit_index];
}

struct FrameScale {
  bool fixed = false;
  double lo = 0.0;
  double hi = 0.0;
};

void dump_frames(const ExperimentConfig& cfg, const DensityOperator& rho, int t,
                 const std::string& tag, FrameScale& scale) {
  namespace fs = std::filesystem;
  const std::string stem = (fs::path(cfg.outdir) /
                            (tag.empty() ? "" : tag + "_"))
                               .string();
  if (cfg.wigner_dump) {
    const PhaseSpaceGrid grid = wigner(rho);
    if (cfg.fixed_grayscale) {
      if (!scale.fixed) {
        scale = {true, grid.values.minCoeff(), grid.values.maxCoeff()};
      }
      write_pgm(grid, stem + "wigner_t" + std::to_string(t) + ".pgm", scale.lo,
                scale.hi);
    } else {
      write_pgm(grid, stem + "wigner_t" + std::to_string(t) + ".pgm");
    }
    write_csv(grid, stem + "wigner_t" + std::to_string(t) + ".csv");
  }
  if (cfg.husimi_dump) {
    write_csv(husimi(rho, kHusimiResolution),
              stem + "husimi_t" + std::to_string(t) + ".csv");
  }
}

CVector initial_state(const ExperimentConfig& cfg, const TorusSpace& space,
                      const Propagator& prop) {
  switch (cfg.initial) {
    case InitialKind::coherent:
      return coherent_state(space, cfg.centers[0].q, cfg.centers[0].p);
    case InitialKind::cat_superposition: {
      CVector sum = coherent_state(space, cfg.centers[0].q, cfg.centers[0].p) +
                    coherent_state(space, cfg.centers[1].q, cfg.centers[1].p);
      sum.normalize();
      return sum;
    }
    default: {
      const PeriodicOrbit orbit = orbit_for(cfg);
      const ScarBranch branch = best_branch_scar(space, orbit, prop);
      if (cfg.initial == InitialKind::scar) return branch.scar;
      if (cfg.initial == InitialKind::pom) return branch.pom;
      return branch.eigenstate.vector;
    }
  }
}

void check_record(const DecayRecord& record, int dimension) {
  const double floor_purity = 1.0 / dimension - 1e-10;
  if (record.purity < floor_purity || record.purity > 1.0 + 1e-12 ||
      record.fidelity < 0.0 || record.fidelity > 1.0 + 1e-12) {
    throw std::runtime_error("decay record out of bounds at t=" +
                             std::to_string(record.time) + ": purity " +
                             std::to_string(record.purity) + ", fidelity " +
                             std::to_string(record.fidelity));
  }
}

}  // namespace

std::vector<DecayRecord> run_decay_experiment(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.outdir);

  const TorusSpace space = space_for(cfg);
  const Propagator prop = propagator_for(cfg, space);
  const NoiseChannel channel = noise_channel(space, cfg.epsilon);
  const CVector psi = initial_state(cfg, space, prop);

  DensityOperator rho = density_from_pure(psi, space);
  FrameScale scale;
  std::vector<DecayRecord> records;
  records.push_back({0, purity(rho), fidelity(psi, rho)});
  check_record(records.back(), space.dim());
  dump_frames(cfg, rho, 0, "", scale);

  evolve_open(rho, prop, channel, cfg.steps,
              [&](int t, const DensityOperator& state) {
                records.push_back({t, purity(state), fidelity(psi, state)});
                check_record(records.back(), space.dim());
                dump_frames(cfg, state, t, "", scale);
              });

  std::ofstream out(fs::path(cfg.outdir) / "decay.csv", std::ios::binary);
  if (!out) throw std::runtime_error("run_decay_experiment: cannot write decay.csv");
  out << "t,purity,fidelity\n";
  for (const DecayRecord& r : records) {
    out << r.time << ',' << format_g17(r.purity) << ',' << format_g17(r.fidelity)
        << '\n';
  }
  if (!out) throw std::runtime_error("run_decay_experiment: write failed");
  return records;
}

ComparisonResult run_comparison(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.outdir);

  const TorusSpace space = space_for(cfg);
  const Propagator prop = propagator_for(cfg, space);
  const NoiseChannel channel = noise_channel(space, cfg.epsilon);
  const PeriodicOrbit orbit = orbit_for(cfg);

  const std::vector<EigenPair> pairs = eigendecompose(prop);
  const ScarBranch branch = best_branch_scar(space, orbit, prop, pairs);
  const CVector& scar = branch.scar;
  const CVector& pom = branch.pom;
  const CVector& eig = branch.eigenstate.vector;

  ComparisonResult result;
  result.overlap_abs = branch.overlap;
  result.overlap_squared = branch.overlap * branch.overlap;

  struct Track {
    std::string tag;
    CVector psi;
    std::vector<double> purities;
    std::vector<double> fidelities;
  };
  std::vector<Track> tracks = {{"eig", eig, {}, {}},
                               {"pom", pom, {}, {}},
                               {"scar", scar, {}, {}}};
  std::vector<double> scar_content;  // sqrt(<scar|rho_eig(t)|scar>)

  for (Track& track : tracks) {
    const bool is_eig = &track == &tracks.front();
    DensityOperator rho = density_from_pure(track.psi, space);
    FrameScale scale;
    track.purities.push_back(purity(rho));
    track.fidelities.push_back(fidelity(track.psi, rho));
    if (is_eig) scar_content.push_back(fidelity(scar, rho));
    dump_frames(cfg, rho, 0, track.tag, scale);
    evolve_open(rho, prop, channel, cfg.steps,
                [&](int t, const DensityOperator& state) {
                  track.purities.push_back(purity(state));
                  track.fidelities.push_back(fidelity(track.psi, state));
                  if (is_eig) scar_content.push_back(fidelity(scar, state));
                  dump_frames(cfg, state, t, track.tag, scale);
                });
  }

  for (int t = 0; t <= cfg.steps; ++t) {
    result.records.push_back({t, tracks[0].purities[t], tracks[1].purities[t],
                              tracks[2].purities[t], tracks[0].fidelities[t],
                              tracks[1].fidelities[t], tracks[2].fidelities[t]});
  }

  std::ofstream out(fs::path(cfg.outdir) / "comparison.csv", std::ios::binary);
  if (!out) throw std::runtime_error("run_comparison: cannot write comparison.csv");
  out << "t,purity_eig,purity_pom,purity_scar,fidelity_eig,fidelity_pom,fidelity_scar\n";
  for (const ComparisonRecord& r : result.records) {
    out << r.time << ',' << format_g17(r.purity_eig) << ',' << format_g17(r.purity_pom)
        << ',' << format_g17(r.purity_scar) << ',' << format_g17(r.fidelity_eig) << ','
        << format_g17(r.fidelity_pom) << ',' << format_g17(r.fidelity_scar) << '\n';
  }

  std::ofstream overlap(fs::path(cfg.outdir) / "overlap.txt", std::ios::binary);
  overlap << "overlap_abs=" << format_g17(result.overlap_abs) << '\n'
          << "overlap_squared=" << format_g17(result.overlap_squared) << '\n';

  std::ofstream series(fs::path(cfg.outdir) / "scar_eig_overlap.csv", std::ios::binary);
  series << "t,overlap\n";
  for (size_t t = 0; t < scar_content.size(); ++t) {
    series << t << ',' << format_g17(scar_content[t]) << '\n';
  }
  if (!out || !overlap || !series) {
    throw std::runtime_error("run_comparison: write failed");
  }
  return result;
}

}  // namespace torusq
