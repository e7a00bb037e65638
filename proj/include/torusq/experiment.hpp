#pragma once

#include <string>
#include <vector>

#include "torusq/phase_space.hpp"
#include "torusq/scar.hpp"

namespace torusq {

enum class InitialKind { scar, pom, eigenstate, coherent, cat_superposition };

/// One experiment: a map, a noise strength, an initial state and how many
/// open-map steps to run, plus output options. Parsed from key=value text.
struct ExperimentConfig {
  MapKind map = MapKind::baker;
  int dimension = 0;
  double epsilon = 0.0;
  int steps = 10;
  InitialKind initial = InitialKind::scar;
  std::string orbit_code;              // baker: binary itinerary
  int orbit_period = 0;                // cat: period and index into the
  int orbit_index = 0;                 //      canonical orbit list
  std::vector<PhasePoint> centers;     // coherent / cat_superposition
  std::string outdir = ".";
  bool wigner_dump = false;
  bool husimi_dump = false;
  bool fixed_grayscale = false;
};

/// Parses `key=value` lines ('#' starts a comment). Unknown keys, missing
/// required keys, malformed values, odd baker dimensions and non-positive
/// couplings are each rejected with a message naming the key.
ExperimentConfig parse_config(const std::string& text);

struct DecayRecord {
  int time = 0;
  double purity = 0.0;
  double fidelity = 0.0;
};

/// Evolves the configured initial state and writes decay.csv
/// (header "t,purity,fidelity", one row per step including t=0) plus the
/// optional per-step Wigner/Husimi dumps. Returns the recorded series.
std::vector<DecayRecord> run_decay_experiment(const ExperimentConfig& cfg);

struct ComparisonRecord {
  int time = 0;
  double purity_eig = 0.0, purity_pom = 0.0, purity_scar = 0.0;
  double fidelity_eig = 0.0, fidelity_pom = 0.0, fidelity_scar = 0.0;
};

struct ComparisonResult {
  std::vector<ComparisonRecord> records;
  double overlap_abs = 0.0;      // |<scar|eigenstate>|
  double overlap_squared = 0.0;
};

/// Runs the matched eigenstate, the periodic-orbit mode and the scar function
/// under identical dynamics. Writes comparison.csv, overlap.txt and
/// scar_eig_overlap.csv (the scar content of the evolving eigenstate), plus
/// optional per-state phase-space dumps.
ComparisonResult run_comparison(const ExperimentConfig& cfg);

}  // namespace torusq
