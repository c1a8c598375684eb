#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xtalk/scenario.hpp"

namespace xtalk {

/// Coupling type x pulse shape sweep.  Each cell drives the scanned qubit with
/// the cell's shape (parameters from `scanned_pulse`) while the other attacker
/// qubit keeps `fixed_pulse`.
struct ScanGrid {
  std::vector<std::pair<Pauli, Pauli>> coupling_types{{Pauli::Y, Pauli::X},
                                                      {Pauli::Z, Pauli::X}};
  std::vector<PulseShape> shapes{PulseShape::Chirp, PulseShape::Cosine, PulseShape::Square,
                                 PulseShape::Drag, PulseShape::Gaussian};
  double j01 = 0.5;
  double j12 = 0.5;
  int scanned_qubit = 0;
  PulseSpec scanned_pulse{PulseShape::Cosine, 0.5};
  PulseSpec fixed_pulse{PulseShape::Cosine, 0.5};
  VictimProgram victim;
  Timing timing = Timing::AttackerFirst;
  Baseline baseline = Baseline::Isolated;
  EvolutionConfig evolution;

  void validate() const;
};

struct ScanRecord {
  std::string coupling;
  std::string shape;
  double norm = 0.0;
};

/// The single scenario behind one grid cell.
AttackScenario scan_cell_scenario(const ScanGrid& grid, std::pair<Pauli, Pauli> coupling,
                                  PulseShape shape);

/// One record per cell, sorted by descending norm; equal norms fall back to
/// (coupling, shape) lexicographic order.  Output does not depend on
/// `parallelism`.
std::vector<ScanRecord> run_scan(const ScanGrid& grid, int parallelism = 1);

/// Per-coupling maximum norm, descending, ties by label.
std::vector<std::pair<std::string, double>> rank_channels(const std::vector<ScanRecord>& records);

}  // namespace xtalk
