#include "xtalk/coupling_scan.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "xtalk/parallel.hpp"

namespace xtalk {

void ScanGrid::validate() const {
  if (coupling_types.empty()) throw ValidationError("scan.couplings must not be empty");
  if (shapes.empty()) throw ValidationError("scan.shapes must not be empty");
  if (scanned_qubit != 0 && scanned_qubit != 1) {
    throw ValidationError("scan.scanned_qubit must be 0 or 1");
  }
  for (auto [a, b] : coupling_types) CouplingSpec{a, b, j01, j12}.validate();
  fixed_pulse.validate();
  for (auto s : shapes) {
    PulseSpec p = scanned_pulse;
    p.shape = s;
    p.validate();
  }
  evolution.validate();
}

AttackScenario scan_cell_scenario(const ScanGrid& grid, std::pair<Pauli, Pauli> coupling,
                                  PulseShape shape) {
  AttackScenario s;
  s.coupling = CouplingSpec{coupling.first, coupling.second, grid.j01, grid.j12};
  PulseSpec scanned = grid.scanned_pulse;
  scanned.shape = shape;
  s.pulse0 = grid.scanned_qubit == 0 ? scanned : grid.fixed_pulse;
  s.pulse1 = grid.scanned_qubit == 0 ? grid.fixed_pulse : scanned;
  s.timing = grid.timing;
  s.victim = grid.victim;
  s.evolution = grid.evolution;
  return s;
}

std::vector<ScanRecord> run_scan(const ScanGrid& grid, int parallelism) {
  grid.validate();
  const std::size_t n_shapes = grid.shapes.size();
  const std::size_t cells = grid.coupling_types.size() * n_shapes;
  auto records = parallel_map(cells, parallelism, [&](std::size_t i) {
    const auto coupling = grid.coupling_types[i / n_shapes];
    const auto shape = grid.shapes[i % n_shapes];
    const auto scenario = scan_cell_scenario(grid, coupling, shape);
    return ScanRecord{scenario.coupling.label(), std::string(shape_name(shape)),
                      influence(scenario, grid.baseline).norm};
  });
  std::sort(records.begin(), records.end(), [](const ScanRecord& a, const ScanRecord& b) {
    if (a.norm != b.norm) return a.norm > b.norm;
    return std::tie(a.coupling, a.shape) < std::tie(b.coupling, b.shape);
  });
  return records;
}

std::vector<std::pair<std::string, double>> rank_channels(const std::vector<ScanRecord>& records) {
  if (records.empty()) throw ValidationError("rank_channels: no records");
  std::map<std::string, double> best;
  for (const auto& r : records) {
    auto [it, inserted] = best.emplace(r.coupling, r.norm);
    if (!inserted) it->second = std::max(it->second, r.norm);
  }
  std::vector<std::pair<std::string, double>> out(best.begin(), best.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

}  // namespace xtalk
