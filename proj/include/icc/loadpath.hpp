#pragma once

#include <span>
#include <string>
#include <vector>

namespace icc {

// A load step increments total strain along one in-plane axis while the
// other axis is held at its accumulated value.
enum class Axis { E11 = 0, E22 = 1 };

struct LoadStep {
  Axis axis = Axis::E11;
  double delta_eps = 0.0;  // positive strain increment magnitude

  void validate() const;
};

using AxisPath = std::vector<Axis>;

// Accumulated in-plane total strains at a tree node.
struct StrainTotals {
  double eps11 = 0.0;
  double eps22 = 0.0;
};

// Binary-heap numbering over axis prefixes: root is 0, the E11 child of
// node k is 2k+1 and the E22 child is 2k+2.
int node_id(std::span<const Axis> path_prefix);

// All 2^depth paths of the given depth in lexicographic order (E11 < E22).
std::vector<AxisPath> enumerate_paths(int depth);

// In-step observation points. Indices are equally spaced over the step's
// pseudotime increments with the last one landing on the step end (the node).
struct MeasurementSchedule {
  int points_per_step = 1;
  int increments_per_step = 100;

  void validate() const;
};

// 1-based increment indices within one step: floor(j*m/p + 0.5) for j=1..p.
std::vector<int> measurement_indices(const MeasurementSchedule& schedule);

std::string format_path(std::span<const Axis> path);
AxisPath parse_path(const std::string& text);

// Total-strain series driving the material point, one entry per pseudotime
// increment. The series begins one increment after (start_eps11, start_eps22);
// within a step the active axis ramps linearly and the other axis holds.
struct StrainHistory {
  double start_eps11 = 0.0;
  double start_eps22 = 0.0;
  std::vector<double> eps11;
  std::vector<double> eps22;

  int size() const { return static_cast<int>(eps11.size()); }
};

StrainHistory strain_history(const StrainTotals& start, const LoadStep& step,
                             int increments_per_step);

// Extends an existing history by one load step.
void append_step(StrainHistory& history, const LoadStep& step, int increments_per_step);

// Multi-step history for a whole axis path with uniform step size.
StrainHistory path_history(std::span<const Axis> path, double delta_eps,
                           int increments_per_step);

// Global 1-based increment indices of every scheduled observation along an
// n_steps path.
std::vector<int> path_measurement_indices(int n_steps, const MeasurementSchedule& schedule);

StrainTotals end_totals(const StrainHistory& history);

}  // namespace icc
