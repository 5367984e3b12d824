#include "icc/loadpath.hpp"

#include <cmath>
#include <stdexcept>

namespace icc {

void LoadStep::validate() const {
  if (!(delta_eps > 0.0)) throw std::invalid_argument("LoadStep: delta_eps must be > 0");
}

int node_id(std::span<const Axis> path_prefix) {
  int id = 0;
  for (Axis a : path_prefix) {
    id = 2 * id + (a == Axis::E11 ? 1 : 2);
  }
  return id;
}

std::vector<AxisPath> enumerate_paths(int depth) {
  if (depth < 1) throw std::invalid_argument("enumerate_paths: depth must be >= 1");
  std::vector<AxisPath> paths;
  paths.reserve(std::size_t{1} << depth);
  AxisPath current;
  // Counting in binary gives lexicographic order with E11 < E22.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << depth); ++mask) {
    current.clear();
    for (int level = depth - 1; level >= 0; --level) {
      current.push_back((mask >> level) & 1 ? Axis::E22 : Axis::E11);
    }
    paths.push_back(current);
  }
  return paths;
}

void MeasurementSchedule::validate() const {
  if (increments_per_step < 1) {
    throw std::invalid_argument("MeasurementSchedule: increments_per_step must be >= 1");
  }
  if (points_per_step < 1 || points_per_step > increments_per_step) {
    throw std::invalid_argument(
        "MeasurementSchedule: requires 1 <= points_per_step <= increments_per_step");
  }
}

std::vector<int> measurement_indices(const MeasurementSchedule& schedule) {
  schedule.validate();
  const int p = schedule.points_per_step;
  const int m = schedule.increments_per_step;
  std::vector<int> indices(p);
  for (int j = 1; j <= p; ++j) {
    indices[j - 1] = static_cast<int>(
        std::floor(static_cast<double>(j) * m / p + 0.5));
  }
  indices.back() = m;
  return indices;
}

std::string format_path(std::span<const Axis> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += ',';
    out += path[i] == Axis::E11 ? "e11" : "e22";
  }
  return out;
}

StrainHistory strain_history(const StrainTotals& start, const LoadStep& step,
                             int increments_per_step) {
  StrainHistory history;
  history.start_eps11 = start.eps11;
  history.start_eps22 = start.eps22;
  append_step(history, step, increments_per_step);
  return history;
}

void append_step(StrainHistory& history, const LoadStep& step, int increments_per_step) {
  step.validate();
  if (increments_per_step < 1) {
    throw std::invalid_argument("append_step: increments_per_step must be >= 1");
  }
  StrainTotals at = end_totals(history);
  for (int i = 1; i <= increments_per_step; ++i) {
    double ramp = step.delta_eps * static_cast<double>(i) /
                  static_cast<double>(increments_per_step);
    if (step.axis == Axis::E11) {
      history.eps11.push_back(at.eps11 + ramp);
      history.eps22.push_back(at.eps22);
    } else {
      history.eps11.push_back(at.eps11);
      history.eps22.push_back(at.eps22 + ramp);
    }
  }
}

StrainHistory path_history(std::span<const Axis> path, double delta_eps,
                           int increments_per_step) {
  StrainHistory history;
  for (Axis axis : path) {
    append_step(history, LoadStep{axis, delta_eps}, increments_per_step);
  }
  return history;
}

std::vector<int> path_measurement_indices(int n_steps, const MeasurementSchedule& schedule) {
  std::vector<int> in_step = measurement_indices(schedule);
  std::vector<int> global;
  global.reserve(static_cast<std::size_t>(n_steps) * in_step.size());
  for (int t = 0; t < n_steps; ++t) {
    for (int idx : in_step) {
      global.push_back(t * schedule.increments_per_step + idx);
    }
  }
  return global;
}

StrainTotals end_totals(const StrainHistory& history) {
  if (history.eps11.empty()) return {history.start_eps11, history.start_eps22};
  return {history.eps11.back(), history.eps22.back()};
}

AxisPath parse_path(const std::string& text) {
  AxisPath path;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    if (token == "e11") {
      path.push_back(Axis::E11);
    } else if (token == "e22") {
      path.push_back(Axis::E22);
    } else {
      throw std::invalid_argument("parse_path: unknown token '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return path;
}

}  // namespace icc
