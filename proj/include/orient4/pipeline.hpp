#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orient4/constructions.hpp"
#include "orient4/graph.hpp"
#include "orient4/mixed.hpp"
#include "orient4/partition.hpp"

namespace orient4 {

/// A stage aborted. `kind` is "conflict", "not-found", "invalid-rs",
/// "precondition" or "internal".
class ConstructionFailure : public std::runtime_error {
 public:
  ConstructionFailure(std::string stage, std::string kind, const std::string& what)
      : std::runtime_error("stage " + stage + " failed (" + kind + "): " + what),
        stage_(std::move(stage)),
        kind_(std::move(kind)) {}
  const std::string& stage() const { return stage_; }
  const std::string& kind() const { return kind_; }

 private:
  std::string stage_;
  std::string kind_;
};

/// One schedule entry: a construction or a checkpoint refinement.
struct ScheduleStep {
  std::optional<StageId> stage;
  std::optional<Checkpoint> checkpoint;
};
const std::vector<ScheduleStep>& stage_schedule();

/// Upper bounds for one cell: d(w,u) <= to_u, d(v,w) <= from_v.
struct CellBound {
  int to_u;
  int from_v;
};
/// Row for a finest cell label at the given g*, nullopt if the cell has none.
std::optional<CellBound> bound_row(const std::string& cell, int gstar);
/// Every cell name that has a row, sorted.
std::vector<std::string> bound_table_cells();

struct CellViolation {
  VertexId vertex;
  std::string cell;
  std::string kind;  // "to_u", "from_v", "coverage" or "exact"
  int observed;
  int allowed;
};

struct VerificationReport {
  bool strong = false;
  int directed_diameter = kInfinity;
  int bound = kInfinity;  // g*+13, or kInfinity when no base edge applies
  bool bound_ok = false;
  std::vector<int> to_u;    // d(w,u)
  std::vector<int> from_v;  // d(v,w)
  std::vector<CellViolation> cell_violations;

  bool ok() const { return strong && bound_ok && cell_violations.empty(); }
};

/// Strongness and diameter only.
VerificationReport verify_orientation(const MixedOrientation& o);
/// Adds the per-cell bound rows and the exact base-edge values.
VerificationReport verify(const MixedOrientation& o, const Partition& p);

struct PipelineResult {
  MixedOrientation orientation;
  Partition partition;
  VerificationReport report;
};

/// Full schedule on an in-scope graph. Throws PreconditionError for inputs
/// outside scope and ConstructionFailure when a stage aborts.
PipelineResult orient_diameter4(const MultiGraph& g);

/// DFS orientation (tree arcs away from the root, back arcs toward it).
MixedOrientation baseline_strong_orientation(const MultiGraph& g);

/// "stage<TAB>edge<TAB>from<TAB>to" per oriented edge in log order.
std::string stage_trace(const MixedOrientation& o);

}  // namespace orient4
