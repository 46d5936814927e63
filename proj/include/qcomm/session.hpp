#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcomm/braiding.hpp"
#include "qcomm/uqsl2.hpp"

namespace qcomm {

/// Everything one invocation works with: the field, the quantum group
/// and, at order 3, the R-matrix with both module algebras and their
/// braidings. Members reference each other, so sessions live on the
/// heap and never move.
struct Session {
  int order = 3;
  const CycloField* field = nullptr;
  HopfData hopf;
  std::optional<QTStructure> qt;
  std::optional<ModuleAlgebra> plane;
  std::optional<ModuleAlgebra> extended;
  std::optional<Braiding> plane_braiding;
  std::optional<Braiding> extended_braiding;

  Session() = default;
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  /// The module algebra selected by a space name, "A0" or "E".
  const ModuleAlgebra& space(const std::string& name) const;
  const Braiding& braiding(const std::string& name) const;
};

/// Builds the session for the given odd order. Away from order 3 only
/// the Hopf algebra is constructed; at order 3 the R-matrix and the
/// plane always come up, and the derivative extension is included
/// unless skipped (it dominates construction time).
std::unique_ptr<Session> build_session(int order, bool with_extension = true);

/// One verification suite: the reports it produced and the wall time
/// the whole run took.
struct SuiteReport {
  std::string suite;
  std::string space;
  std::vector<CheckReport> checks;
  double seconds = 0;

  bool passed() const;
};

/// Runs a named suite against the selected space: hopf | qt | yb |
/// module | leibniz | covariance | antisym | chi-yb | jacobi | all.
/// The jacobi suite passes when the obstruction matches triangularity,
/// so a nonzero residual under the quantum group is the expected
/// outcome, not a failure. Throws std::invalid_argument for an unknown
/// suite name or a suite the session's order cannot support.
SuiteReport run_suite(const Session& s, const std::string& suite, const std::string& space);

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

}  // namespace qcomm
