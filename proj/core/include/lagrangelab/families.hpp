#pragma once

#include "lagrangelab/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lagrangelab {

using ParamPoint = std::map<std::string, long>;

/// Axes in the order given; each token is name=values with values a comma
/// list of integers, a..b or a..b:step.
struct ParamGrid {
  std::vector<std::pair<std::string, std::vector<long>>> axes;
};

[[nodiscard]] ParamGrid parse_grid(const std::vector<std::string>& tokens);

/// Cartesian product, last axis varying fastest.
[[nodiscard]] std::vector<ParamPoint> expand(const ParamGrid& grid);

[[nodiscard]] std::string format_params(const ParamPoint& p);

struct FamilyInfo {
  std::string id;
  std::vector<std::string> params;
  std::string summary;
};

[[nodiscard]] const std::vector<FamilyInfo>& family_catalog();

struct FamilyInstance {
  std::string family;
  ParamPoint params;
  QuadricSystem quadrics;
  std::optional<PolytopePresentation> polytope;
  Integer expected_minimal_maslov;
  Rational expected_monotone_c = 1;
  std::optional<bool> expected_orientable;
  std::optional<bool> expected_embedded;
  std::optional<TopologyExpr> expected_fiber;
};

/// Constraint texts that the point violates; empty when admissible.
[[nodiscard]] std::vector<std::string> constraint_violations(const std::string& family, const ParamPoint& p);

/// Throws ErrorKind::Input for an unknown family, missing parameters or
/// violated constraints.
[[nodiscard]] FamilyInstance make_instance(const std::string& family, const ParamPoint& p);

/// Runs the pipeline and compares against the closed forms; throws
/// ErrorKind::Invariant on any disagreement.
[[nodiscard]] LagrangianReport run_instance(const FamilyInstance& inst, const CheckOptions& opt);

struct ReproduceRow {
  ParamPoint params;
  LagrangianReport report;
};

[[nodiscard]] std::vector<ReproduceRow> reproduce(const std::string& family, const ParamGrid& grid,
                                                  const CheckOptions& opt);

struct ScanGroup {
  std::string fiber;
  std::size_t base_dim = 0;
  std::size_t ambient_n = 0;
  std::string bundle;
  std::vector<ParamPoint> members;
  std::vector<Integer> member_maslov;
  IsotopyVerdict verdict;
};

struct ScanResult {
  std::size_t points = 0;
  std::size_t rejected = 0;  // outside the family's constraints
  std::vector<ScanGroup> groups;
};

/// Groups admissible points by diffeomorphism type of the total space. Output
/// does not depend on the thread count.
[[nodiscard]] ScanResult scan(const std::string& family, const ParamGrid& grid, unsigned threads,
                              const CheckOptions& opt);

/// Options used by reproduce and scan by default: no numerics.
[[nodiscard]] CheckOptions family_options();

}  // namespace lagrangelab
