// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aigkit/cnf.hpp"

namespace aigkit {

/// A one-shot SAT problem: structural clauses plus an optional cube of
/// assumptions, serialized as extra unit clauses.
struct DimacsProblem {
  int num_vars = 0;
  ClauseList clauses;
  std::vector<CnfLit> cube;

  std::size_t num_clauses() const noexcept { return clauses.size() + cube.size(); }
};

/// `p cnf V C` header, then each clause as signed integers terminated by
/// 0, one clause per line. Cube literals come last, one unit clause each.
std::string write_dimacs(const DimacsProblem& p);
void write_dimacs(const DimacsProblem& p, std::ostream& os);

/// Parses DIMACS text; `c` comment lines are permitted anywhere before or
/// between clauses. The cube does not survive a round trip (its units
/// parse back as ordinary clauses).
DimacsProblem parse_dimacs(std::string_view text);

/// How SAT queries are discharged. An empty command selects the built-in
/// last-resort solver: exhaustive enumeration, usable up to 20 variables,
/// beyond which queries come back unknown. A non-empty command is run as
/// `command <cnf-file>` and must speak the usual competition output
/// (`s SATISFIABLE` / `s UNSATISFIABLE` and `v` model lines).
struct SolverConfig {
  std::string command;
  double timeout_seconds = 60.0;

  /// Reads AIGKIT_SAT_SOLVER; unset or empty means the built-in solver.
  static SolverConfig from_environment();
};

enum class SatStatus { sat, unsat, unknown };

struct SolverResult {
  SatStatus status = SatStatus::unknown;
  CnfEnv model;        // sat only; covers all problem variables
  std::string reason;  // unknown only
  double wall_seconds = 0.0;
  int exit_code = 0;
};

/// Runs one query. Claimed models are always re-checked with cnf_eval
/// before being returned; a solver that answers `s SATISFIABLE` with a
/// bogus model is an error, never a wrong result. Claims of UNSAT are
/// trusted — that is the trust boundary of this layer. Timeouts yield
/// unknown; spawn failures and malformed output are errors.
SolverResult run_solver(const DimacsProblem& p, const SolverConfig& config);

/// Satisfiability of one literal of the net: encodes its fanin cone,
/// asserts the literal, and runs the solver. A sat answer is translated
/// back to a CI assignment and re-simulated; only a confirmed witness is
/// returned.
struct LitSatResult {
  SatStatus status = SatStatus::unknown;
  BitAssignment witness;  // sat only, confirmed by evaluation
  std::string reason;
};

LitSatResult check_lit_sat(const Aignet& net, Lit lit,
                           const SolverConfig& config = SolverConfig::from_environment());

/// Combinational equivalence of corresponding outputs. Both nets must
/// agree on input, register, and output counts; registers are treated as
/// free inputs. Counterexamples are re-simulated on both nets before
/// being reported.
enum class EquivStatus { equivalent, counterexample, unknown };

struct PoVerdict {
  EquivStatus status = EquivStatus::unknown;
  BitAssignment witness;  // counterexample only
  std::string reason;
};

std::vector<PoVerdict> check_equiv(const Aignet& a, const Aignet& b,
                                   const SolverConfig& config = SolverConfig::from_environment());

/// Candidate-equivalence partitioning: random word simulation groups
/// nodes by signature (complemented signatures join the same group in
/// opposite phase), then SAT checks against each group's representative
/// either merge a member or yield a counterexample pattern that is
/// appended to the stimulus and used to re-split every pending group.
enum class ClassStatus {
  proven,              // every member SAT-verified against the representative
  refuted_into_split,  // verified class that exists because a candidate group was split
  unknown,             // contains members the solver could not decide
};

struct EquivClass {
  NodeId representative = 0;
  std::vector<NodeId> members;        // includes the representative
  std::vector<std::uint8_t> phases;   // 1: member equals the complement
  ClassStatus status = ClassStatus::proven;
};

struct PartitionOptions {
  std::uint32_t rounds = 4;
  std::uint64_t seed = default_sim_seed;
  SolverConfig solver = SolverConfig::from_environment();
  bool include_constant = true;  // seed node 0 so constant nodes have an anchor
};

std::vector<EquivClass> partition_classes(const Aignet& net, std::vector<NodeId> candidates,
                                          const PartitionOptions& opts = {});

}  // namespace aigkit
