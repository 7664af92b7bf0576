// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aigkit/aignet.hpp"
#include "aigkit/eval.hpp"

namespace aigkit {

/// A CNF literal is a signed variable index; variables start at 1.
using CnfLit = std::int32_t;
using Clause = std::vector<CnfLit>;

struct ClauseList {
  std::vector<Clause> clauses;

  std::size_t size() const noexcept { return clauses.size(); }
};

/// Bidirectional node-id <-> CNF-variable map with dense numbering.
/// Variables are allocated only for ids the encoder actually visits.
class VarMap {
public:
  /// Variable for `id`, allocating the next free one if needed.
  int get_or_add(NodeId id);
  /// Variable for `id`, or 0 when unmapped.
  int var_of(NodeId id) const;
  /// Node id carrying variable `var`.
  NodeId id_of(int var) const;
  int num_vars() const noexcept { return static_cast<int>(to_id_.size()); }
  /// Mapped ids in allocation order; index i corresponds to variable i+1.
  const std::vector<NodeId>& mapped_ids() const noexcept { return to_id_; }

private:
  std::unordered_map<NodeId, int> to_var_;
  std::vector<NodeId> to_id_;
};

/// Assignment to CNF variables; values[v] is variable v's bit, entry 0 is
/// unused.
struct CnfEnv {
  std::vector<std::uint8_t> values;

  /// Strict lookup; referencing a variable beyond the array is an error.
  std::uint8_t value(int var) const;
  /// Lenient lookup used by the env-extension helpers; missing means 0.
  std::uint8_t value_or_zero(int var) const noexcept;
};

using MarkArray = std::vector<std::uint8_t>;

/// Number of times each id occurs as a fanin of an AND, output, or
/// register-input node.
std::vector<std::uint32_t> count_fanouts(const Aignet& net);

/// A multi-input AND flattened from a tree of AND gates reached through
/// non-negated edges where every interior node has exactly one fanout.
struct SupergateLeaves {
  NodeId root;
  std::vector<Lit> leaves;
};

/// Flattens the supergate rooted at an AND node. Descent stops at negated
/// edges, non-AND nodes, nodes with more than one fanout, and at the leaf
/// cap. A plain two-input AND yields its two fanins.
SupergateLeaves collect_supergate(const Aignet& net, const std::vector<std::uint32_t>& fanouts,
                                  NodeId root, std::uint32_t max_leaves = 32);

/// An if-then-else recognized from the two-level pattern
/// root = !(c & !t) & !(!c & !e); is_xor marks the degenerate t == !e.
struct MuxShape {
  NodeId root;
  Lit cond;
  Lit then_lit;
  Lit else_lit;
  bool is_xor;
};

std::optional<MuxShape> detect_mux(const Aignet& net, NodeId root);

/// Appends the structural clauses tying `id` (and, recursively, its
/// not-yet-marked support) to its fanin cone, marking every id whose
/// constraints are now present. Combinational inputs contribute a
/// variable but no clauses; recognized supergates with k leaves emit k+1
/// clauses; muxes emit 6, XORs 4; a referenced constant node emits one
/// unit clause pinning its variable false. `id` must not be a
/// combinational output.
void add_cnf(const Aignet& net, NodeId id, MarkArray& marks, ClauseList& cnf, VarMap& vars);

/// 1 iff every clause contains a literal satisfied by `env`.
std::uint8_t cnf_eval(const ClauseList& cnf, const CnfEnv& env);

/// Keeps the values of CI-mapped variables and overwrites every other
/// mapped variable with its node's evaluation under those CI values.
CnfEnv aignet_eval_extend_env(const Aignet& net, const VarMap& vars, const CnfEnv& env);

/// True when every marked id's variable already holds its evaluation
/// under the CI values stored in `env`.
bool marked_vals_correct(const Aignet& net, const MarkArray& marks, const VarMap& vars,
                         const CnfEnv& env);

/// Reads the CI variables out of a satisfying assignment; CIs the encoder
/// never mapped default to 0.
BitAssignment cnf_env_to_cis(const Aignet& net, const VarMap& vars, const CnfEnv& env);

/// Environment induced by a circuit evaluation: every mapped variable is
/// assigned its node's value. The result satisfies every clause add_cnf
/// has produced.
CnfEnv cis_to_cnf_env(const Aignet& net, const VarMap& vars, const BitAssignment& a);

/// Signed CNF literal for AIG literal `lit`, given its node is mapped.
CnfLit cnf_lit_of(const VarMap& vars, Lit lit);

/// CNF for the fanin cone of one literal (combinational-output literals
/// are resolved to their fanin first), plus the signed literal asserting
/// it.
struct ConeCnf {
  ClauseList cnf;
  MarkArray marks;
  VarMap vars;
  CnfLit root;
};

ConeCnf build_cone_cnf(const Aignet& net, Lit lit);

}  // namespace aigkit
