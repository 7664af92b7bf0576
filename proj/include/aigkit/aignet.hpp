// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "aigkit/literal.hpp"

namespace aigkit {

/// The six node types of the array representation. Combinational outputs
/// (output, reg_in) carry a single fanin and are never legal as fanins
/// themselves.
enum class NodeKind : std::uint8_t {
  constant = 0,  // the unique constant-false node, always id 0
  input = 1,     // primary input
  reg_out = 2,   // register output (current state, a combinational input)
  and_gate = 3,
  output = 4,   // primary output
  reg_in = 5,   // register input (next-state function, a combinational output)
};

constexpr bool is_fanin_kind(NodeKind k) noexcept {
  return static_cast<std::uint8_t>(k) < static_cast<std::uint8_t>(NodeKind::output);
}

/// Sentinel for "register has no reg_in attached yet".
constexpr NodeId no_node = 0xffffffffu;

/// An and-inverter graph stored as an append-only, topologically ordered
/// node array. Node 0 is the constant-false node. Fanins are literals and
/// always reference strictly smaller ids. Index arrays (nth input, nth
/// output, ...) are maintained eagerly but carry no information beyond
/// what a scan of the node table yields.
///
/// Construction is single-writer; a fully built net is immutable and may
/// be shared read-only across threads.
class Aignet {
public:
  Aignet();

  std::uint32_t num_nodes() const noexcept { return static_cast<std::uint32_t>(w0_.size()); }
  std::uint32_t num_inputs() const noexcept { return static_cast<std::uint32_t>(inputs_.size()); }
  std::uint32_t num_regs() const noexcept { return static_cast<std::uint32_t>(regs_.size()); }
  std::uint32_t num_outputs() const noexcept { return static_cast<std::uint32_t>(outputs_.size()); }
  std::uint32_t num_regins() const noexcept { return static_cast<std::uint32_t>(regins_.size()); }

  NodeKind kind(NodeId id) const;

  /// First fanin literal of an and_gate, output, or reg_in node.
  Lit fanin0(NodeId id) const;
  /// Second fanin literal; and_gate only.
  Lit fanin1(NodeId id) const;
  /// Position of an input among inputs, or of a reg_out among registers.
  std::uint32_t ci_index(NodeId id) const;
  /// Position of an output among outputs, or of a reg_in among reg_ins.
  std::uint32_t co_index(NodeId id) const;
  /// The reg_out id a reg_in node is paired with.
  NodeId regin_reg(NodeId id) const;

  /// Appends a primary input; returns its non-negated literal.
  Lit add_input();
  /// Appends a register output (initially unpaired); returns its literal.
  Lit add_reg();
  /// Appends an AND gate, unconditionally and without simplification.
  Lit add_and(Lit f0, Lit f1);
  /// Appends a primary output with the given fanin; returns its node id.
  NodeId add_output(Lit f);
  /// Appends a register input with fanin `f`, paired with reg_out `ro`.
  NodeId add_regin(Lit f, NodeId ro);

  NodeId nth_input(std::uint32_t n) const;
  NodeId nth_reg(std::uint32_t n) const;
  NodeId nth_output(std::uint32_t n) const;
  NodeId nth_regin(std::uint32_t n) const;

  /// The reg_in node attached to register number `n`, or no_node.
  NodeId regin_of_reg(std::uint32_t n) const;

  /// True when the literal is in bounds and names a constant, input,
  /// reg_out, or and_gate node.
  bool is_fanin_legal(Lit lit) const noexcept;

  /// True iff this net contains every node of `old`, unchanged, at the
  /// same ids. Reflexive and transitive; every add_* call preserves it.
  bool is_extension_of(const Aignet& old) const noexcept;

  /// Raw packed words of a node, for exact structural comparison.
  std::pair<std::uint64_t, std::uint64_t> raw_node(NodeId id) const;

private:
  void check_id(NodeId id) const;
  void check_fanin(Lit lit) const;
  NodeId append(NodeKind k, std::uint32_t payload0, std::uint32_t payload1);

  // w0 holds the kind in the low 3 bits and the first payload word above
  // them; w1 is the second payload word. Two machine words per node.
  std::vector<std::uint64_t> w0_;
  std::vector<std::uint64_t> w1_;
  std::vector<NodeId> inputs_;
  std::vector<NodeId> regs_;
  std::vector<NodeId> outputs_;
  std::vector<NodeId> regins_;
  std::vector<NodeId> reg_to_regin_;  // per register number, or no_node
};

/// Resolves a combinational-output literal to the fanin it labels;
/// identity on all other literals.
Lit resolve_co(const Aignet& net, Lit lit);

/// Longest path, in AND gates, from any combinational input to a node.
std::uint32_t network_depth(const Aignet& net);

}  // namespace aigkit
