// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/aignet.hpp"

#include <algorithm>

#include "aigkit/error.hpp"

namespace aigkit {

namespace {

constexpr std::uint64_t kind_mask = 0x7;

std::uint64_t pack_w0(NodeKind k, std::uint32_t payload0) {
  return (static_cast<std::uint64_t>(payload0) << 3) | static_cast<std::uint64_t>(k);
}

}  // namespace

Aignet::Aignet() {
  w0_.push_back(pack_w0(NodeKind::constant, 0));
  w1_.push_back(0);
}

void Aignet::check_id(NodeId id) const {
  if (id >= num_nodes()) {
    throw Error(Errc::out_of_bounds,
                "node id " + std::to_string(id) + " out of bounds (have " +
                    std::to_string(num_nodes()) + " nodes)");
  }
}

void Aignet::check_fanin(Lit lit) const {
  check_id(lit_id(lit));
  if (!is_fanin_kind(kind(lit_id(lit)))) {
    throw Error(Errc::bad_fanin, "literal " + std::to_string(lit) +
                                     " names a combinational output and cannot be a fanin");
  }
}

NodeKind Aignet::kind(NodeId id) const {
  check_id(id);
  return static_cast<NodeKind>(w0_[id] & kind_mask);
}

Lit Aignet::fanin0(NodeId id) const {
  NodeKind k = kind(id);
  if (k != NodeKind::and_gate && k != NodeKind::output && k != NodeKind::reg_in) {
    throw Error(Errc::invalid, "node " + std::to_string(id) + " has no fanin");
  }
  return static_cast<Lit>(w0_[id] >> 3);
}

Lit Aignet::fanin1(NodeId id) const {
  if (kind(id) != NodeKind::and_gate) {
    throw Error(Errc::invalid, "node " + std::to_string(id) + " has no second fanin");
  }
  return static_cast<Lit>(w1_[id]);
}

std::uint32_t Aignet::ci_index(NodeId id) const {
  NodeKind k = kind(id);
  if (k != NodeKind::input && k != NodeKind::reg_out) {
    throw Error(Errc::invalid, "node " + std::to_string(id) + " is not a combinational input");
  }
  return static_cast<std::uint32_t>(w0_[id] >> 3);
}

std::uint32_t Aignet::co_index(NodeId id) const {
  NodeKind k = kind(id);
  if (k != NodeKind::output && k != NodeKind::reg_in) {
    throw Error(Errc::invalid, "node " + std::to_string(id) + " is not a combinational output");
  }
  return static_cast<std::uint32_t>(w1_[id]);
}

NodeId Aignet::regin_reg(NodeId id) const {
  if (kind(id) != NodeKind::reg_in) {
    throw Error(Errc::invalid, "node " + std::to_string(id) + " is not a register input");
  }
  return static_cast<NodeId>(w1_[id] >> 32);
}

NodeId Aignet::append(NodeKind k, std::uint32_t payload0, std::uint32_t payload1) {
  if (num_nodes() > max_node_id) {
    throw Error(Errc::capacity, "node capacity exhausted: ids no longer fit in a literal");
  }
  NodeId id = num_nodes();
  w0_.push_back(pack_w0(k, payload0));
  w1_.push_back(payload1);
  return id;
}

Lit Aignet::add_input() {
  NodeId id = append(NodeKind::input, num_inputs(), 0);
  inputs_.push_back(id);
  return make_lit(id, 0);
}

Lit Aignet::add_reg() {
  NodeId id = append(NodeKind::reg_out, num_regs(), 0);
  regs_.push_back(id);
  reg_to_regin_.push_back(no_node);
  return make_lit(id, 0);
}

Lit Aignet::add_and(Lit f0, Lit f1) {
  check_fanin(f0);
  check_fanin(f1);
  return make_lit(append(NodeKind::and_gate, f0, f1), 0);
}

NodeId Aignet::add_output(Lit f) {
  check_fanin(f);
  NodeId id = append(NodeKind::output, f, num_outputs());
  outputs_.push_back(id);
  return id;
}

NodeId Aignet::add_regin(Lit f, NodeId ro) {
  check_fanin(f);
  check_id(ro);
  if (kind(ro) != NodeKind::reg_out) {
    throw Error(Errc::bad_register, "node " + std::to_string(ro) + " is not a register output");
  }
  std::uint32_t reg = ci_index(ro);
  if (reg_to_regin_[reg] != no_node) {
    throw Error(Errc::bad_register,
                "register output " + std::to_string(ro) + " already has a register input");
  }
  // w1 packs the co index in the low word and the paired reg_out id above it.
  NodeId id = append(NodeKind::reg_in, f, num_regins());
  w1_[id] |= static_cast<std::uint64_t>(ro) << 32;
  regins_.push_back(id);
  reg_to_regin_[reg] = id;
  return id;
}

namespace {

NodeId nth_of(const std::vector<NodeId>& v, std::uint32_t n, const char* what) {
  if (n >= v.size()) {
    throw Error(Errc::out_of_bounds,
                std::string(what) + " index " + std::to_string(n) + " out of range");
  }
  return v[n];
}

}  // namespace

NodeId Aignet::nth_input(std::uint32_t n) const { return nth_of(inputs_, n, "input"); }
NodeId Aignet::nth_reg(std::uint32_t n) const { return nth_of(regs_, n, "register"); }
NodeId Aignet::nth_output(std::uint32_t n) const { return nth_of(outputs_, n, "output"); }
NodeId Aignet::nth_regin(std::uint32_t n) const { return nth_of(regins_, n, "register input"); }

NodeId Aignet::regin_of_reg(std::uint32_t n) const {
  if (n >= num_regs()) {
    throw Error(Errc::out_of_bounds, "register index " + std::to_string(n) + " out of range");
  }
  return reg_to_regin_[n];
}

bool Aignet::is_fanin_legal(Lit lit) const noexcept {
  NodeId id = lit_id(lit);
  if (id >= num_nodes()) return false;
  return is_fanin_kind(static_cast<NodeKind>(w0_[id] & kind_mask));
}

bool Aignet::is_extension_of(const Aignet& old) const noexcept {
  if (old.num_nodes() > num_nodes()) return false;
  for (NodeId id = 0; id < old.num_nodes(); ++id) {
    if (w0_[id] != old.w0_[id] || w1_[id] != old.w1_[id]) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> Aignet::raw_node(NodeId id) const {
  check_id(id);
  return {w0_[id], w1_[id]};
}

Lit resolve_co(const Aignet& net, Lit lit) {
  NodeId id = lit_id(lit);
  NodeKind k = net.kind(id);
  if (k == NodeKind::output || k == NodeKind::reg_in) {
    return lit_negate_cond(net.fanin0(id), lit_neg(lit));
  }
  return lit;
}

std::uint32_t network_depth(const Aignet& net) {
  std::vector<std::uint32_t> level(net.num_nodes(), 0);
  std::uint32_t depth = 0;
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    switch (net.kind(id)) {
      case NodeKind::and_gate:
        level[id] = 1 + std::max(level[lit_id(net.fanin0(id))], level[lit_id(net.fanin1(id))]);
        break;
      case NodeKind::output:
      case NodeKind::reg_in:
        level[id] = level[lit_id(net.fanin0(id))];
        break;
      default:
        break;
    }
    depth = std::max(depth, level[id]);
  }
  return depth;
}

}  // namespace aigkit
