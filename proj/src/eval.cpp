// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/eval.hpp"

#include <string>

#include "aigkit/error.hpp"

namespace aigkit {

namespace {

void check_assignment(const Aignet& net, const BitAssignment& a) {
  if (a.inputs.size() < net.num_inputs()) {
    throw Error(Errc::undersized, "assignment covers " + std::to_string(a.inputs.size()) +
                                      " inputs, net has " + std::to_string(net.num_inputs()));
  }
  if (a.regs.size() < net.num_regs()) {
    throw Error(Errc::undersized, "assignment covers " + std::to_string(a.regs.size()) +
                                      " registers, net has " + std::to_string(net.num_regs()));
  }
}

void check_frames(const Aignet& net, const FrameInputs& f) {
  if (f.initial_regs.size() < net.num_regs()) {
    throw Error(Errc::undersized, "initial register values cover " +
                                      std::to_string(f.initial_regs.size()) + " registers, net has " +
                                      std::to_string(net.num_regs()));
  }
  for (std::size_t k = 0; k < f.frames.size(); ++k) {
    if (f.frames[k].size() < net.num_inputs()) {
      throw Error(Errc::undersized, "frame " + std::to_string(k) + " covers " +
                                        std::to_string(f.frames[k].size()) + " inputs, net has " +
                                        std::to_string(net.num_inputs()));
    }
  }
}

}  // namespace

std::vector<std::uint8_t> eval_sweep(const Aignet& net, const BitAssignment& a) {
  check_assignment(net, a);
  std::vector<std::uint8_t> vals(net.num_nodes(), 0);
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    switch (net.kind(id)) {
      case NodeKind::constant:
        vals[id] = 0;
        break;
      case NodeKind::input:
        vals[id] = a.inputs[net.ci_index(id)] & 1;
        break;
      case NodeKind::reg_out:
        vals[id] = a.regs[net.ci_index(id)] & 1;
        break;
      case NodeKind::and_gate: {
        Lit f0 = net.fanin0(id);
        Lit f1 = net.fanin1(id);
        vals[id] = static_cast<std::uint8_t>((vals[lit_id(f0)] ^ lit_neg(f0)) &
                                             (vals[lit_id(f1)] ^ lit_neg(f1)));
        break;
      }
      case NodeKind::output:
      case NodeKind::reg_in: {
        Lit f = net.fanin0(id);
        vals[id] = static_cast<std::uint8_t>(vals[lit_id(f)] ^ lit_neg(f));
        break;
      }
    }
  }
  return vals;
}

std::uint8_t eval_id(const Aignet& net, NodeId id, const BitAssignment& a) {
  check_assignment(net, a);
  if (id >= net.num_nodes()) {
    throw Error(Errc::out_of_bounds, "node id " + std::to_string(id) + " out of bounds");
  }
  // Evaluates just the fanin cone, with an explicit stack so deep nets do
  // not overflow the call stack.
  std::vector<std::int8_t> memo(id + 1, -1);
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    NodeId n = stack.back();
    if (memo[n] >= 0) {
      stack.pop_back();
      continue;
    }
    switch (net.kind(n)) {
      case NodeKind::constant:
        memo[n] = 0;
        stack.pop_back();
        break;
      case NodeKind::input:
        memo[n] = a.inputs[net.ci_index(n)] & 1;
        stack.pop_back();
        break;
      case NodeKind::reg_out:
        memo[n] = a.regs[net.ci_index(n)] & 1;
        stack.pop_back();
        break;
      case NodeKind::and_gate: {
        NodeId c0 = lit_id(net.fanin0(n));
        NodeId c1 = lit_id(net.fanin1(n));
        if (memo[c0] < 0) {
          stack.push_back(c0);
        } else if (memo[c1] < 0) {
          stack.push_back(c1);
        } else {
          memo[n] = static_cast<std::int8_t>((memo[c0] ^ lit_neg(net.fanin0(n))) &
                                             (memo[c1] ^ lit_neg(net.fanin1(n))));
          stack.pop_back();
        }
        break;
      }
      case NodeKind::output:
      case NodeKind::reg_in: {
        NodeId c = lit_id(net.fanin0(n));
        if (memo[c] < 0) {
          stack.push_back(c);
        } else {
          memo[n] = static_cast<std::int8_t>(memo[c] ^ lit_neg(net.fanin0(n)));
          stack.pop_back();
        }
        break;
      }
    }
  }
  return static_cast<std::uint8_t>(memo[id]);
}

std::uint8_t eval_lit(const Aignet& net, Lit lit, const BitAssignment& a) {
  return eval_id(net, lit_id(lit), a) ^ static_cast<std::uint8_t>(lit_neg(lit));
}

std::vector<std::vector<std::uint8_t>> seq_eval_sweep(const Aignet& net, const FrameInputs& f) {
  check_frames(net, f);
  std::vector<std::vector<std::uint8_t>> result;
  result.reserve(f.frames.size());
  std::vector<std::uint8_t> reg_vals(f.initial_regs.begin(),
                                     f.initial_regs.begin() + net.num_regs());
  for (std::size_t k = 0; k < f.frames.size(); ++k) {
    if (k > 0) {
      // Advance the registers: each reads its paired register input's
      // value from the previous frame.
      const auto& prev = result.back();
      for (std::uint32_t n = 0; n < net.num_regs(); ++n) {
        NodeId ri = net.regin_of_reg(n);
        if (ri == no_node) {
          throw Error(Errc::bad_register, "register " + std::to_string(n) +
                                              " has no register input; cannot advance to frame " +
                                              std::to_string(k));
        }
        reg_vals[n] = prev[ri];
      }
    }
    BitAssignment a;
    a.inputs = f.frames[k];
    a.regs = reg_vals;
    result.push_back(eval_sweep(net, a));
  }
  return result;
}

std::uint8_t seq_eval_id(const Aignet& net, std::uint32_t frame, NodeId id, const FrameInputs& f) {
  if (frame >= f.frames.size()) {
    throw Error(Errc::out_of_bounds, "frame " + std::to_string(frame) + " out of range");
  }
  if (id >= net.num_nodes()) {
    throw Error(Errc::out_of_bounds, "node id " + std::to_string(id) + " out of bounds");
  }
  FrameInputs prefix;
  prefix.initial_regs = f.initial_regs;
  prefix.frames.assign(f.frames.begin(), f.frames.begin() + frame + 1);
  return seq_eval_sweep(net, prefix)[frame][id];
}

std::uint8_t seq_eval_lit(const Aignet& net, std::uint32_t frame, Lit lit, const FrameInputs& f) {
  return seq_eval_id(net, frame, lit_id(lit), f) ^ static_cast<std::uint8_t>(lit_neg(lit));
}

std::vector<std::uint8_t> reg_frame(const Aignet& net, std::uint32_t frame, const FrameInputs& f) {
  check_frames(net, f);
  if (frame == 0) {
    return std::vector<std::uint8_t>(f.initial_regs.begin(),
                                     f.initial_regs.begin() + net.num_regs());
  }
  if (frame > f.frames.size()) {
    throw Error(Errc::out_of_bounds, "frame " + std::to_string(frame) + " out of range");
  }
  FrameInputs prefix;
  prefix.initial_regs = f.initial_regs;
  prefix.frames.assign(f.frames.begin(), f.frames.begin() + frame);
  auto sweeps = seq_eval_sweep(net, prefix);
  std::vector<std::uint8_t> regs(net.num_regs(), 0);
  for (std::uint32_t n = 0; n < net.num_regs(); ++n) {
    NodeId ri = net.regin_of_reg(n);
    if (ri == no_node) {
      throw Error(Errc::bad_register,
                  "register " + std::to_string(n) + " has no register input");
    }
    regs[n] = sweeps[frame - 1][ri];
  }
  return regs;
}

std::vector<std::uint64_t> sim_words(const Aignet& net, const WordAssignment& w) {
  if (w.inputs.size() < net.num_inputs() || w.regs.size() < net.num_regs()) {
    throw Error(Errc::undersized, "word assignment does not cover all combinational inputs");
  }
  std::vector<std::uint64_t> words(net.num_nodes(), 0);
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    switch (net.kind(id)) {
      case NodeKind::constant:
        words[id] = 0;
        break;
      case NodeKind::input:
        words[id] = w.inputs[net.ci_index(id)];
        break;
      case NodeKind::reg_out:
        words[id] = w.regs[net.ci_index(id)];
        break;
      case NodeKind::and_gate: {
        Lit f0 = net.fanin0(id);
        Lit f1 = net.fanin1(id);
        std::uint64_t w0 = words[lit_id(f0)] ^ (lit_neg(f0) ? ~0ull : 0ull);
        std::uint64_t w1 = words[lit_id(f1)] ^ (lit_neg(f1) ? ~0ull : 0ull);
        words[id] = w0 & w1;
        break;
      }
      case NodeKind::output:
      case NodeKind::reg_in: {
        Lit f = net.fanin0(id);
        words[id] = words[lit_id(f)] ^ (lit_neg(f) ? ~0ull : 0ull);
        break;
      }
    }
  }
  return words;
}

WordAssignment random_word_assignment(const Aignet& net, std::mt19937_64& rng) {
  WordAssignment w;
  w.inputs.resize(net.num_inputs());
  w.regs.resize(net.num_regs());
  for (auto& x : w.inputs) x = rng();
  for (auto& x : w.regs) x = rng();
  return w;
}

BitAssignment slice_assignment(const WordAssignment& w, unsigned bit) {
  BitAssignment a;
  a.inputs.reserve(w.inputs.size());
  a.regs.reserve(w.regs.size());
  for (auto x : w.inputs) a.inputs.push_back(static_cast<std::uint8_t>((x >> bit) & 1));
  for (auto x : w.regs) a.regs.push_back(static_cast<std::uint8_t>((x >> bit) & 1));
  return a;
}

}  // namespace aigkit
