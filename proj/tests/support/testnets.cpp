#include "support/testnets.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "aigkit/strash.hpp"

namespace testnets {

using aigkit::lit_id;
using aigkit::lit_neg;
using aigkit::make_lit;
using aigkit::NodeKind;

std::uint8_t eval_id_rec(const Aignet& net, NodeId id, const BitAssignment& a) {
  switch (net.kind(id)) {
    case NodeKind::constant:
      return 0;
    case NodeKind::input:
      return a.inputs.at(net.ci_index(id)) & 1;
    case NodeKind::reg_out:
      return a.regs.at(net.ci_index(id)) & 1;
    case NodeKind::and_gate:
      return eval_lit_rec(net, net.fanin0(id), a) & eval_lit_rec(net, net.fanin1(id), a);
    case NodeKind::output:
    case NodeKind::reg_in:
      return eval_lit_rec(net, net.fanin0(id), a);
  }
  throw std::logic_error("unreachable");
}

std::uint8_t eval_lit_rec(const Aignet& net, Lit lit, const BitAssignment& a) {
  return eval_id_rec(net, lit_id(lit), a) ^ static_cast<std::uint8_t>(lit_neg(lit));
}

namespace {

std::uint8_t eval_id_memo_impl(const Aignet& net, NodeId id, const BitAssignment& a,
                               std::unordered_map<NodeId, std::uint8_t>& memo) {
  auto it = memo.find(id);
  if (it != memo.end()) return it->second;
  std::uint8_t v = 0;
  auto lit_val = [&](Lit lit) {
    return eval_id_memo_impl(net, lit_id(lit), a, memo) ^ static_cast<std::uint8_t>(lit_neg(lit));
  };
  switch (net.kind(id)) {
    case NodeKind::constant:
      v = 0;
      break;
    case NodeKind::input:
      v = a.inputs.at(net.ci_index(id)) & 1;
      break;
    case NodeKind::reg_out:
      v = a.regs.at(net.ci_index(id)) & 1;
      break;
    case NodeKind::and_gate:
      v = lit_val(net.fanin0(id)) & lit_val(net.fanin1(id));
      break;
    case NodeKind::output:
    case NodeKind::reg_in:
      v = lit_val(net.fanin0(id));
      break;
  }
  memo.emplace(id, v);
  return v;
}

struct SeqKey {
  std::uint32_t frame;
  NodeId id;
  bool operator<(const SeqKey& o) const {
    return frame != o.frame ? frame < o.frame : id < o.id;
  }
};

std::uint8_t seq_memo_impl(const Aignet& net, std::uint32_t frame, NodeId id,
                           const FrameInputs& f, std::map<SeqKey, std::uint8_t>& memo) {
  auto it = memo.find({frame, id});
  if (it != memo.end()) return it->second;
  auto lit_val = [&](std::uint32_t k, Lit lit) {
    return seq_memo_impl(net, k, lit_id(lit), f, memo) ^ static_cast<std::uint8_t>(lit_neg(lit));
  };
  std::uint8_t v = 0;
  switch (net.kind(id)) {
    case NodeKind::constant:
      v = 0;
      break;
    case NodeKind::input:
      v = f.frames.at(frame).at(net.ci_index(id)) & 1;
      break;
    case NodeKind::reg_out: {
      if (frame == 0) {
        v = f.initial_regs.at(net.ci_index(id)) & 1;
      } else {
        NodeId ri = net.regin_of_reg(net.ci_index(id));
        if (ri == aigkit::no_node) throw std::runtime_error("register without register input");
        v = seq_memo_impl(net, frame - 1, ri, f, memo);
      }
      break;
    }
    case NodeKind::and_gate:
      v = lit_val(frame, net.fanin0(id)) & lit_val(frame, net.fanin1(id));
      break;
    case NodeKind::output:
    case NodeKind::reg_in:
      v = lit_val(frame, net.fanin0(id));
      break;
  }
  memo.emplace(SeqKey{frame, id}, v);
  return v;
}

}  // namespace

std::uint8_t eval_id_memo(const Aignet& net, NodeId id, const BitAssignment& a) {
  std::unordered_map<NodeId, std::uint8_t> memo;
  return eval_id_memo_impl(net, id, a, memo);
}

std::uint8_t seq_eval_id_rec(const Aignet& net, std::uint32_t frame, NodeId id,
                             const FrameInputs& f) {
  auto lit_val = [&](std::uint32_t k, Lit lit) {
    return seq_eval_id_rec(net, k, lit_id(lit), f) ^ static_cast<std::uint8_t>(lit_neg(lit));
  };
  switch (net.kind(id)) {
    case NodeKind::constant:
      return 0;
    case NodeKind::input:
      return f.frames.at(frame).at(net.ci_index(id)) & 1;
    case NodeKind::reg_out: {
      if (frame == 0) return f.initial_regs.at(net.ci_index(id)) & 1;
      NodeId ri = net.regin_of_reg(net.ci_index(id));
      if (ri == aigkit::no_node) throw std::runtime_error("register without register input");
      return seq_eval_id_rec(net, frame - 1, ri, f);
    }
    case NodeKind::and_gate:
      return lit_val(frame, net.fanin0(id)) & lit_val(frame, net.fanin1(id));
    case NodeKind::output:
    case NodeKind::reg_in:
      return lit_val(frame, net.fanin0(id));
  }
  throw std::logic_error("unreachable");
}

std::uint8_t seq_eval_id_memo(const Aignet& net, std::uint32_t frame, NodeId id,
                              const FrameInputs& f) {
  std::map<SeqKey, std::uint8_t> memo;
  return seq_memo_impl(net, frame, id, f, memo);
}

std::vector<std::uint8_t> reg_frame_rec(const Aignet& net, std::uint32_t frame,
                                        const FrameInputs& f) {
  std::vector<std::uint8_t> regs(net.num_regs(), 0);
  std::map<SeqKey, std::uint8_t> memo;
  for (std::uint32_t n = 0; n < net.num_regs(); ++n) {
    if (frame == 0) {
      regs[n] = f.initial_regs.at(n) & 1;
    } else {
      NodeId ri = net.regin_of_reg(n);
      if (ri == aigkit::no_node) throw std::runtime_error("register without register input");
      regs[n] = seq_memo_impl(net, frame - 1, ri, f, memo);
    }
  }
  return regs;
}

Aignet example_circuit() {
  Aignet net;
  net.add_input();                    // id 1
  net.add_input();                    // id 2
  net.add_reg();                      // id 3
  net.add_and(5, 6);                  // id 4: !in1 & reg0
  net.add_regin(9, 3);                // id 5: next reg0 = !(id 4)
  net.add_and(1, 2);                  // id 6: true & in0
  net.add_and(8, 12);                 // id 7: id4 & id6
  net.add_output(14);                 // id 8: output of id 7
  return net;
}

Aignet random_net(std::mt19937_64& rng, const RandomNetOptions& opts) {
  auto pick = [&](std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(rng() % (hi - lo + 1));
  };
  Aignet net;
  std::uint32_t num_inputs = pick(opts.min_inputs, opts.max_inputs);
  std::uint32_t num_regs = opts.max_regs ? pick(0, opts.max_regs) : 0;
  std::uint32_t num_gates = pick(opts.min_gates, opts.max_gates);

  std::vector<NodeId> fanin_pool{0};
  for (std::uint32_t i = 0; i < num_inputs; ++i) fanin_pool.push_back(lit_id(net.add_input()));
  for (std::uint32_t i = 0; i < num_regs; ++i) fanin_pool.push_back(lit_id(net.add_reg()));

  auto random_lit = [&]() -> Lit {
    if (std::uniform_real_distribution<double>(0, 1)(rng) < opts.const_fanin_prob) {
      return static_cast<Lit>(rng() & 1);
    }
    NodeId id = fanin_pool[rng() % fanin_pool.size()];
    return make_lit(id, static_cast<std::uint32_t>(rng() & 1));
  };

  for (std::uint32_t i = 0; i < num_gates; ++i) {
    fanin_pool.push_back(lit_id(net.add_and(random_lit(), random_lit())));
  }
  std::uint32_t num_outputs = pick(1, opts.max_outputs);
  for (std::uint32_t i = 0; i < num_outputs; ++i) net.add_output(random_lit());
  if (opts.pair_all_regs) {
    for (std::uint32_t n = 0; n < num_regs; ++n) {
      net.add_regin(random_lit(), net.nth_reg(n));
    }
  }
  return net;
}

BitAssignment assignment_from_index(const Aignet& net, std::uint64_t index) {
  BitAssignment a;
  a.inputs.resize(net.num_inputs());
  a.regs.resize(net.num_regs());
  for (std::uint32_t i = 0; i < net.num_inputs(); ++i) {
    a.inputs[i] = static_cast<std::uint8_t>((index >> i) & 1);
  }
  for (std::uint32_t i = 0; i < net.num_regs(); ++i) {
    a.regs[i] = static_cast<std::uint8_t>((index >> (net.num_inputs() + i)) & 1);
  }
  return a;
}

std::vector<std::uint8_t> truth_table(const Aignet& net, Lit lit) {
  std::uint32_t bits = net.num_inputs() + net.num_regs();
  std::vector<std::uint8_t> table(1ull << bits);
  for (std::uint64_t index = 0; index < table.size(); ++index) {
    table[index] = aigkit::eval_lit(net, lit, assignment_from_index(net, index));
  }
  return table;
}

aigkit::HonsAig random_hons(std::mt19937_64& rng, const std::vector<std::string>& vars,
                            std::uint32_t budget, bool folded) {
  if (budget == 0 || rng() % 4 == 0) {
    std::uint64_t which = rng() % (vars.size() + 2);
    if (which == vars.size()) return aigkit::aig_false();
    if (which == vars.size() + 1) return aigkit::aig_true();
    return aigkit::aig_var(vars[which]);
  }
  std::uint32_t half = budget / 2;
  if (rng() % 3 == 0) {
    aigkit::HonsAig child = random_hons(rng, vars, budget - 1, folded);
    return folded ? aigkit::aig_not(child) : aigkit::aig_cons(child, aigkit::aig_false());
  }
  aigkit::HonsAig left = random_hons(rng, vars, half, folded);
  aigkit::HonsAig right = random_hons(rng, vars, half, folded);
  if (folded) return aigkit::aig_and(left, right);
  // Raw pair; (x . NIL) would read as a NOT, so keep ANDs explicit by
  // re-rolling a NIL right child into T.
  if (right.is_false()) right = aigkit::aig_true();
  return aigkit::aig_cons(left, right);
}

}  // namespace testnets
