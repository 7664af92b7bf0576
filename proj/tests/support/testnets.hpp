// Test-only helpers: independent reference evaluators, random circuit and
// expression generators, and the small worked-example fixture used across
// the suites. The reference evaluators follow the defining case analysis
// directly and never share code with the library's sweep implementations.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aigkit/aignet.hpp"
#include "aigkit/eval.hpp"
#include "aigkit/honsaig.hpp"

namespace testnets {

using aigkit::Aignet;
using aigkit::BitAssignment;
using aigkit::FrameInputs;
using aigkit::Lit;
using aigkit::NodeId;

// Plain recursive combinational evaluation; exponential on shared
// structure, so keep the nets tiny.
std::uint8_t eval_id_rec(const Aignet& net, NodeId id, const BitAssignment& a);
std::uint8_t eval_lit_rec(const Aignet& net, Lit lit, const BitAssignment& a);

// Same equations with a memo table, usable on larger nets.
std::uint8_t eval_id_memo(const Aignet& net, NodeId id, const BitAssignment& a);

// Sequential evaluation by the frame-indexed recursion; the memo variant
// caches (frame, id) pairs.
std::uint8_t seq_eval_id_rec(const Aignet& net, std::uint32_t frame, NodeId id,
                             const FrameInputs& f);
std::uint8_t seq_eval_id_memo(const Aignet& net, std::uint32_t frame, NodeId id,
                              const FrameInputs& f);

// The register-values-per-frame recursion, defined mutually with
// seq_eval_id_memo.
std::vector<std::uint8_t> reg_frame_rec(const Aignet& net, std::uint32_t frame,
                                        const FrameInputs& f);

// The worked sequential example: two inputs, one register.
//   id 0 constant, id 1 input, id 2 input, id 3 reg-out,
//   id 4 AND(5, 6), id 5 reg-in(9, ro 3), id 6 AND(1, 2),
//   id 7 AND(8, 12), id 8 output(14).
// The output computes in0 & !in1 & reg0.
Aignet example_circuit();

struct RandomNetOptions {
  std::uint32_t min_inputs = 1;
  std::uint32_t max_inputs = 8;
  std::uint32_t max_regs = 0;
  std::uint32_t min_gates = 1;
  std::uint32_t max_gates = 60;
  std::uint32_t max_outputs = 3;
  bool pair_all_regs = true;
  double const_fanin_prob = 0.05;  // chance a fanin is literal 0 or 1
};

Aignet random_net(std::mt19937_64& rng, const RandomNetOptions& opts = {});

// Assignment whose bits come from `index`: inputs in the low bits,
// registers above them.
BitAssignment assignment_from_index(const Aignet& net, std::uint64_t index);

// Truth table of a literal over all 2^(inputs+regs) CI assignments.
std::vector<std::uint8_t> truth_table(const Aignet& net, Lit lit);

// Random expression tree over the given variables; `folded` selects the
// simplifying constructors, otherwise raw interned pairs.
aigkit::HonsAig random_hons(std::mt19937_64& rng, const std::vector<std::string>& vars,
                            std::uint32_t budget, bool folded = true);

}  // namespace testnets
