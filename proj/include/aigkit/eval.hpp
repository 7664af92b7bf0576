// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aigkit/aignet.hpp"

namespace aigkit {

/// Values for the combinational inputs: one bit per primary input and one
/// per register output. Arrays shorter than the respective counts are an
/// error; they are never zero-filled silently.
struct BitAssignment {
  std::vector<std::uint8_t> inputs;
  std::vector<std::uint8_t> regs;
};

/// Stimulus for sequential evaluation: frames[k][n] is the value of input
/// n at frame k; initial_regs[n] is register n's value at frame 0.
struct FrameInputs {
  std::vector<std::vector<std::uint8_t>> frames;
  std::vector<std::uint8_t> initial_regs;
};

/// Combinational value of a single node. Linear in the node's fanin cone.
std::uint8_t eval_id(const Aignet& net, NodeId id, const BitAssignment& a);

/// eval_id of the literal's node, xor'd with its negation bit.
std::uint8_t eval_lit(const Aignet& net, Lit lit, const BitAssignment& a);

/// One linear pass over the node array; result[id] = eval_id(id).
std::vector<std::uint8_t> eval_sweep(const Aignet& net, const BitAssignment& a);

/// Value of a node at frame k. Register outputs read initial_regs at
/// frame 0 and their paired register input's previous-frame value after
/// that; an unpaired register is an error once a frame transition is
/// needed.
std::uint8_t seq_eval_id(const Aignet& net, std::uint32_t frame, NodeId id, const FrameInputs& f);

std::uint8_t seq_eval_lit(const Aignet& net, std::uint32_t frame, Lit lit, const FrameInputs& f);

/// One value array per frame, computed frame by frame with a single
/// register-state array carried forward.
std::vector<std::vector<std::uint8_t>> seq_eval_sweep(const Aignet& net, const FrameInputs& f);

/// Register-output values entering frame k: initial values at k = 0, the
/// previous frame's register-input values afterwards. Satisfies
/// seq_eval_id(k, id) == eval_id(id, {frames[k], reg_frame(k)}).
std::vector<std::uint8_t> reg_frame(const Aignet& net, std::uint32_t frame, const FrameInputs& f);

/// 64 parallel combinational evaluations: one word per CI, bit b of every
/// result word is eval_sweep under the assignment sliced from bit b.
struct WordAssignment {
  std::vector<std::uint64_t> inputs;
  std::vector<std::uint64_t> regs;
};

std::vector<std::uint64_t> sim_words(const Aignet& net, const WordAssignment& w);

/// Seed used by the CLI and by class partitioning unless overridden.
constexpr std::uint64_t default_sim_seed = 1;

/// Draws one fresh 64-bit word per CI from `rng`.
WordAssignment random_word_assignment(const Aignet& net, std::mt19937_64& rng);

/// Extracts the single-bit assignment stored at bit position `bit`.
BitAssignment slice_assignment(const WordAssignment& w, unsigned bit);

}  // namespace aigkit
