#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aigkit/error.hpp"
#include "aigkit/eval.hpp"
#include "support/testnets.hpp"

using namespace aigkit;

namespace {

FrameInputs frames_from_index(const Aignet& net, std::uint32_t num_frames, std::uint64_t index) {
  FrameInputs f;
  f.initial_regs.resize(net.num_regs());
  std::uint32_t bit = 0;
  for (std::uint32_t k = 0; k < num_frames; ++k) {
    std::vector<std::uint8_t> row(net.num_inputs());
    for (auto& b : row) b = static_cast<std::uint8_t>((index >> bit++) & 1);
    f.frames.push_back(std::move(row));
  }
  for (auto& b : f.initial_regs) b = static_cast<std::uint8_t>((index >> bit++) & 1);
  return f;
}

}  // namespace

TEST_CASE("worked example, combinational sweep") {
  Aignet net = testnets::example_circuit();
  BitAssignment a{{1, 0}, {1}};
  auto vals = eval_sweep(net, a);
  CHECK(vals[0] == 0);
  CHECK(vals[4] == 1);
  CHECK(vals[6] == 1);
  CHECK(vals[7] == 1);
  CHECK(vals[8] == 1);
  CHECK(vals[5] == 0);  // register input sees the negation of id 4

  auto zeros = eval_sweep(net, BitAssignment{{0, 0}, {0}});
  CHECK(zeros[6] == 0);  // true & in0 with in0 = 0

  Aignet empty;
  auto only_const = eval_sweep(empty, BitAssignment{});
  CHECK(only_const == std::vector<std::uint8_t>{0});
}

TEST_CASE("worked example, single-node evaluation") {
  Aignet net = testnets::example_circuit();
  CHECK(eval_id(net, 8, BitAssignment{{1, 0}, {1}}) == 1);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    CHECK(eval_id(net, 0, testnets::assignment_from_index(net, idx)) == 0);
  }
  // literal 9 is the negation of node 4
  CHECK(eval_lit(net, 9, BitAssignment{{0, 1}, {1}}) == 1);
  CHECK(eval_lit(net, 9, BitAssignment{{1, 1}, {0}}) == 1);
  CHECK(eval_lit(net, 1, BitAssignment{{0, 0}, {0}}) == 1);  // constant true
}

TEST_CASE("negation law") {
  std::mt19937_64 rng(31);
  testnets::RandomNetOptions opts;
  opts.max_regs = 2;
  for (int trial = 0; trial < 20; ++trial) {
    Aignet net = testnets::random_net(rng, opts);
    for (int k = 0; k < 10; ++k) {
      BitAssignment a = testnets::assignment_from_index(net, rng());
      Lit lit = make_lit(rng() % net.num_nodes(), rng() & 1);
      CHECK(eval_lit(net, lit_negate(lit), a) == 1 - eval_lit(net, lit, a));
    }
  }
}

TEST_CASE("sweep agrees with the recursive definition") {
  std::mt19937_64 rng(32);
  testnets::RandomNetOptions opts;
  opts.max_regs = 3;
  opts.max_gates = 25;
  for (int trial = 0; trial < 100; ++trial) {
    Aignet net = testnets::random_net(rng, opts);
    for (int k = 0; k < 10; ++k) {
      BitAssignment a = testnets::assignment_from_index(net, rng());
      auto vals = eval_sweep(net, a);
      for (NodeId id = 0; id < net.num_nodes(); ++id) {
        CHECK(vals[id] == testnets::eval_id_memo(net, id, a));
        CHECK(vals[id] == eval_id(net, id, a));
      }
    }
  }
  // the memoized reference itself matches the plain recursion on tiny nets
  testnets::RandomNetOptions tiny;
  tiny.max_gates = 8;
  tiny.max_inputs = 3;
  for (int trial = 0; trial < 20; ++trial) {
    Aignet net = testnets::random_net(rng, tiny);
    for (std::uint64_t idx = 0; idx < (1u << net.num_inputs()); ++idx) {
      BitAssignment a = testnets::assignment_from_index(net, idx);
      for (NodeId id = 0; id < net.num_nodes(); ++id) {
        CHECK(testnets::eval_id_rec(net, id, a) == testnets::eval_id_memo(net, id, a));
      }
    }
  }
}

TEST_CASE("undersized assignments are rejected") {
  Aignet net = testnets::example_circuit();
  CHECK_THROWS_AS(eval_sweep(net, BitAssignment{{1}, {0}}), Error);
  CHECK_THROWS_AS(eval_sweep(net, BitAssignment{{1, 0}, {}}), Error);
  CHECK_THROWS_AS(eval_id(net, 99, BitAssignment{{1, 0}, {0}}), Error);
}

TEST_CASE("worked example, sequential evaluation") {
  Aignet net = testnets::example_circuit();
  FrameInputs f;
  f.initial_regs = {0};
  f.frames = {{0, 0}, {1, 0}};

  CHECK(seq_eval_id(net, 0, 3, f) == 0);  // initial value
  CHECK(seq_eval_id(net, 1, 3, f) == 1);  // !(id4) at frame 0 with reg = 0
  CHECK(seq_eval_id(net, 1, 8, f) == 1);  // in0=1, in1=0, reg=1

  CHECK(reg_frame(net, 0, f) == std::vector<std::uint8_t>{0});
  CHECK(reg_frame(net, 1, f) == std::vector<std::uint8_t>{1});

  CHECK(seq_eval_sweep(net, FrameInputs{{}, {0}}).empty());
}

TEST_CASE("sequential evaluators and register-frame composition agree") {
  std::mt19937_64 rng(33);
  testnets::RandomNetOptions opts;
  opts.max_inputs = 3;
  opts.max_regs = 4;
  opts.max_gates = 20;
  for (int trial = 0; trial < 60; ++trial) {
    Aignet net = testnets::random_net(rng, opts);
    std::uint32_t num_frames = 1 + static_cast<std::uint32_t>(rng() % 4);
    std::uint32_t stim_bits = num_frames * net.num_inputs() + net.num_regs();
    int cases = stim_bits <= 10 ? (1 << stim_bits) : 16;
    for (int c = 0; c < cases; ++c) {
      std::uint64_t index = stim_bits <= 10 ? static_cast<std::uint64_t>(c) : rng();
      FrameInputs f = frames_from_index(net, num_frames, index);
      auto sweeps = seq_eval_sweep(net, f);
      REQUIRE(sweeps.size() == num_frames);
      for (std::uint32_t k = 0; k < num_frames; ++k) {
        BitAssignment composed{f.frames[k], reg_frame(net, k, f)};
        auto comb = eval_sweep(net, composed);
        for (NodeId id = 0; id < net.num_nodes(); ++id) {
          CHECK(sweeps[k][id] == testnets::seq_eval_id_memo(net, k, id, f));
          CHECK(sweeps[k][id] == comb[id]);
        }
        CHECK(reg_frame(net, k, f) == testnets::reg_frame_rec(net, k, f));
      }
    }
  }
}

TEST_CASE("library sequential evaluator matches the memoized reference on the example") {
  Aignet net = testnets::example_circuit();
  for (std::uint64_t idx = 0; idx < (1u << 7); ++idx) {
    FrameInputs f = frames_from_index(net, 3, idx);
    for (std::uint32_t k = 0; k < 3; ++k) {
      for (NodeId id = 0; id < net.num_nodes(); ++id) {
        CHECK(seq_eval_id(net, k, id, f) == testnets::seq_eval_id_rec(net, k, id, f));
      }
    }
  }
}

TEST_CASE("unpaired registers only fail once a transition is needed") {
  Aignet net;
  net.add_input();
  net.add_reg();  // never paired
  net.add_output(make_lit(net.nth_reg(0), 0));

  FrameInputs one_frame{{{1}}, {1}};
  CHECK(seq_eval_sweep(net, one_frame).size() == 1);

  FrameInputs two_frames{{{1}, {0}}, {1}};
  CHECK_THROWS_AS(seq_eval_sweep(net, two_frames), Error);
  CHECK_THROWS_AS(reg_frame(net, 1, two_frames), Error);
}

TEST_CASE("sequential inputs are validated") {
  Aignet net = testnets::example_circuit();
  FrameInputs short_row{{{1}}, {0}};
  CHECK_THROWS_AS(seq_eval_sweep(net, short_row), Error);
  FrameInputs short_init{{{1, 0}}, {}};
  CHECK_THROWS_AS(seq_eval_sweep(net, short_init), Error);
  FrameInputs fine{{{1, 0}}, {0}};
  CHECK_THROWS_AS(seq_eval_id(net, 1, 3, fine), Error);  // frame out of range
}

TEST_CASE("word simulation slices to single-bit sweeps") {
  std::mt19937_64 rng(34);
  testnets::RandomNetOptions opts;
  opts.max_regs = 3;
  for (int trial = 0; trial < 100; ++trial) {
    Aignet net = testnets::random_net(rng, opts);
    WordAssignment w = random_word_assignment(net, rng);
    auto words = sim_words(net, w);
    CHECK(words[0] == 0);
    for (unsigned bit : {0u, 1u, 17u, 63u}) {
      BitAssignment a = slice_assignment(w, bit);
      auto vals = eval_sweep(net, a);
      for (NodeId id = 0; id < net.num_nodes(); ++id) {
        CHECK(((words[id] >> bit) & 1) == vals[id]);
      }
    }
  }
}

TEST_CASE("word simulation with all-ones inputs replicates the all-true sweep") {
  std::mt19937_64 rng(35);
  testnets::RandomNetOptions opts;
  opts.max_regs = 2;
  Aignet net = testnets::random_net(rng, opts);
  WordAssignment w;
  w.inputs.assign(net.num_inputs(), ~0ull);
  w.regs.assign(net.num_regs(), ~0ull);
  auto words = sim_words(net, w);
  BitAssignment ones;
  ones.inputs.assign(net.num_inputs(), 1);
  ones.regs.assign(net.num_regs(), 1);
  auto vals = eval_sweep(net, ones);
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    CHECK(words[id] == (vals[id] ? ~0ull : 0ull));
  }
}

TEST_CASE("word simulation rejects undersized input") {
  Aignet net = testnets::example_circuit();
  WordAssignment w;
  w.inputs = {1};  // needs 2
  w.regs = {1};
  CHECK_THROWS_AS(sim_words(net, w), Error);
}
