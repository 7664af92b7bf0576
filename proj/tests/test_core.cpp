#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aigkit/aignet.hpp"
#include "aigkit/error.hpp"
#include "support/testnets.hpp"

using namespace aigkit;

TEST_CASE("literal encoding") {
  CHECK(make_lit(4, 1) == 9);
  CHECK(make_lit(0, 0) == 0);
  CHECK(make_lit(7, 0) == 14);

  CHECK(lit_id(9) == 4);
  CHECK(lit_id(0) == 0);
  CHECK(lit_id(14) == 7);

  CHECK(lit_neg(9) == 1);
  CHECK(lit_neg(14) == 0);
  CHECK(lit_neg(1) == 1);

  CHECK(lit_negate_cond(8, 1) == 9);
  CHECK(lit_negate_cond(9, 1) == 8);
  CHECK(lit_negate_cond(14, 0) == 14);
}

TEST_CASE("literal round trip, sampled") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    NodeId id = static_cast<NodeId>(rng() & max_node_id);
    std::uint32_t neg = static_cast<std::uint32_t>(rng() & 1);
    Lit lit = make_lit(id, neg);
    CHECK(lit_id(lit) == id);
    CHECK(lit_neg(lit) == neg);
    CHECK(lit_negate_cond(lit_negate_cond(lit, 1), 1) == lit);
  }
}

TEST_CASE("fresh net holds only the constant node") {
  Aignet net;
  CHECK(net.num_nodes() == 1);
  CHECK(net.kind(0) == NodeKind::constant);
  CHECK(net.num_inputs() == 0);
  CHECK(net.num_outputs() == 0);
}

TEST_CASE("adding inputs and registers") {
  Aignet net;
  CHECK(net.add_input() == 2);  // id 1
  CHECK(net.nth_input(0) == 1);
  CHECK(net.add_input() == 4);  // id 2
  CHECK(net.nth_input(1) == 2);
  CHECK(net.add_reg() == 6);  // id 3
  CHECK(net.nth_reg(0) == 3);
  CHECK(net.num_regs() == 1);
  for (std::uint32_t n = 0; n < net.num_inputs(); ++n) {
    CHECK(lit_neg(make_lit(net.nth_input(n), 0)) == 0);
  }
}

TEST_CASE("worked example node table") {
  Aignet net = testnets::example_circuit();
  CHECK(net.num_nodes() == 9);
  CHECK(net.kind(0) == NodeKind::constant);
  CHECK(net.kind(1) == NodeKind::input);
  CHECK(net.kind(2) == NodeKind::input);
  CHECK(net.kind(3) == NodeKind::reg_out);
  CHECK(net.kind(4) == NodeKind::and_gate);
  CHECK(net.fanin0(4) == 5);
  CHECK(net.fanin1(4) == 6);
  CHECK(net.kind(5) == NodeKind::reg_in);
  CHECK(net.fanin0(5) == 9);
  CHECK(net.regin_reg(5) == 3);
  CHECK(net.kind(6) == NodeKind::and_gate);
  CHECK(net.fanin0(6) == 1);
  CHECK(net.fanin1(6) == 2);
  CHECK(net.kind(7) == NodeKind::and_gate);
  CHECK(net.fanin0(7) == 8);
  CHECK(net.fanin1(7) == 12);
  CHECK(net.kind(8) == NodeKind::output);
  CHECK(net.fanin0(8) == 14);
  CHECK(net.nth_output(0) == 8);
  CHECK(net.nth_reg(0) == 3);
  CHECK(net.nth_regin(0) == 5);
  CHECK(net.regin_of_reg(0) == 5);
}

TEST_CASE("add_and is raw: duplicates make distinct nodes") {
  Aignet net;
  Lit a = net.add_input();
  Lit b = net.add_input();
  Lit g1 = net.add_and(a, b);
  Lit g2 = net.add_and(a, b);
  CHECK(g1 != g2);
  CHECK(net.num_nodes() == 5);
}

TEST_CASE("fanin legality") {
  Aignet net;
  Lit a = net.add_input();
  NodeId po = net.add_output(a);
  CHECK_THROWS_AS(net.add_and(make_lit(po, 0), a), Error);           // CO as fanin
  CHECK_THROWS_AS(net.add_and(make_lit(net.num_nodes(), 0), a), Error);  // out of bounds
  CHECK_THROWS_AS(net.add_output(make_lit(po, 1)), Error);
  CHECK(net.is_fanin_legal(a));
  CHECK(!net.is_fanin_legal(make_lit(po, 0)));
  CHECK(!net.is_fanin_legal(make_lit(12345, 0)));
}

TEST_CASE("register pairing rules") {
  Aignet net;
  Lit in = net.add_input();
  Lit ro = net.add_reg();
  NodeId ri = net.add_regin(lit_negate(in), lit_id(ro));
  CHECK(net.kind(ri) == NodeKind::reg_in);
  CHECK(net.num_regins() == 1);
  CHECK_THROWS_AS(net.add_regin(in, lit_id(ro)), Error);   // already paired
  CHECK_THROWS_AS(net.add_regin(in, lit_id(in)), Error);   // not a register output
  CHECK_THROWS_AS(net.add_regin(in, 999), Error);          // out of bounds
}

TEST_CASE("nth lookups fail beyond the counts") {
  Aignet net = testnets::example_circuit();
  CHECK_THROWS_AS(net.nth_input(2), Error);
  CHECK_THROWS_AS(net.nth_reg(1), Error);
  CHECK_THROWS_AS(net.nth_output(1), Error);
  CHECK_THROWS_AS(net.nth_regin(1), Error);
}

namespace {

// Independent check of the index arrays: scan the node table.
NodeId scan_nth(const Aignet& net, NodeKind kind, std::uint32_t n) {
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    if (net.kind(id) == kind && n-- == 0) return id;
  }
  return no_node;
}

}  // namespace

TEST_CASE("index maps agree with a node-table scan") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    testnets::RandomNetOptions opts;
    opts.max_regs = 4;
    opts.max_gates = 30;
    Aignet net = testnets::random_net(rng, opts);
    for (std::uint32_t n = 0; n < net.num_inputs(); ++n) {
      CHECK(net.nth_input(n) == scan_nth(net, NodeKind::input, n));
    }
    for (std::uint32_t n = 0; n < net.num_regs(); ++n) {
      CHECK(net.nth_reg(n) == scan_nth(net, NodeKind::reg_out, n));
    }
    for (std::uint32_t n = 0; n < net.num_outputs(); ++n) {
      CHECK(net.nth_output(n) == scan_nth(net, NodeKind::output, n));
    }
    for (std::uint32_t n = 0; n < net.num_regins(); ++n) {
      CHECK(net.nth_regin(n) == scan_nth(net, NodeKind::reg_in, n));
    }
    // ci/co positions match their index-array slots
    for (std::uint32_t n = 0; n < net.num_inputs(); ++n) {
      CHECK(net.ci_index(net.nth_input(n)) == n);
    }
    for (std::uint32_t n = 0; n < net.num_outputs(); ++n) {
      CHECK(net.co_index(net.nth_output(n)) == n);
    }
  }
}

TEST_CASE("topological order of fanins") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    testnets::RandomNetOptions opts;
    opts.max_regs = 3;
    Aignet net = testnets::random_net(rng, opts);
    for (NodeId id = 0; id < net.num_nodes(); ++id) {
      switch (net.kind(id)) {
        case NodeKind::and_gate:
          CHECK(lit_id(net.fanin0(id)) < id);
          CHECK(lit_id(net.fanin1(id)) < id);
          break;
        case NodeKind::output:
        case NodeKind::reg_in:
          CHECK(lit_id(net.fanin0(id)) < id);
          break;
        default:
          break;
      }
    }
  }
}

TEST_CASE("extension relation") {
  Aignet net;
  CHECK(net.is_extension_of(net));  // reflexive

  Aignet before = net;
  net.add_input();
  CHECK(net.is_extension_of(before));
  CHECK(!before.is_extension_of(net));

  // every constructor extends; chains compose
  std::mt19937_64 rng(5);
  Aignet grown = testnets::example_circuit();
  Aignet snapshot0 = grown;
  Aignet prev = grown;
  for (int step = 0; step < 20; ++step) {
    Aignet old = grown;
    switch (rng() % 4) {
      case 0: grown.add_input(); break;
      case 1: grown.add_reg(); break;
      case 2: grown.add_and(make_lit(rng() % 4, rng() & 1), 2); break;
      default: grown.add_output(2); break;
    }
    CHECK(grown.is_extension_of(old));
    CHECK(grown.is_extension_of(snapshot0));  // transitive along the chain
    prev = old;
  }

  // nets that disagree on an early node are not extensions
  Aignet x, y;
  x.add_input();
  y.add_reg();
  CHECK(!x.is_extension_of(y));
  CHECK(!y.is_extension_of(x));
}

TEST_CASE("combinational-output resolution") {
  Aignet net = testnets::example_circuit();
  CHECK(resolve_co(net, make_lit(8, 0)) == 14);
  CHECK(resolve_co(net, make_lit(8, 1)) == 15);
  CHECK(resolve_co(net, make_lit(5, 0)) == 9);
  CHECK(resolve_co(net, 14) == 14);  // not a CO: unchanged
}

TEST_CASE("network depth") {
  Aignet net = testnets::example_circuit();
  CHECK(network_depth(net) == 2);  // id 7 sits atop id 4 and id 6
  Aignet empty;
  CHECK(network_depth(empty) == 0);
}
