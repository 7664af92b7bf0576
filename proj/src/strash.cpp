// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/strash.hpp"

#include <algorithm>

#include "aigkit/error.hpp"

namespace aigkit {

std::optional<NodeId> Strash::lookup(const Aignet& net, Lit f0, Lit f1) const {
  auto it = table_.find(key(f0, f1));
  if (it == table_.end()) return std::nullopt;
  // Trust nothing: the entry is only used if the node it names really is
  // AND(f0, f1). Anything else is treated as a miss.
  NodeId id = it->second;
  if (id >= net.num_nodes()) return std::nullopt;
  if (net.kind(id) != NodeKind::and_gate) return std::nullopt;
  if (net.fanin0(id) != f0 || net.fanin1(id) != f1) return std::nullopt;
  return id;
}

void Strash::insert(Lit f0, Lit f1, NodeId id) { table_[key(f0, f1)] = id; }

namespace {

// Fanins of a gate literal, or nothing if the literal does not point at
// an AND node.
struct GateFanins {
  Lit f0, f1;
};

std::optional<GateFanins> gate_fanins(const Aignet& net, Lit lit) {
  NodeId id = lit_id(lit);
  if (net.kind(id) != NodeKind::and_gate) return std::nullopt;
  return GateFanins{net.fanin0(id), net.fanin1(id)};
}

// Two-level lookahead rules. Only rules that rewrite to an existing
// literal (or a constant) are applied, so no node is ever created here.
std::optional<Lit> level2_reduce(const Aignet& net, Lit a, Lit b) {
  auto ga = gate_fanins(net, a);
  auto gb = gate_fanins(net, b);

  auto contradicts = [](const GateFanins& g, Lit other) {
    return g.f0 == lit_negate(other) || g.f1 == lit_negate(other);
  };

  // Contradiction, one gate: (a0 & a1) & b = 0 when some ai = !b.
  if (ga && !lit_neg(a) && contradicts(*ga, b)) return lit_false;
  if (gb && !lit_neg(b) && contradicts(*gb, a)) return lit_false;

  if (ga && gb) {
    bool grandchild_clash =
        ga->f0 == lit_negate(gb->f0) || ga->f0 == lit_negate(gb->f1) ||
        ga->f1 == lit_negate(gb->f0) || ga->f1 == lit_negate(gb->f1);
    // Contradiction, two gates: (a0 & a1) & (b0 & b1) = 0 when ai = !bj.
    if (!lit_neg(a) && !lit_neg(b) && grandchild_clash) return lit_false;
    // Subsumption, two gates: !(a0 & a1) & (b0 & b1) = b when ai = !bj,
    // since the negated gate is implied by one of b's own fanins.
    if (lit_neg(a) && !lit_neg(b) && grandchild_clash) return b;
    if (!lit_neg(a) && lit_neg(b) && grandchild_clash) return a;
  }

  // Subsumption, one gate: !(a0 & a1) & b = b when some ai = !b.
  if (ga && lit_neg(a) && contradicts(*ga, b)) return b;
  if (gb && lit_neg(b) && contradicts(*gb, a)) return a;

  return std::nullopt;
}

}  // namespace

Lit hash_and(Aignet& net, Strash& strash, Lit f0, Lit f1, const SimpOpts& opts) {
  if (!net.is_fanin_legal(f0) || !net.is_fanin_legal(f1)) {
    throw Error(Errc::bad_fanin, "hash_and: fanin out of bounds or not fanin-legal");
  }

  // Simplification order is fixed: constants, then single-level fanin
  // rules, then two-level rules, then the hash lookup.
  if (opts.const_prop) {
    if (f0 == lit_false || f1 == lit_false) return lit_false;
    if (f0 == lit_true) return f1;
    if (f1 == lit_true) return f0;
  }
  if (opts.fanin_reduce) {
    if (f0 == f1) return f0;
    if (f0 == lit_negate(f1)) return lit_false;
  }
  if (opts.level2) {
    if (auto reduced = level2_reduce(net, f0, f1)) return *reduced;
  }

  if (!opts.strash) return net.add_and(f0, f1);

  if (f0 > f1) std::swap(f0, f1);
  if (auto hit = strash.lookup(net, f0, f1)) return make_lit(*hit, 0);
  Lit fresh = net.add_and(f0, f1);
  strash.insert(f0, f1, lit_id(fresh));
  return fresh;
}

Lit hash_or(Aignet& net, Strash& strash, Lit f0, Lit f1, const SimpOpts& opts) {
  return lit_negate(hash_and(net, strash, lit_negate(f0), lit_negate(f1), opts));
}

Lit hash_xor(Aignet& net, Strash& strash, Lit f0, Lit f1, const SimpOpts& opts) {
  return hash_mux(net, strash, f0, lit_negate(f1), f1, opts);
}

Lit hash_mux(Aignet& net, Strash& strash, Lit c, Lit t, Lit e, const SimpOpts& opts) {
  if (!net.is_fanin_legal(c) || !net.is_fanin_legal(t) || !net.is_fanin_legal(e)) {
    throw Error(Errc::bad_fanin, "hash_mux: fanin out of bounds or not fanin-legal");
  }

  // Reductions that avoid building anything. Applied regardless of the
  // gate-level simplification flags: they only rewrite the call, the
  // flags keep governing any gates built below.
  if (c == lit_true) return t;
  if (c == lit_false) return e;
  if (t == e) return t;
  if (t == c) t = lit_true;           // c ? c : e  =  c | e
  if (t == lit_negate(c)) t = lit_false;
  if (e == c) e = lit_false;          // c ? t : c  =  c & t
  if (e == lit_negate(c)) e = lit_true;
  if (t == lit_true) return hash_or(net, strash, c, e, opts);
  if (t == lit_false) return hash_and(net, strash, lit_negate(c), e, opts);
  if (e == lit_true) return hash_or(net, strash, lit_negate(c), t, opts);
  if (e == lit_false) return hash_and(net, strash, c, t, opts);

  Lit on = hash_and(net, strash, c, t, opts);
  Lit off = hash_and(net, strash, lit_negate(c), e, opts);
  return hash_or(net, strash, on, off, opts);
}

}  // namespace aigkit
