// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/cnf.hpp"

#include <algorithm>
#include <string>

#include "aigkit/error.hpp"

namespace aigkit {

int VarMap::get_or_add(NodeId id) {
  auto [it, fresh] = to_var_.try_emplace(id, static_cast<int>(to_id_.size()) + 1);
  if (fresh) to_id_.push_back(id);
  return it->second;
}

int VarMap::var_of(NodeId id) const {
  auto it = to_var_.find(id);
  return it == to_var_.end() ? 0 : it->second;
}

NodeId VarMap::id_of(int var) const {
  if (var < 1 || var > num_vars()) {
    throw Error(Errc::out_of_bounds, "variable " + std::to_string(var) + " is unmapped");
  }
  return to_id_[static_cast<std::size_t>(var) - 1];
}

std::uint8_t CnfEnv::value(int var) const {
  if (var < 1 || static_cast<std::size_t>(var) >= values.size()) {
    throw Error(Errc::undersized, "environment does not cover variable " + std::to_string(var));
  }
  return values[static_cast<std::size_t>(var)] & 1;
}

std::uint8_t CnfEnv::value_or_zero(int var) const noexcept {
  if (var < 1 || static_cast<std::size_t>(var) >= values.size()) return 0;
  return values[static_cast<std::size_t>(var)] & 1;
}

std::vector<std::uint32_t> count_fanouts(const Aignet& net) {
  std::vector<std::uint32_t> counts(net.num_nodes(), 0);
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    switch (net.kind(id)) {
      case NodeKind::and_gate:
        ++counts[lit_id(net.fanin0(id))];
        ++counts[lit_id(net.fanin1(id))];
        break;
      case NodeKind::output:
      case NodeKind::reg_in:
        ++counts[lit_id(net.fanin0(id))];
        break;
      default:
        break;
    }
  }
  return counts;
}

SupergateLeaves collect_supergate(const Aignet& net, const std::vector<std::uint32_t>& fanouts,
                                  NodeId root, std::uint32_t max_leaves) {
  if (net.kind(root) != NodeKind::and_gate) {
    throw Error(Errc::invalid, "supergate root must be an AND node");
  }
  SupergateLeaves sg;
  sg.root = root;
  // Depth-first, left fanin first, so leaves come out in reading order.
  std::vector<Lit> stack{net.fanin1(root), net.fanin0(root)};
  while (!stack.empty()) {
    Lit lit = stack.back();
    stack.pop_back();
    NodeId id = lit_id(lit);
    bool expandable = lit_neg(lit) == 0 && net.kind(id) == NodeKind::and_gate &&
                      fanouts[id] == 1 &&
                      sg.leaves.size() + stack.size() + 2 <= max_leaves;
    if (expandable) {
      stack.push_back(net.fanin1(id));
      stack.push_back(net.fanin0(id));
    } else {
      sg.leaves.push_back(lit);
    }
  }
  return sg;
}

std::optional<MuxShape> detect_mux(const Aignet& net, NodeId root) {
  if (net.kind(root) != NodeKind::and_gate) return std::nullopt;
  Lit f0 = net.fanin0(root);
  Lit f1 = net.fanin1(root);
  if (!lit_neg(f0) || !lit_neg(f1)) return std::nullopt;
  NodeId g0 = lit_id(f0);
  NodeId g1 = lit_id(f1);
  if (net.kind(g0) != NodeKind::and_gate || net.kind(g1) != NodeKind::and_gate) {
    return std::nullopt;
  }
  Lit a[2] = {net.fanin0(g0), net.fanin1(g0)};
  Lit b[2] = {net.fanin0(g1), net.fanin1(g1)};
  // root = !(a0 & a1) & !(b0 & b1); when some ai = !bj, that shared signal
  // selects between the complements of the remaining two fanins:
  //   root = ai ? !a(1-i) : !b(1-j).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (a[i] == lit_negate(b[j])) {
        MuxShape m;
        m.root = root;
        m.cond = a[i];
        m.then_lit = lit_negate(a[1 - i]);
        m.else_lit = lit_negate(b[1 - j]);
        m.is_xor = m.then_lit == lit_negate(m.else_lit);
        return m;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Appends a clause unless it is a tautology; duplicate literals are
// dropped. Clauses here are tiny, so the quadratic scan is fine.
void emit_clause(ClauseList& cnf, std::initializer_list<CnfLit> lits) {
  Clause clause;
  clause.reserve(lits.size());
  for (CnfLit l : lits) {
    bool tautology = false;
    bool duplicate = false;
    for (CnfLit seen : clause) {
      if (seen == l) duplicate = true;
      if (seen == -l) tautology = true;
    }
    if (tautology) return;
    if (!duplicate) clause.push_back(l);
  }
  cnf.clauses.push_back(std::move(clause));
}

void emit_clause_vec(ClauseList& cnf, Clause&& clause) {
  cnf.clauses.push_back(std::move(clause));
}

// What the encoder will do for one AND node, decided up front so the
// support can be scheduled before the clauses are written.
struct GatePlan {
  enum class Scheme { mux, xor_gate, supergate, const_false, const_true };
  Scheme scheme;
  Lit cond = 0, then_lit = 0, else_lit = 0;  // mux / xor
  std::vector<Lit> leaves;                   // supergate
};

GatePlan plan_gate(const Aignet& net, const std::vector<std::uint32_t>& fanouts, NodeId id) {
  GatePlan plan;
  if (auto mux = detect_mux(net, id)) {
    plan.scheme = mux->is_xor ? GatePlan::Scheme::xor_gate : GatePlan::Scheme::mux;
    plan.cond = mux->cond;
    plan.then_lit = mux->then_lit;
    plan.else_lit = mux->else_lit;
    return plan;
  }
  SupergateLeaves sg = collect_supergate(net, fanouts, id);
  plan.scheme = GatePlan::Scheme::supergate;
  for (Lit leaf : sg.leaves) {
    if (leaf == lit_true) continue;  // neutral for conjunction
    if (leaf == lit_false) {
      plan.scheme = GatePlan::Scheme::const_false;
      plan.leaves.clear();
      return plan;
    }
    if (std::find(plan.leaves.begin(), plan.leaves.end(), leaf) != plan.leaves.end()) {
      continue;  // duplicate leaf
    }
    if (std::find(plan.leaves.begin(), plan.leaves.end(), lit_negate(leaf)) !=
        plan.leaves.end()) {
      // Complementary leaves: the flattened conjunction is constant false.
      plan.scheme = GatePlan::Scheme::const_false;
      plan.leaves.clear();
      return plan;
    }
    plan.leaves.push_back(leaf);
  }
  if (plan.leaves.empty()) plan.scheme = GatePlan::Scheme::const_true;
  return plan;
}

}  // namespace

CnfLit cnf_lit_of(const VarMap& vars, Lit lit) {
  int var = vars.var_of(lit_id(lit));
  if (var == 0) {
    throw Error(Errc::invalid, "node " + std::to_string(lit_id(lit)) + " has no CNF variable");
  }
  return lit_neg(lit) ? -var : var;
}

void add_cnf(const Aignet& net, NodeId id, MarkArray& marks, ClauseList& cnf, VarMap& vars) {
  if (id >= net.num_nodes()) {
    throw Error(Errc::out_of_bounds, "node id " + std::to_string(id) + " out of bounds");
  }
  {
    NodeKind k = net.kind(id);
    if (k == NodeKind::output || k == NodeKind::reg_in) {
      throw Error(Errc::invalid,
                  "cannot encode a combinational output; resolve it to its fanin first");
    }
  }
  if (marks.size() < net.num_nodes()) marks.resize(net.num_nodes(), 0);
  if (marks[id]) return;

  std::vector<std::uint32_t> fanouts = count_fanouts(net);

  struct Item {
    NodeId id;
    bool ready;
  };
  std::vector<Item> stack{{id, false}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (marks[item.id]) continue;

    NodeKind k = net.kind(item.id);
    if (k == NodeKind::constant) {
      int v = vars.get_or_add(item.id);
      emit_clause(cnf, {-v});
      marks[item.id] = 1;
      continue;
    }
    if (k == NodeKind::input || k == NodeKind::reg_out) {
      vars.get_or_add(item.id);
      marks[item.id] = 1;
      continue;
    }

    GatePlan plan = plan_gate(net, fanouts, item.id);
    if (!item.ready) {
      // Schedule the support first, left to right; the node itself is
      // re-visited once everything below it is encoded.
      stack.push_back({item.id, true});
      std::vector<NodeId> support;
      switch (plan.scheme) {
        case GatePlan::Scheme::mux:
        case GatePlan::Scheme::xor_gate:
          support = {lit_id(plan.cond), lit_id(plan.then_lit), lit_id(plan.else_lit)};
          break;
        case GatePlan::Scheme::supergate:
          for (Lit leaf : plan.leaves) support.push_back(lit_id(leaf));
          break;
        default:
          break;  // constant gate: no structural support needed
      }
      for (auto it = support.rbegin(); it != support.rend(); ++it) {
        if (!marks[*it]) stack.push_back({*it, false});
      }
      continue;
    }

    int o = vars.get_or_add(item.id);
    switch (plan.scheme) {
      case GatePlan::Scheme::const_false:
        emit_clause(cnf, {-o});
        break;
      case GatePlan::Scheme::const_true:
        emit_clause(cnf, {o});
        break;
      case GatePlan::Scheme::mux:
      case GatePlan::Scheme::xor_gate: {
        CnfLit a = cnf_lit_of(vars, plan.cond);
        CnfLit b = cnf_lit_of(vars, plan.then_lit);
        CnfLit c = cnf_lit_of(vars, plan.else_lit);
        emit_clause(cnf, {-a, -b, o});  //  a &  b ->  o
        emit_clause(cnf, {a, -c, o});   // !a &  c ->  o
        emit_clause(cnf, {-a, b, -o});  //  a & !b -> !o
        emit_clause(cnf, {a, c, -o});   // !a & !c -> !o
        if (plan.scheme == GatePlan::Scheme::mux) {
          // Redundant but helpful for the solver; meaningless for XOR.
          emit_clause(cnf, {-b, -c, o});  //  b &  c ->  o
          emit_clause(cnf, {b, c, -o});   // !b & !c -> !o
        }
        break;
      }
      case GatePlan::Scheme::supergate: {
        Clause all;
        all.reserve(plan.leaves.size() + 1);
        for (Lit leaf : plan.leaves) {
          CnfLit l = cnf_lit_of(vars, leaf);
          emit_clause(cnf, {l, -o});  // !leaf -> !o
          all.push_back(-l);
        }
        all.push_back(o);  // all leaves -> o
        emit_clause_vec(cnf, std::move(all));
        break;
      }
    }
    marks[item.id] = 1;
  }
}

std::uint8_t cnf_eval(const ClauseList& cnf, const CnfEnv& env) {
  for (const Clause& clause : cnf.clauses) {
    bool satisfied = false;
    for (CnfLit l : clause) {
      std::uint8_t v = env.value(std::abs(l));
      if ((l > 0 && v) || (l < 0 && !v)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return 0;
  }
  return 1;
}

CnfEnv aignet_eval_extend_env(const Aignet& net, const VarMap& vars, const CnfEnv& env) {
  CnfEnv out = env;
  if (out.values.size() < static_cast<std::size_t>(vars.num_vars()) + 1) {
    out.values.resize(static_cast<std::size_t>(vars.num_vars()) + 1, 0);
  }

  BitAssignment cis;
  cis.inputs.resize(net.num_inputs(), 0);
  cis.regs.resize(net.num_regs(), 0);
  for (std::uint32_t n = 0; n < net.num_inputs(); ++n) {
    cis.inputs[n] = env.value_or_zero(vars.var_of(net.nth_input(n)));
  }
  for (std::uint32_t n = 0; n < net.num_regs(); ++n) {
    cis.regs[n] = env.value_or_zero(vars.var_of(net.nth_reg(n)));
  }

  std::vector<std::uint8_t> vals = eval_sweep(net, cis);
  for (std::size_t i = 0; i < vars.mapped_ids().size(); ++i) {
    NodeId id = vars.mapped_ids()[i];
    NodeKind k = net.kind(id);
    if (k == NodeKind::input || k == NodeKind::reg_out) continue;  // CI values are kept
    out.values[i + 1] = vals[id];
  }
  return out;
}

bool marked_vals_correct(const Aignet& net, const MarkArray& marks, const VarMap& vars,
                         const CnfEnv& env) {
  CnfEnv extended = aignet_eval_extend_env(net, vars, env);
  for (NodeId id = 0; id < marks.size() && id < net.num_nodes(); ++id) {
    if (!marks[id]) continue;
    int var = vars.var_of(id);
    if (var == 0) return false;  // marked but never given a variable
    if (extended.value_or_zero(var) != env.value_or_zero(var)) return false;
  }
  return true;
}

BitAssignment cnf_env_to_cis(const Aignet& net, const VarMap& vars, const CnfEnv& env) {
  BitAssignment a;
  a.inputs.resize(net.num_inputs(), 0);
  a.regs.resize(net.num_regs(), 0);
  for (std::uint32_t n = 0; n < net.num_inputs(); ++n) {
    a.inputs[n] = env.value_or_zero(vars.var_of(net.nth_input(n)));
  }
  for (std::uint32_t n = 0; n < net.num_regs(); ++n) {
    a.regs[n] = env.value_or_zero(vars.var_of(net.nth_reg(n)));
  }
  return a;
}

CnfEnv cis_to_cnf_env(const Aignet& net, const VarMap& vars, const BitAssignment& a) {
  std::vector<std::uint8_t> vals = eval_sweep(net, a);
  CnfEnv env;
  env.values.assign(static_cast<std::size_t>(vars.num_vars()) + 1, 0);
  for (std::size_t i = 0; i < vars.mapped_ids().size(); ++i) {
    env.values[i + 1] = vals[vars.mapped_ids()[i]];
  }
  return env;
}

ConeCnf build_cone_cnf(const Aignet& net, Lit lit) {
  if (lit_id(lit) >= net.num_nodes()) {
    throw Error(Errc::out_of_bounds, "literal " + std::to_string(lit) + " out of bounds");
  }
  ConeCnf cone;
  Lit resolved = resolve_co(net, lit);
  add_cnf(net, lit_id(resolved), cone.marks, cone.cnf, cone.vars);
  cone.root = cnf_lit_of(cone.vars, resolved);
  return cone;
}

}  // namespace aigkit
