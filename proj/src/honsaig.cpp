// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/honsaig.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>

#include "aigkit/error.hpp"
#include "aigkit/satlink.hpp"
#include "aigkit/strash.hpp"

namespace aigkit {

namespace detail {

struct HonsNode {
  enum class Tag : std::uint8_t { truth, nil, var, pair };
  Tag tag;
  const HonsNode* car = nullptr;
  const HonsNode* cdr = nullptr;
  std::string name;  // var only
};

namespace {

struct PairKey {
  const HonsNode* car;
  const HonsNode* cdr;
  bool operator==(const PairKey& o) const noexcept { return car == o.car && cdr == o.cdr; }
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    auto a = reinterpret_cast<std::uintptr_t>(k.car);
    auto b = reinterpret_cast<std::uintptr_t>(k.cdr);
    return std::hash<std::uintptr_t>()(a * 0x9e3779b97f4a7c15ull ^ b);
  }
};

// Process-wide intern pool. Nodes live until process exit; that keeps
// handle identity global, which is what makes equality a pointer
// comparison.
class InternTable {
public:
  static InternTable& instance() {
    static InternTable table;
    return table;
  }

  const HonsNode* truth() const noexcept { return &truth_; }
  const HonsNode* nil() const noexcept { return &nil_; }

  const HonsNode* var(std::string_view name) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = vars_.find(std::string(name));
    if (it != vars_.end()) return it->second.get();
    auto node = std::make_unique<HonsNode>();
    node->tag = HonsNode::Tag::var;
    node->name = std::string(name);
    const HonsNode* raw = node.get();
    vars_.emplace(node->name, std::move(node));
    return raw;
  }

  const HonsNode* cons(const HonsNode* car, const HonsNode* cdr) {
    std::lock_guard<std::mutex> lock(mutex_);
    PairKey key{car, cdr};
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second.get();
    auto node = std::make_unique<HonsNode>();
    node->tag = HonsNode::Tag::pair;
    node->car = car;
    node->cdr = cdr;
    const HonsNode* raw = node.get();
    pairs_.emplace(key, std::move(node));
    return raw;
  }

private:
  InternTable() {
    truth_.tag = HonsNode::Tag::truth;
    nil_.tag = HonsNode::Tag::nil;
  }

  std::mutex mutex_;
  HonsNode truth_;
  HonsNode nil_;
  std::unordered_map<std::string, std::unique_ptr<HonsNode>> vars_;
  std::unordered_map<PairKey, std::unique_ptr<HonsNode>, PairKeyHash> pairs_;
};

}  // namespace
}  // namespace detail

using detail::HonsNode;

HonsAig wrap_hons(const HonsNode* n) { return HonsAig(n); }

HonsAig::HonsAig() : node_(detail::InternTable::instance().nil()) {}

bool HonsAig::is_true() const noexcept { return node_->tag == HonsNode::Tag::truth; }
bool HonsAig::is_false() const noexcept { return node_->tag == HonsNode::Tag::nil; }
bool HonsAig::is_var() const noexcept { return node_->tag == HonsNode::Tag::var; }

bool HonsAig::is_not() const noexcept {
  return node_->tag == HonsNode::Tag::pair && node_->cdr->tag == HonsNode::Tag::nil;
}

bool HonsAig::is_and() const noexcept {
  return node_->tag == HonsNode::Tag::pair && node_->cdr->tag != HonsNode::Tag::nil;
}

const std::string& HonsAig::var_name() const {
  if (!is_var()) throw Error(Errc::invalid, "not a variable node");
  return node_->name;
}

HonsAig HonsAig::not_child() const {
  if (!is_not()) throw Error(Errc::invalid, "not a NOT node");
  return HonsAig(node_->car);
}

HonsAig HonsAig::and_left() const {
  if (!is_and()) throw Error(Errc::invalid, "not an AND node");
  return HonsAig(node_->car);
}

HonsAig HonsAig::and_right() const {
  if (!is_and()) throw Error(Errc::invalid, "not an AND node");
  return HonsAig(node_->cdr);
}

HonsAig aig_true() { return wrap_hons(detail::InternTable::instance().truth()); }
HonsAig aig_false() { return wrap_hons(detail::InternTable::instance().nil()); }
HonsAig aig_var(std::string_view name) {
  if (name.empty()) throw Error(Errc::invalid, "variable name must not be empty");
  return wrap_hons(detail::InternTable::instance().var(name));
}

HonsAig aig_cons(HonsAig car, HonsAig cdr) {
  return wrap_hons(detail::InternTable::instance().cons(car.raw(), cdr.raw()));
}

HonsAig aig_not(HonsAig x) {
  if (x.is_true()) return aig_false();
  if (x.is_false()) return aig_true();
  if (x.is_not()) return x.not_child();
  return aig_cons(x, aig_false());
}

HonsAig aig_and(HonsAig a, HonsAig b) {
  if (a.is_false() || b.is_false()) return aig_false();
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  if (a == b) return a;
  // Handle equality makes the complement checks O(1): no traversal.
  if (a.is_not() && a.not_child() == b) return aig_false();
  if (b.is_not() && b.not_child() == a) return aig_false();
  return aig_cons(a, b);
}

HonsAig aig_or(HonsAig a, HonsAig b) { return aig_not(aig_and(aig_not(a), aig_not(b))); }

namespace {

// Iterative post-order over the DAG with a per-call memo table: each
// unique node is computed once, and deep chains cannot overflow the call
// stack.
template <typename Value, typename Leaf, typename NotOp, typename AndOp>
Value dag_fold(const HonsNode* root, Leaf leaf, NotOp not_op, AndOp and_op,
               std::size_t* computed = nullptr) {
  std::unordered_map<const HonsNode*, Value> memo;
  std::vector<const HonsNode*> stack{root};
  while (!stack.empty()) {
    const HonsNode* n = stack.back();
    if (memo.count(n)) {
      stack.pop_back();
      continue;
    }
    if (n->tag != HonsNode::Tag::pair) {
      memo.emplace(n, leaf(n));
      if (computed) ++*computed;
      stack.pop_back();
      continue;
    }
    bool is_not = n->cdr->tag == HonsNode::Tag::nil;
    auto car_it = memo.find(n->car);
    if (car_it == memo.end()) {
      stack.push_back(n->car);
      continue;
    }
    if (is_not) {
      memo.emplace(n, not_op(car_it->second));
      if (computed) ++*computed;
      stack.pop_back();
      continue;
    }
    auto cdr_it = memo.find(n->cdr);
    if (cdr_it == memo.end()) {
      stack.push_back(n->cdr);
      continue;
    }
    memo.emplace(n, and_op(car_it->second, cdr_it->second));
    if (computed) ++*computed;
    stack.pop_back();
  }
  return memo.at(root);
}

}  // namespace

std::uint8_t aig_eval(HonsAig x, const AigEnv& env) {
  std::size_t ignored = 0;
  return aig_eval_counted(x, env, ignored);
}

std::uint8_t aig_eval_counted(HonsAig x, const AigEnv& env, std::size_t& computed) {
  computed = 0;
  return dag_fold<std::uint8_t>(
      x.raw(),
      [&](const HonsNode* n) -> std::uint8_t {
        switch (n->tag) {
          case HonsNode::Tag::nil:
            return 0;
          case HonsNode::Tag::truth:
            return 1;
          default: {
            auto it = env.find(n->name);
            return it == env.end() ? 0 : (it->second & 1);
          }
        }
      },
      [](std::uint8_t v) -> std::uint8_t { return v ^ 1; },
      [](std::uint8_t a, std::uint8_t b) -> std::uint8_t { return a & b; }, &computed);
}

std::vector<std::string> aig_vars(HonsAig x) {
  std::vector<std::string> names;
  std::unordered_map<const HonsNode*, bool> seen;
  std::vector<const HonsNode*> stack{x.raw()};
  while (!stack.empty()) {
    const HonsNode* n = stack.back();
    stack.pop_back();
    if (seen.count(n)) continue;
    seen.emplace(n, true);
    if (n->tag == HonsNode::Tag::var) {
      names.push_back(n->name);
    } else if (n->tag == HonsNode::Tag::pair) {
      stack.push_back(n->cdr);
      stack.push_back(n->car);
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::size_t aig_node_count(HonsAig x) {
  std::unordered_map<const HonsNode*, bool> seen;
  std::vector<const HonsNode*> stack{x.raw()};
  while (!stack.empty()) {
    const HonsNode* n = stack.back();
    stack.pop_back();
    if (seen.count(n)) continue;
    seen.emplace(n, true);
    if (n->tag == HonsNode::Tag::pair) {
      stack.push_back(n->car);
      stack.push_back(n->cdr);
    }
  }
  return seen.size();
}

HonsAig aig_compose(HonsAig x, const std::unordered_map<std::string, HonsAig>& sigma) {
  return dag_fold<HonsAig>(
      x.raw(),
      [&](const HonsNode* n) -> HonsAig {
        if (n->tag == HonsNode::Tag::var) {
          auto it = sigma.find(n->name);
          if (it != sigma.end()) return it->second;
        }
        return wrap_hons(n);
      },
      [](HonsAig v) { return aig_not(v); },
      [](HonsAig a, HonsAig b) { return aig_and(a, b); });
}

std::uint64_t aig_sim_words(HonsAig x,
                            const std::unordered_map<std::string, std::uint64_t>& env) {
  return dag_fold<std::uint64_t>(
      x.raw(),
      [&](const HonsNode* n) -> std::uint64_t {
        switch (n->tag) {
          case HonsNode::Tag::nil:
            return 0;
          case HonsNode::Tag::truth:
            return ~0ull;
          default: {
            auto it = env.find(n->name);
            return it == env.end() ? 0 : it->second;
          }
        }
      },
      [](std::uint64_t v) { return ~v; },
      [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

bool aig_equiv(HonsAig a, HonsAig b, const AigEquivOptions& opts) {
  if (a == b) return true;
  std::vector<std::string> vars = aig_vars(a);
  for (auto& v : aig_vars(b)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  if (vars.size() <= std::min(opts.exhaustive_var_limit, 24u)) {
    // 64 assignments per pass: the low six index bits live in the word
    // patterns, higher bits in the block counter.
    std::unordered_map<std::string, std::uint64_t> wenv;
    std::uint64_t total = 1ull << vars.size();
    std::uint64_t blocks = (total + 63) / 64;
    for (std::uint64_t block = 0; block < blocks; ++block) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        std::uint64_t w;
        switch (i) {
          case 0: w = 0xaaaaaaaaaaaaaaaaull; break;
          case 1: w = 0xccccccccccccccccull; break;
          case 2: w = 0xf0f0f0f0f0f0f0f0ull; break;
          case 3: w = 0xff00ff00ff00ff00ull; break;
          case 4: w = 0xffff0000ffff0000ull; break;
          case 5: w = 0xffffffff00000000ull; break;
          default: w = ((block >> (i - 6)) & 1) ? ~0ull : 0ull; break;
        }
        wenv[vars[i]] = w;
      }
      std::uint64_t wa = aig_sim_words(a, wenv);
      std::uint64_t wb = aig_sim_words(b, wenv);
      std::uint64_t relevant =
          total - block * 64 >= 64 ? ~0ull : ((1ull << (total - block * 64)) - 1);
      if ((wa ^ wb) & relevant) return false;
    }
    return true;
  }

  // Too many variables to enumerate: build a miter and ask the SAT layer.
  HonsToAignetResult conv = hons_to_aignet({a, b});
  Strash strash;
  Lit diff = hash_xor(conv.net, strash, resolve_co(conv.net, make_lit(conv.net.nth_output(0), 0)),
                      resolve_co(conv.net, make_lit(conv.net.nth_output(1), 0)));
  SolverConfig config = opts.solver ? *opts.solver : SolverConfig::from_environment();
  LitSatResult res = check_lit_sat(conv.net, diff, config);
  switch (res.status) {
    case SatStatus::unsat:
      return true;
    case SatStatus::sat:
      return false;
    default:
      throw Error(Errc::solver, "equivalence undecided: " + res.reason);
  }
}

std::string aig_to_text(HonsAig x) {
  std::string out;
  struct Tok {
    const HonsNode* node;
    const char* text;
  };
  std::vector<Tok> stack{{x.raw(), nullptr}};
  while (!stack.empty()) {
    Tok tok = stack.back();
    stack.pop_back();
    if (tok.text) {
      out += tok.text;
      continue;
    }
    const HonsNode* n = tok.node;
    switch (n->tag) {
      case HonsNode::Tag::truth:
        out += "T";
        break;
      case HonsNode::Tag::nil:
        out += "NIL";
        break;
      case HonsNode::Tag::var:
        out += n->name;
        break;
      case HonsNode::Tag::pair:
        out += "(";
        stack.push_back({nullptr, ")"});
        stack.push_back({n->cdr, nullptr});
        stack.push_back({nullptr, " . "});
        stack.push_back({n->car, nullptr});
        break;
    }
  }
  return out;
}

namespace {

bool atom_is(std::string_view atom, std::string_view upper) {
  if (atom.size() != upper.size()) return false;
  for (std::size_t i = 0; i < atom.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(atom[i])) != upper[i]) return false;
  }
  return true;
}

HonsAig intern_atom(std::string_view atom) {
  if (atom_is(atom, "T")) return aig_true();
  if (atom_is(atom, "NIL")) return aig_false();
  return aig_var(atom);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::parse, "aig text, line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<HonsAig> aig_list_from_text(std::string_view text) {
  struct Frame {
    HonsAig car, cdr;
    bool have_car = false, seen_dot = false, have_cdr = false;
  };
  std::vector<Frame> frames;
  std::vector<HonsAig> results;
  std::size_t line = 1;

  auto deliver = [&](HonsAig v) {
    if (frames.empty()) {
      results.push_back(v);
      return;
    }
    Frame& f = frames.back();
    if (!f.have_car) {
      f.car = v;
      f.have_car = true;
    } else if (f.seen_dot && !f.have_cdr) {
      f.cdr = v;
      f.have_cdr = true;
    } else {
      parse_fail(line, "expected '.' or ')'");
    }
  };

  std::size_t i = 0;
  auto at_value_position = [&]() {
    return frames.empty() || !frames.back().have_car ||
           (frames.back().seen_dot && !frames.back().have_cdr);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      if (!at_value_position()) parse_fail(line, "unexpected '('");
      frames.push_back({});
      ++i;
      continue;
    }
    if (c == '.') {
      if (frames.empty() || !frames.back().have_car || frames.back().seen_dot) {
        parse_fail(line, "unexpected '.'");
      }
      frames.back().seen_dot = true;
      ++i;
      continue;
    }
    if (c == ')') {
      if (frames.empty() || !frames.back().have_cdr) parse_fail(line, "unexpected ')'");
      Frame f = frames.back();
      frames.pop_back();
      deliver(aig_cons(f.car, f.cdr));
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size()) {
      char d = text[i];
      if (d == '(' || d == ')' || d == '.' || std::isspace(static_cast<unsigned char>(d))) break;
      ++i;
    }
    if (!at_value_position()) parse_fail(line, "unexpected atom");
    deliver(intern_atom(text.substr(start, i - start)));
  }
  if (!frames.empty()) parse_fail(line, "unterminated pair");
  return results;
}

HonsAig aig_from_text(std::string_view text) {
  std::vector<HonsAig> parsed = aig_list_from_text(text);
  if (parsed.size() != 1) {
    throw Error(Errc::parse,
                "expected exactly one expression, found " + std::to_string(parsed.size()));
  }
  return parsed[0];
}

HonsToAignetResult hons_to_aignet(const std::vector<HonsAig>& roots) {
  HonsToAignetResult result;

  // First-occurrence variable order over a left-to-right walk.
  std::unordered_map<const HonsNode*, bool> seen;
  std::unordered_map<std::string, std::uint32_t> var_index;
  for (const HonsAig& root : roots) {
    std::vector<const HonsNode*> stack{root.raw()};
    while (!stack.empty()) {
      const HonsNode* n = stack.back();
      stack.pop_back();
      if (seen.count(n)) continue;
      seen.emplace(n, true);
      if (n->tag == HonsNode::Tag::var) {
        if (!var_index.count(n->name)) {
          var_index.emplace(n->name, static_cast<std::uint32_t>(result.var_order.size()));
          result.var_order.push_back(n->name);
        }
      } else if (n->tag == HonsNode::Tag::pair) {
        stack.push_back(n->cdr);
        stack.push_back(n->car);
      }
    }
  }

  std::vector<Lit> input_lits;
  input_lits.reserve(result.var_order.size());
  for (std::size_t i = 0; i < result.var_order.size(); ++i) {
    input_lits.push_back(result.net.add_input());
  }

  Strash strash;
  for (const HonsAig& root : roots) {
    Lit lit = dag_fold<Lit>(
        root.raw(),
        [&](const HonsNode* n) -> Lit {
          switch (n->tag) {
            case HonsNode::Tag::nil:
              return lit_false;
            case HonsNode::Tag::truth:
              return lit_true;
            default:
              return input_lits[var_index.at(n->name)];
          }
        },
        [](Lit v) { return lit_negate(v); },
        [&](Lit a, Lit b) { return hash_and(result.net, strash, a, b); });
    result.roots.push_back(lit);
    result.net.add_output(lit);
  }
  return result;
}

std::vector<HonsAig> aignet_to_hons(const Aignet& net) {
  if (net.num_regs() > 0 || net.num_regins() > 0) {
    throw Error(Errc::invalid, "only combinational nets convert to expression trees");
  }
  std::vector<HonsAig> by_id(net.num_nodes(), aig_false());
  auto of_lit = [&](Lit lit) {
    HonsAig h = by_id[lit_id(lit)];
    return lit_neg(lit) ? aig_not(h) : h;
  };
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    switch (net.kind(id)) {
      case NodeKind::constant:
        by_id[id] = aig_false();
        break;
      case NodeKind::input:
        by_id[id] = aig_var("i" + std::to_string(net.ci_index(id)));
        break;
      case NodeKind::and_gate:
        by_id[id] = aig_and(of_lit(net.fanin0(id)), of_lit(net.fanin1(id)));
        break;
      case NodeKind::output:
        by_id[id] = of_lit(net.fanin0(id));
        break;
      default:
        break;
    }
  }
  std::vector<HonsAig> pos;
  pos.reserve(net.num_outputs());
  for (std::uint32_t n = 0; n < net.num_outputs(); ++n) {
    pos.push_back(by_id[net.nth_output(n)]);
  }
  return pos;
}

}  // namespace aigkit
