// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aigkit/aignet.hpp"

namespace aigkit {

namespace detail {
struct HonsNode;
}

/// An immutable, hash-consed AND/NOT expression tree. Structurally equal
/// terms are interned to the same node, so equality of handles decides
/// structural equality in O(1), and shared subterms are stored once.
///
/// The encoding keeps the classic cons shape: NOT is the pair (a . NIL)
/// and AND is any other pair (a . b). Handles are plain pointers into a
/// process-wide intern table and are freely shareable across threads.
class HonsAig {
public:
  /// Constant false (NIL).
  HonsAig();

  bool is_true() const noexcept;
  bool is_false() const noexcept;
  bool is_var() const noexcept;
  bool is_not() const noexcept;   // pair whose cdr is NIL
  bool is_and() const noexcept;   // any other pair

  const std::string& var_name() const;
  HonsAig not_child() const;
  HonsAig and_left() const;
  HonsAig and_right() const;

  bool operator==(const HonsAig& o) const noexcept { return node_ == o.node_; }
  bool operator!=(const HonsAig& o) const noexcept { return node_ != o.node_; }

  const detail::HonsNode* raw() const noexcept { return node_; }

private:
  friend HonsAig wrap_hons(const detail::HonsNode*);
  explicit HonsAig(const detail::HonsNode* n) : node_(n) {}
  const detail::HonsNode* node_;
};

HonsAig aig_true();
HonsAig aig_false();
HonsAig aig_var(std::string_view name);

/// The raw interned pair (a . b), with no simplification. This is what
/// the reader uses; (x . NIL) evaluates as NOT x, everything else as an
/// AND.
HonsAig aig_cons(HonsAig car, HonsAig cdr);

/// Negation with constant and double-negation folding.
HonsAig aig_not(HonsAig x);

/// Conjunction with constant folding plus the handle-equality reductions
/// a & a = a and a & !a = false. Satisfies
/// aig_eval(aig_and(a, b), env) == (aig_eval(a, env) & aig_eval(b, env)).
HonsAig aig_and(HonsAig a, HonsAig b);

HonsAig aig_or(HonsAig a, HonsAig b);

/// Variable values; unbound variables evaluate to 0.
using AigEnv = std::unordered_map<std::string, std::uint8_t>;

/// Evaluates under `env`, visiting each unique node at most once.
std::uint8_t aig_eval(HonsAig x, const AigEnv& env);

/// As aig_eval, also reporting how many nodes were actually computed
/// (cache misses); never more than the unique node count.
std::uint8_t aig_eval_counted(HonsAig x, const AigEnv& env, std::size_t& computed);

/// Free variables, sorted; each unique node is visited once.
std::vector<std::string> aig_vars(HonsAig x);

/// Number of distinct nodes reachable from x, constants included.
std::size_t aig_node_count(HonsAig x);

/// Substitutes sigma[v] for each bound variable v, rebuilding with the
/// folding constructors. Evaluating the result under env equals
/// evaluating x under env', where env' binds each substituted v to
/// aig_eval(sigma[v], env) and leaves other variables untouched.
HonsAig aig_compose(HonsAig x, const std::unordered_map<std::string, HonsAig>& sigma);

/// 64 evaluations at once: bit b of the result is aig_eval under the
/// environment sliced from bit b of each word. Unbound variables are 0.
std::uint64_t aig_sim_words(HonsAig x, const std::unordered_map<std::string, std::uint64_t>& env);

struct SolverConfig;  // satlink.hpp

/// Options for aig_equiv: small problems are decided by exhaustive
/// evaluation over the union of variables, larger ones by a miter routed
/// through the SAT layer.
struct AigEquivOptions {
  unsigned exhaustive_var_limit = 12;
  const SolverConfig* solver = nullptr;  // null: environment default
};

/// True iff a and b evaluate identically under every environment.
bool aig_equiv(HonsAig a, HonsAig b, const AigEquivOptions& opts = {});

/// Canonical text: `T`, `NIL`, atoms as variables, `(a . b)` pairs.
std::string aig_to_text(HonsAig x);

/// Parses one expression. Atoms spelled t/T and nil/NIL (any case) are
/// the constants; every other atom is a variable. Dots and parentheses
/// delimit, so `(a . NIL)` and `(a.NIL)` read the same.
HonsAig aig_from_text(std::string_view text);

/// Parses a whitespace-separated sequence of expressions.
std::vector<HonsAig> aig_list_from_text(std::string_view text);

/// Conversion into the array representation: one primary input per
/// distinct variable, in first-occurrence order over a left-to-right
/// traversal of the roots; one primary output per root. Shared subterms
/// become shared nodes (construction goes through the hashing
/// constructors).
struct HonsToAignetResult {
  Aignet net;
  std::vector<std::string> var_order;  // nth input's variable name
  std::vector<Lit> roots;              // literal driving the nth output
};

HonsToAignetResult hons_to_aignet(const std::vector<HonsAig>& roots);

/// Inverse direction for combinational nets: one tree per primary
/// output, with input n rendered as variable "i<n>". Registers are not
/// representable and raise an error.
std::vector<HonsAig> aignet_to_hons(const Aignet& net);

}  // namespace aigkit

template <>
struct std::hash<aigkit::HonsAig> {
  std::size_t operator()(const aigkit::HonsAig& x) const noexcept {
    return std::hash<const void*>()(x.raw());
  }
};
