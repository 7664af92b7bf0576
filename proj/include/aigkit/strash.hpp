// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "aigkit/aignet.hpp"

namespace aigkit {

/// Options for the hashing constructors. All flags off degrades hash_and
/// to the raw add_and, node for node.
struct SimpOpts {
  bool strash = true;         // reuse an existing AND with the same fanins
  bool const_prop = true;     // fold ANDs with constant fanins
  bool fanin_reduce = true;   // a & a = a, a & !a = 0
  bool level2 = false;        // two-level contradiction/subsumption rules

  static SimpOpts none() { return SimpOpts{false, false, false, false}; }
  static SimpOpts all() { return SimpOpts{true, true, true, true}; }
};

/// Hash table from a canonical (sorted) fanin pair to the id of an AND
/// node built with those fanins. Entries carry no soundness obligation:
/// every hit is re-checked against the node array before reuse, so a
/// stale or corrupted entry can only turn a hit into a miss. The table
/// may be dropped at any time once construction is done.
class Strash {
public:
  /// Returns the id of a verified existing AND(f0, f1), or nothing.
  /// Expects f0 <= f1 (the canonical order used by insert).
  std::optional<NodeId> lookup(const Aignet& net, Lit f0, Lit f1) const;

  void insert(Lit f0, Lit f1, NodeId id);

  void clear() { table_.clear(); }
  std::size_t size() const noexcept { return table_.size(); }

  /// Raw table access. Mutating entries cannot break correctness, only
  /// hit rates; the corruption tests rely on this.
  std::unordered_map<std::uint64_t, NodeId>& table() noexcept { return table_; }

  static std::uint64_t key(Lit f0, Lit f1) noexcept {
    return (static_cast<std::uint64_t>(f0) << 32) | f1;
  }

private:
  std::unordered_map<std::uint64_t, NodeId> table_;
};

/// Builds (or reuses) a literal computing eval(f0) & eval(f1). The
/// returned literal, evaluated in the grown net, equals the conjunction
/// of the argument literals' evaluations in the original net under every
/// CI assignment, and the grown net is an extension of the original. At
/// most one node is added; none when simplification or a verified hash
/// hit applies.
Lit hash_and(Aignet& net, Strash& strash, Lit f0, Lit f1, const SimpOpts& opts = {});

/// eval(f0) | eval(f1), via De Morgan on hash_and.
Lit hash_or(Aignet& net, Strash& strash, Lit f0, Lit f1, const SimpOpts& opts = {});

/// eval(f0) ^ eval(f1); built as a mux with complemented branches, at
/// most three nodes.
Lit hash_xor(Aignet& net, Strash& strash, Lit f0, Lit f1, const SimpOpts& opts = {});

/// eval(c) ? eval(t) : eval(e), with constant and coincident-branch
/// cases reduced before any node is built.
Lit hash_mux(Aignet& net, Strash& strash, Lit c, Lit t, Lit e, const SimpOpts& opts = {});

}  // namespace aigkit
