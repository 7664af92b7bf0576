// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace aigkit {

/// A literal packs a node id and a negation flag into one word: 2*id + neg.
/// Literal 0 is constant-false, literal 1 is constant-true.
using Lit = std::uint32_t;
using NodeId = std::uint32_t;

constexpr Lit lit_false = 0;
constexpr Lit lit_true = 1;

/// Largest admissible node id; keeps every literal inside 32 bits.
constexpr NodeId max_node_id = 0x7fffffffu;

constexpr Lit make_lit(NodeId id, std::uint32_t neg) noexcept { return (id << 1) | (neg & 1u); }

constexpr NodeId lit_id(Lit lit) noexcept { return lit >> 1; }

constexpr std::uint32_t lit_neg(Lit lit) noexcept { return lit & 1u; }

constexpr Lit lit_negate(Lit lit) noexcept { return lit ^ 1u; }

/// Negates `lit` iff the low bit of `c` is set; an involution in `c`.
constexpr Lit lit_negate_cond(Lit lit, std::uint32_t c) noexcept { return lit ^ (c & 1u); }

}  // namespace aigkit
