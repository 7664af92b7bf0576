// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "aigkit/aignet.hpp"

namespace aigkit {

/// Parses the ASCII AIGER format (`aag`). Latches become register
/// output/input pairs, with the latch's next-state literal as the
/// register input's fanin. Symbol and comment sections are tolerated and
/// ignored; the binary `aig` format is not supported. Parse errors carry
/// line numbers.
Aignet parse_aiger(std::string_view text);
Aignet read_aiger_file(const std::string& path);

/// Serializes as ASCII AIGER. Every register must have its register
/// input attached, since a latch line needs a next-state literal.
std::string write_aiger(const Aignet& net);
void write_aiger(const Aignet& net, std::ostream& os);
void write_aiger_file(const Aignet& net, const std::string& path);

}  // namespace aigkit
