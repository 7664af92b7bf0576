// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace aigkit {

/// Error categories; mirrored one-to-one by the C API status codes.
enum class Errc {
  out_of_bounds,  // node id / literal / index beyond the node table
  bad_fanin,      // fanin literal names a combinational output
  bad_register,   // register pairing violation (not an RO, or already paired)
  capacity,       // node ids no longer fit in a 32-bit literal
  undersized,     // assignment or stimulus shorter than the CI count
  parse,          // malformed input file
  io,             // file system failure
  solver,         // SAT back end failed (spawn, output, or model check)
  invalid,        // other precondition violation
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace aigkit
