// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/aiger.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "aigkit/error.hpp"

namespace aigkit {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(Errc::parse, "aiger, line " + std::to_string(line) + ": " + what);
}

struct LineReader {
  std::istringstream in;
  std::size_t lineno = 0;

  explicit LineReader(std::string_view text) : in(std::string(text)) {}

  bool next(std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++lineno;
    return true;
  }

  std::string expect(const char* what) {
    std::string line;
    if (!next(line)) fail(lineno + 1, std::string("unexpected end of file, expected ") + what);
    return line;
  }
};

std::vector<unsigned long> parse_numbers(const std::string& line, std::size_t lineno,
                                         std::size_t expected, const char* what) {
  std::istringstream ls(line);
  std::vector<unsigned long> nums;
  unsigned long v;
  while (ls >> v) nums.push_back(v);
  std::string rest;
  if (ls.clear(), ls >> rest) fail(lineno, std::string("malformed ") + what);
  if (nums.size() != expected) {
    fail(lineno, std::string("expected ") + std::to_string(expected) + " numbers in " + what);
  }
  return nums;
}

}  // namespace

Aignet parse_aiger(std::string_view text) {
  LineReader reader(text);
  std::string header = reader.expect("header");
  std::istringstream hs(header);
  std::string magic;
  unsigned long m = 0, i = 0, l = 0, o = 0, a = 0;
  if (!(hs >> magic)) fail(reader.lineno, "empty header");
  if (magic == "aig") fail(reader.lineno, "binary aiger is not supported; use the ascii aag form");
  if (magic != "aag") fail(reader.lineno, "expected aag header");
  if (!(hs >> m >> i >> l >> o >> a)) fail(reader.lineno, "malformed header counts");
  if (m < i + l + a) fail(reader.lineno, "header M is smaller than I+L+A");

  Aignet net;
  // AIGER variable -> node literal (non-negated); variable 0 is constant.
  std::unordered_map<unsigned long, Lit> var_to_lit;
  auto define_var = [&](unsigned long lit, Lit node_lit, std::size_t lineno, const char* what) {
    if (lit < 2 || (lit & 1) != 0) {
      fail(lineno, std::string(what) + " literal " + std::to_string(lit) +
                       " must be an even literal greater than 0");
    }
    if (lit / 2 > m) fail(lineno, "literal " + std::to_string(lit) + " exceeds header maximum");
    if (!var_to_lit.emplace(lit / 2, node_lit).second) {
      fail(lineno, "literal " + std::to_string(lit) + " defined twice");
    }
  };
  auto lookup = [&](unsigned long lit, std::size_t lineno) -> Lit {
    if (lit / 2 > m) fail(lineno, "literal " + std::to_string(lit) + " exceeds header maximum");
    if (lit / 2 == 0) return static_cast<Lit>(lit & 1);
    auto it = var_to_lit.find(lit / 2);
    if (it == var_to_lit.end()) {
      fail(lineno, "literal " + std::to_string(lit) + " references an undefined variable");
    }
    return lit_negate_cond(it->second, static_cast<std::uint32_t>(lit & 1));
  };

  for (unsigned long k = 0; k < i; ++k) {
    auto nums = parse_numbers(reader.expect("input line"), reader.lineno, 1, "input line");
    define_var(nums[0], net.add_input(), reader.lineno, "input");
  }

  struct LatchLine {
    unsigned long next;
    NodeId ro;
    std::size_t lineno;
  };
  std::vector<LatchLine> latches;
  for (unsigned long k = 0; k < l; ++k) {
    std::string line = reader.expect("latch line");
    std::istringstream ls(line);
    std::vector<unsigned long> nums;
    unsigned long v;
    while (ls >> v) nums.push_back(v);
    if (nums.size() != 2 && nums.size() != 3) fail(reader.lineno, "malformed latch line");
    if (nums.size() == 3 && nums[2] != 0) {
      fail(reader.lineno, "latch reset values other than 0 are not supported");
    }
    Lit ro_lit = net.add_reg();
    define_var(nums[0], ro_lit, reader.lineno, "latch");
    latches.push_back({nums[1], lit_id(ro_lit), reader.lineno});
  }

  std::vector<std::pair<unsigned long, std::size_t>> outputs;
  for (unsigned long k = 0; k < o; ++k) {
    auto nums = parse_numbers(reader.expect("output line"), reader.lineno, 1, "output line");
    outputs.emplace_back(nums[0], reader.lineno);
  }

  for (unsigned long k = 0; k < a; ++k) {
    auto nums = parse_numbers(reader.expect("and line"), reader.lineno, 3, "and line");
    // Fanins must already be defined, which enforces topological order.
    Lit f0 = lookup(nums[1], reader.lineno);
    Lit f1 = lookup(nums[2], reader.lineno);
    define_var(nums[0], net.add_and(f0, f1), reader.lineno, "and gate");
  }

  for (auto& [lit, lineno] : outputs) net.add_output(lookup(lit, lineno));
  for (auto& latch : latches) net.add_regin(lookup(latch.next, latch.lineno), latch.ro);

  // Anything after the defined sections is symbols or comments; ignored.
  return net;
}

Aignet read_aiger_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_aiger(buf.str());
}

void write_aiger(const Aignet& net, std::ostream& os) {
  // AIGER variables: inputs first, then latches, then gates in id order.
  std::vector<unsigned long> var_of(net.num_nodes(), 0);
  unsigned long next_var = 0;
  for (std::uint32_t n = 0; n < net.num_inputs(); ++n) var_of[net.nth_input(n)] = ++next_var;
  for (std::uint32_t n = 0; n < net.num_regs(); ++n) var_of[net.nth_reg(n)] = ++next_var;
  std::vector<NodeId> gates;
  for (NodeId id = 0; id < net.num_nodes(); ++id) {
    if (net.kind(id) == NodeKind::and_gate) {
      gates.push_back(id);
      var_of[id] = ++next_var;
    }
  }

  auto aiger_lit = [&](Lit lit) -> unsigned long {
    NodeId id = lit_id(lit);
    if (id == 0) return lit_neg(lit);
    return 2 * var_of[id] + lit_neg(lit);
  };

  os << "aag " << next_var << ' ' << net.num_inputs() << ' ' << net.num_regs() << ' '
     << net.num_outputs() << ' ' << gates.size() << '\n';
  for (std::uint32_t n = 0; n < net.num_inputs(); ++n) {
    os << 2 * var_of[net.nth_input(n)] << '\n';
  }
  for (std::uint32_t n = 0; n < net.num_regs(); ++n) {
    NodeId ri = net.regin_of_reg(n);
    if (ri == no_node) {
      throw Error(Errc::bad_register, "register " + std::to_string(n) +
                                          " has no register input; cannot emit a latch line");
    }
    os << 2 * var_of[net.nth_reg(n)] << ' ' << aiger_lit(net.fanin0(ri)) << '\n';
  }
  for (std::uint32_t n = 0; n < net.num_outputs(); ++n) {
    os << aiger_lit(net.fanin0(net.nth_output(n))) << '\n';
  }
  for (NodeId id : gates) {
    os << 2 * var_of[id] << ' ' << aiger_lit(net.fanin0(id)) << ' ' << aiger_lit(net.fanin1(id))
       << '\n';
  }
}

std::string write_aiger(const Aignet& net) {
  std::ostringstream os;
  write_aiger(net, os);
  return os.str();
}

void write_aiger_file(const Aignet& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot open " + path + " for writing");
  write_aiger(net, out);
  if (!out.flush()) throw Error(Errc::io, "failed writing " + path);
}

}  // namespace aigkit
