// aigkit: and-inverter graph toolkit — command-line front end
// SPDX-License-Identifier: Apache-2.0
//
// Every operation goes through the shared-library C API. Exit codes:
// 0 success / equivalent / satisfiable, 1 failed property verdict,
// 2 usage error, 3 I/O or solver error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aigkit/aigkit.h"

namespace {

constexpr int exit_verdict_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_error = 3;

struct Fatal {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw Fatal{code, message}; }

void check(aigk_status status) {
  if (status != AIGK_OK) fail(exit_error, aigk_last_error());
}

struct NetHandle {
  aigk_aignet* net = nullptr;
  ~NetHandle() { aigk_aignet_free(net); }
};

void load_aiger(const std::string& path, NetHandle& handle) {
  check(aigk_read_aiger_file(path.c_str(), &handle.net));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(exit_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<uint8_t> parse_bits(const std::string& bits, size_t expected, const char* what) {
  if (bits.size() != expected) {
    fail(exit_usage, std::string(what) + " needs exactly " + std::to_string(expected) +
                         " bits, got " + std::to_string(bits.size()));
  }
  std::vector<uint8_t> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') fail(exit_usage, std::string(what) + " must be 0/1 characters");
    out.push_back(static_cast<uint8_t>(c - '0'));
  }
  return out;
}

std::string bits_to_string(const uint8_t* bits, size_t n) {
  std::string s;
  s.reserve(n);
  for (size_t i = 0; i < n; ++i) s += bits[i] ? '1' : '0';
  return s;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(exit_error, "cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) fail(exit_error, "failed writing " + path);
}

struct SolverArgs {
  std::string command;
  double timeout = 0;

  aigk_solver_config config() const {
    return aigk_solver_config{command.empty() ? nullptr : command.c_str(), timeout};
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--solver", command,
                    "solver command (overrides AIGKIT_SAT_SOLVER; default: built-in)");
    cmd->add_option("--timeout", timeout, "solver timeout in seconds");
  }
};

// Resolves --po N into the output's fanin literal; --output passes a raw
// literal through.
uint32_t select_literal(aigk_aignet* net, bool have_lit, uint32_t lit, uint32_t po, bool negate) {
  if (!have_lit) {
    if (po >= aigk_num_outputs(net)) {
      fail(exit_usage, "output index " + std::to_string(po) + " out of range");
    }
    uint32_t id = 0;
    check(aigk_nth_output(net, po, &id));
    check(aigk_fanin0(net, id, &lit));
  }
  if (negate) lit = aigk_lit_negate_cond(lit, 1);
  return lit;
}

int cmd_stats(const std::string& file) {
  NetHandle h;
  load_aiger(file, h);
  uint32_t counts[6] = {0, 0, 0, 0, 0, 0};
  for (uint32_t id = 0; id < aigk_num_nodes(h.net); ++id) {
    int kind = 0;
    check(aigk_node_kind_of(h.net, id, &kind));
    ++counts[kind];
  }
  uint32_t depth = 0;
  check(aigk_depth(h.net, &depth));
  std::cout << "nodes " << aigk_num_nodes(h.net) << '\n'
            << "const " << counts[AIGK_NODE_CONST] << '\n'
            << "inputs " << counts[AIGK_NODE_INPUT] << '\n'
            << "regs " << counts[AIGK_NODE_REG_OUT] << '\n'
            << "ands " << counts[AIGK_NODE_AND] << '\n'
            << "outputs " << counts[AIGK_NODE_OUTPUT] << '\n'
            << "regins " << counts[AIGK_NODE_REG_IN] << '\n'
            << "depth " << depth << '\n';
  return 0;
}

int cmd_eval(const std::string& file, const std::string& inputs, const std::string& regs) {
  NetHandle h;
  load_aiger(file, h);
  std::vector<uint8_t> in = parse_bits(inputs, aigk_num_inputs(h.net), "--inputs");
  std::vector<uint8_t> rg = parse_bits(regs, aigk_num_regs(h.net), "--regs");
  std::vector<uint8_t> vals(aigk_num_nodes(h.net));
  check(aigk_eval_sweep(h.net, in.data(), in.size(), rg.data(), rg.size(), vals.data()));
  std::string po_bits;
  for (uint32_t n = 0; n < aigk_num_outputs(h.net); ++n) {
    uint32_t id = 0;
    check(aigk_nth_output(h.net, n, &id));
    po_bits += vals[id] ? '1' : '0';
  }
  std::cout << po_bits << '\n';
  return 0;
}

// Stimulus file: one header line of initial register values, then one
// line of input bits per frame.
int cmd_sim(const std::string& file, const std::string& stimulus_path) {
  NetHandle h;
  load_aiger(file, h);
  std::istringstream stim(read_file(stimulus_path));
  std::string line;
  if (!std::getline(stim, line)) fail(exit_error, "stimulus: missing initial-register line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.size() != aigk_num_regs(h.net)) {
    fail(exit_error, "stimulus: initial-register line has " + std::to_string(line.size()) +
                         " bits, net has " + std::to_string(aigk_num_regs(h.net)) + " registers");
  }
  std::vector<uint8_t> init;
  for (char c : line) {
    if (c != '0' && c != '1') fail(exit_error, "stimulus: bits must be 0/1 characters");
    init.push_back(static_cast<uint8_t>(c - '0'));
  }
  std::vector<uint8_t> frames;
  size_t num_frames = 0;
  while (std::getline(stim, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != aigk_num_inputs(h.net)) {
      fail(exit_error, "stimulus: frame " + std::to_string(num_frames) + " has " +
                           std::to_string(line.size()) + " bits, net has " +
                           std::to_string(aigk_num_inputs(h.net)) + " inputs");
    }
    for (char c : line) {
      if (c != '0' && c != '1') fail(exit_error, "stimulus: bits must be 0/1 characters");
      frames.push_back(static_cast<uint8_t>(c - '0'));
    }
    ++num_frames;
  }
  std::vector<uint8_t> vals(num_frames * aigk_num_nodes(h.net));
  check(aigk_seq_eval_sweep(h.net, frames.data(), num_frames, aigk_num_inputs(h.net), init.data(),
                            init.size(), vals.data()));
  for (size_t k = 0; k < num_frames; ++k) {
    std::string po_bits;
    for (uint32_t n = 0; n < aigk_num_outputs(h.net); ++n) {
      uint32_t id = 0;
      check(aigk_nth_output(h.net, n, &id));
      po_bits += vals[k * aigk_num_nodes(h.net) + id] ? '1' : '0';
    }
    std::cout << po_bits << '\n';
  }
  return 0;
}

int cmd_randsim(const std::string& file, uint32_t rounds, uint64_t seed) {
  NetHandle h;
  load_aiger(file, h);
  std::vector<uint64_t> words(static_cast<size_t>(rounds) * aigk_num_nodes(h.net));
  check(aigk_sim_random(h.net, rounds, seed, words.data()));
  for (uint32_t id = 0; id < aigk_num_nodes(h.net); ++id) {
    std::printf("%" PRIu32, id);
    for (uint32_t r = 0; r < rounds; ++r) {
      std::printf(" %016" PRIx64, words[static_cast<size_t>(r) * aigk_num_nodes(h.net) + id]);
    }
    std::printf("\n");
  }
  return 0;
}

int cmd_cnf(const std::string& file, bool have_lit, uint32_t lit, uint32_t po, bool no_assert,
            const std::string& out_path) {
  NetHandle h;
  load_aiger(file, h);
  uint32_t target = select_literal(h.net, have_lit, lit, po, false);
  char* dimacs = nullptr;
  check(aigk_cone_dimacs(h.net, target, no_assert ? 0 : 1, &dimacs));
  std::string text(dimacs);
  aigk_string_free(dimacs);
  write_output(out_path, text);
  return 0;
}

int cmd_sat(const std::string& file, bool have_lit, uint32_t lit, uint32_t po, bool negate,
            const SolverArgs& solver) {
  NetHandle h;
  load_aiger(file, h);
  uint32_t target = select_literal(h.net, have_lit, lit, po, negate);
  std::vector<uint8_t> in(aigk_num_inputs(h.net)), rg(aigk_num_regs(h.net));
  int status = 0;
  aigk_solver_config config = solver.config();
  check(aigk_check_lit_sat(h.net, target, &config, &status, in.data(), rg.data()));
  switch (status) {
    case AIGK_SAT:
      std::cout << "SATISFIABLE\n";
      std::cout << "inputs " << bits_to_string(in.data(), in.size()) << '\n';
      std::cout << "regs " << bits_to_string(rg.data(), rg.size()) << '\n';
      return 0;
    case AIGK_UNSAT:
      std::cout << "UNSATISFIABLE\n";
      return exit_verdict_failed;
    default:
      std::cout << "UNKNOWN\n";
      std::cerr << "unknown: " << aigk_last_error() << '\n';
      return exit_error;
  }
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, const SolverArgs& solver) {
  NetHandle a, b;
  load_aiger(file_a, a);
  load_aiger(file_b, b);
  uint32_t num_outputs = aigk_num_outputs(a.net);
  std::vector<int> verdicts(num_outputs);
  std::vector<uint8_t> cex_in(static_cast<size_t>(num_outputs) * aigk_num_inputs(a.net));
  std::vector<uint8_t> cex_rg(static_cast<size_t>(num_outputs) * aigk_num_regs(a.net));
  aigk_solver_config config = solver.config();
  check(aigk_check_equiv(a.net, b.net, &config, verdicts.data(), cex_in.data(), cex_rg.data()));

  bool any_cex = false, any_unknown = false;
  for (int v : verdicts) {
    any_cex |= v == AIGK_COUNTEREXAMPLE;
    any_unknown |= v == AIGK_EQUIV_UNKNOWN;
  }
  std::cout << (any_cex ? "NOT-EQUIVALENT" : any_unknown ? "UNKNOWN" : "EQUIVALENT") << '\n';
  for (uint32_t n = 0; n < num_outputs; ++n) {
    switch (verdicts[n]) {
      case AIGK_EQUIVALENT:
        std::cout << "po " << n << " equivalent\n";
        break;
      case AIGK_COUNTEREXAMPLE:
        std::cout << "po " << n << " counterexample inputs="
                  << bits_to_string(cex_in.data() + static_cast<size_t>(n) * aigk_num_inputs(a.net),
                                    aigk_num_inputs(a.net))
                  << " regs="
                  << bits_to_string(cex_rg.data() + static_cast<size_t>(n) * aigk_num_regs(a.net),
                                    aigk_num_regs(a.net))
                  << '\n';
        break;
      default:
        std::cout << "po " << n << " unknown\n";
        break;
    }
  }
  return any_cex ? exit_verdict_failed : any_unknown ? exit_error : 0;
}

int cmd_classes(const std::string& file, uint32_t rounds, uint64_t seed,
                const SolverArgs& solver) {
  NetHandle h;
  load_aiger(file, h);
  aigk_solver_config config = solver.config();
  aigk_classes* classes = nullptr;
  check(aigk_partition_classes(h.net, nullptr, 0, rounds, seed, &config, &classes));
  size_t count = aigk_classes_count(classes);
  std::cout << "classes " << count << '\n';
  bool any_unknown = false;
  for (size_t i = 0; i < count; ++i) {
    uint32_t rep = 0;
    size_t size = 0;
    int status = 0;
    check(aigk_class_info(classes, i, &rep, &size, &status));
    const char* word = status == AIGK_CLASS_PROVEN   ? "proven"
                       : status == AIGK_CLASS_SPLIT  ? "refuted-into-split"
                                                     : "unknown";
    any_unknown |= status == AIGK_CLASS_UNKNOWN;
    std::cout << "class " << i << ' ' << word << ':';
    for (size_t j = 0; j < size; ++j) {
      uint32_t id = 0;
      int phase = 0;
      check(aigk_class_member(classes, i, j, &id, &phase));
      std::cout << ' ' << id << (phase ? "!" : "");
    }
    std::cout << '\n';
  }
  aigk_classes_free(classes);
  return any_unknown ? exit_error : 0;
}

int cmd_convert(const std::string& file, const std::string& to, const std::string& out_path) {
  if (to == "hons") {
    NetHandle h;
    load_aiger(file, h);
    char* text = nullptr;
    check(aigk_aignet_to_hons_text(h.net, &text));
    std::string s(text);
    aigk_string_free(text);
    write_output(out_path, s);
    return 0;
  }
  if (to == "aiger") {
    std::string text = read_file(file);
    NetHandle h;
    check(aigk_hons_text_to_aignet(text.c_str(), &h.net));
    char* aag = nullptr;
    check(aigk_write_aiger_string(h.net, &aag));
    std::string s(aag);
    aigk_string_free(aag);
    write_output(out_path, s);
    return 0;
  }
  fail(exit_usage, "--to must be hons or aiger");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aigkit: and-inverter graph toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, inputs_bits, regs_bits, stimulus, convert_to;
  uint32_t po = 0, lit = 0, rounds = 4;
  uint64_t seed = 1;
  bool negate = false, no_assert = false;
  SolverArgs solver;

  auto* stats = app.add_subcommand("stats", "node counts and depth");
  stats->add_option("file", file)->required();

  auto* eval = app.add_subcommand("eval", "combinational evaluation; prints output bits");
  eval->add_option("file", file)->required();
  eval->add_option("--inputs", inputs_bits, "input bits, one 0/1 per primary input");
  eval->add_option("--regs", regs_bits, "register bits, one 0/1 per register");

  auto* sim = app.add_subcommand("sim", "sequential evaluation over a stimulus file");
  sim->add_option("file", file)->required();
  sim->add_option("--stimulus", stimulus, "stimulus file")->required();

  auto* randsim = app.add_subcommand("randsim", "per-node random simulation signatures");
  randsim->add_option("file", file)->required();
  randsim->add_option("--rounds", rounds, "simulation rounds (default 4)");
  randsim->add_option("--seed", seed, "PRNG seed (default 1)");

  auto* cnf = app.add_subcommand("cnf", "export a literal's cone as DIMACS");
  cnf->add_option("file", file)->required();
  auto* cnf_lit = cnf->add_option("--output", lit, "raw literal to export");
  cnf->add_option("--po", po, "output index to export (default 0)");
  cnf->add_flag("--no-assert", no_assert, "omit the unit clause asserting the literal");
  cnf->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* sat = app.add_subcommand("sat", "satisfiability of an output or literal");
  sat->add_option("file", file)->required();
  auto* sat_lit = sat->add_option("--output", lit, "raw literal to check");
  sat->add_option("--po", po, "output index to check (default 0)");
  sat->add_flag("--negate", negate, "check the complement");
  solver.add_to(sat);

  auto* equiv = app.add_subcommand("equiv", "per-output combinational equivalence");
  equiv->add_option("file1", file)->required();
  equiv->add_option("file2", file_b)->required();
  solver.add_to(equiv);

  auto* classes = app.add_subcommand("classes", "candidate-equivalence classes over AND nodes");
  classes->add_option("file", file)->required();
  classes->add_option("--rounds", rounds, "random simulation rounds (default 4)");
  classes->add_option("--seed", seed, "PRNG seed (default 1)");
  solver.add_to(classes);

  auto* convert = app.add_subcommand("convert", "convert between aiger and expression text");
  convert->add_option("file", file)->required();
  convert->add_option("--to", convert_to, "target form: hons or aiger")->required();
  convert->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (stats->parsed()) return cmd_stats(file);
    if (eval->parsed()) return cmd_eval(file, inputs_bits, regs_bits);
    if (sim->parsed()) return cmd_sim(file, stimulus);
    if (randsim->parsed()) return cmd_randsim(file, rounds, seed);
    if (cnf->parsed()) return cmd_cnf(file, cnf_lit->count() > 0, lit, po, no_assert, out_path);
    if (sat->parsed()) return cmd_sat(file, sat_lit->count() > 0, lit, po, negate, solver);
    if (equiv->parsed()) return cmd_equiv(file, file_b, solver);
    if (classes->parsed()) return cmd_classes(file, rounds, seed, solver);
    if (convert->parsed()) return cmd_convert(file, convert_to, out_path);
  } catch (const Fatal& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return exit_usage;
}
