// aigkit: and-inverter graph toolkit — C API implementation
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/aigkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "aigkit/aiger.hpp"
#include "aigkit/aignet.hpp"
#include "aigkit/cnf.hpp"
#include "aigkit/error.hpp"
#include "aigkit/eval.hpp"
#include "aigkit/honsaig.hpp"
#include "aigkit/satlink.hpp"
#include "aigkit/strash.hpp"

using namespace aigkit;

struct aigk_aignet {
  Aignet net;
};

struct aigk_strash {
  Strash strash;
};

struct aigk_classes {
  std::vector<EquivClass> classes;
};

namespace {

thread_local std::string g_last_error;

aigk_status status_of(Errc code) {
  switch (code) {
    case Errc::out_of_bounds: return AIGK_ERR_BOUNDS;
    case Errc::bad_fanin: return AIGK_ERR_FANIN;
    case Errc::bad_register: return AIGK_ERR_REGISTER;
    case Errc::capacity: return AIGK_ERR_CAPACITY;
    case Errc::undersized: return AIGK_ERR_UNDERSIZED;
    case Errc::parse: return AIGK_ERR_PARSE;
    case Errc::io: return AIGK_ERR_IO;
    case Errc::solver: return AIGK_ERR_SOLVER;
    case Errc::invalid: return AIGK_ERR_INVALID;
  }
  return AIGK_ERR_INVALID;
}

template <typename Fn>
aigk_status guarded(Fn&& fn) {
  try {
    fn();
    return AIGK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AIGK_ERR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SolverConfig to_config(const aigk_solver_config* config) {
  if (!config) return SolverConfig::from_environment();
  SolverConfig c;
  if (config->command) {
    c.command = config->command;
  } else {
    c = SolverConfig::from_environment();
  }
  if (config->timeout_seconds > 0) c.timeout_seconds = config->timeout_seconds;
  return c;
}

SimpOpts to_opts(const aigk_simp_opts* opts) {
  if (!opts) return SimpOpts{};
  return SimpOpts{opts->strash != 0, opts->const_prop != 0, opts->fanin_reduce != 0,
                  opts->level2 != 0};
}

}  // namespace

extern "C" {

const char* aigk_last_error(void) { return g_last_error.c_str(); }

const char* aigk_version(void) { return "0.1.0"; }

aigk_status aigk_aignet_new(aigk_aignet** out) {
  return guarded([&] { *out = new aigk_aignet{}; });
}

aigk_status aigk_aignet_clone(const aigk_aignet* net, aigk_aignet** out) {
  return guarded([&] { *out = new aigk_aignet{net->net}; });
}

void aigk_aignet_free(aigk_aignet* net) { delete net; }

uint32_t aigk_num_nodes(const aigk_aignet* net) { return net->net.num_nodes(); }
uint32_t aigk_num_inputs(const aigk_aignet* net) { return net->net.num_inputs(); }
uint32_t aigk_num_regs(const aigk_aignet* net) { return net->net.num_regs(); }
uint32_t aigk_num_outputs(const aigk_aignet* net) { return net->net.num_outputs(); }
uint32_t aigk_num_regins(const aigk_aignet* net) { return net->net.num_regins(); }

aigk_status aigk_node_kind_of(const aigk_aignet* net, uint32_t id, int* kind_out) {
  return guarded([&] { *kind_out = static_cast<int>(net->net.kind(id)); });
}

aigk_status aigk_fanin0(const aigk_aignet* net, uint32_t id, uint32_t* lit_out) {
  return guarded([&] { *lit_out = net->net.fanin0(id); });
}

aigk_status aigk_fanin1(const aigk_aignet* net, uint32_t id, uint32_t* lit_out) {
  return guarded([&] { *lit_out = net->net.fanin1(id); });
}

aigk_status aigk_nth_input(const aigk_aignet* net, uint32_t n, uint32_t* id_out) {
  return guarded([&] { *id_out = net->net.nth_input(n); });
}

aigk_status aigk_nth_reg(const aigk_aignet* net, uint32_t n, uint32_t* id_out) {
  return guarded([&] { *id_out = net->net.nth_reg(n); });
}

aigk_status aigk_nth_output(const aigk_aignet* net, uint32_t n, uint32_t* id_out) {
  return guarded([&] { *id_out = net->net.nth_output(n); });
}

aigk_status aigk_nth_regin(const aigk_aignet* net, uint32_t n, uint32_t* id_out) {
  return guarded([&] { *id_out = net->net.nth_regin(n); });
}

aigk_status aigk_depth(const aigk_aignet* net, uint32_t* out) {
  return guarded([&] { *out = network_depth(net->net); });
}

aigk_status aigk_add_input(aigk_aignet* net, uint32_t* lit_out) {
  return guarded([&] { *lit_out = net->net.add_input(); });
}

aigk_status aigk_add_reg(aigk_aignet* net, uint32_t* lit_out) {
  return guarded([&] { *lit_out = net->net.add_reg(); });
}

aigk_status aigk_add_and(aigk_aignet* net, uint32_t f0, uint32_t f1, uint32_t* lit_out) {
  return guarded([&] { *lit_out = net->net.add_and(f0, f1); });
}

aigk_status aigk_add_output(aigk_aignet* net, uint32_t f, uint32_t* id_out) {
  return guarded([&] { *id_out = net->net.add_output(f); });
}

aigk_status aigk_add_regin(aigk_aignet* net, uint32_t f, uint32_t ro, uint32_t* id_out) {
  return guarded([&] { *id_out = net->net.add_regin(f, ro); });
}

int aigk_is_extension_of(const aigk_aignet* net, const aigk_aignet* old) {
  return net->net.is_extension_of(old->net) ? 1 : 0;
}

void aigk_simp_opts_default(aigk_simp_opts* opts) {
  SimpOpts defaults;
  opts->strash = defaults.strash;
  opts->const_prop = defaults.const_prop;
  opts->fanin_reduce = defaults.fanin_reduce;
  opts->level2 = defaults.level2;
}

aigk_status aigk_strash_new(aigk_strash** out) {
  return guarded([&] { *out = new aigk_strash{}; });
}

void aigk_strash_free(aigk_strash* strash) { delete strash; }

aigk_status aigk_hash_and(aigk_aignet* net, aigk_strash* strash, uint32_t f0, uint32_t f1,
                          const aigk_simp_opts* opts, uint32_t* lit_out) {
  return guarded([&] { *lit_out = hash_and(net->net, strash->strash, f0, f1, to_opts(opts)); });
}

aigk_status aigk_hash_or(aigk_aignet* net, aigk_strash* strash, uint32_t f0, uint32_t f1,
                         const aigk_simp_opts* opts, uint32_t* lit_out) {
  return guarded([&] { *lit_out = hash_or(net->net, strash->strash, f0, f1, to_opts(opts)); });
}

aigk_status aigk_hash_xor(aigk_aignet* net, aigk_strash* strash, uint32_t f0, uint32_t f1,
                          const aigk_simp_opts* opts, uint32_t* lit_out) {
  return guarded([&] { *lit_out = hash_xor(net->net, strash->strash, f0, f1, to_opts(opts)); });
}

aigk_status aigk_hash_mux(aigk_aignet* net, aigk_strash* strash, uint32_t c, uint32_t t,
                          uint32_t e, const aigk_simp_opts* opts, uint32_t* lit_out) {
  return guarded([&] { *lit_out = hash_mux(net->net, strash->strash, c, t, e, to_opts(opts)); });
}

aigk_status aigk_eval_sweep(const aigk_aignet* net, const uint8_t* inputs, size_t num_inputs,
                            const uint8_t* regs, size_t num_regs, uint8_t* vals_out) {
  return guarded([&] {
    BitAssignment a;
    a.inputs.assign(inputs, inputs + num_inputs);
    a.regs.assign(regs, regs + num_regs);
    std::vector<std::uint8_t> vals = eval_sweep(net->net, a);
    std::memcpy(vals_out, vals.data(), vals.size());
  });
}

aigk_status aigk_seq_eval_sweep(const aigk_aignet* net, const uint8_t* frames, size_t num_frames,
                                size_t num_inputs, const uint8_t* initial_regs, size_t num_regs,
                                uint8_t* vals_out) {
  return guarded([&] {
    FrameInputs f;
    f.initial_regs.assign(initial_regs, initial_regs + num_regs);
    f.frames.resize(num_frames);
    for (size_t k = 0; k < num_frames; ++k) {
      const uint8_t* row = frames + k * num_inputs;
      f.frames[k].assign(row, row + num_inputs);
    }
    auto sweeps = seq_eval_sweep(net->net, f);
    for (size_t k = 0; k < sweeps.size(); ++k) {
      std::memcpy(vals_out + k * net->net.num_nodes(), sweeps[k].data(), sweeps[k].size());
    }
  });
}

aigk_status aigk_sim_words(const aigk_aignet* net, const uint64_t* input_words, size_t num_inputs,
                           const uint64_t* reg_words, size_t num_regs, uint64_t* words_out) {
  return guarded([&] {
    WordAssignment w;
    w.inputs.assign(input_words, input_words + num_inputs);
    w.regs.assign(reg_words, reg_words + num_regs);
    std::vector<std::uint64_t> words = sim_words(net->net, w);
    std::memcpy(words_out, words.data(), words.size() * sizeof(std::uint64_t));
  });
}

aigk_status aigk_sim_random(const aigk_aignet* net, uint32_t rounds, uint64_t seed,
                            uint64_t* words_out) {
  return guarded([&] {
    std::mt19937_64 rng(seed);
    for (uint32_t round = 0; round < rounds; ++round) {
      WordAssignment w = random_word_assignment(net->net, rng);
      std::vector<std::uint64_t> words = sim_words(net->net, w);
      std::memcpy(words_out + static_cast<size_t>(round) * net->net.num_nodes(), words.data(),
                  words.size() * sizeof(std::uint64_t));
    }
  });
}

aigk_status aigk_cone_dimacs(const aigk_aignet* net, uint32_t lit, int assert_lit, char** out) {
  return guarded([&] {
    ConeCnf cone = build_cone_cnf(net->net, lit);
    DimacsProblem p;
    p.num_vars = cone.vars.num_vars();
    p.clauses = std::move(cone.cnf);
    if (assert_lit) p.cube.push_back(cone.root);
    *out = dup_string(write_dimacs(p));
  });
}

aigk_status aigk_check_lit_sat(const aigk_aignet* net, uint32_t lit,
                               const aigk_solver_config* config, int* status_out,
                               uint8_t* inputs_out, uint8_t* regs_out) {
  return guarded([&] {
    LitSatResult res = check_lit_sat(net->net, lit, to_config(config));
    switch (res.status) {
      case SatStatus::sat:
        *status_out = AIGK_SAT;
        if (inputs_out) {
          std::memcpy(inputs_out, res.witness.inputs.data(), res.witness.inputs.size());
        }
        if (regs_out) std::memcpy(regs_out, res.witness.regs.data(), res.witness.regs.size());
        break;
      case SatStatus::unsat:
        *status_out = AIGK_UNSAT;
        break;
      case SatStatus::unknown:
        *status_out = AIGK_SAT_UNKNOWN;
        g_last_error = res.reason;
        break;
    }
  });
}

aigk_status aigk_check_equiv(const aigk_aignet* a, const aigk_aignet* b,
                             const aigk_solver_config* config, int* verdicts_out,
                             uint8_t* cex_inputs_out, uint8_t* cex_regs_out) {
  return guarded([&] {
    std::vector<PoVerdict> verdicts = check_equiv(a->net, b->net, to_config(config));
    for (size_t n = 0; n < verdicts.size(); ++n) {
      switch (verdicts[n].status) {
        case EquivStatus::equivalent:
          verdicts_out[n] = AIGK_EQUIVALENT;
          break;
        case EquivStatus::counterexample:
          verdicts_out[n] = AIGK_COUNTEREXAMPLE;
          if (cex_inputs_out) {
            std::memcpy(cex_inputs_out + n * a->net.num_inputs(),
                        verdicts[n].witness.inputs.data(), a->net.num_inputs());
          }
          if (cex_regs_out) {
            std::memcpy(cex_regs_out + n * a->net.num_regs(), verdicts[n].witness.regs.data(),
                        a->net.num_regs());
          }
          break;
        case EquivStatus::unknown:
          verdicts_out[n] = AIGK_EQUIV_UNKNOWN;
          g_last_error = verdicts[n].reason;
          break;
      }
    }
  });
}

aigk_status aigk_partition_classes(const aigk_aignet* net, const uint32_t* candidates,
                                   size_t num_candidates, uint32_t rounds, uint64_t seed,
                                   const aigk_solver_config* config, aigk_classes** out) {
  return guarded([&] {
    std::vector<NodeId> cands;
    if (candidates) {
      cands.assign(candidates, candidates + num_candidates);
    } else {
      for (NodeId id = 0; id < net->net.num_nodes(); ++id) {
        if (net->net.kind(id) == NodeKind::and_gate) cands.push_back(id);
      }
    }
    PartitionOptions opts;
    opts.rounds = rounds;
    opts.seed = seed;
    opts.solver = to_config(config);
    *out = new aigk_classes{partition_classes(net->net, std::move(cands), opts)};
  });
}

void aigk_classes_free(aigk_classes* classes) { delete classes; }

size_t aigk_classes_count(const aigk_classes* classes) { return classes->classes.size(); }

aigk_status aigk_class_info(const aigk_classes* classes, size_t idx, uint32_t* rep_out,
                            size_t* size_out, int* status_out) {
  return guarded([&] {
    const EquivClass& cls = classes->classes.at(idx);
    if (rep_out) *rep_out = cls.representative;
    if (size_out) *size_out = cls.members.size();
    if (status_out) {
      switch (cls.status) {
        case ClassStatus::proven: *status_out = AIGK_CLASS_PROVEN; break;
        case ClassStatus::refuted_into_split: *status_out = AIGK_CLASS_SPLIT; break;
        case ClassStatus::unknown: *status_out = AIGK_CLASS_UNKNOWN; break;
      }
    }
  });
}

aigk_status aigk_class_member(const aigk_classes* classes, size_t idx, size_t member_idx,
                              uint32_t* id_out, int* phase_out) {
  return guarded([&] {
    const EquivClass& cls = classes->classes.at(idx);
    *id_out = cls.members.at(member_idx);
    if (phase_out) *phase_out = cls.phases.at(member_idx);
  });
}

aigk_status aigk_read_aiger_file(const char* path, aigk_aignet** out) {
  return guarded([&] { *out = new aigk_aignet{read_aiger_file(path)}; });
}

aigk_status aigk_parse_aiger(const char* text, aigk_aignet** out) {
  return guarded([&] { *out = new aigk_aignet{parse_aiger(text)}; });
}

aigk_status aigk_write_aiger_string(const aigk_aignet* net, char** out) {
  return guarded([&] { *out = dup_string(write_aiger(net->net)); });
}

aigk_status aigk_write_aiger_file(const aigk_aignet* net, const char* path) {
  return guarded([&] { write_aiger_file(net->net, path); });
}

aigk_status aigk_aignet_to_hons_text(const aigk_aignet* net, char** out) {
  return guarded([&] {
    std::vector<HonsAig> pos = aignet_to_hons(net->net);
    std::string text;
    for (const HonsAig& po : pos) {
      text += aig_to_text(po);
      text += '\n';
    }
    *out = dup_string(text);
  });
}

aigk_status aigk_hons_text_to_aignet(const char* text, aigk_aignet** out) {
  return guarded([&] {
    std::vector<HonsAig> roots = aig_list_from_text(text);
    if (roots.empty()) throw Error(Errc::parse, "no expressions found");
    *out = new aigk_aignet{hons_to_aignet(roots).net};
  });
}

void aigk_string_free(char* s) { std::free(s); }

}  // extern "C"
