/* aigkit: and-inverter graph toolkit — C API
 * SPDX-License-Identifier: Apache-2.0
 *
 * Shared-library interface over the aigkit core. All functions that can
 * fail return an aigk_status; results travel through out-parameters.
 * aigk_last_error() describes the most recent failure on the calling
 * thread. Objects returned through aigk_*_new/read/parse calls are owned
 * by the caller and released with the matching aigk_*_free.
 *
 * A network handle is single-writer while under construction; once built
 * it may be shared read-only across threads.
 */
#ifndef AIGKIT_AIGKIT_H
#define AIGKIT_AIGKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aigk_aignet aigk_aignet;
typedef struct aigk_strash aigk_strash;
typedef struct aigk_classes aigk_classes;

typedef enum aigk_status {
  AIGK_OK = 0,
  AIGK_ERR_BOUNDS = 1,       /* id, literal, or index out of range */
  AIGK_ERR_FANIN = 2,        /* literal names a combinational output */
  AIGK_ERR_REGISTER = 3,     /* register pairing violation */
  AIGK_ERR_CAPACITY = 4,     /* node ids no longer fit in a literal */
  AIGK_ERR_UNDERSIZED = 5,   /* assignment shorter than the CI count */
  AIGK_ERR_PARSE = 6,        /* malformed input text */
  AIGK_ERR_IO = 7,           /* file system failure */
  AIGK_ERR_SOLVER = 8,       /* SAT back end failure */
  AIGK_ERR_INVALID = 9,      /* other precondition violation */
} aigk_status;

/* Message for the calling thread's most recent failure; never NULL. */
const char* aigk_last_error(void);

const char* aigk_version(void);

/* ---- literals -------------------------------------------------------- */

/* Literals encode 2*id + neg; 0 is constant-false, 1 constant-true. */
static inline uint32_t aigk_lit_make(uint32_t id, uint32_t neg) { return (id << 1) | (neg & 1u); }
static inline uint32_t aigk_lit_id(uint32_t lit) { return lit >> 1; }
static inline uint32_t aigk_lit_neg(uint32_t lit) { return lit & 1u; }
static inline uint32_t aigk_lit_negate_cond(uint32_t lit, uint32_t c) { return lit ^ (c & 1u); }

/* ---- networks -------------------------------------------------------- */

typedef enum aigk_node_kind {
  AIGK_NODE_CONST = 0,
  AIGK_NODE_INPUT = 1,
  AIGK_NODE_REG_OUT = 2,
  AIGK_NODE_AND = 3,
  AIGK_NODE_OUTPUT = 4,
  AIGK_NODE_REG_IN = 5,
} aigk_node_kind;

aigk_status aigk_aignet_new(aigk_aignet** out);
aigk_status aigk_aignet_clone(const aigk_aignet* net, aigk_aignet** out);
void aigk_aignet_free(aigk_aignet* net);

uint32_t aigk_num_nodes(const aigk_aignet* net);
uint32_t aigk_num_inputs(const aigk_aignet* net);
uint32_t aigk_num_regs(const aigk_aignet* net);
uint32_t aigk_num_outputs(const aigk_aignet* net);
uint32_t aigk_num_regins(const aigk_aignet* net);

aigk_status aigk_node_kind_of(const aigk_aignet* net, uint32_t id, int* kind_out);
aigk_status aigk_fanin0(const aigk_aignet* net, uint32_t id, uint32_t* lit_out);
aigk_status aigk_fanin1(const aigk_aignet* net, uint32_t id, uint32_t* lit_out);
aigk_status aigk_nth_input(const aigk_aignet* net, uint32_t n, uint32_t* id_out);
aigk_status aigk_nth_reg(const aigk_aignet* net, uint32_t n, uint32_t* id_out);
aigk_status aigk_nth_output(const aigk_aignet* net, uint32_t n, uint32_t* id_out);
aigk_status aigk_nth_regin(const aigk_aignet* net, uint32_t n, uint32_t* id_out);
aigk_status aigk_depth(const aigk_aignet* net, uint32_t* out);

aigk_status aigk_add_input(aigk_aignet* net, uint32_t* lit_out);
aigk_status aigk_add_reg(aigk_aignet* net, uint32_t* lit_out);
aigk_status aigk_add_and(aigk_aignet* net, uint32_t f0, uint32_t f1, uint32_t* lit_out);
aigk_status aigk_add_output(aigk_aignet* net, uint32_t f, uint32_t* id_out);
aigk_status aigk_add_regin(aigk_aignet* net, uint32_t f, uint32_t ro, uint32_t* id_out);

/* 1 when `net` contains every node of `old` unchanged, else 0. */
int aigk_is_extension_of(const aigk_aignet* net, const aigk_aignet* old);

/* ---- hashing constructors -------------------------------------------- */

typedef struct aigk_simp_opts {
  int strash;        /* reuse structurally identical AND nodes */
  int const_prop;    /* fold constant fanins */
  int fanin_reduce;  /* a & a, a & !a */
  int level2;        /* two-level contradiction/subsumption rules */
} aigk_simp_opts;

/* Defaults: strash, const_prop, fanin_reduce on; level2 off. */
void aigk_simp_opts_default(aigk_simp_opts* opts);

aigk_status aigk_strash_new(aigk_strash** out);
void aigk_strash_free(aigk_strash* strash);

aigk_status aigk_hash_and(aigk_aignet* net, aigk_strash* strash, uint32_t f0, uint32_t f1,
                          const aigk_simp_opts* opts, uint32_t* lit_out);
aigk_status aigk_hash_or(aigk_aignet* net, aigk_strash* strash, uint32_t f0, uint32_t f1,
                         const aigk_simp_opts* opts, uint32_t* lit_out);
aigk_status aigk_hash_xor(aigk_aignet* net, aigk_strash* strash, uint32_t f0, uint32_t f1,
                          const aigk_simp_opts* opts, uint32_t* lit_out);
aigk_status aigk_hash_mux(aigk_aignet* net, aigk_strash* strash, uint32_t c, uint32_t t,
                          uint32_t e, const aigk_simp_opts* opts, uint32_t* lit_out);

/* ---- evaluation ------------------------------------------------------ */

/* vals_out must hold aigk_num_nodes entries; vals_out[id] is node id's
 * value under the given CI bits. */
aigk_status aigk_eval_sweep(const aigk_aignet* net, const uint8_t* inputs, size_t num_inputs,
                            const uint8_t* regs, size_t num_regs, uint8_t* vals_out);

/* frames is row-major, num_frames rows of num_inputs bits. vals_out must
 * hold num_frames * aigk_num_nodes entries. */
aigk_status aigk_seq_eval_sweep(const aigk_aignet* net, const uint8_t* frames, size_t num_frames,
                                size_t num_inputs, const uint8_t* initial_regs, size_t num_regs,
                                uint8_t* vals_out);

/* 64 parallel evaluations; words_out must hold aigk_num_nodes entries. */
aigk_status aigk_sim_words(const aigk_aignet* net, const uint64_t* input_words, size_t num_inputs,
                           const uint64_t* reg_words, size_t num_regs, uint64_t* words_out);

/* Seeded random simulation; words_out is row-major, rounds rows of
 * aigk_num_nodes words. */
aigk_status aigk_sim_random(const aigk_aignet* net, uint32_t rounds, uint64_t seed,
                            uint64_t* words_out);

/* ---- CNF and SAT ----------------------------------------------------- */

typedef struct aigk_solver_config {
  const char* command;    /* NULL: AIGKIT_SAT_SOLVER, else built-in solver */
  double timeout_seconds; /* <= 0: default 60 */
} aigk_solver_config;

/* DIMACS for the fanin cone of `lit` (combinational-output literals are
 * resolved to their fanin). With assert_lit nonzero a unit clause
 * asserting the literal is appended, making the file the question "can
 * this literal be 1". The string is malloc'd; free with aigk_string_free. */
aigk_status aigk_cone_dimacs(const aigk_aignet* net, uint32_t lit, int assert_lit, char** out);

typedef enum aigk_sat_status {
  AIGK_SAT = 0,
  AIGK_UNSAT = 1,
  AIGK_SAT_UNKNOWN = 2,
} aigk_sat_status;

/* Satisfiability of one literal. On AIGK_SAT the confirmed witness is
 * written to inputs_out/regs_out (sized num_inputs/num_regs) when they
 * are non-NULL. */
aigk_status aigk_check_lit_sat(const aigk_aignet* net, uint32_t lit,
                               const aigk_solver_config* config, int* status_out,
                               uint8_t* inputs_out, uint8_t* regs_out);

typedef enum aigk_equiv_status {
  AIGK_EQUIVALENT = 0,
  AIGK_COUNTEREXAMPLE = 1,
  AIGK_EQUIV_UNKNOWN = 2,
} aigk_equiv_status;

/* Per-output combinational equivalence. verdicts_out has one entry per
 * output. cex_inputs_out/cex_regs_out, when non-NULL, are row-major
 * (num_outputs rows); rows are written only for counterexample verdicts. */
aigk_status aigk_check_equiv(const aigk_aignet* a, const aigk_aignet* b,
                             const aigk_solver_config* config, int* verdicts_out,
                             uint8_t* cex_inputs_out, uint8_t* cex_regs_out);

/* ---- candidate-equivalence classes ------------------------------------ */

typedef enum aigk_class_status {
  AIGK_CLASS_PROVEN = 0,
  AIGK_CLASS_SPLIT = 1,
  AIGK_CLASS_UNKNOWN = 2,
} aigk_class_status;

/* candidates NULL: every AND node. */
aigk_status aigk_partition_classes(const aigk_aignet* net, const uint32_t* candidates,
                                   size_t num_candidates, uint32_t rounds, uint64_t seed,
                                   const aigk_solver_config* config, aigk_classes** out);
void aigk_classes_free(aigk_classes* classes);

size_t aigk_classes_count(const aigk_classes* classes);
aigk_status aigk_class_info(const aigk_classes* classes, size_t idx, uint32_t* rep_out,
                            size_t* size_out, int* status_out);
aigk_status aigk_class_member(const aigk_classes* classes, size_t idx, size_t member_idx,
                              uint32_t* id_out, int* phase_out);

/* ---- file formats and conversion -------------------------------------- */

aigk_status aigk_read_aiger_file(const char* path, aigk_aignet** out);
aigk_status aigk_parse_aiger(const char* text, aigk_aignet** out);
aigk_status aigk_write_aiger_string(const aigk_aignet* net, char** out);
aigk_status aigk_write_aiger_file(const aigk_aignet* net, const char* path);

/* Expression-tree text: one line per output, `T` / `NIL` / atoms as
 * variables, `(a . NIL)` for NOT, `(a . b)` for AND. Combinational nets
 * only. */
aigk_status aigk_aignet_to_hons_text(const aigk_aignet* net, char** out);

/* Parses a sequence of expressions; each becomes an output. Inputs are
 * created per distinct variable in first-occurrence order. */
aigk_status aigk_hons_text_to_aignet(const char* text, aigk_aignet** out);

void aigk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AIGKIT_AIGKIT_H */
