// aigkit: and-inverter graph toolkit
// SPDX-License-Identifier: Apache-2.0
#include "aigkit/satlink.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <map>
#include <ostream>
#include <sstream>

#include "aigkit/error.hpp"
#include "aigkit/strash.hpp"

namespace aigkit {

void write_dimacs(const DimacsProblem& p, std::ostream& os) {
  os << "p cnf " << p.num_vars << ' ' << p.num_clauses() << '\n';
  for (const Clause& clause : p.clauses.clauses) {
    for (CnfLit l : clause) os << l << ' ';
    os << "0\n";
  }
  for (CnfLit l : p.cube) os << l << " 0\n";
}

std::string write_dimacs(const DimacsProblem& p) {
  std::ostringstream os;
  write_dimacs(p, os);
  return os.str();
}

DimacsProblem parse_dimacs(std::string_view text) {
  DimacsProblem p;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_header = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (!saw_header) {
      std::string tag, fmt;
      if (!(ls >> tag >> fmt) || tag != "p" || fmt != "cnf") {
        throw Error(Errc::parse, "dimacs line " + std::to_string(lineno) + ": expected header");
      }
      long vars = 0, clauses = 0;
      if (!(ls >> vars >> clauses) || vars < 0 || clauses < 0) {
        throw Error(Errc::parse, "dimacs line " + std::to_string(lineno) + ": bad header counts");
      }
      p.num_vars = static_cast<int>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      saw_header = true;
      continue;
    }
    long v = 0;
    while (ls >> v) {
      if (v == 0) {
        p.clauses.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(v) > p.num_vars) {
          throw Error(Errc::parse, "dimacs line " + std::to_string(lineno) +
                                       ": literal exceeds declared variable count");
        }
        current.push_back(static_cast<CnfLit>(v));
      }
    }
  }
  if (!saw_header) throw Error(Errc::parse, "dimacs: missing header");
  if (!current.empty()) throw Error(Errc::parse, "dimacs: clause not terminated by 0");
  if (p.clauses.size() != declared_clauses) {
    throw Error(Errc::parse, "dimacs: header declares " + std::to_string(declared_clauses) +
                                 " clauses, body has " + std::to_string(p.clauses.size()));
  }
  return p;
}

SolverConfig SolverConfig::from_environment() {
  SolverConfig config;
  if (const char* cmd = std::getenv("AIGKIT_SAT_SOLVER")) config.command = cmd;
  return config;
}

namespace {

// Exhaustive fallback. Walks assignments in Gray-code order and keeps a
// satisfied-literal count per clause, so each step touches only the
// clauses of the flipped variable.
SolverResult solve_builtin(const DimacsProblem& p) {
  constexpr int max_vars = 20;
  SolverResult result;
  if (p.num_vars > max_vars) {
    result.status = SatStatus::unknown;
    result.reason = "built-in solver handles at most " + std::to_string(max_vars) +
                    " variables, problem has " + std::to_string(p.num_vars);
    return result;
  }

  std::vector<Clause> clauses = p.clauses.clauses;
  for (CnfLit l : p.cube) clauses.push_back({l});

  std::vector<std::uint8_t> env(static_cast<std::size_t>(p.num_vars) + 1, 0);
  std::vector<int> true_lits(clauses.size(), 0);
  std::vector<std::vector<std::uint32_t>> clauses_of_var(static_cast<std::size_t>(p.num_vars) + 1);
  std::size_t unsat_count = 0;
  for (std::uint32_t ci = 0; ci < clauses.size(); ++ci) {
    if (clauses[ci].empty()) {
      result.status = SatStatus::unsat;
      return result;
    }
    for (CnfLit l : clauses[ci]) {
      if (l < 0) ++true_lits[ci];  // all-zero start satisfies negative literals
      auto& of_var = clauses_of_var[static_cast<std::size_t>(std::abs(l))];
      if (of_var.empty() || of_var.back() != ci) of_var.push_back(ci);
    }
    if (true_lits[ci] == 0) ++unsat_count;
  }

  auto flip = [&](int var) {
    env[var] ^= 1;
    for (std::uint32_t ci : clauses_of_var[var]) {
      int delta = 0;
      for (CnfLit l : clauses[ci]) {
        if (std::abs(l) != var) continue;
        bool now_true = (l > 0) == (env[var] != 0);
        delta += now_true ? 1 : -1;
      }
      bool was_sat = true_lits[ci] > 0;
      true_lits[ci] += delta;
      bool is_sat = true_lits[ci] > 0;
      if (was_sat && !is_sat) ++unsat_count;
      if (!was_sat && is_sat) --unsat_count;
    }
  };

  std::uint64_t total = 1ull << p.num_vars;
  for (std::uint64_t step = 0;; ++step) {
    if (unsat_count == 0) {
      result.status = SatStatus::sat;
      result.model.values = env;
      return result;
    }
    if (step + 1 >= total) break;
    // Gray code: flip the lowest set bit's position of step+1.
    int var = 1 + __builtin_ctzll(step + 1);
    flip(var);
  }
  result.status = SatStatus::unsat;
  return result;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    const char* dir = std::getenv("TMPDIR");
    std::string tmpl = std::string(dir && *dir ? dir : "/tmp") + "/aigkit-XXXXXX";
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    int fd = mkstemp(buf.data());
    if (fd < 0) throw Error(Errc::io, "mkstemp failed: " + std::string(std::strerror(errno)));
    path.assign(buf.data());
    std::size_t off = 0;
    while (off < contents.size()) {
      ssize_t n = ::write(fd, contents.data() + off, contents.size() - off);
      if (n < 0) {
        ::close(fd);
        throw Error(Errc::io, "write failed: " + std::string(std::strerror(errno)));
      }
      off += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }
  ~TempFile() { ::unlink(path.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

// Runs `command file`, captures stdout, enforces the timeout. Returns
// the exit code, or -1 on timeout.
int run_subprocess(const std::string& command, const std::string& file, double timeout_seconds,
                   std::string& output) {
  int pipefd[2];
  if (pipe(pipefd) != 0) {
    throw Error(Errc::solver, "pipe failed: " + std::string(std::strerror(errno)));
  }
  pid_t pid = fork();
  if (pid < 0) {
    ::close(pipefd[0]);
    ::close(pipefd[1]);
    throw Error(Errc::solver, "fork failed: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    ::dup2(pipefd[1], STDOUT_FILENO);
    ::close(pipefd[0]);
    ::close(pipefd[1]);
    std::string cmdline = command + " " + file;
    execl("/bin/sh", "sh", "-c", cmdline.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  ::close(pipefd[1]);

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_seconds));
  bool timed_out = false;
  char buf[4096];
  for (;;) {
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                         deadline - std::chrono::steady_clock::now())
                         .count();
    if (remaining <= 0) {
      timed_out = true;
      break;
    }
    struct pollfd pfd{pipefd[0], POLLIN, 0};
    int rc = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(remaining, 1000)));
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (rc == 0) continue;
    ssize_t n = ::read(pipefd[0], buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 0) break;  // solver closed stdout
    output.append(buf, static_cast<std::size_t>(n));
  }
  ::close(pipefd[0]);

  if (timed_out) {
    ::kill(pid, SIGKILL);
    int status = 0;
    ::waitpid(pid, &status, 0);
    return -1;
  }
  int status = 0;
  ::waitpid(pid, &status, 0);
  return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
}

SolverResult solve_external(const DimacsProblem& p, const SolverConfig& config) {
  SolverResult result;
  TempFile file(write_dimacs(p));
  std::string output;
  result.exit_code = run_subprocess(config.command, file.path, config.timeout_seconds, output);
  if (result.exit_code == -1) {
    result.status = SatStatus::unknown;
    result.reason = "solver timed out after " + std::to_string(config.timeout_seconds) + " s";
    return result;
  }
  if (result.exit_code == 127) {
    throw Error(Errc::solver, "failed to launch solver command: " + config.command);
  }

  // First `s` line decides the status; `v` lines carry the model.
  std::istringstream lines(output);
  std::string line;
  bool have_status = false;
  bool claimed_sat = false;
  std::vector<CnfLit> model_lits;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0 && !have_status) {
      have_status = true;
      if (line.find("UNSATISFIABLE") != std::string::npos) {
        claimed_sat = false;
      } else if (line.find("SATISFIABLE") != std::string::npos) {
        claimed_sat = true;
      } else {
        result.status = SatStatus::unknown;
        result.reason = "solver status: " + line;
        return result;
      }
    } else if (line.rfind("v ", 0) == 0) {
      std::istringstream vs(line.substr(2));
      long v;
      while (vs >> v) {
        if (v != 0) model_lits.push_back(static_cast<CnfLit>(v));
      }
    }
  }
  if (!have_status) {
    throw Error(Errc::solver, "solver produced no `s` status line (exit code " +
                                  std::to_string(result.exit_code) + ")");
  }
  if (!claimed_sat) {
    result.status = SatStatus::unsat;
    return result;
  }

  result.model.values.assign(static_cast<std::size_t>(p.num_vars) + 1, 0);
  for (CnfLit l : model_lits) {
    std::size_t var = static_cast<std::size_t>(std::abs(l));
    if (var == 0 || var >= result.model.values.size()) {
      throw Error(Errc::solver, "solver model names variable " + std::to_string(std::abs(l)) +
                                    " outside the problem");
    }
    result.model.values[var] = l > 0 ? 1 : 0;
  }
  result.status = SatStatus::sat;
  return result;
}

}  // namespace

SolverResult run_solver(const DimacsProblem& p, const SolverConfig& config) {
  auto started = std::chrono::steady_clock::now();
  SolverResult result = config.command.empty() ? solve_builtin(p) : solve_external(p, config);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (result.status == SatStatus::sat) {
    // The model is never trusted: it must satisfy clauses and cube.
    DimacsProblem check = p;
    for (CnfLit l : check.cube) check.clauses.clauses.push_back({l});
    check.cube.clear();
    if (!cnf_eval(check.clauses, result.model)) {
      throw Error(Errc::solver, "solver claimed SATISFIABLE but its model fails the formula");
    }
  }
  return result;
}

LitSatResult check_lit_sat(const Aignet& net, Lit lit, const SolverConfig& config) {
  ConeCnf cone = build_cone_cnf(net, lit);
  DimacsProblem p;
  p.num_vars = cone.vars.num_vars();
  p.clauses = cone.cnf;
  p.cube.push_back(cone.root);

  SolverResult solved = run_solver(p, config);
  LitSatResult result;
  switch (solved.status) {
    case SatStatus::unsat:
      result.status = SatStatus::unsat;  // trusted
      return result;
    case SatStatus::unknown:
      result.status = SatStatus::unknown;
      result.reason = solved.reason;
      return result;
    case SatStatus::sat:
      break;
  }

  // Counterexample checking: the model maps back to CI values which must
  // reproduce the satisfied literal on the actual net.
  BitAssignment witness = cnf_env_to_cis(net, cone.vars, solved.model);
  if (eval_lit(net, resolve_co(net, lit), witness) != 1) {
    throw Error(Errc::solver, "solver model inconsistent: assignment does not satisfy the literal");
  }
  result.status = SatStatus::sat;
  result.witness = std::move(witness);
  return result;
}

namespace {

// Rebuilds `src`'s gates on top of `dst` (which already owns the shared
// CIs), returning the literal driving each primary output.
std::vector<Lit> graft_network(Aignet& dst, Strash& strash, const Aignet& src) {
  std::vector<Lit> lit_of(src.num_nodes(), lit_false);
  for (NodeId id = 0; id < src.num_nodes(); ++id) {
    switch (src.kind(id)) {
      case NodeKind::constant:
        lit_of[id] = lit_false;
        break;
      case NodeKind::input:
        lit_of[id] = make_lit(dst.nth_input(src.ci_index(id)), 0);
        break;
      case NodeKind::reg_out:
        lit_of[id] = make_lit(dst.nth_reg(src.ci_index(id)), 0);
        break;
      case NodeKind::and_gate: {
        Lit f0 = src.fanin0(id);
        Lit f1 = src.fanin1(id);
        lit_of[id] = hash_and(dst, strash, lit_negate_cond(lit_of[lit_id(f0)], lit_neg(f0)),
                              lit_negate_cond(lit_of[lit_id(f1)], lit_neg(f1)));
        break;
      }
      case NodeKind::output:
      case NodeKind::reg_in: {
        Lit f = src.fanin0(id);
        lit_of[id] = lit_negate_cond(lit_of[lit_id(f)], lit_neg(f));
        break;
      }
    }
  }
  std::vector<Lit> po_lits(src.num_outputs(), lit_false);
  for (std::uint32_t n = 0; n < src.num_outputs(); ++n) {
    po_lits[n] = lit_of[src.nth_output(n)];
  }
  return po_lits;
}

}  // namespace

std::vector<PoVerdict> check_equiv(const Aignet& a, const Aignet& b, const SolverConfig& config) {
  if (a.num_inputs() != b.num_inputs() || a.num_regs() != b.num_regs() ||
      a.num_outputs() != b.num_outputs()) {
    throw Error(Errc::invalid, "interface mismatch: nets differ in input/register/output counts");
  }

  // One joint net with shared CIs; registers are compared as free inputs.
  Aignet miter;
  Strash strash;
  for (std::uint32_t n = 0; n < a.num_inputs(); ++n) miter.add_input();
  for (std::uint32_t n = 0; n < a.num_regs(); ++n) miter.add_reg();
  std::vector<Lit> pos_a = graft_network(miter, strash, a);
  std::vector<Lit> pos_b = graft_network(miter, strash, b);

  std::vector<PoVerdict> verdicts(a.num_outputs());
  for (std::uint32_t n = 0; n < a.num_outputs(); ++n) {
    Lit diff = hash_xor(miter, strash, pos_a[n], pos_b[n]);
    LitSatResult res = check_lit_sat(miter, diff, config);
    PoVerdict& v = verdicts[n];
    switch (res.status) {
      case SatStatus::unsat:
        v.status = EquivStatus::equivalent;
        break;
      case SatStatus::unknown:
        v.status = EquivStatus::unknown;
        v.reason = res.reason;
        break;
      case SatStatus::sat: {
        // Confirm the disagreement on the original nets.
        Lit fa = resolve_co(a, make_lit(a.nth_output(n), 0));
        Lit fb = resolve_co(b, make_lit(b.nth_output(n), 0));
        if (eval_lit(a, fa, res.witness) == eval_lit(b, fb, res.witness)) {
          throw Error(Errc::solver, "counterexample failed to re-simulate to a disagreement");
        }
        v.status = EquivStatus::counterexample;
        v.witness = std::move(res.witness);
        break;
      }
    }
  }
  return verdicts;
}

std::vector<EquivClass> partition_classes(const Aignet& net, std::vector<NodeId> candidates,
                                          const PartitionOptions& opts) {
  for (NodeId id : candidates) {
    if (id >= net.num_nodes()) {
      throw Error(Errc::out_of_bounds, "candidate id " + std::to_string(id) + " out of bounds");
    }
  }
  if (opts.include_constant &&
      std::find(candidates.begin(), candidates.end(), 0u) == candidates.end()) {
    candidates.insert(candidates.begin(), 0);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Phase 1: group by random-simulation signature, up to complement.
  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<std::uint64_t>> signatures(candidates.size());
  for (std::uint32_t round = 0; round < opts.rounds; ++round) {
    WordAssignment w = random_word_assignment(net, rng);
    std::vector<std::uint64_t> words = sim_words(net, w);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      signatures[i].push_back(words[candidates[i]]);
    }
  }

  struct Member {
    NodeId id;
    std::uint8_t phase;
  };
  std::map<std::vector<std::uint64_t>, std::vector<Member>> groups;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<std::uint64_t> sig =
        opts.rounds == 0 ? std::vector<std::uint64_t>{} : signatures[i];
    // Canonical phase: complemented signatures share a group, since the
    // SAT step handles antiphase equivalence through the XOR for free.
    std::uint8_t phase = opts.rounds > 0 ? static_cast<std::uint8_t>(sig[0] & 1) : 0;
    if (phase) {
      for (auto& wword : sig) wword = ~wword;
    }
    groups[sig].push_back({candidates[i], phase});
  }

  // Phase 2: SAT refinement against each group's representative. A
  // counterexample is one more simulation pattern: it re-splits every
  // group still waiting.
  Aignet scratch = net;  // miters are appended here; CIs keep their ids
  Strash strash;
  struct PendingGroup {
    std::vector<Member> members;
    bool from_split = false;
  };
  std::vector<PendingGroup> pending;
  pending.reserve(groups.size());
  for (auto& [sig, members] : groups) pending.push_back({members, false});

  auto resim_split = [&](const BitAssignment& pattern) {
    std::vector<std::uint8_t> vals = eval_sweep(net, pattern);
    std::vector<PendingGroup> next;
    for (auto& group : pending) {
      PendingGroup zeros{{}, group.from_split};
      PendingGroup ones{{}, group.from_split};
      for (const Member& m : group.members) {
        (static_cast<std::uint8_t>(vals[m.id] ^ m.phase) ? ones : zeros).members.push_back(m);
      }
      if (!zeros.members.empty() && !ones.members.empty()) {
        zeros.from_split = ones.from_split = true;
      }
      if (!zeros.members.empty()) next.push_back(std::move(zeros));
      if (!ones.members.empty()) next.push_back(std::move(ones));
    }
    pending = std::move(next);
  };

  std::vector<EquivClass> classes;
  while (!pending.empty()) {
    PendingGroup group = std::move(pending.back());
    pending.pop_back();
    EquivClass cls;
    cls.representative = group.members[0].id;
    std::uint8_t rep_phase = group.members[0].phase;
    cls.members.push_back(group.members[0].id);
    cls.phases.push_back(0);
    bool any_unknown = false;
    bool refuted = group.from_split;

    for (std::size_t i = 1; i < group.members.size(); ++i) {
      Member m = group.members[i];
      Lit rep_lit = make_lit(cls.representative, rep_phase);
      Lit mem_lit = make_lit(m.id, m.phase);
      Lit diff =
          hash_xor(scratch, strash, resolve_co(scratch, rep_lit), resolve_co(scratch, mem_lit));
      LitSatResult res = check_lit_sat(scratch, diff, opts.solver);
      if (res.status == SatStatus::unsat) {
        cls.members.push_back(m.id);
        cls.phases.push_back(static_cast<std::uint8_t>(m.phase ^ rep_phase));
        continue;
      }
      if (res.status == SatStatus::unknown) {
        cls.members.push_back(m.id);
        cls.phases.push_back(static_cast<std::uint8_t>(m.phase ^ rep_phase));
        any_unknown = true;
        continue;
      }
      // Refuted: confirm the disagreement, then use the pattern to
      // re-split everything still pending, the rest of this group
      // included.
      std::vector<std::uint8_t> vals = eval_sweep(net, res.witness);
      if ((vals[cls.representative] ^ rep_phase) == (vals[m.id] ^ m.phase)) {
        throw Error(Errc::solver, "split witness failed to re-simulate to a disagreement");
      }
      refuted = true;
      PendingGroup rest{{group.members.begin() + static_cast<std::ptrdiff_t>(i),
                         group.members.end()},
                        true};
      pending.push_back(std::move(rest));
      resim_split(res.witness);
      break;
    }

    cls.status = any_unknown  ? ClassStatus::unknown
                 : refuted    ? ClassStatus::refuted_into_split
                              : ClassStatus::proven;
    classes.push_back(std::move(cls));
  }

  std::sort(classes.begin(), classes.end(), [](const EquivClass& x, const EquivClass& y) {
    return x.representative < y.representative;
  });
  return classes;
}

}  // namespace aigkit
