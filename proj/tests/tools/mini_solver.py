#!/usr/bin/env python3
"""Small DIMACS solver used to exercise the external-solver path.

Brute force with unit propagation; prints competition-style output.
"""
import sys


def main():
    path = sys.argv[1]
    num_vars = 0
    clauses = []
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("p"):
                parts = line.split()
                num_vars = int(parts[2])
                continue
            lits = [int(tok) for tok in line.split()]
            assert lits[-1] == 0
            clauses.append(lits[:-1])

    assign = {}

    def value(lit):
        v = assign.get(abs(lit))
        if v is None:
            return None
        return v if lit > 0 else not v

    def propagate():
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                unassigned = []
                satisfied = False
                for lit in clause:
                    v = value(lit)
                    if v is True:
                        satisfied = True
                        break
                    if v is None:
                        unassigned.append(lit)
                if satisfied:
                    continue
                if not unassigned:
                    return False
                if len(unassigned) == 1:
                    lit = unassigned[0]
                    assign[abs(lit)] = lit > 0
                    changed = True
        return True

    def solve(var):
        saved = dict(assign)
        if not propagate():
            assign.clear()
            assign.update(saved)
            return False
        while var <= num_vars and var in assign:
            var += 1
        if var > num_vars:
            return True
        for choice in (False, True):
            snapshot = dict(assign)
            assign[var] = choice
            if solve(var + 1):
                return True
            assign.clear()
            assign.update(snapshot)
        assign.clear()
        assign.update(saved)
        return False

    if solve(1):
        print("s SATISFIABLE")
        model = []
        for v in range(1, num_vars + 1):
            val = assign.get(v, False)
            model.append(v if val else -v)
        line = []
        for lit in model:
            line.append(str(lit))
            if len(line) >= 16:
                print("v " + " ".join(line))
                line = []
        line.append("0")
        print("v " + " ".join(line))
        sys.exit(10)
    else:
        print("s UNSATISFIABLE")
        sys.exit(20)


if __name__ == "__main__":
    main()
