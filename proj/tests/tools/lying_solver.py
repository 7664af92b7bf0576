#!/usr/bin/env python3
"""Claims SATISFIABLE with an all-false model regardless of the input."""
import sys

with open(sys.argv[1]) as f:
    num_vars = 0
    for line in f:
        if line.startswith("p"):
            num_vars = int(line.split()[2])
            break
print("s SATISFIABLE")
print("v " + " ".join(str(-v) for v in range(1, num_vars + 1)) + " 0")
sys.exit(10)
