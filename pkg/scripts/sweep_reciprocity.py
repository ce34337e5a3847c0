#!/usr/bin/env python3
"""Time the reciprocity sweep over odd coprime a < b <= N and p <= P.

Usage: python scripts/sweep_reciprocity.py [N] [P] [workers]
"""
import sys
import time

from quasidedekind.verify import SweepConfig, run_verification

N = int(sys.argv[1]) if len(sys.argv) > 1 else 51
P = int(sys.argv[2]) if len(sys.argv) > 2 else 10
WORKERS = int(sys.argv[3]) if len(sys.argv) > 3 else 1

cfg = SweepConfig(p_max=P, a_max=N, parallelism=WORKERS)
t0 = time.perf_counter()
reports = run_verification(["theorem-1", "theorem-2", "pf-def-1"], cfg)
elapsed = time.perf_counter() - t0
for r in reports:
    print(f"{r.identity:>10}: {r.instances:6d} instances, {len(r.failures)} failures")
print(f"N={N} P={P} workers={WORKERS}: {elapsed:.2f}s")
