#!/usr/bin/env python3
"""Run the randomized property suite and print its verdict.

Every case derives its generator from (seed, property, case index):
rerunning with the same seed reproduces the report byte for byte.
Failures, if any, are recorded with their full inputs so they can be
replayed directly against the engines.
"""

import sys

from hardyhilbert import SuiteConfig, run_suite

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
report = run_suite(SuiteConfig(seed=seed))

print("=" * 70)
print(f"  PROPERTY SUITE  (seed = {seed})")
print("=" * 70)
print(f"{'property':<28} {'cases':>6} {'failures':>9} {'worst margin':>14}")
for prop in report.properties:
    print(f"{prop.name:<28} {prop.cases:>6} {prop.failures:>9} {prop.worst_margin:>14.3e}")
print("-" * 70)
print(f"overall: {'PASS' if report.passed else 'FAIL'}   "
      f"(fingerprint: {report.fingerprint})")

rerun = run_suite(SuiteConfig(seed=seed))
print(f"deterministic rerun identical: {rerun.to_json() == report.to_json()}")
sys.exit(0 if report.passed else 1)
