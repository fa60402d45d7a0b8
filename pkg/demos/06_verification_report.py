"""Running the verification suite programmatically and on a custom cubic.

Builds a custom symmetric coefficient table, writes it in the text format
the loader understands, runs the full identity suite on it and on the
built-in presets, and saves a machine-readable report.
"""
import pathlib
import tempfile

import numpy as np

from jetfinsler import VerifyConfig, report_to_json, run_suite

workdir = pathlib.Path(tempfile.mkdtemp(prefix="jetfinsler_demo_"))

# --- a custom cubic: one line per independent entry "p q r value" ---------
rng = np.random.default_rng(2024)
table_path = workdir / "random.cubic"
lines = [f"{p} {q} {r} {rng.uniform(-1, 1):.6f}"
         for p in range(1, 5) for q in range(p, 5) for r in range(q, 5)]
table_path.write_text("\n".join(lines) + "\n")
print("custom table written to", table_path)

for spec, samples in (("chernov", 40), ("f2", 40), (f"custom:{table_path}", 10)):
    report = run_suite(VerifyConfig(metric_spec=spec, h_spec="exp:1.0",
                                    samples=samples, seed=42))
    worst = max(report.checks, key=lambda c: c.max_residual / c.tolerance)
    print(f"{spec.split(':')[0]:>8}: {len(report.checks)} checks, "
          f"overall {'PASS' if report.overall_pass else 'FAIL'}; "
          f"tightest margin {worst.name} at {worst.max_residual:.2e} "
          f"(tol {worst.tolerance:.0e})")

# --- full report for downstream tooling -----------------------------------
report = run_suite(VerifyConfig(samples=40, seed=42))
out = workdir / "report.json"
out.write_text(report_to_json(report))
print("\nJSON report written to", out)

# forcing an unreachable tolerance flips the overall flag
forced = run_suite(VerifyConfig(samples=10, seed=42,
                                tol={"metric-fd-oracle": 1e-20}))
print("with metric-fd-oracle tolerance 1e-20 the suite reports:",
      "PASS" if forced.overall_pass else "FAIL")
