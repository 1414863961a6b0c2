"""Run every verification suite at a small size and print the summaries."""
import sys

from hic.verify import SUITES, SuiteConfig, run_suite

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 40
for name in sorted(SUITES):
    report = run_suite(SuiteConfig(name, trials=trials))
    print(f"{report.summary():<90} {report.wall_clock:6.2f}s")
    if report.notes:
        print("    notes:", report.notes)
