"""Walk the full verification registry and show what each check reports.

Run from the repository root:

    python3 demos/demo_verify_registry.py
"""

import time

from charmod.anomaly import REGISTRY_IDS, run_registry


def main():
    print("running %d registry checks at q-order 6 ..." % len(REGISTRY_IDS))
    started = time.perf_counter()
    reports = run_registry(order=6)
    elapsed = time.perf_counter() - started

    for report in reports:
        print("%-16s %-4s %7.1f ms" % (report.id, report.status, report.millis))
        if report.witness:
            print("    witness: %s" % report.witness)
        for note in report.findings:
            print("    finding: %s" % note)
        for note in report.assumptions:
            print("    assumes: %s" % note)
        for key, value in report.data.items():
            print("    %s = %s" % (key, value))

    passed = sum(1 for r in reports if r.passed)
    print("\n%d/%d pass in %.2f s" % (passed, len(reports), elapsed))


if __name__ == "__main__":
    main()
