"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run directly with ``python tests/test_acceptance.py`` for just the summary.
"""

import time

import pytest

from natops import verify as V

CRITERIA = {
    1: ("sign identity, q <= 6", lambda: [V.sign_identity(6)]),
    2: ("crossed group relations for S, n <= 4", V.suite_crossed),
    3: ("d^2 = 0, Leibniz, unique sign convention", V.suite_convention),
    4: ("models acyclic, direct = splitting, q <= 3", V.suite_p22),
    5: ("splitting rank identity, q <= 3, n <= 6", V.suite_l1),
    6: ("free crossed functor preserves total homology; m o N(iota) = id",
        lambda: V.suite_t2(seed=0) + V.miraculous_checks()),
    7: ("genericity and the worked example", V.suite_l9),
    8: ("interval category spans the one-vertex trees", V.suite_span),
    9: ("rows acyclic, H^0 of B(1) has rank 1", V.suite_rows),
    10: ("Br-hat(2), Br-hat(3) homology and Bhat(0) acyclic", V.suite_homotopy),
}


def run_criterion(number):
    title, fn = CRITERIA[number]
    start = time.perf_counter()
    checks = fn()
    elapsed = time.perf_counter() - start
    ok = all(c.passed for c in checks)
    failed = [c.name for c in checks if not c.passed]
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'} ({elapsed:6.1f}s) {title}"
    if failed:
        line += "  failed: " + "; ".join(failed)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = run_criterion(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
