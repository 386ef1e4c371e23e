"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python tests/test_acceptance.py``.
"""
import pytest

from eqschubert.verify import run_suite

CRITERIA = [
    (1, "worked examples are exact", ["examples"], None),
    (2, "classical part of the Pieri rule equals localization, n+1 <= 5", ["classical"], 4),
    (3, "p = 1 Pieri equals the Chevalley + lift divisor product, n+1 <= 5", ["divisor"], 4),
    (4, "partial-flag coefficients equal full-flag ones at the lifted index", ["crosspath"], 4),
    (5, "special-class operators commute on Gr(m, n+1), n+1 <= 7", ["commute"], 6),
    (6, "Giambelli, ring relations, products on Gr(m, n+1), n+1 <= 6", ["giambelli"], 5),
    (7, "coefficients are non-negative and homogeneous of the right degree", ["positivity"], 4),
    (8, "filtration bounds and quantum-to-classical vanishing", ["filtration"], 4),
    (9, "definition equivalences", ["equivalences"], 4),
]

RESULTS = {}


def evaluate(number):
    _num, title, suites, max_n = CRITERIA[number - 1]
    runs = [run_suite(name, max_n=max_n) for name in suites]
    ok = all(r.ok for r in runs)
    detail = "; ".join(
        f"{r.name} {r.checked} checks {len(r.failures)} failures {r.seconds:.1f}s"
        + (f" [{', '.join(r.notes)}]" if r.notes else "")
        for r in runs)
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    RESULTS[number] = line
    return ok, line, runs


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number):
    ok, line, runs = evaluate(number)
    print(line)
    failures = [f for r in runs for f in r.failures[:5]]
    assert ok, line + "\n" + "\n".join(failures)


if __name__ == "__main__":
    for number, *_ in CRITERIA:
        print(evaluate(number)[1], flush=True)
