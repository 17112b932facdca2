import pytest

from acceptance_checks import CRITERIA

RESULTS: dict[int, tuple[bool, str]] = {}


def report_line(k, ok, detail):
    return f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    try:
        ok, detail = CRITERIA[k]()
    except Exception as err:  # reported as a failure line, then re-raised
        RESULTS[k] = (False, f"{type(err).__name__}: {err}")
        print(report_line(k, *RESULTS[k]))
        raise
    RESULTS[k] = (ok, detail)
    print(report_line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    import sys

    failed = 0
    for k in sorted(CRITERIA):
        ok, detail = CRITERIA[k]()
        failed += not ok
        print(report_line(k, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
