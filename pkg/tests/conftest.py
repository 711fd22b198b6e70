import pytest

from qschroeder import bijections


def swapped_case2_forward(w, blk):
    """Case-2 forward rule with the r == 0 and r >= 1 branches exchanged."""
    if blk.r == 0:
        return bijections._splice(w, blk, "D" * (blk.r - 1) + "E" + "D" * (blk.s + 1))
    return bijections._splice(w, blk, "D" * blk.s + "E")


@pytest.fixture
def broken_phi(monkeypatch):
    monkeypatch.setattr(bijections, "_case2_forward", swapped_case2_forward)


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        passed, desc = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {num}. {desc}")
