"""
Brute-force verification sweeps over every n <= n_max, n <= l <= 2n and all
six step orders.

Each cell produces Check records; a VerificationReport collects them in
canonical cell order (n, then l, then order, then check name).
"""
from __future__ import annotations

import dataclasses
import json
from collections import Counter
from typing import Any, Iterator

from . import bijections, closedform
from .paths import bad_words, delannoy_words, schroeder_words
from .qpoly import QPoly
from .stats import ALL_ORDERS, StepOrder, maj, maj_polynomial

SCOPES = ("theorem", "lemma", "bijection", "all")


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    params: dict[str, Any]
    passed: bool
    expected: QPoly | None = None
    actual: QPoly | None = None
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "expected": None if self.expected is None else self.expected.to_json(),
            "actual": None if self.actual is None else self.actual.to_json(),
            "detail": self.detail,
        }


@dataclasses.dataclass
class VerificationReport:
    n_max: int
    scope: str
    checks: list[Check] = dataclasses.field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, int]:
        return {
            "total": len(self.checks),
            "passed": len(self.checks) - len(self.failures),
            "failed": len(self.failures),
        }

    def to_json(self) -> str:
        data = {
            "scope": {
                "n_max": self.n_max,
                "l_range": "n <= l <= 2n",
                "orders": [str(o) for o in ALL_ORDERS],
                "checks": self.scope,
            },
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary(),
        }
        return json.dumps(data, indent=2)

    def to_text(self) -> str:
        lines = [f"verify n_max={self.n_max} scope={self.scope}"]
        by_name = Counter(c.name for c in self.checks)
        failed = Counter(c.name for c in self.failures)
        for name in sorted(by_name):
            lines.append(f"  {name}: {by_name[name] - failed[name]}/{by_name[name]} passed")
        for c in self.failures:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            msg = c.detail or f"expected {c.expected}, got {c.actual}"
            lines.append(f"  FAIL {c.name} {params}: {msg}")
        s = self.summary()
        lines.append(f"{s['passed']} passed, {s['failed']} failed")
        return "\n".join(lines)


def _poly_check(name, params, expected: QPoly, actual: QPoly) -> Check:
    return Check(name, params, expected == actual, expected, actual)


def check_theorem(n: int, l: int, order: StepOrder) -> Check:
    brute = maj_polynomial(schroeder_words(n, l), order)
    return _poly_check(
        "msch", _params(n, l, order), closedform.msch_closed(n, l, order), brute
    )


def check_macmahon(m: int, n: int, l: int, order: StepOrder) -> Check:
    brute = maj_polynomial(delannoy_words(m, n, l), order)
    params = {"m": m, "n": n, "l": l, "order": str(order)}
    return _poly_check("mdel", params, closedform.mdel_closed(m, n, l), brute)


def check_lemma(n: int, l: int, order: StepOrder) -> Check:
    brute = maj_polynomial(bad_words(n, l), order)
    return _poly_check(
        "mbdel", _params(n, l, order), closedform.mbdel_closed(n, l, order), brute
    )


def check_bijection(n: int, l: int, order: StepOrder) -> Check:
    """phi is injective onto Del(n+1,n-1,l), inverted by phi_inverse, and shifts maj."""
    params = _params(n, l, order)
    shift = 1 if order.e_below_n else 0
    target = set(delannoy_words(n + 1, n - 1, l))
    seen: set[str] = set()
    for w in bad_words(n, l):
        try:
            v = bijections.phi(w, order)
            back = bijections.phi_inverse(v, order)
        except ValueError as exc:
            return Check("phi", params, False, detail=f"{w}: {exc}")
        if v not in target:
            return Check("phi", params, False, detail=f"phi({w})={v} not in Del(n+1,n-1,l)")
        if v in seen:
            return Check("phi", params, False, detail=f"phi not injective at {v}")
        seen.add(v)
        if back != w:
            return Check("phi", params, False, detail=f"phi_inverse(phi({w}))={back}")
        if maj(w, order) - maj(v, order) != shift:
            return Check(
                "phi", params, False,
                detail=f"maj({w})={maj(w, order)}, maj({v})={maj(v, order)}",
            )
    if len(seen) != len(target):
        return Check(
            "phi", params, False,
            detail=f"image has {len(seen)} words, Del(n+1,n-1,l) has {len(target)}",
        )
    return Check("phi", params, True, detail=f"{len(seen)} words")


def _params(n: int, l: int, order: StepOrder) -> dict[str, Any]:
    return {"n": n, "l": l, "order": str(order)}


def cells(n_max: int) -> Iterator[tuple[int, int, StepOrder]]:
    for n in range(n_max + 1):
        for l in range(n, 2 * n + 1):
            for order in ALL_ORDERS:
                yield n, l, order


def run_verification(n_max: int = 7, scope: str = "all") -> VerificationReport:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    report = VerificationReport(n_max, scope)
    for n, l, order in cells(n_max):
        if scope in ("theorem", "all"):
            report.checks.append(check_theorem(n, l, order))
            report.checks.append(check_macmahon(n, n, l, order))
        if scope in ("lemma", "all"):
            report.checks.append(check_lemma(n, l, order))
            if n >= 1:
                report.checks.append(check_macmahon(n + 1, n - 1, l, order))
        if scope in ("bijection", "all"):
            report.checks.append(check_bijection(n, l, order))
    return report
