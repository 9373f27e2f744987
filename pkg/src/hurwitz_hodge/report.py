"""Check records shared by the verification suites."""

from __future__ import annotations

from typing import NamedTuple


class Check(NamedTuple):
    """One verified fact: expected vs actual, both exact strings."""

    suite: str
    key: str
    expected: str
    actual: str
    status: str  # "pass" or "fail"

    def line(self) -> str:
        return f"{self.suite} {self.key} {self.expected} {self.actual} {self.status}"


def make_check(suite: str, key: str, expected, actual) -> Check:
    ok = expected == actual
    return Check(suite, key, str(expected), str(actual), "pass" if ok else "fail")


def all_pass(checks) -> bool:
    return all(c.status == "pass" for c in checks)
