"""Structured pass/fail verdicts with counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one law (or one bundle of laws).

    Witnesses are flat string-to-string dicts; multi-law validators tag each
    witness with a `law` key so a single report can localise every violation.
    """

    law: str
    verdict: str
    witnesses: tuple[dict, ...] = ()
    notes: str = ""

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, INAPPLICABLE):
            raise ValueError(f"bad verdict: {self.verdict}")
        if self.verdict == FAIL and not self.witnesses:
            raise ValueError("failing report must carry witnesses")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def failed_laws(self) -> set:
        """Distinct law ids named by the witnesses (falls back to self.law)."""
        if not self.failed:
            return set()
        return {w.get("law", self.law) for w in self.witnesses}

    def summary(self) -> str:
        head = f"{self.law}: {self.verdict}"
        if self.failed:
            head += f" ({len(self.witnesses)} witness{'es' if len(self.witnesses) != 1 else ''})"
        if self.notes:
            head += f" [{self.notes}]"
        return head


def passing(law: str, notes: str = "") -> VerificationReport:
    return VerificationReport(law, PASS, (), notes)


def failing(law: str, witnesses, notes: str = "") -> VerificationReport:
    return VerificationReport(law, FAIL, tuple(witnesses), notes)


def inapplicable(law: str, notes: str) -> VerificationReport:
    return VerificationReport(law, INAPPLICABLE, (), notes)


def from_witnesses(law: str, witnesses, notes: str = "") -> VerificationReport:
    """Pass iff the witness list is empty, sorted deterministically."""
    ws = sorted(witnesses, key=lambda w: sorted(w.items()))
    if ws:
        return VerificationReport(law, FAIL, tuple(ws), notes)
    return VerificationReport(law, PASS, (), notes)


def merge(law: str, reports, notes: str = "") -> VerificationReport:
    """Combine sub-reports: fail dominates, then inapplicable, else pass."""
    reports = list(reports)
    witnesses = []
    for r in reports:
        if r.failed:
            witnesses.extend(dict(w, law=w.get("law", r.law)) for w in r.witnesses)
    if witnesses:
        return from_witnesses(law, witnesses, notes)
    pending = [r for r in reports if r.verdict == INAPPLICABLE]
    if pending:
        why = "; ".join(r.notes or r.law for r in pending)
        return inapplicable(law, why)
    return passing(law, notes)
