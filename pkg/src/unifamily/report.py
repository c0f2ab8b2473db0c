"""Verification reports returned by every ``verify_*`` function."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exactnum import Cyclotomic

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


def cyclo_to_dict(z):
    """Canonical serial form; rational values are always reported at order 1."""
    if z.is_rational():
        return {"order": 1, "coeffs": [str(z.to_rational())]}
    return {"order": z.order, "coeffs": [str(c) for c in z.coeffs]}


def _plain(value):
    if isinstance(value, Cyclotomic):
        return cyclo_to_dict(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)


@dataclass
class Instance:
    n: int
    lhs: Any
    rhs: Any
    ok: bool
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        out = {"n": self.n, "lhs": _plain(self.lhs), "rhs": _plain(self.rhs), "ok": self.ok}
        for key in sorted(self.extra):
            out[key] = _plain(self.extra[key])
        return out


@dataclass
class VerificationReport:
    """Outcome of checking one identity at one parameter point.

    ``status`` is ``"pass"`` when every instance holds, ``"fail"`` as soon as
    one does not, and ``"skipped"`` when a precondition ruled the point out
    (``notes`` then says why).
    """

    identity: str
    params: dict
    instances: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    skipped: bool = False

    def add(self, n, lhs, rhs, ok=None, **extra):
        if ok is None:
            ok = lhs == rhs
        self.instances.append(Instance(n, lhs, rhs, bool(ok), extra))
        return ok

    @property
    def status(self):
        if self.skipped:
            return SKIPPED
        return PASS if all(i.ok for i in self.instances) else FAIL

    @property
    def passed(self):
        return self.status == PASS

    @property
    def first_failure(self):
        for inst in self.instances:
            if not inst.ok:
                return inst
        return None

    @classmethod
    def skip(cls, identity, params, reason):
        return cls(identity, params, notes=[reason], skipped=True)

    def to_dict(self, include_instances=True):
        ff = self.first_failure
        out = {
            "identity": self.identity,
            "status": self.status,
            "params": _plain(self.params),
            "first_failure": ff.to_dict() if ff else None,
            "checked": len(self.instances),
            "notes": list(self.notes),
        }
        if include_instances:
            out["instances"] = [i.to_dict() for i in self.instances]
        return out

    def __str__(self):
        head = f"{self.identity} [{self.status}] {self.params}"
        ff = self.first_failure
        if ff is not None:
            head += f" first failure at n={ff.n}: {ff.lhs} != {ff.rhs}"
        return head
