from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .qlinalg import frac_str


@dataclass(frozen=True)
class Failure:
    """One violated identity: which clause, at which basis indices, by how much."""

    clause: str
    indices: tuple = ()
    residual: np.ndarray | None = None

    def to_json(self) -> dict:
        out = {"clause": self.clause, "indices": [i + 1 for i in self.indices]}
        if self.residual is not None:
            out["residual"] = _jsonable(self.residual)
        return out

    def __str__(self) -> str:
        idx = ",".join(str(i + 1) for i in self.indices)
        res = "" if self.residual is None else f" residual={_jsonable(self.residual)}"
        return f"{self.clause} fails at ({idx}){res}"


@dataclass(frozen=True)
class Check:
    """Outcome of a verification.  Truthy iff nothing failed."""

    name: str
    failures: tuple[Failure, ...] = ()
    passed: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    @property
    def first(self) -> Failure | None:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "ok": self.ok,
            "passed": list(self.passed),
            "failures": [f.to_json() for f in self.failures],
        }

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: ok" + (f" ({', '.join(self.passed)})" if self.passed else "")
        lines = [f"{self.name}: FAILED"]
        lines += [f"  {f}" for f in self.failures]
        return "\n".join(lines)


def _jsonable(a):
    a = np.asarray(a, dtype=object)
    if a.ndim == 0:
        return frac_str(a.item())
    return [_jsonable(x) for x in a]
