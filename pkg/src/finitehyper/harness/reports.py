"""Report records and their serializations (json, csv, markdown)."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..exact import ResidueClass
from ..ozgen import ZetaPolynomial
from ..series import TruncatedSeries

# Log-gamma differences at N ~ 10^4 carry ~1e-11 relative rounding; errors
# below this floor are indistinguishable from zero when checking monotonicity.
NOISE_FLOOR = 1e-9

JSON_KEYS = ("identity", "params", "n", "lhs", "rhs", "equal", "seed", "rejected", "ms")


def render_value(v) -> str:
    """Exact text for a side value; series are reduced to a digest of their canonical form."""
    if isinstance(v, TruncatedSeries):
        return "series:" + hashlib.sha256(v.render().encode()).hexdigest()[:16]
    if isinstance(v, (Fraction, int)):
        return str(v)
    if isinstance(v, ResidueClass):
        return f"{v.value} mod {v.modulus}"
    if isinstance(v, ZetaPolynomial):
        return v.render()
    if isinstance(v, (tuple, list)):
        return "; ".join(render_value(x) for x in v)
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


@dataclass
class VerificationReport:
    identity: str
    params: dict[str, str]
    n: int | None
    lhs: str
    rhs: str
    equal: bool
    seed: int
    rejected: int = 0
    ms: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "seed": self.seed,
            "rejected": self.rejected,
            "ms": round(self.ms, 3) if timing and self.ms is not None else None,
        }

    @property
    def passed(self) -> bool:
        return self.equal


@dataclass
class LimitReport:
    limit: str
    params: dict[str, str]
    points: list[tuple[int, float, float]]
    limit_value: float
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        errors = [e for _, _, e in self.points]
        floor = NOISE_FLOOR * max(1.0, abs(self.limit_value))
        tail = [0.0 if e <= floor else e for e in errors[-3:]]
        monotone = all(b <= a for a, b in zip(tail, tail[1:]))
        self.passed = bool(errors) and errors[-1] <= self.tol and monotone

    @property
    def final_error(self) -> float:
        return self.points[-1][2]

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "limit": self.limit,
            "params": dict(self.params),
            "limit_value": self.limit_value,
            "points": [{"n": n, "value": v, "error": e} for n, v, e in self.points],
            "tol": self.tol,
            "pass": self.passed,
        }


def _passed(r) -> bool:
    return r.passed


def emit_report(reports: Sequence, fmt: str = "json", timing: bool = False) -> bytes:
    """Serialize reports; output bytes depend only on report contents."""
    if fmt == "json":
        text = json.dumps([r.to_dict(timing) for r in reports], indent=1, sort_keys=False)
        return (text + "\n").encode() if reports else b"[]"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "identity", "params", "n", "lhs", "rhs", "equal", "seed", "rejected", "ms"])
        for r in reports:
            d = r.to_dict(timing)
            params = ";".join(f"{k}={v}" for k, v in d["params"].items())
            if isinstance(r, LimitReport):
                last = d["points"][-1] if d["points"] else {"n": "", "value": "", "error": ""}
                writer.writerow(["limit", d["limit"], params, last["n"], last["value"],
                                 d["limit_value"], d["pass"], "", "", ""])
            else:
                writer.writerow(["identity", d["identity"], params, d["n"], d["lhs"], d["rhs"],
                                 d["equal"], d["seed"], d["rejected"], "" if d["ms"] is None else d["ms"]])
        return buf.getvalue().encode()
    if fmt in ("md", "markdown"):
        lines = ["| identity | params | N | lhs | rhs | equal | rejected |",
                 "|---|---|---|---|---|---|---|"]
        for r in reports:
            d = r.to_dict(timing)
            params = ", ".join(f"{k}={v}" for k, v in d["params"].items())
            if isinstance(r, LimitReport):
                last = d["points"][-1] if d["points"] else {"n": "", "value": "", "error": ""}
                lines.append(f"| {d['limit']} | {params} | {last['n']} | {last['value']:.6g} | "
                             f"{d['limit_value']:.6g} | {d['pass']} | |")
            else:
                lines.append(f"| {d['identity']} | {params} | {d['n']} | {d['lhs']} | {d['rhs']} | "
                             f"{d['equal']} | {d['rejected']} |")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def all_passed(reports: Iterable) -> bool:
    return all(_passed(r) for r in reports)
