"""Serializable output records shared by the CLI writers.

JSON numbers are emitted as decimal strings so that large rationals survive
any JSON reader.  The CSV layout is ``p,num,den,sqrtpi_exp,float,method,flags``
with flags joined by ``;``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .exact import ExactValue

CSV_HEADER = ("p", "num", "den", "sqrtpi_exp", "float", "method", "flags")


@dataclass(frozen=True)
class OutputRecord:
    system: str  # "ho" or "hydrogen"
    state: dict
    p: str
    method: str
    exact: ExactValue | None
    float: str
    flags: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        out = {
            "system": self.system,
            "state": {k: str(v) for k, v in self.state.items()},
            "p": str(self.p),
            "method": self.method,
        }
        if self.exact is not None:
            out["exact"] = self.exact.to_fields()
        out["float"] = self.float
        out["flags"] = list(self.flags)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        exact = ExactValue.from_fields(d["exact"]) if "exact" in d else None
        return cls(d["system"], dict(d["state"]), d["p"], d["method"], exact, d["float"], tuple(d["flags"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> list[str]:
        if self.exact is None:
            num = den = exp = ""
        else:
            f = self.exact.to_fields()
            num, den, exp = f["num"], f["den"], f["sqrtpi_exp"]
        return [str(self.p), num, den, exp, self.float, self.method, ";".join(self.flags)]

    def text(self) -> str:
        state = " ".join(f"{k}={v}" for k, v in self.state.items())
        parts = [self.system, state, f"p={self.p}", self.method]
        if self.exact is not None:
            parts.append(f"exact={self.exact}")
        parts.append(f"float={self.float}")
        if self.flags:
            parts.append("[" + ",".join(self.flags) + "]")
        return " ".join(parts)


def format_float(x: float) -> str:
    return repr(float(x))


def render_json(records) -> str:
    return "[" + ",\n".join(r.to_json() for r in records) + "]\n"


def parse_json(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_dict(d) for d in json.loads(text)]


def render_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def parse_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def render_text(records) -> str:
    return "".join(r.text() + "\n" for r in records)


def render(records, fmt: str) -> str:
    records = list(records)
    if fmt == "json":
        return render_json(records)
    if fmt == "csv":
        return render_csv(records)
    if fmt == "text":
        return render_text(records)
    raise ValueError(f"unknown format {fmt!r}")
