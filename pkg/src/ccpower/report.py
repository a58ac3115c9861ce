"""Rendering index reports as text tables, CSV, or JSON.

All numeric cells come from exact rationals; decimals are produced by
:func:`decimal_string` with round-half-even at a configurable precision
(default 9 places), so output is deterministic byte-for-byte.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .indices import IndexReport

DEFAULT_PRECISION = 9


def decimal_string(value: Fraction | int, places: int) -> str:
    """Fixed-point decimal with ``places`` digits, rounding half to even."""
    if places < 0:
        raise ValueError("places must be >= 0")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    num = abs(value.numerator) * 10**places
    den = value.denominator
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    digits = str(q)
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def fraction_string(value: Fraction) -> str:
    """``num/den`` (or a bare integer when the denominator is 1)."""
    return str(value)


@dataclass(frozen=True)
class RenderedRow:
    position: int  # 1-based row number, matching file player numbering
    label: str
    weight: int
    blocks: str  # 1-based block indices, comma-joined
    beta: str | None
    phi: str | None


@dataclass(frozen=True)
class RenderedReport:
    """String-valued rows plus the column headers used for the value columns."""

    beta_header: str
    phi_header: str
    rows: tuple[RenderedRow, ...]

    def as_table(self) -> str:
        headers = ["player", "label", "weight", "blocks"]
        if any(r.beta is not None for r in self.rows):
            headers.append(self.beta_header)
        if any(r.phi is not None for r in self.rows):
            headers.append(self.phi_header)
        table_rows = []
        for r in self.rows:
            cells = [str(r.position), r.label, str(r.weight), r.blocks]
            if r.beta is not None:
                cells.append(r.beta)
            if r.phi is not None:
                cells.append(r.phi)
            table_rows.append(cells)
        widths = [
            max(len(h), *(len(row[col]) for row in table_rows))
            for col, h in enumerate(headers)
        ]
        lines = [
            "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
            "  ".join("-" * w for w in widths),
        ]
        for row in table_rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"

    def as_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        headers = ["player", "label", "weight"]
        with_beta = any(r.beta is not None for r in self.rows)
        with_phi = any(r.phi is not None for r in self.rows)
        if with_beta:
            headers.append(self.beta_header)
        if with_phi:
            headers.append(self.phi_header)
        writer.writerow(headers)
        for r in self.rows:
            row = [r.position, r.label, r.weight]
            if with_beta:
                row.append(r.beta)
            if with_phi:
                row.append(r.phi)
            writer.writerow(row)
        return buf.getvalue()

    def as_json(self) -> str:
        players = []
        for r in self.rows:
            entry: dict = {
                "player": r.position,
                "label": r.label,
                "weight": r.weight,
                "blocks": [int(b) for b in r.blocks.split(",")],
            }
            if r.beta is not None:
                entry[self.beta_header] = r.beta
            if r.phi is not None:
                entry[self.phi_header] = r.phi
            players.append(entry)
        return json.dumps({"players": players}, indent=2) + "\n"


def render_report(
    report: IndexReport,
    precision: int = DEFAULT_PRECISION,
    exact: bool = False,
    beta_header: str = "beta",
    phi_header: str = "phi",
) -> RenderedReport:
    fmt = fraction_string if exact else (lambda v: decimal_string(v, precision))
    rows = []
    for p in report.rows:
        rows.append(
            RenderedRow(
                position=p.player + 1,
                label=p.label,
                weight=p.weight,
                blocks=",".join(str(k + 1) for k in p.blocks),
                beta=None if p.beta is None else fmt(p.beta),
                phi=None if p.phi is None else fmt(p.phi),
            )
        )
    return RenderedReport(
        beta_header=beta_header, phi_header=phi_header, rows=tuple(rows)
    )
