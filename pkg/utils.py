#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Rendering helpers for the command line: text lines, JSON records, SVG
"""

import json
import logging
from typing import Any, Dict, List, Optional

from arch import ArchFactorization, coarch_cuts
from measures import MeasureReport
from periodic import PeriodData, PowerReport
from side_distance import LVector, LTable, RTable, RVector
from words import Word

logger = logging.getLogger(__name__)

EMPTY_WORD = "ε"


def word_text(word: Word) -> str:
    return word.text if word else EMPTY_WORD


def render_json(record: Dict[str, Any]) -> str:
    """One compact JSON object; key order is the record's insertion order"""
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)


def base_record(word: Word) -> Dict[str, Any]:
    return {"word": word.text, "alphabet": word.alphabet.text}


def format_witness_h(report: MeasureReport) -> str:
    if report.witness_h is None:
        return "-"
    i, a = report.witness_h
    return f"({i},{report.word.alphabet.letters[a]})"


def format_measure(report: MeasureReport) -> str:
    """word=... h=... rho=... with the witnesses attaining them"""
    rho_witness = "-" if report.witness_rho is None else str(report.witness_rho)
    return (
        f"word={word_text(report.word)} h={report.h} rho={report.rho} "
        f"h_witness={format_witness_h(report)} rho_witness={rho_witness}"
    )


def measure_record(report: MeasureReport) -> Dict[str, Any]:
    record = base_record(report.word)
    record["h"] = report.h
    record["rho"] = report.rho
    if report.witness_h is not None:
        i, a = report.witness_h
        record["h_witness"] = [i, report.word.alphabet.letters[a]]
    else:
        record["h_witness"] = None
    record["rho_witness"] = report.witness_rho
    return record


def format_side_table(table, name: str) -> List[str]:
    """One line per letter: name(i,a) followed by the column for i in Cuts(u)"""
    letters = table.word.alphabet.letters
    lines = []
    for a, letter in enumerate(letters):
        values = " ".join(str(v) for v in table.column(a))
        lines.append(f"{name}(i,{letter}): {values}")
    return lines


def table_record(rtable: RTable, ltable: LTable) -> Dict[str, Any]:
    letters = rtable.word.alphabet.letters
    record = base_record(rtable.word)
    record["rtable"] = {letter: rtable.column(a) for a, letter in enumerate(letters)}
    record["ltable"] = {letter: ltable.column(a) for a, letter in enumerate(letters)}
    return record


def format_vectors(rvector: RVector, lvector: LVector) -> List[str]:
    return [
        "r-vector: " + " ".join(str(v) for v in rvector.entries),
        "l-vector: " + " ".join(str(v) for v in lvector.entries),
    ]


def vector_record(rvector: RVector, lvector: LVector) -> Dict[str, Any]:
    record = base_record(rvector.word)
    record["rvector"] = list(rvector.entries)
    record["lvector"] = list(lvector.entries)
    return record


def format_factorization(factorization: ArchFactorization) -> List[str]:
    """Arches each followed by '.', then the rest (ε when empty)"""
    line = "".join(f"{arch.text}." for arch in factorization.arches())
    line += word_text(factorization.rest)
    fully = "yes" if factorization.is_fully_arched() else "no"
    return [line, f"arches={factorization.arch_count} fully_arched={fully}"]


def factorization_record(factorization: ArchFactorization) -> Dict[str, Any]:
    record = base_record(factorization.word)
    record["cuts"] = list(factorization.cuts)
    record["rest"] = factorization.rest.text
    record["arches"] = [arch.text for arch in factorization.arches()]
    return record


def format_period(word: Word, data: PeriodData) -> str:
    slope = data.slope
    return (
        f"word={word.text} L={data.L} K={data.K} T={data.T} p={data.p} "
        f"span={data.span} delta={data.delta} slope={slope.numerator}/{slope.denominator}"
    )


def period_record(word: Word, data: PeriodData) -> Dict[str, Any]:
    record = base_record(word)
    record["K"] = data.K
    record["T"] = data.T
    record["p"] = data.p
    record["span"] = data.span
    record["delta"] = data.delta
    record["slope_num"] = data.slope.numerator
    record["slope_den"] = data.slope.denominator
    return record


def format_power(report: PowerReport, direct: Optional[MeasureReport] = None) -> str:
    line = f"word={report.word.text} n={report.n} h={report.h} rho={report.rho} n0={report.n0} jumps={report.jumps}"
    if direct is not None:
        line += f" h_direct={direct.h} rho_direct={direct.rho}"
    return line


def power_record(report: PowerReport, direct: Optional[MeasureReport] = None) -> Dict[str, Any]:
    record = base_record(report.word)
    record["h"] = report.h
    record["rho"] = report.rho
    if report.period is not None:
        record["p"] = report.period.p
        record["delta"] = report.period.delta
    record["n"] = report.n
    record["n0"] = report.n0
    record["jumps"] = report.jumps
    if direct is not None:
        record["h_direct"] = direct.h
        record["rho_direct"] = direct.rho
    return record


def render_arch_svg(factorization: ArchFactorization, cell: int = 20) -> str:
    """Static SVG: the letters, α arcs over the arch cuts, β arcs under the co-arch cuts"""
    word = factorization.word
    n = len(word)
    margin = cell
    width = (n + 2) * cell
    height = 6 * cell
    baseline = 3 * cell

    def x(cut: int) -> int:
        return margin + cut * cell

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="{x(0)}" y="{baseline - cell // 2}" width="{n * cell}" height="{cell}" '
        f'fill="none" stroke="black"/>',
    ]
    for position, letter in enumerate(word.text):
        parts.append(
            f'<text x="{x(position) + cell // 2}" y="{baseline + cell // 4}" '
            f'text-anchor="middle" font-family="monospace">{letter}</text>'
        )
    for start, end in zip(factorization.cuts, factorization.cuts[1:]):
        top = baseline - cell // 2
        parts.append(
            f'<path d="M {x(start)} {top} Q {(x(start) + x(end)) // 2} {top - 2 * cell} {x(end)} {top}" '
            f'fill="none" stroke="blue" class="alpha"/>'
        )
    backward = coarch_cuts(word)
    for start, end in zip(backward, backward[1:]):
        bottom = baseline + cell // 2
        parts.append(
            f'<path d="M {x(start)} {bottom} Q {(x(start) + x(end)) // 2} {bottom + 2 * cell} {x(end)} {bottom}" '
            f'fill="none" stroke="red" class="beta"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
