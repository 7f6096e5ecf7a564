# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Record builders and json / tsv renderers for command output.

Records are plain dictionaries with a fixed key order so output is byte-identical
across runs.
"""

import json
from typing import Any, Dict, List, Sequence

from src.crystal.mvquiver import format_decomposition, gamma, lusztig_to_path, lusztig_to_quiver
from src.crystal.strings import bzl_path, format_lusztig, format_string_param, nc, nz, to_lusztig
from src.crystal.tableaux import format_tableau, seg, weight_neg
from src.models.series import VerificationReport
from src.models.tableau import MLTableau

ENUMERATE_COLUMNS = ("tableau", "weight", "seg", "string", "lusztig", "nc", "nz")


def _vector(coeffs) -> str:
    return ",".join(str(x) for x in coeffs)


def enumerate_record(b: MLTableau) -> Dict[str, Any]:
    """One enumeration row: b#, -wt, seg and both parametrizations with their statistics."""
    sp = bzl_path(b)
    c = to_lusztig(sp)
    return {
        "tableau": format_tableau(b),
        "weight": list(weight_neg(b).coeffs),
        "seg": seg(b),
        "string": format_string_param(sp),
        "lusztig": format_lusztig(c),
        "nc": nc(sp),
        "nz": nz(c),
    }


def element_record(b: MLTableau) -> Dict[str, Any]:
    """Every parametrization of b plus its MV path and quiver decomposition."""
    record = enumerate_record(b)
    c = to_lusztig(bzl_path(b))
    path = lusztig_to_path(c)
    decomposition = lusztig_to_quiver(c)
    record.update({
        "rank": b.rank,
        "full": format_tableau(b, mode="full"),
        "path": [list(vertex.coeffs) for vertex in path.vertices],
        "edges": path.edge_count,
        "quiver": format_decomposition(decomposition),
        "gamma": gamma(decomposition),
    })
    return record


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return " ".join(_vector(v) for v in value)
        return _vector(value)
    return str(value)


def records_to_tsv(records: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    lines = ["\t".join(columns)]
    for record in records:
        lines.append("\t".join(_cell(record[column]) for column in columns))
    return "\n".join(lines) + "\n"


def record_to_tsv(record: Dict[str, Any]) -> str:
    """Key / value lines for a single record."""
    return "".join(f"{key}\t{_cell(value)}\n" for key, value in record.items())


def status_text(matched: bool) -> str:
    return "MATCH" if matched else "MISMATCH"


def report_record(report: VerificationReport) -> Dict[str, Any]:
    sides = {}
    for name, side in report.sides.items():
        sides[name] = {
            "status": status_text(side.matched),
            "terms": side.terms_checked,
            "mismatches": [
                {"exponent": list(m.exponent), "lhs": list(m.lhs.coeffs), "rhs": list(m.rhs.coeffs)}
                for m in side.mismatches
            ],
        }
    kostant = report.kostant
    return {
        "status": status_text(report.matched),
        "rank": report.rank,
        "depth": report.depth,
        "strategy": report.strategy,
        "elements": report.elements,
        "sides": sides,
        "kostant": {
            "status": status_text(kostant.passed) if kostant else "SKIPPED",
            "exponents": kostant.exponents_checked if kostant else 0,
            "failures": [[list(e), v, k] for e, v, k in kostant.failures] if kostant else [],
        },
        "u_one_constant": report.u_one_constant,
        "positivity": report.positivity,
    }


def report_to_tsv(report: VerificationReport) -> str:
    lines: List[str] = []
    for name, side in report.sides.items():
        lines.append(f"{name}\t{status_text(side.matched)}\t{side.terms_checked}\t{len(side.mismatches)}")
        for m in side.mismatches:
            lines.append(f"{name}\t{_vector(m.exponent)}\t{m.lhs.to_text()}\t{m.rhs.to_text()}")
    if report.kostant is not None:
        lines.append(f"kostant\t{status_text(report.kostant.passed)}\t{report.kostant.exponents_checked}\t{len(report.kostant.failures)}")
    lines.append(f"u_one\t{status_text(report.u_one_constant)}")
    lines.append(f"positivity\t{status_text(report.positivity)}")
    lines.append(status_text(report.matched))
    return "\n".join(lines) + "\n"
