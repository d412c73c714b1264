"""ReportDocument: JSON serialization of verdicts, census, audit results and
bound comparisons.  Everything is integers, strings and booleans, so the
document round-trips losslessly."""

from __future__ import annotations

import json

from .arrangement import PolygonFamily
from .bounds import (
    lemma1_max_vertices,
    lemma2_min_k,
    theorem_min_k,
    theorem_vertex_cap,
)
from .classify import TheoremAudit, VennReport

FORMAT_NAME = "polyvenn-report"
FORMAT_VERSION = 1


class ReportError(ValueError):
    """Malformed report document."""


def _census_block(report: VennReport) -> dict:
    present = {vec.as_string(): len(faces)
               for vec, faces in sorted(report.census.by_vector.items(),
                                        key=lambda kv: kv[0].as_string())}
    missing = [vec.as_string() for vec in report.missing_vectors]
    duplicated = {vec.as_string(): len(faces)
                  for vec, faces in sorted(report.duplicated_vectors.items(),
                                           key=lambda kv: kv[0].as_string())}
    deficiency_venn = len(missing) + sum(m - 1 for m in duplicated.values())
    high_degree = sum(count for deg, count in report.degree_histogram.items()
                      if deg > 4)
    return {
        "present": present,
        "missing": missing,
        "duplicated": duplicated,
        "deficiency_venn": deficiency_venn,
        "deficiency_simple_venn": deficiency_venn + high_degree,
    }


def _bounds_block(report: VennReport, family: PolygonFamily | None) -> dict | None:
    if family is None:
        return None
    ks = {p.k for p in family.polygons}
    if len(ks) != 1:
        return None
    k = ks.pop()
    n = report.n
    block: dict = {"n": n, "k": k}
    if n >= 2 and k >= 3:
        block["lemma1_max_vertices"] = lemma1_max_vertices(n, k)
    if n >= 3:
        block["lemma2_min_k"] = lemma2_min_k(n)
        block["theorem_min_k"] = theorem_min_k(n)
        if k >= 3:
            block["theorem_vertex_cap"] = theorem_vertex_cap(n, k)
    if report.is_venn and report.is_simple and n >= 3 and k >= 3:
        block["consistent"] = (k >= block["theorem_min_k"]
                               and report.V <= block["lemma1_max_vertices"]
                               and report.V <= block["theorem_vertex_cap"])
    return block


def audit_block(audit: TheoremAudit) -> dict:
    return {
        "n": audit.n,
        "k": audit.k,
        "V": audit.V,
        "outer_corner_counts": list(audit.labels.outer_counts),
        "inner_corner_counts": list(audit.labels.inner_counts),
        "eq1_ok": audit.eq1_ok,
        "ei_eq_ie_ok": audit.ei_eq_ie_ok,
        "contiguity_ok": audit.contiguity_ok,
        "ineq2": {"lhs": audit.ineq2_lhs, "rhs": audit.ineq2_rhs,
                  "ok": audit.ineq2_ok},
        "ineq3": {"lhs": audit.ineq3_lhs, "rhs": audit.ineq3_rhs,
                  "ok": audit.ineq3_ok},
        "vertex_cap": {"cap": audit.vertex_cap, "V": audit.V,
                       "ok": audit.vertex_cap_ok},
        "passed": audit.passed,
    }


def report_document(report: VennReport, family: PolygonFamily | None = None,
                    audit: TheoremAudit | None = None) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "n": report.n,
        "verdicts": {
            "is_fisc": report.is_fisc,
            "is_independent_family": report.is_independent_family,
            "is_venn": report.is_venn,
            "is_simple": report.is_simple,
        },
        "counts": {"V": report.V, "E": report.E, "F": report.F},
        "degree_histogram": {str(d): c
                             for d, c in sorted(report.degree_histogram.items())},
        "census": _census_block(report),
        "notes": list(report.notes),
        "bounds": _bounds_block(report, family),
        "audit": audit_block(audit) if audit is not None else None,
    }


def serialize_report(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_report(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ReportError(f"not valid JSON: {err}") from err
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise ReportError(f'expected format "{FORMAT_NAME}"')
    for key in ("verdicts", "counts", "census", "n"):
        if key not in doc:
            raise ReportError(f"report is missing {key!r}")
    return doc
