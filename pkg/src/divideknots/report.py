"""Report documents shared by the command line and the HTTP service.

A report is a plain dict with a fixed key order (divide, basis,
seifert_matrix, invariants, g4top, certificates) so that JSON output
is deterministic and round-trips byte for byte.  Laurent polynomials
serialize as ``[[exponent, coefficient], ...]`` sorted by exponent.
"""

import json
from fractions import Fraction
from typing import List, Optional

from .defect import BoundsReport, DefectCertificate, SearchConfig, g4_bounds
from .divides import Divide, snail
from .exact import LaurentPoly
from .invariants import InvariantSet
from .seifert import SeifertData, seifert_matrix


def poly_pairs(p: LaurentPoly) -> List[List[int]]:
    return [[e, c] for e, c in p.pairs()]


def _certificate_dict(cert: DefectCertificate) -> dict:
    return {
        "rank": cert.subgroup.rank,
        "vectors": [list(v) for v in cert.subgroup.vectors],
        "restricted_matrix": cert.restricted.to_lists(),
        "unit": {"sign": cert.unit[0], "exponent": cert.unit[1]},
        "upper_bound": cert.upper_bound,
    }


def _invariants_dict(inv: InvariantSet) -> dict:
    return {
        "genus": inv.genus,
        "smooth_g4": inv.smooth_g4,
        "alexander": poly_pairs(inv.alexander),
        "alexander_pretty": str(inv.alexander),
        "determinant": inv.knot_determinant,
        "signature": inv.signature,
        "signature_convention": inv.signature_convention,
    }


def analyze(divide: Divide, black: Optional[str] = None, swap: bool = False,
            config: Optional[SearchConfig] = None,
            run_search: bool = True) -> tuple[SeifertData, BoundsReport]:
    sd = seifert_matrix(divide, black=black, swap=swap)
    return sd, g4_bounds(sd, config, run_search=run_search)


def report_document(divide: Divide, black: Optional[str] = None,
                    swap: bool = False, config: Optional[SearchConfig] = None,
                    run_search: bool = True) -> dict:
    """The full report for one divide, as an ordered plain dict."""
    sd, bounds = analyze(divide, black=black, swap=swap, config=config,
                         run_search=run_search)
    return {
        "divide": {
            "gauss": divide.gauss_code,
            "double_points": divide.crossing_count,
            "snail": divide.snail_index,
            "swap_colours": swap,
            "regions": [
                {"id": r.id, "colour": r.colour, "inner": r.is_inner}
                for r in sd.regions
            ],
        },
        "basis": [
            {"index": g.position, "kind": g.kind, "ref": g.ref}
            for g in sd.basis
        ],
        "seifert_matrix": sd.matrix.to_lists(),
        "invariants": _invariants_dict(bounds.invariants),
        "g4top": {
            "lower": bounds.g4top_lower,
            "upper": bounds.g4top_upper,
            "exact": bounds.exact,
        },
        "certificates": [_certificate_dict(c) for c in bounds.certificates],
    }


def family_rows(start: int, end: int, swap: bool = False,
                config: Optional[SearchConfig] = None,
                run_search: bool = True) -> List[dict]:
    """One row per snail index in [start, end], in input order."""
    rows = []
    for n in range(start, end + 1):
        divide = snail(n)
        _, bounds = analyze(divide, swap=swap, config=config,
                            run_search=run_search)
        inv = bounds.invariants
        ratio = Fraction(bounds.g4top_upper, inv.smooth_g4)
        rows.append({
            "n": n,
            "gauss": divide.gauss_code,
            "genus": inv.genus,
            "smooth_g4": inv.smooth_g4,
            "signature": inv.signature,
            "g4top": {
                "lower": bounds.g4top_lower,
                "upper": bounds.g4top_upper,
                "exact": bounds.exact,
            },
            "ratio": str(ratio),
        })
    return rows


def to_json(document) -> str:
    """Canonical JSON: two-space indent, stable key order, newline end."""
    return json.dumps(document, indent=2) + "\n"


# ---------------------------------------------------------------------------
# plain-text rendering


def render_report_text(doc: dict) -> str:
    lines = []
    d = doc["divide"]
    label = f" (snail {d['snail']})" if d["snail"] else ""
    code = d["gauss"] or "<plain chord>"
    lines.append(f"divide: {code}{label}")
    colour_bits = ", ".join(f"{r['id']}={r['colour']}" + ("*" if r["inner"] else "")
                            for r in d["regions"])
    lines.append(f"regions ({len(d['regions'])}, * = inner): {colour_bits}")
    basis = doc["basis"]
    lines.append(f"basis ({len(basis)}): " +
                 ", ".join(f"{g['ref']}:{g['kind']}" for g in basis))
    lines.append("seifert matrix:")
    matrix = doc["seifert_matrix"]
    if matrix:
        width = max(len(str(v)) for row in matrix for v in row)
        for row in matrix:
            lines.append("  [" + " ".join(f"{v:>{width}}" for v in row) + "]")
    else:
        lines.append("  []")
    inv = doc["invariants"]
    lines.append(f"genus {inv['genus']} | smooth g4 {inv['smooth_g4']} | "
                 f"signature {inv['signature']} | determinant {inv['determinant']}")
    lines.append(f"alexander: {inv['alexander_pretty']}")
    g4 = doc["g4top"]
    flag = "exact" if g4["exact"] else "open interval"
    lines.append(f"topological g4 in [{g4['lower']}, {g4['upper']}] ({flag})")
    for cert in doc["certificates"]:
        u = cert["unit"]
        unit = f"{'-' if u['sign'] < 0 else ''}t^{u['exponent']}"
        lines.append(f"certificate: rank {cert['rank']} subgroup, "
                     f"unit {unit}, upper bound {cert['upper_bound']}")
    return "\n".join(lines) + "\n"


def render_family_text(rows: List[dict]) -> str:
    header = f"{'n':>3} {'genus':>6} {'sigma':>6} {'g4top':>10} {'ratio':>8}"
    lines = [header, "-" * len(header)]
    for row in rows:
        g4 = row["g4top"]
        span = f"[{g4['lower']}, {g4['upper']}]"
        lines.append(f"{row['n']:>3} {row['genus']:>6} {row['signature']:>6} "
                     f"{span:>10} {row['ratio']:>8}")
    return "\n".join(lines) + "\n"
