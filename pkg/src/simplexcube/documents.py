"""JSON and CSV forms of simplices, certificates and search results.

Rationals are always written as ``"p/q"`` or ``"p"`` strings.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .cube import Certificate
from .linalg import format_rational, parse_rational
from .search import SearchResult
from .simplex import Simplex


class DocumentError(ValueError):
    pass


def simplex_to_doc(s: Simplex) -> dict[str, Any]:
    return {"n": s.n, "vertices": [[format_rational(c) for c in v] for v in s.vertices]}


def simplex_from_doc(doc: Any) -> Simplex:
    """Parse a SimplexDocument. Raises DocumentError on malformed input.

    Degenerate vertex sets propagate as DegenerateSimplexError.
    """
    if not isinstance(doc, dict) or "n" not in doc or "vertices" not in doc:
        raise DocumentError("simplex document needs 'n' and 'vertices'")
    n = doc["n"]
    verts = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(verts, list) or len(verts) != n + 1:
        raise DocumentError(f"expected {n + 1} vertices")
    rows = []
    for v in verts:
        if not isinstance(v, list) or len(v) != n:
            raise DocumentError(f"every vertex needs {n} coordinates")
        try:
            rows.append([parse_rational(c) for c in v])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise DocumentError(str(exc)) from exc
    return Simplex(rows, n=n)


def loads_simplex(text: str) -> Simplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return simplex_from_doc(doc)


def dumps_simplex(s: Simplex) -> str:
    return json.dumps(simplex_to_doc(s))


def certificate_to_dict(c: Certificate) -> dict[str, Any]:
    fmt = format_rational
    return {
        "n": c.n,
        "xi": fmt(c.xi),
        "alpha": fmt(c.alpha),
        "diameters": [
            {
                "axis": i + 1,
                "d": fmt(d),
                "center": [fmt(x) for x in center],
                "weights": [fmt(w) for w in weights],
            }
            for i, (d, center, weights) in enumerate(
                zip(c.diameters.diameters, c.diameters.centers, c.diameters.weights)
            )
        ],
        "circumscribed": c.circumscribed,
        "perfect": c.perfect,
        "incidence": {str(v): sorted(fs) for v, fs in sorted(c.incidence.items())},
        "incidence_count": c.incidence_count,
    }


def dumps_certificate(c: Certificate) -> str:
    return json.dumps(certificate_to_dict(c), indent=2)


def search_result_to_dict(r: SearchResult) -> dict[str, Any]:
    return {
        "best": simplex_to_doc(r.best),
        "xi_float": r.xi_float,
        "xi_exact": format_rational(r.xi_exact),
        "restart": r.restart,
        "trace": [{"step": step, "xi": format_rational(xi)} for step, xi in r.trace],
    }


def trace_csv(r: SearchResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "xi", "xi_float"])
    for step, xi in r.trace:
        w.writerow([step, format_rational(xi), repr(float(xi))])
    return buf.getvalue()
