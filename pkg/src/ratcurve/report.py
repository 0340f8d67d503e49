"""Report documents: one dict per analysis, rendered as JSON or text.

The document is deterministic for a fixed input and version, except for the
"timings" key (wall-clock seconds per stage), which callers should strip
before comparing documents across runs.
"""

from __future__ import annotations

import json
import time
from math import comb

from .binary_forms import BinaryForm
from .curves import CurveParam
from .pipeline import AnalysisOptions, CurveAnalysis
from .points import RationalPoint

SCHEMA = "ratcurve-sing/1"

MODES = ("count", "branches", "ideals", "coords", "classify", "real")


def resolve_modes(spec: str) -> list:
    """Expand a comma-separated mode list; 'all' means every mode."""
    wanted = [m.strip() for m in spec.split(",") if m.strip()]
    if not wanted:
        raise ValueError("no mode given")
    for m in wanted:
        if m != "all" and m not in MODES:
            raise ValueError(f"unknown mode {m!r}")
    if "all" in wanted:
        return list(MODES)
    return [m for m in MODES if m in wanted]


# -- canonical strings -----------------------------------------------------------


def rational_str(q) -> str:
    return str(q)


def _coeff_prefix(c, is_first: bool, has_symbol: bool) -> str:
    neg = c < 0
    mag = -c if neg else c
    body = "" if (mag == 1 and has_symbol) else rational_str(mag)
    sep = "*" if body and has_symbol else ""
    if is_first:
        return ("-" if neg else "") + body + sep
    return (" - " if neg else " + ") + body + sep


def poly_str(p) -> str:
    """Canonical rendering of a multivariate polynomial: monomials sorted by
    descending total degree, then lexicographically descending exponents."""
    if p.is_zero():
        return "0"
    names = p.ring.names
    items = sorted(
        p.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
    )
    out = []
    for exps, c in items:
        mono = "*".join(
            f"{names[i]}^{e}" if e > 1 else names[i]
            for i, e in enumerate(exps)
            if e
        )
        out.append(_coeff_prefix(c, not out, bool(mono)) + mono)
    return "".join(out)


def form_str(f: BinaryForm) -> str:
    """Canonical rendering of a binary form in s,t, highest s-power first."""
    if f.is_zero():
        return "0"
    n = f.degree
    out = []
    for p, c in enumerate(f.coeffs):
        if c == 0:
            continue
        es, et = n - p, p
        mono = "*".join(
            f"{v}^{e}" if e > 1 else v for v, e in (("s", es), ("t", et)) if e
        )
        out.append(_coeff_prefix(c, not out, bool(mono)) + mono)
    return "".join(out)


def upoly_str(coeffs, var: str = "u") -> str:
    """Univariate polynomial from ascending coefficients, highest power first."""
    if not coeffs or all(c == 0 for c in coeffs):
        return "0"
    out = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mono = f"{var}^{e}" if e > 1 else (var if e == 1 else "")
        out.append(_coeff_prefix(c, not out, bool(mono)) + mono)
    return "".join(out)


def ideal_gen_strings(ideal) -> list:
    """Sorted canonical generator strings of the reduced Groebner basis."""
    basis = ideal.groebner()
    rendered = sorted(
        poly_str(g.primitive()) for g in basis
    )
    return rendered


def _complex_pair(z) -> list:
    return [float(z.real), float(z.imag)]


def point_payload(point) -> dict:
    if isinstance(point, RationalPoint):
        return {
            "type": "rational",
            "coords": [rational_str(c) for c in point.coords],
        }
    return {
        "type": "conjugate_group",
        "chart": point.chart,
        "minimal_polynomial": upoly_str(point.minpoly),
        "coords": [
            upoly_str(point.coordinate_poly(i))
            for i in range(point.dim + 1)
        ],
        "count": point.count,
    }


def approx_payload(point) -> list:
    return [
        [_complex_pair(c) for c in rep] for rep in point.approx_points()
    ]


# -- document assembly -----------------------------------------------------------


def build_document(
    curve: CurveParam,
    modes,
    options: AnalysisOptions,
    f_exprs=None,
    label=None,
) -> dict:
    analysis = CurveAnalysis(curve, options)
    doc = {
        "schema": SCHEMA,
        "label": label,
        "input": {
            "f": list(f_exprs) if f_exprs else [form_str(f) for f in curve.forms],
            "degree": curve.degree,
        },
        "modes": list(modes),
        "options": {
            "precision_bits": options.precision_bits,
            "cluster_tol": options.cluster_tol,
            "oracle": options.oracle,
            "stratum_cache": options.stratum_cache,
        },
    }
    warnings = []
    timings = {}

    def staged(name, fn):
        start = time.monotonic()
        result = fn()
        timings[name] = round(time.monotonic() - start, 3)
        return result

    if "count" in modes:
        counts = staged("counts", analysis.multiplicity_counts)
        cusp = staged("cuspidal", analysis.cuspidal_summary)
        doc["counts"] = {
            "N": sum(counts.values()),
            "N_by_multiplicity": {
                str(k): v for k, v in sorted(counts.items()) if v
            },
        }
        doc["cuspidal"] = {
            "cuspidal": cusp.cuspidal,
            "ordinary_only": cusp.ordinary_only,
            "cusp_count": cusp.cusp_count,
        }
        doc["clebsch"] = {
            "binomial": comb(curve.degree - 1, 2),
            "equality": analysis.clebsch_equality(),
            "has_infinitely_near_points": analysis.has_infinitely_near_points(),
        }

    if "branches" in modes:
        exact = staged("profile_counts", analysis.exact_profile_counts)
        doc["profile_counts"] = [
            {
                "multiplicity": k,
                "branch_profile": list(lam),
                "points": v,
            }
            for (k, lam), v in sorted(exact.items())
            if v
        ]

    if "ideals" in modes:
        filtration = staged("ideals", analysis.multiplicity_filtration)
        forms = staged("preimage_forms", analysis.preimage_forms)
        doc["ideals"] = {
            "singular_points": ideal_gen_strings(filtration.at_least[2]),
            "multiplicity_at_least": {
                str(k): ideal_gen_strings(v)
                for k, v in sorted(filtration.at_least.items())
                if k <= analysis.top_multiplicity()
            },
            "multiplicity_exact": {
                str(k): ideal_gen_strings(v)
                for k, v in sorted(filtration.exact.items())
            },
        }
        doc["preimage_forms"] = {
            str(k): form_str(f.normalized()) for k, f in sorted(forms.items())
        }

    want_points = {"coords", "classify", "real"} & set(modes)
    if want_points:
        if "real" in modes:
            records = staged("reality", analysis.reality)
        else:
            records = staged("classification", analysis.singular_points)
        entries = []
        for rec in records:
            entry = {
                "multiplicity": rec.multiplicity,
                "count": rec.count,
                "point": point_payload(rec.point),
                "approx": approx_payload(rec.point),
            }
            if "coords" in modes:
                entry["preimage_form"] = form_str(
                    rec.orbit.norm_form.normalized()
                )
            if "classify" in modes or "real" in modes:
                entry.update(
                    {
                        "branch_profile": list(rec.branch_profile),
                        "delta": rec.delta_invariant,
                        "delta_exact": rec.delta_exact,
                        "a_type": rec.a_type,
                        "on_conic": rec.on_conic,
                        "verification": rec.verification,
                        "flags": list(rec.flags),
                    }
                )
                if rec.verification != "verified":
                    warnings.append(
                        {
                            "code": "INCONCLUSIVE_A_TYPE",
                            "point": entry["point"],
                            "detail": rec.verification,
                        }
                    )
                for flag in rec.flags:
                    code = (
                        "HEURISTIC_DELTA"
                        if flag.startswith("delta")
                        else "CONJECTURAL_CLASSIFICATION"
                    )
                    warnings.append(
                        {
                            "code": code,
                            "point": entry["point"],
                            "detail": flag,
                        }
                    )
            if "real" in modes and rec.reality is not None:
                entry["reality"] = [r.kind for r in rec.reality]
                entry["reality_approx"] = [
                    [_complex_pair(c) for c in r.approx] for r in rec.reality
                ]
            entries.append(entry)
        doc["points"] = entries
        if options.oracle and {"coords", "classify"} & set(modes):
            passed = staged("oracle", analysis.oracle_check)
            doc["oracle"] = {"checked": True, "passed": bool(passed)}

    doc["warnings"] = warnings
    doc["timings"] = timings
    return doc


# -- rendering ---------------------------------------------------------------------


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _text_point(entry, lines):
    p = entry["point"]
    if p["type"] == "rational":
        where = "(" + " : ".join(p["coords"]) + ")"
    else:
        where = (
            f"conjugate group of {entry['count']} points, chart {p['chart']}, "
            f"min poly {p['minimal_polynomial']}"
        )
    lines.append(f"  multiplicity {entry['multiplicity']}  x{entry['count']}  {where}")
    for rep in entry["approx"]:
        pretty = " : ".join(
            f"{re:.6g}" + (f"{im:+.6g}i" if abs(im) > 1e-12 else "")
            for re, im in rep
        )
        lines.append(f"      ~ ({pretty})")
    if "branch_profile" in entry:
        lines.append(
            "      branches "
            + str(tuple(entry["branch_profile"]))
            + f"   delta {entry['delta']}"
            + ("" if entry["delta_exact"] else " (heuristic)")
            + (f"   {entry['a_type']}" if entry["a_type"] else "")
            + (
                "   on the double-root conic"
                if entry.get("on_conic")
                else ""
            )
        )
        if entry["verification"] != "verified":
            lines.append(f"      verification: {entry['verification']}")
    if "preimage_form" in entry:
        lines.append(f"      parameters: zeroes of {entry['preimage_form']}")
    if "reality" in entry:
        lines.append("      reality: " + ", ".join(entry["reality"]))


def render_text(doc: dict) -> str:
    lines = []
    label = doc.get("label")
    f = doc["input"]["f"]
    lines.append(
        (f"{label}: " if label else "")
        + f"degree-{doc['input']['degree']} curve ({f[0]} : {f[1]} : {f[2]})"
    )
    if "counts" in doc:
        counts = doc["counts"]
        by_mult = ", ".join(
            f"{v} of multiplicity {k}"
            for k, v in counts["N_by_multiplicity"].items()
        )
        lines.append(f"singular points: {counts['N']} ({by_mult})")
        cusp = doc["cuspidal"]
        lines.append(
            "cuspidal: "
            + ("yes" if cusp["cuspidal"] else "no")
            + "   ordinary-only: "
            + ("yes" if cusp["ordinary_only"] else "no")
            + f"   double divisors on the conic: {cusp['cusp_count']}"
        )
        cl = doc["clebsch"]
        lines.append(
            f"genus bound binomial: {cl['binomial']}   "
            + "multiplicity count matches: "
            + ("yes" if cl["equality"] else "no (infinitely-near points)")
        )
    if "profile_counts" in doc:
        lines.append("points by multiplicity and branch profile:")
        for row in doc["profile_counts"]:
            lines.append(
                f"  multiplicity {row['multiplicity']} "
                f"profile {tuple(row['branch_profile'])}: {row['points']}"
            )
    if "ideals" in doc:
        lines.append("ideal of all singular points (w0, w1, w2):")
        for g in doc["ideals"]["singular_points"]:
            lines.append(f"  {g}")
        for k, gens in doc["ideals"]["multiplicity_exact"].items():
            lines.append(f"ideal of multiplicity-{k} points:")
            if gens == ["1"]:
                lines.append("  (empty locus)")
            else:
                for g in gens:
                    lines.append(f"  {g}")
    if "preimage_forms" in doc:
        lines.append("parameter forms by minimum multiplicity:")
        for k, s in doc["preimage_forms"].items():
            lines.append(f"  >= {k}: {s}")
    if "points" in doc:
        lines.append("singular points:")
        for entry in doc["points"]:
            _text_point(entry, lines)
    if "oracle" in doc:
        lines.append(
            "implicit-equation check: "
            + ("passed" if doc["oracle"]["passed"] else "FAILED")
        )
    if doc["warnings"]:
        lines.append("warnings:")
        for w in doc["warnings"]:
            lines.append(f"  [{w['code']}] {w['detail']}")
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(doc)
    if fmt == "text":
        return render_text(doc)
    raise ValueError(f"unknown format {fmt!r}")
