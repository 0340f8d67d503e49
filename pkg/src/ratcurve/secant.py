"""Determinantal schemes attached to a parameterization, strata of binary
forms, and the span-contraction eliminations.

Coordinates of P^k are identified with binary forms of degree k throughout:
the point (x_0 : ... : x_k) is the form sum x_i s^(k-i) t^i. The scheme of
degree-k divisors collapsed to one plane point is cut by the almost-maximal
minors of a band matrix stacking shifted copies of x over the coefficient
rows of the parameterization. Root-multiplicity strata come from
eliminating the root parameters of a product of powers of linear forms;
results are cached on disk since they depend only on (k, profile).
"""

from __future__ import annotations

import json
import os
import tempfile

from .binary_forms import BinaryForm, gcd_many
from .curves import CurveParam
from .ideals import Ideal, eliminate, extend_to, saturate, saturate_block
from .polynomials import MultiPoly, Ring, det_bareiss
from .rationals import QQ, ZERO, denominator, numerator


def divisor_ring(k: int, prefix: str = "x") -> Ring:
    return Ring(tuple(f"{prefix}{i}" for i in range(k + 1)))


def band_matrix(curve: CurveParam, k: int, ring: Ring):
    """(n-k+4) x (n+1) matrix: n-k+1 shifted rows of the x variables over
    the three coefficient rows of the parameterization."""
    n = curve.degree
    if not (2 <= k <= n - 1):
        raise ValueError(f"k must lie in 2..{n - 1}")
    rows = []
    for j in range(n - k + 1):
        row = [ring.zero] * (n + 1)
        for i in range(k + 1):
            row[i + j] = ring.var(i)
        rows.append(row)
    for coeff_row in curve.coefficient_rows():
        rows.append([ring.const(c) for c in coeff_row])
    return rows


def contracted_divisors_ideal(curve: CurveParam, k: int) -> Ideal:
    """Ideal of the degree-k divisors whose span meets the projection
    center: all minors of the band matrix of size one less than its row
    count."""
    ring = divisor_ring(k)
    rows = band_matrix(curve, k, ring)
    r = len(rows)  # minor size r - 1, columns n + 1 >= r - 1
    size = r - 1
    ncols = len(rows[0])
    from itertools import combinations

    gens = []
    for drop_row in range(r):
        sub = [rows[i] for i in range(r) if i != drop_row]
        for cols in combinations(range(ncols), size):
            m = det_bareiss([[row[c] for c in cols] for row in sub])
            if not m.is_zero():
                gens.append(m)
    return Ideal(ring, gens)


def rational_normal_curve_ideal(ring: Ring) -> Ideal:
    """2x2 bands of the moment matrix: the image of (s:t) -> (s^n : ... : t^n)."""
    n = ring.nvars - 1
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(ring.var(i) * ring.var(j + 1) - ring.var(i + 1) * ring.var(j))
    return Ideal(ring, gens)


# -- root multiplicity strata -------------------------------------------------------


STRATUM_CACHE_VERSION = 1


def _stratum_by_elimination(k: int, lam) -> Ideal:
    """Closure of the forms prod (a_j s + b_j t)^(lam_j) inside P^k, by
    eliminating all root parameters."""
    lam = tuple(lam)
    if sum(lam) != k:
        raise ValueError("profile must sum to the degree")
    l = len(lam)
    pnames = []
    for j in range(l):
        pnames += [f"a{j}", f"b{j}"]
    big = Ring(tuple(pnames) + tuple(f"x{i}" for i in range(k + 1)))
    gens = big.gens()
    coeffs = [big.one]
    for j, m in enumerate(lam):
        aj, bj = gens[2 * j], gens[2 * j + 1]
        for _ in range(m):
            nxt = [big.zero] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] = nxt[i] + c * aj
                nxt[i + 1] = nxt[i + 1] + c * bj
            coeffs = nxt
    xs = gens[2 * l :]
    ideal = Ideal(big, [xs[i] - coeffs[i] for i in range(k + 1)])
    return eliminate(ideal, list(range(2 * l)))


def _serialize_ideal(ideal: Ideal, k: int, lam) -> str:
    gens = []
    for g in sorted(ideal.groebner(), key=str):
        terms = []
        for e, c in sorted(g.terms.items()):
            terms.append([str(numerator(c)), str(denominator(c)), list(e)])
        gens.append(terms)
    doc = {
        "format": "ratcurve-stratum",
        "version": STRATUM_CACHE_VERSION,
        "k": k,
        "profile": list(lam),
        "gens": gens,
    }
    return json.dumps(doc, sort_keys=True)


def _deserialize_ideal(text: str, k: int, lam) -> Ideal:
    doc = json.loads(text)
    if (
        doc.get("format") != "ratcurve-stratum"
        or doc.get("version") != STRATUM_CACHE_VERSION
        or doc.get("k") != k
        or tuple(doc.get("profile", ())) != tuple(lam)
    ):
        raise ValueError("stale or foreign cache entry")
    ring = divisor_ring(k)
    gens = []
    for terms in doc["gens"]:
        poly_terms = []
        for num, den, exps in terms:
            if len(exps) != ring.nvars:
                raise ValueError("corrupt cache entry")
            poly_terms.append((tuple(exps), QQ(int(num), int(den))))
        gens.append(MultiPoly.from_terms(ring, poly_terms))
    return Ideal(ring, gens)


_STRATUM_MEMORY = {}


def stratum_ideal(k: int, lam, cache_dir: str | None = None) -> Ideal:
    """Ideal in P^k of the closed stratum of root profile `lam`, memoized in
    process and optionally on disk."""
    lam = tuple(sorted((int(p) for p in lam), reverse=True))
    key = (k, lam)
    hit = _STRATUM_MEMORY.get(key)
    if hit is not None:
        return hit
    path = None
    if cache_dir is not None:
        name = f"stratum_k{k}_" + "_".join(str(p) for p in lam) + ".json"
        path = os.path.join(cache_dir, name)
        if os.path.exists(path):
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    ideal = _deserialize_ideal(fh.read(), k, lam)
                _STRATUM_MEMORY[key] = ideal
                return ideal
            except (ValueError, KeyError, json.JSONDecodeError):
                pass  # recompute and overwrite
    if len(lam) == k:
        ideal = Ideal(divisor_ring(k), [])  # every form factors into linears
    else:
        ideal = _stratum_by_elimination(k, lam)
    _STRATUM_MEMORY[key] = ideal
    if path is not None:
        os.makedirs(cache_dir, exist_ok=True)
        payload = _serialize_ideal(ideal, k, lam)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    return ideal


def conic_polynomial(ring: Ring) -> MultiPoly:
    """Generator of the double-root stratum in P^2: x1^2 - 4 x0 x2."""
    x0, x1, x2 = ring.gens()
    return x1 * x1 - 4 * x0 * x2


# -- span contraction ---------------------------------------------------------------


def incidence_forms(xring_slice, zring_slice, joint: Ring, n: int, k: int):
    """Bilinear forms sum_i x_i z_(i+j), j = 0..n-k, inside the joint ring.
    They say the big-space point z lies on the span cut out by the form x."""
    out = []
    for j in range(n - k + 1):
        acc = joint.zero
        for i in range(k + 1):
            acc = acc + joint.var(xring_slice[i]) * joint.var(zring_slice[i + j])
        out.append(acc)
    return out


def contracted_spans_ideal(divisors: Ideal, n: int) -> Ideal:
    """Union, over the divisor scheme in P^k, of the spans of the divisors
    on the big rational normal curve: start from the divisor ideal plus the
    incidence forms, remove the x = 0 junk, kill x.

    The saturation is essential: x = 0 satisfies the incidence forms with
    any z, so skipping it would return the whole space.
    """
    k = divisors.ring.nvars - 1
    names = tuple(f"x{i}" for i in range(k + 1)) + tuple(f"z{p}" for p in range(n + 1))
    joint = Ring(names)
    big = extend_to(divisors, joint)
    inc = incidence_forms(list(range(k + 1)), list(range(k + 1, k + 1 + n + 1)), joint, n, k)
    total = Ideal(joint, list(big.gens) + inc)
    sat = saturate_block(total, list(range(k + 1)))
    lines = eliminate(sat, list(range(k + 1)))
    return lines


def plane_ring() -> Ring:
    return Ring(("w0", "w1", "w2"))


def plane_image_ideal(curve: CurveParam, spans: Ideal) -> Ideal:
    """Image in the plane of the contracted spans under the projection
    given by the coefficient rows: adjoin w_u - sum_p a_(u,p) z_p and
    eliminate z."""
    n = curve.degree
    names = tuple(f"z{p}" for p in range(n + 1)) + ("w0", "w1", "w2")
    joint = Ring(names)
    big = extend_to(spans, joint)
    rows = curve.coefficient_rows()
    gens = list(big.gens)
    for u in range(3):
        acc = joint.var(n + 1 + u)
        for p in range(n + 1):
            c = rows[u][p]
            if c != 0:
                acc = acc - joint.const(c) * joint.var(p)
        gens.append(acc)
    image = eliminate(Ideal(joint, gens), list(range(n + 1)))
    out_ring = plane_ring()  # same names as the eliminate result
    return Ideal(out_ring, [MultiPoly(out_ring, dict(g.terms)) for g in image.gens])


def pullback_to_parameters(poly: MultiPoly, n: int):
    """Substitute z_p -> s^(n-p) t^p: a form on the big curve becomes a
    binary form in the parameter."""
    coeffs_by_tdeg = {}
    for e, c in poly.terms.items():
        tdeg = sum(p * ep for p, ep in enumerate(e))
        coeffs_by_tdeg[tdeg] = coeffs_by_tdeg.get(tdeg, ZERO) + c
    d = poly.total_degree() * n  # homogeneous input: s-deg + t-deg = n * deg
    dense = [coeffs_by_tdeg.get(i, ZERO) for i in range(d + 1)]
    return BinaryForm(dense)


def preimage_form_gcd(spans: Ideal, n: int) -> BinaryForm:
    """Pullback of the contracted-spans scheme to the parameter line as a
    single binary form: the gcd of the pullbacks of its generators.

    The pullback of the irrelevant ideal of the big space is (s, t)^n, so
    saturating before pulling back changes nothing and the principal part
    survives as a plain gcd.
    """
    forms = []
    for g in spans.groebner():
        f = pullback_to_parameters(g, n)
        if not f.is_zero():
            forms.append(f)
    if not forms:
        raise ValueError("spans ideal pulls back to zero")
    return gcd_many(forms)


class NotPrincipal(Exception):
    pass


def _bivariate_to_binary(poly: MultiPoly) -> BinaryForm:
    d = poly.total_degree()
    dense = [ZERO] * (d + 1)
    for e, c in poly.terms.items():
        dense[e[1]] = c
    return BinaryForm(dense)


def preimage_form_faithful(spans: Ideal, n: int) -> BinaryForm:
    """Pullback of the contracted-spans scheme by explicit incidence with the
    parameter line: adjoin z_p = s^(n-p) t^p and the big-curve equations,
    saturate away the z = 0 junk, eliminate z. The survivor must be a single
    binary form. Slower than the gcd route; kept as its independent witness.
    """
    names = tuple(f"z{p}" for p in range(n + 1)) + ("s", "t")
    joint = Ring(names)
    big = extend_to(spans, joint)
    s, t = joint.var(n + 1), joint.var(n + 2)
    gens = list(big.gens)
    zr = divisor_ring(n, prefix="z")
    for g in rational_normal_curve_ideal(zr).gens:
        gens.append(extend_to(Ideal(zr, [g]), joint).gens[0])
    for p in range(n + 1):
        mono = joint.one
        for _ in range(n - p):
            mono = mono * s
        for _ in range(p):
            mono = mono * t
        gens.append(joint.var(p) - mono)
    total = Ideal(joint, gens)
    zblock = Ideal(joint, [joint.var(p) for p in range(n + 1)])
    sat = saturate(total, zblock)
    back = eliminate(sat, list(range(n + 1)))
    gb = back.groebner()
    if len(gb) != 1:
        raise NotPrincipal(f"pullback ideal has {len(gb)} generators")
    return _bivariate_to_binary(gb[0])
