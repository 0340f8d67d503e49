"""Numeric side: certified parameter roots, projective clustering of their
images, and reality typing of singular points.

Everything numeric is anchored to exact certificates: roots carry isolating
discs with definite realness flags, conjugation acts through rigorous disc
pairing, and clustering failures escalate precision (doubling up to a cap)
instead of guessing. The chordal (Fubini-Study) metric makes the cluster
tolerance meaningful across charts.
"""

from __future__ import annotations

import mpmath

from .binary_forms import BinaryForm, squarefree_decomposition
from .curves import CurveParam
from .rationals import QQ, denominator, numerator
from .roots import RootIsolationError, conjugate_partner, isolate_roots


class AmbiguousCluster(Exception):
    pass


class PrecisionExhausted(Exception):
    pass


class ParameterRoot:
    """One distinct root of the preimage form, as a point of the parameter
    line: (0:1), (1:0), or (1:value) with a certified enclosure."""

    __slots__ = ("kind", "root", "multiplicity", "is_real", "partner")

    def __init__(self, kind, root, multiplicity, is_real, partner=None):
        self.kind = kind  # "zero" (0:1), "infinity" (1:0), "finite"
        self.root = root  # IsolatedRoot for finite roots, else None
        self.multiplicity = multiplicity
        self.is_real = is_real
        self.partner = partner  # index of the conjugate root in the full list

    def approx_pair(self):
        if self.kind == "zero":
            return (mpmath.mpc(0), mpmath.mpc(1))
        if self.kind == "infinity":
            return (mpmath.mpc(1), mpmath.mpc(0))
        return (mpmath.mpc(1), self.root.approx())

    def __repr__(self):
        if self.kind == "finite":
            return f"ParameterRoot(1:{mpmath.nstr(self.root.approx(), 8)})"
        return f"ParameterRoot({'0:1' if self.kind == 'zero' else '1:0'})"


def distinct_roots_of_form(form: BinaryForm, precision_bits: int):
    """All distinct projective roots of a binary form with their
    multiplicities, realness certificates, and conjugation pairing."""
    out = []
    for factor, mult in squarefree_decomposition(form):
        a, b, core = factor.split()
        if a:
            out.append(ParameterRoot("zero", None, a * mult, True))
        if b:
            out.append(ParameterRoot("infinity", None, b * mult, True))
        if len(core) > 1:
            iso = isolate_roots(list(core), start_prec=precision_bits)
            base = len(out)
            for i, r in enumerate(iso):
                is_real = r.rational is not None or r.is_real
                out.append(ParameterRoot("finite", r, mult, is_real))
            for i, r in enumerate(iso):
                out[base + i].partner = base + conjugate_partner(iso, i)
    for i, pr in enumerate(out):
        if pr.partner is None:
            pr.partner = i
    return out


def _q_to_mpf(q):
    return mpmath.mpf(int(numerator(q))) / mpmath.mpf(int(denominator(q)))


def evaluate_curve(curve: CurveParam, sp, tp):
    """(f0 : f1 : f2) at a parameter value, as complex numbers scaled by the
    largest coordinate."""
    vals = []
    for f in curve.forms:
        acc = mpmath.mpc(0)
        n = f.degree
        # sum coeffs[p] * s^(n-p) * t^p, Horner in t with explicit s powers
        for p in range(n + 1):
            c = f.coeffs[p]
            if c == 0:
                continue
            acc += _q_to_mpf(c) * (sp ** (n - p)) * (tp**p)
        vals.append(acc)
    scale = max(abs(v) for v in vals)
    if scale == 0:
        raise ArithmeticError("curve evaluated to the zero vector")
    return tuple(v / scale for v in vals)


def fubini_study(u, v) -> object:
    """Chordal distance between two points of the complex projective plane:
    |u x v| / (|u| |v|)."""
    cross = (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )
    num = mpmath.sqrt(sum(abs(c) ** 2 for c in cross))
    den = mpmath.sqrt(sum(abs(c) ** 2 for c in u)) * mpmath.sqrt(
        sum(abs(c) ** 2 for c in v)
    )
    return num / den


def cluster_indices(points, tol):
    """Union-find by pairwise chordal distance below tol; returns sorted
    index groups."""
    n = len(points)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if fubini_study(points[i], points[j]) < tol:
                ri, rj = find(i), find(j)
            else:
                continue
            if ri != rj:
                parent[ri] = rj
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


class RealityRecord:
    """Reality verdict for one geometric singular point."""

    __slots__ = ("cluster", "is_real", "real_type")

    def __init__(self, cluster, is_real, real_type):
        self.cluster = cluster  # indices into the parameter-root list
        self.is_real = is_real
        self.real_type = real_type  # real_on_curve | acnode | hidden | nonreal


def classify_clusters(roots, clusters):
    """Reality type per cluster: conjugation-stability decides whether the
    image point is real; the realness pattern of the preimages refines it."""
    out = []
    for cl in clusters:
        as_set = set(cl)
        stable = all(roots[i].partner in as_set for i in cl)
        if not stable:
            out.append(RealityRecord(cl, False, "nonreal"))
            continue
        flags = [roots[i].is_real for i in cl]
        if all(flags):
            kind = "real_on_curve"
        elif not any(flags):
            kind = "acnode"
        else:
            kind = "hidden"
        out.append(RealityRecord(cl, True, kind))
    return out


def cluster_preimages(
    curve: CurveParam,
    form: BinaryForm,
    expected_sizes,
    precision_bits: int = 256,
    cluster_tol=1e-8,
    max_precision_bits: int = 4096,
):
    """Cluster the distinct roots of the preimage form by their image point.

    expected_sizes: multiset (list) of cluster sizes predicted by the exact
    computation; clustering must reproduce it exactly, otherwise precision
    doubles. Returns (roots, clusters, images) with one image triple per
    cluster. Raises AmbiguousCluster / PrecisionExhausted."""
    expected = sorted(expected_sizes)
    prec = precision_bits
    tol = mpmath.mpf(cluster_tol)
    last_error = None
    while prec <= max_precision_bits:
        with mpmath.workprec(prec):
            try:
                roots = distinct_roots_of_form(form, prec)
            except RootIsolationError as exc:
                last_error = str(exc)
                prec *= 2
                continue
            if len(roots) != sum(expected):
                raise AmbiguousCluster(
                    f"{len(roots)} distinct preimages, exact count says {sum(expected)}"
                )
            images = [evaluate_curve(curve, *r.approx_pair()) for r in roots]
            clusters = cluster_indices(images, tol)
            sizes = sorted(len(c) for c in clusters)
            if sizes == expected:
                # guard: clusters must be separated by a comfortable margin
                reps = [images[c[0]] for c in clusters]
                ok = True
                for i in range(len(reps)):
                    for j in range(i + 1, len(reps)):
                        if fubini_study(reps[i], reps[j]) < 2 * tol:
                            ok = False
                if ok:
                    centers = []
                    for c in clusters:
                        cs = [images[i] for i in c]
                        # members are projective representatives with free
                        # phases; divide each by its coordinate in the chart
                        # where the first member is largest before averaging
                        chart = max(range(3), key=lambda k: abs(cs[0][k]))
                        cs = [tuple(x / v[chart] for x in v) for v in cs]
                        avg = tuple(sum(v[k] for v in cs) / len(cs) for k in range(3))
                        centers.append(avg)
                    return roots, clusters, centers
                last_error = "cluster separation below margin"
            else:
                last_error = f"cluster sizes {sizes}, expected {expected}"
        prec *= 2
    raise PrecisionExhausted(
        f"clustering unstable up to {max_precision_bits} bits: {last_error}"
    )
