import hypothesis

from ratcurve.binary_forms import BinaryForm
from ratcurve.curves import CurveParam
from ratcurve.rationals import QQ

hypothesis.settings.register_profile(
    "suite", deadline=None, max_examples=60, derandomize=True
)
hypothesis.settings.load_profile("suite")


def bf(*coeffs) -> BinaryForm:
    """Binary form from ascending t-coefficients."""
    return BinaryForm([QQ(c) for c in coeffs])


def mono(deg: int, **powers) -> BinaryForm:
    """Binary form with monomials given as p<i>=<coeff> (t-exponent i)."""
    coeffs = [QQ(0)] * (deg + 1)
    for key, value in powers.items():
        coeffs[int(key[1:])] = QQ(value)
    return BinaryForm(coeffs)


# worked examples used across the suite

def walkthrough_sextic() -> CurveParam:
    """Degree 6, three ordinary triple points and one node."""
    return CurveParam(
        bf(4, -16, 3, 28, -1, -6, 0),
        bf(0, 4, -12, -41, 99, 10, -24),
        bf(0, 1, -3, -13, 27, 36, 0),
    )


def tacnode_quartic() -> CurveParam:
    """One node and one tacnode."""
    return CurveParam(
        mono(4, p1=1, p3=-3), mono(4, p2=1), mono(4, p0=2, p2=-8, p4=9)
    )


def cusp_quintic() -> CurveParam:
    """One A_4 cusp and four nodes, two of them acnodes."""
    return CurveParam(
        mono(5, p3=1), mono(5, p0=1), mono(5, p0=1, p1=1, p5=1)
    )


def cusp_septic() -> CurveParam:
    """One A_6 cusp and twelve nodes."""
    return CurveParam(
        mono(7, p5=1),
        mono(7, p0=1),
        mono(7, p0=1, p1=1, p4=1, p6=1, p7=1),
    )


def acnode_cubic() -> CurveParam:
    """Nodal cubic whose node is an isolated real point."""
    return CurveParam(
        bf(0, 1, 0, 1), bf(-1, 0, -1, 0), bf(0, 0, 0, -1)
    )


def hidden_triple_quartic() -> CurveParam:
    """Triple point invisible on the real trace except as a smooth branch."""
    return CurveParam(
        bf(1, 0, 1, 0, 0), bf(0, -1, 0, -1, 0), bf(-1, 0, 0, 0, -1)
    )


def three_node_quartic() -> CurveParam:
    """Three ordinary nodes; all preimages explicit radicals."""
    return CurveParam(mono(4, p0=1), mono(4, p1=-1, p3=1), mono(4, p4=1))


def multiplicity_four_quintic() -> CurveParam:
    """One multiplicity-4 point with two double branches."""
    return CurveParam(
        bf(1, 0, 1, -1, 0, 1), bf(0, 0, 1, 1, 0, 0), bf(0, 0, 1, -1, 0, 0)
    )
