"""Closed-form transcriptions of the named bounds, written out symbol by symbol.

These deliberately avoid the shared kernel in :mod:`zagreb_bounds.bounds`; the
verification engine uses them to tell a kernel bug from a false claim. The
``printed_*`` functions reproduce four statements exactly as typeset, including
the slips the kernel corrects, so their (in)validity can be measured.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .graph import DegreeSequence


def _sym(ds: DegreeSequence):
    return ds.n, Q(ds.m), ds.Delta, ds.d2, ds.d_nminus1, ds.delta


def _inv(ds: DegreeSequence):
    n, m, D, d2, dn1, dl = _sym(ds)
    ID = sum(Q(1, d) for d in ds.degrees)
    return n, m, Q(1, D), Q(1, d2), Q(1, dn1), Q(1, dl), ID


def pair_form(ds: DegreeSequence, a, b):
    n, m = ds.n, Q(ds.m)
    return 4 * m**2 / n + Q(1, 2) * (a - b) ** 2 + Q(2 * n, n - 2) * (2 * m / n - Q(a + b, 2)) ** 2


def cor_zte2(ds):
    return pair_form(ds, ds.Delta, ds.delta)


def cor_z2te1(ds):
    return pair_form(ds, ds.d_nminus1, ds.delta)


def cor_z2te2(ds):
    return pair_form(ds, ds.Delta, ds.d2)


def cor_zr31(ds):
    n, m, D, d2, dn1, dl = _sym(ds)
    return (D**2 + (2 * m - D) ** 2 / (n - 1) + Q(1, 2) * (d2 - dl) ** 2
            + Q(2 * (n - 1), n - 3) * ((2 * m - D) / (n - 1) - Q(d2 + dl, 2)) ** 2)


def cor_zr32(ds):
    n, m, D, d2, dn1, dl = _sym(ds)
    return (dl**2 + (2 * m - dl) ** 2 / (n - 1) + Q(1, 2) * (D - dn1) ** 2
            + Q(2 * (n - 1), n - 3) * ((2 * m - dl) / (n - 1) - Q(D + dn1, 2)) ** 2)


def cor_xu4(ds):
    n, m, D, d2, dn1, dl = _sym(ds)
    return (D**2 + d2**2 + (2 * m - D - d2) ** 2 / (n - 2) + Q(1, 2) * (dn1 - dl) ** 2
            + Q(2 * (n - 2), n - 4) * ((2 * m - D - d2) / (n - 2) - Q(dn1 + dl, 2)) ** 2)


def cor_z24degree(ds):
    n, m, D, d2, dn1, dl = _sym(ds)
    return (D**2 + dl**2 + (2 * m - D - dl) ** 2 / (n - 2) + Q(1, 2) * (d2 - dn1) ** 2
            + Q(2 * (n - 2), n - 4) * ((2 * m - D - dl) / (n - 2) - Q(d2 + dn1, 2)) ** 2)


def mm1_pair(ds):
    n, m, iD, i2, in1, il, ID = _inv(ds)
    return ID**2 / n + Q(1, 2) * (iD - il) ** 2 + Q(2 * n, n - 2) * (ID / n - (iD + il) / 2) ** 2


def mm1_one(ds):
    n, m, iD, i2, in1, il, ID = _inv(ds)
    return (iD**2 + (ID - iD) ** 2 / (n - 1) + Q(1, 2) * (i2 - il) ** 2
            + Q(2 * (n - 1), n - 3) * ((ID - iD) / (n - 1) - (i2 + il) / 2) ** 2)


def mm1_two(ds):
    n, m, iD, i2, in1, il, ID = _inv(ds)
    return (iD**2 + il**2 + (ID - iD - il) ** 2 / (n - 2) + Q(1, 2) * (i2 - in1) ** 2
            + Q(2 * (n - 2), n - 4) * ((ID - iD - il) / (n - 2) - (i2 + in1) / 2) ** 2)


TRANSCRIPTIONS = {
    "cor_zte2": cor_zte2,
    "cor_z2te1": cor_z2te1,
    "cor_z2te2": cor_z2te2,
    "cor_zr31": cor_zr31,
    "cor_zr32": cor_zr32,
    "cor_xu4": cor_xu4,
    "cor_z24degree": cor_z24degree,
    "mm1_pair": mm1_pair,
    "mm1_one": mm1_one,
    "mm1_two": mm1_two,
}


# -- statements as typeset --------------------------------------------------

def printed_four_degree_leading(ds: DegreeSequence, alpha: int, l: int, mm: int, j: int, k: int):
    """Four-degree bound with unsquared leading terms ``d_l^a + d_m^a``; positions 1-based."""
    n = ds.n
    x = [Q(d) ** alpha for d in ds.degrees]
    z = sum(x)
    xl, xm, xj, xk = x[l - 1], x[mm - 1], x[j - 1], x[k - 1]
    t = (z - xl - xm) / (n - 2)
    return (xl + xm + (z - xl - xm) ** 2 / (n - 2) + Q(1, 2) * (xj - xk) ** 2
            + Q(2 * (n - 2), n - 4) * (t - (xj + xk) / 2) ** 2)


def printed_four_degree_m1(ds: DegreeSequence, j: int, k: int, l: int, mm: int):
    """M1 four-degree form with ``(2m - d_j^2 - d_k^2)^2 / (n-2)`` as typeset."""
    n, m = ds.n, Q(ds.m)
    dj, dk, dl, dm = (ds.d(p) for p in (j, k, l, mm))
    return (dj**2 + dk**2 + (2 * m - dj**2 - dk**2) ** 2 / (n - 2) + Q(1, 2) * (dl - dm) ** 2
            + Q(2 * (n - 2), n - 4) * ((2 * m - dj - dk) / (n - 2) - Q(dl + dm, 2)) ** 2)


def printed_mm1_pair(ds: DegreeSequence):
    """(max, min) modified bound with ``ID/n - 1/Delta + 1/delta`` in the last square."""
    n, m, iD, i2, in1, il, ID = _inv(ds)
    return ID**2 / n + Q(1, 2) * (iD - il) ** 2 + Q(2 * n, n - 2) * (ID / n - iD + il) ** 2


def printed_mm1_one(ds: DegreeSequence):
    """One-removed modified bound with ``(1/d_2 - 1/delta)/2`` in the last square."""
    n, m, iD, i2, in1, il, ID = _inv(ds)
    return (iD**2 + (ID - iD) ** 2 / (n - 1) + Q(1, 2) * (i2 - il) ** 2
            + Q(2 * (n - 1), n - 3) * ((ID - iD) / (n - 1) - (i2 - il) / 2) ** 2)


def theorem_form(ds: DegreeSequence, alpha: int, removed: tuple[int, ...], pair: tuple[int, int]):
    """Two-, three- and four-degree bounds on ``Z_{2 alpha}`` as closed forms (integer alpha)."""
    n = ds.n
    x = [Q(d) ** alpha for d in ds.degrees]
    z = sum(x)
    xj, xk = x[pair[0] - 1], x[pair[1] - 1]
    if len(removed) == 0:
        return z**2 / n + Q(1, 2) * (xj - xk) ** 2 + Q(2 * n, n - 2) * (z / n - (xj + xk) / 2) ** 2
    if len(removed) == 1:
        xl = x[removed[0] - 1]
        return (xl**2 + (z - xl) ** 2 / (n - 1) + Q(1, 2) * (xj - xk) ** 2
                + Q(2 * (n - 1), n - 3) * ((z - xl) / (n - 1) - (xj + xk) / 2) ** 2)
    xl, xm = x[removed[0] - 1], x[removed[1] - 1]
    return (xl**2 + xm**2 + (z - xl - xm) ** 2 / (n - 2) + Q(1, 2) * (xj - xk) ** 2
            + Q(2 * (n - 2), n - 4) * ((z - xl - xm) / (n - 2) - (xj + xk) / 2) ** 2)
