"""Tate-square pipeline for the Klein four group.

Corners, all graded cohomologically:

    F   the universal-space ring (borel corner),
    T   = F with a_0, a_1 inverted (geometric corner),
    Q   = ker L + (coker L shifted up one) (quotient corner),
    TR  = [point ring at beta-degrees + Q at beta-degrees] twisted by
          invertible powers of a_0, a_1 (target corner),

with L: F -> T the localization.  The connecting map d: TR^g -> Q^(g+1)
kills the point-ring part and sends a twisted coset to the coset of its
twisted representative modulo im L; the point ring is reassembled as
ker d at g plus coker d entering at g.  Membership of a^(-i)-classes in
ker d is governed by the admissible exponent range computed from the
binomial support in characteristic two.
"""

from __future__ import annotations

from functools import lru_cache

from .degrees import Degree, GroupSpec
from .fp import Echelon, GF2Quotient
from .kfour import (
    cone_space,
    mono_degree,
    p_monomials,
    sub_coords,
    x_degree,
)
from .mackey import mp_dim
from .degrees import SubDegree

SEARCH_CAP = 16  # representative-search bound; configurable via functions below


def _coords(gamma) -> tuple:
    if isinstance(gamma, Degree):
        return (gamma.c, *gamma.a, gamma.b)
    return tuple(gamma)


# -- the admissible exponent range -------------------------------------------

def binomial_support(l: int) -> tuple:
    """All b in [0, l] with C(l, b) odd (submasks, by Lucas)."""
    return tuple(b for b in range(l + 1) if (b & l) == b)


def b_s(l: int, j: int) -> int:
    """Smallest odd-binomial exponent b of l with j + b - l > 0; exists for j >= 1."""
    for b in binomial_support(l):
        if j + b - l > 0:
            return b
    raise ValueError("no admissible binomial exponent; requires j >= 1")


def xi(n: int, m: int, l: int, i: int, j: int):
    """Admissible u_b-cone exponents k for the twisted class x(k).

    Returns ("range", hi) meaning k in [1, hi] (empty when hi < 1), or
    ("all",) when every k >= 1 is admissible.
    """
    if min(n, m, l) < 0 or min(i, j) < 1:
        raise ValueError("need n, m, l >= 0 and i, j >= 1")
    bs = b_s(l, j)
    if i - bs > 0:
        return ("range", 2 * n + bs + m)
    return ("all",)


def xi_contains(n: int, m: int, l: int, i: int, j: int, k: int) -> bool:
    kind = xi(n, m, l, i, j)
    if kind[0] == "all":
        return k >= 1
    return 1 <= k <= kind[1]


# -- T, L, coker L ------------------------------------------------------------

@lru_cache(maxsize=None)
def t_layout(coords: tuple):
    """Coordinate layout of T at one degree: localized monomials then cone."""
    monos = p_monomials(coords, True)
    cs = cone_space(coords, True)
    index = {m: i for i, m in enumerate(monos)}
    return monos, index, cs


def t_dim(coords: tuple) -> int:
    monos, _, cs = t_layout(coords)
    return len(monos) + cs.dim


@lru_cache(maxsize=None)
def im_l_vectors(coords: tuple) -> tuple:
    """Images of the borel-corner basis inside T, as T-coordinate masks."""
    monos_t, index_t, cs_t = t_layout(coords)
    off = len(monos_t)
    vecs = []
    for m in p_monomials(coords, False):
        vecs.append(1 << index_t[m])
    cs = cone_space(coords, False)
    for m in cs.rep_monomials():
        mask = cs_t.coords_of_numerator(m)
        if mask:
            vecs.append(mask << off)
    return tuple(vecs)


@lru_cache(maxsize=None)
def coker_l(coords: tuple) -> GF2Quotient:
    return GF2Quotient(t_dim(coords), im_l_vectors(coords))


@lru_cache(maxsize=None)
def ker_l_dim(coords: tuple) -> int:
    """dim ker(L) at one degree; the kernel sits inside the cone part."""
    cs = cone_space(coords, False)
    cs_t = t_layout(coords)[2]
    ech = Echelon(cs_t.dim, 2)
    rank = 0
    for m in cs.rep_monomials():
        if ech.insert(cs_t.coords_of_numerator(m)):
            rank += 1
    return cs.dim - rank


def quotient_corner_dim(gamma) -> int:
    """dim of the quotient corner Q at one degree: ker L here plus coker L
    one degree down (the suspension shifts the cokernel up by one)."""
    coords = _coords(gamma)
    below = (coords[0] - 1,) + coords[1:]
    return ker_l_dim(coords) + coker_l(below).dim


# -- TR and the connecting map -------------------------------------------------

@lru_cache(maxsize=None)
def tr_basis(coords: tuple) -> tuple:
    """Basis keys of the target corner at one degree.

    ("M",) is the beta-graded point-ring class (at most one per degree);
    ("Q", r) are the coker-L representatives at the beta-graded degree,
    twisted by a_0^(a0-coord) a_1^(a1-coord).
    """
    c, a0, a1, b = coords
    keys = []
    if mp_dim(SubDegree(c, b, GroupSpec(2, "C2")), 2):
        keys.append(("M",))
    beta_part = (c, 0, 0, b)
    keys.extend(("Q", r) for r in coker_l(beta_part).reps)
    return tuple(keys)


@lru_cache(maxsize=None)
def boundary_matrix(coords: tuple) -> tuple:
    """Columns of d: TR at coords -> coker L at coords (coset coordinates)."""
    c, a0, a1, b = coords
    beta_part = (c, 0, 0, b)
    monos_src, _, cs_src = t_layout(beta_part)
    monos_tgt, index_tgt, cs_tgt = t_layout(coords)
    off_src = len(monos_src)
    off_tgt = len(monos_tgt)
    ck = coker_l(coords)
    twist = (a0, 0, a1, 0, 0)
    src_reps_c = cs_src.rep_monomials()
    cols = []
    for key in tr_basis(coords):
        if key[0] == "M":
            cols.append(0)
            continue
        r = key[1]
        if r < off_src:
            m = monos_src[r]
            m2 = tuple(x + y for x, y in zip(m, twist))
            tvec = 1 << index_tgt[m2]
        else:
            m = src_reps_c[r - off_src]
            m2 = tuple(x + y for x, y in zip(m, twist))
            tvec = cs_tgt.coords_of_numerator(m2) << off_tgt
        cols.append(ck.coords(tvec))
    return tuple(cols)


def boundary_ker_coker(gamma):
    """(dim ker d, dim coker d) of the connecting map leaving one degree."""
    coords = _coords(gamma)
    cols = boundary_matrix(coords)
    ech = Echelon(coker_l(coords).dim, 2)
    rank = sum(1 for cvec in cols if cvec and ech.insert(cvec))
    above = (coords[0] + 1,) + coords[1:]
    ker = len(cols) - rank
    coker = quotient_corner_dim(above) - rank
    return ker, coker


def reconstruct_point_dim(gamma) -> int:
    """Point-ring dimension at gamma from the Tate square alone:
    ker d at gamma plus coker d entering the quotient corner at gamma."""
    coords = _coords(gamma)
    ker_here, _ = boundary_ker_coker(coords)
    below = (coords[0] - 1,) + coords[1:]
    cols_below = boundary_matrix(below)
    ech = Echelon(coker_l(below).dim, 2)
    rank_below = sum(1 for cvec in cols_below if cvec and ech.insert(cvec))
    coker_into_here = quotient_corner_dim(coords) - rank_below
    return ker_here + coker_into_here


# -- direct evaluation of d on twisted cone classes ---------------------------

def twisted_class_in_kernel(n: int, m: int, l: int, i: int, j: int, k: int) -> bool:
    """Evaluate d on x(k) = a_1^-i k'_1^n u_0^m a_0^l X(j,k) directly.

    The value is the coset of the named numerator modulo im L; zero coset
    means kernel membership.  Independent of the admissible-range formula.
    """
    # k'_1 = u_0^2 / v in the localized ring
    mono = (l, 2 * n + m, -i, 0, -n)
    coords = tuple(
        a + b for a, b in zip(x_degree(j, k), mono_degree(mono))
    )
    monos_t, _, cs_t = t_layout(coords)
    tvec = cs_t.coords_of_numerator({mono: 1}) << len(monos_t)
    return coker_l(coords).contains_zero_coset(tvec)


def geometric_corner_dim(gamma) -> int:
    return t_dim(_coords(gamma))


def localization_exact(gamma) -> bool:
    """ker L + im L dimensions add up to the borel corner's dimension."""
    coords = _coords(gamma)
    f_dim = len(p_monomials(coords, False)) + cone_space(coords, False).dim
    rank = f_dim - ker_l_dim(coords)
    ech = Echelon(t_dim(coords), 2)
    got = sum(1 for v in im_l_vectors(coords) if ech.insert(v))
    return got == rank


def cross_check_rows(c_max: int, a_max: int, b_max: int):
    """(degree string, presented, reconstructed, match) over a window."""
    from .degrees import degree_window, format_degree
    from .presentations import point_ring_dim

    rows = []
    for gamma in degree_window(GroupSpec(2), c_max, a_max, b_max):
        pres = point_ring_dim(gamma)
        reco = reconstruct_point_dim(gamma)
        rows.append((format_degree(gamma), pres, reco, pres == reco))
    return rows
