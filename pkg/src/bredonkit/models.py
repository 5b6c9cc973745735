"""Ambient cohomology rings of the free and one-isotropy universal spaces.

Each model is a generator table (the polynomial-and-Laurent part) plus, for
the one-isotropy spaces, an indexed negative-cone family tensored with a
sublist of multiplier generators.  The comparison maps into the free-space
ring send generators to the listed monomial combinations and every
negative-cone class to zero for degree reasons.

Kernel/cokernel questions about the connecting map of the isotropy ladder
reduce to: ker d = preimage under the first comparison map of the image of
the second, computed degree by degree with exact F_p elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import fp
from .degrees import Degree, GroupSpec
from .poly import AmbientElement, GeneratorTable, poly_mul


@dataclass(frozen=True)
class ConeFamily:
    """Negative-cone summand sigma^-1 kappa^eps/(a^j u^k) x multipliers.

    has_kappa enables the exterior eps slot (odd p only); multipliers are
    indices into the owning table.  The degree of the (eps, j, k) class is
    1 + eps|kappa| - j|a| - k|u| in the cone letters' degrees.
    """

    has_kappa: bool
    a_degree: tuple
    u_degree: tuple
    kappa_degree: tuple | None
    multipliers: tuple  # indices into the model table

    def class_degree(self, eps: int, j: int, k: int) -> tuple:
        n = len(self.a_degree)
        out = [0] * n
        out[0] += 1  # suspension raises cohomological degree by one
        for i in range(n):
            out[i] += -j * self.a_degree[i] - k * self.u_degree[i]
            if eps:
                out[i] += self.kappa_degree[i]
        return tuple(out)


@dataclass(frozen=True)
class FreeModel:
    tag: str
    table: GeneratorTable
    cone: ConeFamily | None
    relations: tuple  # names of exterior letters whose squares are relations

    @property
    def group(self) -> GroupSpec:
        return self.table.group

    def basis(self, gamma) -> tuple:
        return _model_basis(self, _coords(gamma, self.group))

    def dim(self, gamma) -> int:
        return len(self.basis(gamma))


def _coords(gamma, group: GroupSpec) -> tuple:
    if isinstance(gamma, Degree):
        return (gamma.c, *gamma.a, gamma.b)
    if isinstance(gamma, int):
        return (gamma,) + (0,) * (group.p + 1)
    return tuple(gamma)


# -- model constructors ------------------------------------------------------

def alpha_degree(p: int, i: int) -> tuple:
    out = [0] * (p + 2)
    out[1 + i] = 1
    return tuple(out)


def beta_degree(p: int) -> tuple:
    out = [0] * (p + 2)
    out[-1] = 1
    return tuple(out)


def c_degree(p: int, c: int) -> tuple:
    return (c,) + (0,) * (p + 1)


def _shift(deg: tuple, c: int) -> tuple:
    return (deg[0] + c,) + deg[1:]


def _minus(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def free_space_model(p: int) -> FreeModel:
    """Cohomology of the free contractible space for C_p x C_p."""
    G = GroupSpec(p)
    if p == 2:
        entries = [
            ("x0", c_degree(2, 1), "polynomial"),
            ("x1", c_degree(2, 1), "polynomial"),
            ("u_a0", _shift(alpha_degree(2, 0), -1), "invertible"),
            ("u_a1", _shift(alpha_degree(2, 1), -1), "invertible"),
            ("u_b", _shift(beta_degree(2), -1), "invertible"),
        ]
        return FreeModel("eg", GeneratorTable.build(G, entries), None, ())
    entries = [
        ("t0", c_degree(p, 1), "exterior"),
        ("t1", c_degree(p, 1), "exterior"),
        ("y0", c_degree(p, 2), "polynomial"),
        ("y1", c_degree(p, 2), "polynomial"),
    ]
    entries += [
        (f"u_a{i}", _shift(alpha_degree(p, i), -2), "invertible") for i in range(p)
    ]
    entries.append(("u_b", _shift(beta_degree(p), -2), "invertible"))
    return FreeModel("eg", GeneratorTable.build(G, entries), None, ("t0", "t1"))


@lru_cache(maxsize=None)
def one_isotropy_model(p: int, i: int) -> FreeModel:
    """Cohomology of the universal space for the family below H_i."""
    G = GroupSpec(p)
    d = 1 if p == 2 else 2
    a_i = alpha_degree(p, i)
    entries = [("a_b", beta_degree(p), "polynomial")]
    if p != 2:
        entries.append(("k_b", _shift(beta_degree(p), -1), "exterior"))
    entries.append(("u_b", _shift(beta_degree(p), -d), "polynomial"))
    entries.append((f"a_a{i}", a_i, "polynomial"))
    if p != 2:
        entries.append((f"k_a{i}", _shift(a_i, -1), "exterior"))
    entries.append((f"u_a{i}", _shift(a_i, -d), "invertible"))
    for j in range(p):
        if j != i:
            entries.append(
                (f"u_d{j}", _minus(alpha_degree(p, j), beta_degree(p)), "invertible")
            )
    table = GeneratorTable.build(G, entries)
    mult = tuple(
        table.index(n)
        for n in table.names
        if n not in ("a_b", "k_b", "u_b")
    )
    cone = ConeFamily(
        has_kappa=(p != 2),
        a_degree=beta_degree(p),
        u_degree=_shift(beta_degree(p), -d),
        kappa_degree=_shift(beta_degree(p), -1) if p != 2 else None,
        multipliers=mult,
    )
    rels = ("k_b", f"k_a{i}") if p != 2 else ()
    return FreeModel(f"ef{i}", table, cone, rels)


# -- degree-piece bases ------------------------------------------------------

@lru_cache(maxsize=None)
def _model_basis(model: FreeModel, coords: tuple) -> tuple:
    """Basis keys of the degree piece: ("t", exps) and ("c", eps, j, k, mexps)."""
    out = []
    p = model.group.p
    if model.tag == "eg":
        out.extend(("t", e) for e in _eg_monomials(p, coords))
    else:
        i = int(model.tag[2:])
        out.extend(("t", e) for e in _ef_table_monomials(model, p, i, coords))
        out.extend(_ef_cone_classes(model, p, i, coords))
    return tuple(sorted(out))


def _eg_monomials(p: int, coords: tuple):
    c, a, b = coords[0], coords[1:-1], coords[-1]
    if p == 2:
        # x0^m x1^n u0^r u1^s ub^t
        r, s, t = a[0], a[1], b
        m_total = c + r + s + t
        for m in range(0, m_total + 1):
            yield (m, m_total - m, r, s, t)
        return
    # t0^e0 t1^e1 y0^d0 y1^d1 u_a*^f u_b^g
    fs, g = list(a), b
    for e0 in (0, 1):
        for e1 in (0, 1):
            rem = c + 2 * sum(fs) + 2 * g - e0 - e1
            if rem < 0 or rem % 2:
                continue
            d_total = rem // 2
            for d0 in range(0, d_total + 1):
                yield (e0, e1, d0, d_total - d0, *fs, g)


def _ef_table_monomials(model: FreeModel, p: int, i: int, coords: tuple):
    c, a, b = coords[0], coords[1:-1], coords[-1]
    gs = [a[j] for j in range(p) if j != i]
    names = model.table.names

    def assemble(vals: dict):
        return tuple(vals.get(n, 0) for n in names)

    if p == 2:
        j = 1 - i
        big_s = b + a[j]
        big_c = -c
        lo = max(0, big_c - a[i])
        for t in range(lo, big_s + 1):
            f = big_c - t
            e = a[i] - f
            s = big_s - t
            if e < 0 or s < 0:
                continue
            yield assemble(
                {"a_b": s, "u_b": t, f"a_a{i}": e, f"u_a{i}": f, f"u_d{j}": a[j]}
            )
        return
    sum_g = sum(gs)
    for eps_b in (0, 1):
        for eps_a in (0, 1):
            big_s = b + sum_g - eps_b
            num = -c - eps_b - eps_a
            if num % 2:
                continue
            big_c = num // 2
            lo = max(0, big_c - a[i] + eps_a)
            for t in range(lo, big_s + 1):
                f = big_c - t
                e = a[i] - eps_a - f
                s = big_s - t
                if e < 0 or s < 0:
                    continue
                vals = {
                    "a_b": s,
                    "k_b": eps_b,
                    "u_b": t,
                    f"a_a{i}": e,
                    f"k_a{i}": eps_a,
                    f"u_a{i}": f,
                }
                for j, g in zip((j for j in range(p) if j != i), gs):
                    vals[f"u_d{j}"] = g
                yield assemble(vals)


def _ef_cone_classes(model: FreeModel, p: int, i: int, coords: tuple):
    c, a, b = coords[0], coords[1:-1], coords[-1]
    names = model.table.names
    gs = {j: a[j] for j in range(p) if j != i}
    sum_g = sum(gs.values())

    def assemble(vals: dict):
        return tuple(vals.get(n, 0) for n in names)

    eps_range = (0, 1) if p != 2 else (0,)
    for eps in eps_range:
        for eps_a in (0, 1) if p != 2 else (0,):
            total = eps - b - sum_g if p != 2 else -b - sum_g
            if total < 2:
                continue
            for k2 in range(1, total):
                k1 = total - k2
                if p == 2:
                    f = 1 + k2 - c
                else:
                    num = c - 1 + eps + eps_a
                    if num % 2:
                        continue
                    f = k2 - num // 2
                e = a[i] - f - (eps_a if p != 2 else 0)
                if e < 0:
                    continue
                vals = {f"a_a{i}": e, f"u_a{i}": f}
                if p != 2:
                    vals[f"k_a{i}"] = eps_a
                for j, g in gs.items():
                    vals[f"u_d{j}"] = g
                yield ("c", eps, k1, k2, assemble(vals))


# -- comparison maps ---------------------------------------------------------

@dataclass(frozen=True)
class GradedMap:
    """Ring map between models, recorded on generators.

    Every generator image must be homogeneous of the generator's own degree
    (checked at construction); negative-cone classes map to zero.
    """

    source: FreeModel
    target: FreeModel
    images: tuple  # parallel to source.table.names: AmbientElements

    def __post_init__(self):
        for name, deg, img in zip(
            self.source.table.names, self.source.table.degrees, self.images
        ):
            d = img.degree()
            if d is not None and d != deg:
                raise ValueError(
                    f"image of {name} has degree {d}, generator has {deg}"
                )

    def image_of_monomial(self, exps: tuple) -> AmbientElement:
        out = AmbientElement.monomial(
            self.target.table, self.target.table.zero_exps(), 1
        )
        for img, e in zip(self.images, exps):
            if e == 0:
                continue
            if e > 0:
                for _ in range(e):
                    out = poly_mul(out, img)
            else:
                if len(img.terms) != 1:
                    raise ValueError("cannot invert a non-monomial image")
                (mexps, coeff), = img.terms.items()
                inv = AmbientElement.monomial(
                    self.target.table,
                    tuple(m * e for m in mexps),
                    pow(fp.inv_mod(coeff, out.p), -e, out.p),
                )
                out = poly_mul(out, inv)
        return out

    def matrix_at(self, gamma):
        """Columns of the map on the degree piece, over the target basis."""
        src = self.source.basis(gamma)
        tgt = self.target.basis(gamma)
        index = {key: n for n, key in enumerate(tgt)}
        cols = []
        for key in src:
            vec = [0] * len(tgt)
            if key[0] == "t":
                img = self.image_of_monomial(key[1])
                for mexps, coeff in img.terms.items():
                    vec[index[("t", mexps)]] = coeff
            cols.append(tuple(vec))
        return src, tgt, cols


@lru_cache(maxsize=None)
def q_map(i: int, p: int) -> GradedMap:
    """Comparison map from the H_i-isotropy model into the free-space model."""
    if not 0 <= i < p:
        raise ValueError(f"subgroup index {i} out of range for p = {p}")
    src = one_isotropy_model(p, i)
    tgt = free_space_model(p)
    T = tgt.table
    gen = lambda n, e=1: AmbientElement.generator(T, n, e)
    images = {}
    if p == 2:
        x0, x1 = gen("x0"), gen("x1")
        images["a_b"] = poly_mul(x0 + x1, gen("u_b"))
        images["u_b"] = gen("u_b")
        images[f"a_a{i}"] = poly_mul(gen(f"x{i}"), gen(f"u_a{i}"))
        images[f"u_a{i}"] = gen(f"u_a{i}")
        j = 1 - i
        images[f"u_d{j}"] = poly_mul(gen(f"u_a{j}"), gen("u_b", -1))
    else:
        t0, t1, y0, y1 = gen("t0"), gen("t1"), gen("y0"), gen("y1")
        images["a_b"] = poly_mul(y1, gen("u_b"))
        images["k_b"] = poly_mul(t1, gen("u_b"))
        images["u_b"] = gen("u_b")
        images[f"a_a{i}"] = poly_mul(y0 - y1.scale(i), gen(f"u_a{i}"))
        images[f"k_a{i}"] = poly_mul(t0 - t1.scale(i), gen(f"u_a{i}"))
        images[f"u_a{i}"] = gen(f"u_a{i}")
        for j in range(p):
            if j != i:
                images[f"u_d{j}"] = poly_mul(gen(f"u_a{j}"), gen("u_b", -1))
    return GradedMap(src, tgt, tuple(images[n] for n in src.table.names))


def ring_map_relation_check(f: GradedMap):
    """Images of the source relations (exterior squares); all must vanish."""
    report = {}
    for name in f.source.relations:
        idx = f.source.table.index(name)
        exps = list(f.source.table.zero_exps())
        exps[idx] = 2
        sq = f.image_of_monomial(tuple(exps))
        # square of the image, not of the (exterior-truncated) monomial
        img = f.images[idx]
        report[f"{name}^2"] = poly_mul(img, img).is_zero() and sq is not None
    return report


def graded_ker_coker(f: GradedMap, gamma):
    """(kernel dim, cokernel dim, kernel basis coefficients) at one degree."""
    src, tgt, cols = f.matrix_at(gamma)
    p = f.source.group.p
    rank = fp.span_rank(cols, len(tgt), p)
    rows = [tuple(col[i] for col in cols) for i in range(len(tgt))]
    _, kernel = fp.rank_and_kernel(rows, len(cols), p)
    return len(cols) - rank, len(tgt) - rank, kernel


# -- the connecting map of the two-subgroup ladder ---------------------------

def boundary_pieces(p: int, gamma):
    if not isinstance(gamma, tuple):
        gamma = _coords(gamma, GroupSpec(p))
    return _boundary_pieces_cached(p, gamma)


@lru_cache(maxsize=None)
def _boundary_pieces_cached(p: int, gamma: tuple):
    """Dimensions feeding the connecting map d at one degree.

    Returns dict with q0/q1 data at gamma: source dims, image bases, kernel
    dims and the intersection of the two images inside the free model.
    """
    q0, q1 = q_map(0, p), q_map(1, p)
    src0, tgt, cols0 = q0.matrix_at(gamma)
    src1, _, cols1 = q1.matrix_at(gamma)
    n = len(tgt)
    inter = fp.intersect_spans(
        [c for c in cols0 if any(c)], [c for c in cols1 if any(c)], n, p
    )
    k0 = fp.matrix_kernel_dim(cols0, n, p)
    k1 = fp.matrix_kernel_dim(cols1, n, p)
    r1 = fp.span_rank(cols1, n, p)
    return {
        "dim_ef0": len(src0),
        "dim_ef1": len(src1),
        "dim_eg": n,
        "ker_q0": k0,
        "ker_q1": k1,
        "rank_q1": r1,
        "intersection": len(inter),
    }


def boundary0_ker_coker(gamma, p: int):
    """Kernel and cokernel dimensions of the ladder's connecting map at gamma.

    ker d = preimage under q0 of im q0 & im q1; the cokernel lives in the
    next cofiber piece, whose dimension is coker q1 at gamma plus ker q1 one
    degree up.
    """
    here = boundary_pieces(p, gamma)
    ker_d = here["ker_q0"] + here["intersection"]
    up = _coords(gamma, GroupSpec(p))
    gamma_up = (up[0] + 1,) + up[1:]
    above = boundary_pieces(p, gamma_up)
    dim_cofiber_up = (here["dim_eg"] - here["rank_q1"]) + above["ker_q1"]
    im_d = here["dim_ef0"] - ker_d
    return ker_d, dim_cofiber_up - im_d


def universal_space_dim(gamma, p: int) -> int:
    """dim of the two-subgroup universal space's cohomology at gamma.

    Short exact sequence bookkeeping: ker d at gamma plus coker d one degree
    below.  For p = 2 this is the full free-quotient universal space; for
    odd p it is the first stage of the isotropy tower.
    """
    up = _coords(gamma, GroupSpec(p))
    gamma_down = (up[0] - 1,) + up[1:]
    ker_here, _ = boundary0_ker_coker(gamma, p)
    _, coker_below = boundary0_ker_coker(gamma_down, p)
    return ker_here + coker_below


# -- the Laurent-quotient projection -----------------------------------------

def laurent_cone_quotient(n: int, m: int):
    """Piecewise projection of x^n y^m onto the anti-diagonal cone.

    Returns the image monomial as an (x-exponent, y-exponent) pair, or None
    for zero.  The kernel is spanned by the monomials of F_p[x/y, y/x, x, y],
    i.e. those with n + m >= 0.
    """
    if n >= 0 and m >= 0:
        return None
    if n < 0 and m < 0:
        return (-n, -m)
    if m < 0 <= n and m + n < 0:
        # y^-(m+n) (x/y)^n
        return (n, -(m + n) - n)
    if n < 0 <= m and m + n < 0:
        # x^-(n+m) (x/y)^m
        return (-(n + m) + m, -m)
    return None


def laurent_cone_contains(a: int, b: int) -> bool:
    """Membership in the projection's stated codomain x^a y^b: a >= 0, a+b >= 1."""
    return a >= 0 and a + b >= 1
