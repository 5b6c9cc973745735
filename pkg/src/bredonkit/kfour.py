"""The p = 2 universal-space ring, its localization and level models.

The free-quotient universal space of the Klein four group has cohomology

    F  =  [ F_2[a_b, u_b]  +  (negative cone) ] [a_0, u_0, a_1, u_1, v^+-]
          / ( v u_b - u_0 u_1,  v a_b - a_0 u_1 - u_0 a_1 ).

Since v is invertible the two relations eliminate a_b and u_b, so the
polynomial part is the free ring P = F_2[a_0, u_0, a_1, u_1, v^+-], with
a_b and u_b the displayed combinations.  The negative cone is the rising
union over (J, K) of the level quotients P/(a_b^J, u_b^K): the class
X(j,k) * q ("q over a_b^j u_b^k, desuspended once") is stored as the coset
of the numerator a_b^(J-j) u_b^(K-j') q.  (a_b, u_b) is a regular sequence
in P, and stays regular after inverting a_0 and a_1, so the transition maps
are injective and the per-degree dimension is the stable level dimension.
Levels are picked from the degree data with a margin; tests re-verify
stability by bumping them.

All degrees are cohomological; the one-step suspension in X(j,k) raises
the cohomological degree by one.
"""

from __future__ import annotations

from functools import lru_cache

from .fp import Echelon, GF2Quotient

# P-monomials are exponent tuples over (a_0, u_0, a_1, u_1, v); degree
# coordinates are (c, a0, a1, b).
GEN_DEGREES = (
    (0, 1, 0, 0),   # a_0
    (-1, 1, 0, 0),  # u_0
    (0, 0, 1, 0),   # a_1
    (-1, 0, 1, 0),  # u_1
    (-1, 1, 1, -1),  # v
)

LEVEL_MARGIN = 10


def mono_degree(m: tuple) -> tuple:
    return tuple(
        sum(e * GEN_DEGREES[i][j] for i, e in enumerate(m)) for j in range(4)
    )


def add_coords(x: tuple, y: tuple) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def sub_coords(x: tuple, y: tuple) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def qmul_mono(q: dict, m: tuple) -> dict:
    return {tuple(a + b for a, b in zip(mono, m)): c for mono, c in q.items()}


def qmul(q1: dict, q2: dict) -> dict:
    out: dict = {}
    for m1, c1 in q1.items():
        for m2, c2 in q2.items():
            key = tuple(a + b for a, b in zip(m1, m2))
            c = (out.get(key, 0) + c1 * c2) % 2
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def qadd(q1: dict, q2: dict) -> dict:
    out = dict(q1)
    for m, c in q2.items():
        cc = (out.get(m, 0) + c) % 2
        if cc:
            out[m] = cc
        else:
            out.pop(m, None)
    return out


ONE = {(0, 0, 0, 0, 0): 1}
A_BETA = {(1, 0, 0, 1, -1): 1, (0, 1, 1, 0, -1): 1}  # (a0 u1 + u0 a1) / v
U_BETA = {(0, 1, 0, 1, -1): 1}                        # u0 u1 / v
# images of the three division classes in F
K0_IMG = {(0, 0, 0, 2, -1): 1}  # u1^2 / v
K1_IMG = {(0, 2, 0, 0, -1): 1}  # u0^2 / v
V_IMG = {(0, 0, 0, 0, 1): 1}

LETTER_IMAGES = {
    "a0": {(1, 0, 0, 0, 0): 1},
    "u0": {(0, 1, 0, 0, 0): 1},
    "a1": {(0, 0, 1, 0, 0): 1},
    "u1": {(0, 0, 0, 1, 0): 1},
    "v": V_IMG,
    "v_inv": {(0, 0, 0, 0, -1): 1},
    "a_b": A_BETA,
    "u_b": U_BETA,
    "k0": K0_IMG,
    "k1": K1_IMG,
}


@lru_cache(maxsize=None)
def beta_power(j: int, k: int) -> tuple:
    """a_b^j u_b^k as a sorted tuple of (monomial, 1) pairs."""
    q = ONE
    for _ in range(j):
        q = qmul(q, A_BETA)
    for _ in range(k):
        q = qmul(q, U_BETA)
    return tuple(sorted(q.items()))


def x_degree(j: int, k: int) -> tuple:
    """Degree of the cone class X(j,k): one suspension up, minus j a_b, k u_b."""
    return (1 + k, 0, 0, -(j + k))


@lru_cache(maxsize=None)
def p_monomials(coords: tuple, localized: bool) -> tuple:
    """Monomials of P (localized: of P[a_0^-1, a_1^-1]) in one degree.

    The b-coordinate pins the v-exponent and the c-coordinate pins
    e_{u0} + e_{u1}; the a-coordinates then pin the rest.
    """
    c, a0, a1, b = coords
    e5 = -b
    w = -c - e5
    if w < 0:
        return ()
    out = []
    for e2 in range(0, w + 1):
        e4 = w - e2
        e1 = a0 - e2 - e5
        e3 = a1 - e4 - e5
        if not localized and (e1 < 0 or e3 < 0):
            continue
        out.append((e1, e2, e3, e4, e5))
    return tuple(out)


def level_for(coords: tuple) -> int:
    return abs(coords[0]) + abs(coords[3]) + LEVEL_MARGIN


class LevelCone:
    """The degree piece of the negative cone at a fixed level (J, K).

    Vectors are cosets in P/(a_b^J, u_b^K) (or the a-localized version) at
    the numerator degree; class X(j,k) q corresponds to the numerator
    a_b^(J-j) u_b^(K-k) q.
    """

    def __init__(self, coords: tuple, J: int, K: int, localized: bool):
        self.coords = coords
        self.J, self.K = J, K
        self.localized = localized
        self.pdeg = sub_coords(coords, x_degree(J, K))
        self.monos = p_monomials(self.pdeg, localized)
        self.index = {m: i for i, m in enumerate(self.monos)}
        ideal = []
        for pw, shift in ((beta_power(J, 0), (0, 0, 0, J)),
                          (beta_power(0, K), (-K, 0, 0, K))):
            rest = p_monomials(sub_coords(self.pdeg, shift), localized)
            for m in rest:
                vec = 0
                for mono, _ in pw:
                    key = tuple(a + b for a, b in zip(mono, m))
                    vec ^= 1 << self.index[key]
                ideal.append(vec)
        self.quot = GF2Quotient(len(self.monos), ideal)

    @property
    def dim(self) -> int:
        return self.quot.dim

    def mask_of_q(self, q: dict) -> int:
        vec = 0
        for mono, c in q.items():
            if c % 2:
                idx = self.index.get(mono)
                if idx is None:
                    raise KeyError(f"monomial {mono} not in degree {self.pdeg}")
                vec ^= 1 << idx
        return vec

    def coords_of_class(self, j: int, k: int, q: dict) -> int:
        """Coset coordinates of X(j,k) q, q a P-element dict."""
        if j < 1 or k < 1 or j > self.J or k > self.K:
            raise ValueError(f"cone index ({j},{k}) outside level ({self.J},{self.K})")
        lifted = {}
        for mono, _ in beta_power(self.J - j, self.K - k):
            for m2, c2 in q.items():
                key = tuple(a + b for a, b in zip(mono, m2))
                c = (lifted.get(key, 0) + c2) % 2
                if c:
                    lifted[key] = c
                else:
                    lifted.pop(key, None)
        return self.quot.coords(self.mask_of_q(lifted))

    def coords_of_numerator(self, q: dict) -> int:
        return self.quot.coords(self.mask_of_q(q))

    def rep_monomials(self) -> tuple:
        """P-monomial representatives of the coset basis, in index order."""
        return tuple(self.monos[i] for i in self.quot.reps)


@lru_cache(maxsize=None)
def cone_space(coords: tuple, localized: bool, bump: int = 0) -> LevelCone:
    B = level_for(coords) + bump
    return LevelCone(coords, B, B, localized)


def cone_dim(coords: tuple, localized: bool = False, bump: int = 0) -> int:
    return cone_space(coords, localized, bump).dim


def cone_dim_stable(coords: tuple, localized: bool = False) -> bool:
    """Re-verify the level heuristic by bumping the level."""
    return cone_dim(coords, localized, 0) == cone_dim(coords, localized, 4)


def universal_poly_dim(coords: tuple) -> int:
    return len(p_monomials(coords, False))


def universal_presented_dim(coords: tuple) -> int:
    """Presented dimension of the universal-space ring at one degree:
    free polynomial monomials plus the stable cone dimension."""
    return universal_poly_dim(coords) + cone_dim(coords, False)


# -- subalgebra spans ---------------------------------------------------------

def _phi(coords: tuple) -> int:
    # strictly positive on every letter degree; bounds the product length
    return -coords[0] + coords[1] + coords[2] + coords[3]


class SubAlgebra:
    """Graded span of the subalgebra generated by the given letters.

    span_at returns a reduced basis of the degree piece as P-element dicts;
    the recursion is well-founded because the letter degrees all have
    positive weight -c + a0 + a1 + b.
    """

    def __init__(self, letter_names, localized: bool = False):
        self.letters = tuple(LETTER_IMAGES[n] for n in letter_names)
        self.names = tuple(letter_names)
        self.localized = localized
        for q in self.letters:
            for m in q:
                if _phi(mono_degree(m)) <= 0:
                    raise ValueError("letter with non-positive weight")
        self._memo: dict = {}

    def span_at(self, coords: tuple):
        coords = tuple(coords)
        hit = self._memo.get(coords)
        if hit is not None:
            return hit
        if _phi(coords) < 0:
            self._memo[coords] = ()
            return ()
        if _phi(coords) == 0:
            out = (ONE,) if not any(coords) else ()
            self._memo[coords] = out
            return out
        monos = p_monomials(coords, self.localized)
        index = {m: i for i, m in enumerate(monos)}
        ech = Echelon(len(monos), 2)
        basis = []
        for q in self.letters:
            ldeg = mono_degree(next(iter(q)))
            for w in self.span_at(sub_coords(coords, ldeg)):
                prod = qmul(q, w)
                mask = 0
                ok = True
                for mono, c in prod.items():
                    idx = index.get(mono)
                    if idx is None:
                        ok = False
                        break
                    if c % 2:
                        mask ^= 1 << idx
                if not ok:
                    raise KeyError("subalgebra product left its degree piece")
                if mask and ech.insert(mask):
                    basis.append(prod)
        out = tuple(basis)
        self._memo[coords] = out
        return out


@lru_cache(maxsize=None)
def subalgebra(letter_names: tuple, localized: bool = False) -> SubAlgebra:
    return SubAlgebra(letter_names, localized)
