"""Builders for the presented-ring catalog.

Each builder returns a JSON-able dict: generators (name, degree, flavor),
relation instances (lists of [coeff, exponent-map] terms), and generator
images in the ambient free-space model.  The shipped data files are the
runtime source of truth; a test regenerates them from here and compares.

Generator degrees that are not forced by a printed value are computed from
the images, so homogeneity holds by construction and is still re-asserted
at load time.
"""

from __future__ import annotations

from itertools import combinations

from .fp import inv_mod


def _term(coeff: int, **exps) -> list:
    return [coeff, {k: v for k, v in exps.items() if v}]


def _mono_image(coeff: int, exps: dict) -> list:
    return [[coeff, dict(exps)]]


def subsets(pool, min_size):
    for r in range(min_size, len(pool) + 1):
        yield from combinations(sorted(pool), r)


def set_name(prefix: str, s) -> str:
    return prefix + "_" + "".join(str(x) for x in s)


# -- p = 2 presets -------------------------------------------------------------

def build_k4_universal() -> dict:
    gens = [
        ("a_b", "polynomial"), ("u_b", "polynomial"),
        ("a_a0", "polynomial"), ("u_a0", "polynomial"),
        ("a_a1", "polynomial"), ("u_a1", "polynomial"),
        ("v", "invertible"),
    ]
    images = {
        "a_b": [[1, {"x0": 1, "u_b": 1}], [1, {"x1": 1, "u_b": 1}]],
        "u_b": _mono_image(1, {"u_b": 1}),
        "a_a0": _mono_image(1, {"x0": 1, "u_a0": 1}),
        "u_a0": _mono_image(1, {"u_a0": 1}),
        "a_a1": _mono_image(1, {"x1": 1, "u_a1": 1}),
        "u_a1": _mono_image(1, {"u_a1": 1}),
        "v": _mono_image(1, {"u_a0": 1, "u_a1": 1, "u_b": -1}),
    }
    relations = {
        "v*u_b = u_a0*u_a1": [
            _term(1, v=1, u_b=1), _term(-1, u_a0=1, u_a1=1)],
        "v*a_b = a_a0*u_a1 + u_a0*a_a1": [
            _term(1, v=1, a_b=1), _term(-1, a_a0=1, u_a1=1),
            _term(-1, u_a0=1, a_a1=1)],
    }
    families = [{
        "base": "S^-1 1/(a_b^j u_b^k)",
        "indices": {"j": ">=1", "k": ">=1"},
        "degree": "(1 + k) - (j + k) beta",
        "multipliers": ["a_a0", "u_a0", "a_a1", "u_a1", "v", "v^-1"],
    }]
    return {"preset": "k4-universal", "prime": 2, "model": "eg",
            "generators": gens, "images": images, "relations": relations,
            "families": families}


def build_k4_point() -> dict:
    gens = [
        ("a_b", "polynomial"), ("u_b", "polynomial"),
        ("a_a0", "polynomial"), ("u_a0", "polynomial"),
        ("a_a1", "polynomial"), ("u_a1", "polynomial"),
        ("k0", "polynomial"), ("k1", "polynomial"), ("v", "polynomial"),
    ]
    images = {
        "a_b": [[1, {"x0": 1, "u_b": 1}], [1, {"x1": 1, "u_b": 1}]],
        "u_b": _mono_image(1, {"u_b": 1}),
        "a_a0": _mono_image(1, {"x0": 1, "u_a0": 1}),
        "u_a0": _mono_image(1, {"u_a0": 1}),
        "a_a1": _mono_image(1, {"x1": 1, "u_a1": 1}),
        "u_a1": _mono_image(1, {"u_a1": 1}),
        "k0": _mono_image(1, {"u_b": 1, "u_a1": 1, "u_a0": -1}),
        "k1": _mono_image(1, {"u_b": 1, "u_a0": 1, "u_a1": -1}),
        "v": _mono_image(1, {"u_a0": 1, "u_a1": 1, "u_b": -1}),
    }
    relations = {
        "(1) k0*u_a0 = u_a1*u_b": [
            _term(1, k0=1, u_a0=1), _term(-1, u_a1=1, u_b=1)],
        "(2) k1*u_a1 = u_a0*u_b": [
            _term(1, k1=1, u_a1=1), _term(-1, u_a0=1, u_b=1)],
        "(3) v*u_b = u_a0*u_a1": [
            _term(1, v=1, u_b=1), _term(-1, u_a0=1, u_a1=1)],
        "(4) k0*a_a0 = a_b*u_a1 + a_a1*u_b": [
            _term(1, k0=1, a_a0=1), _term(-1, a_b=1, u_a1=1),
            _term(-1, a_a1=1, u_b=1)],
        "(5) k1*a_a1 = a_b*u_a0 + a_a0*u_b": [
            _term(1, k1=1, a_a1=1), _term(-1, a_b=1, u_a0=1),
            _term(-1, a_a0=1, u_b=1)],
        "(6) v*a_b = a_a0*u_a1 + a_a1*u_a0": [
            _term(1, v=1, a_b=1), _term(-1, a_a0=1, u_a1=1),
            _term(-1, a_a1=1, u_a0=1)],
        "(7) k0*k1 = u_b^2": [_term(1, k0=1, k1=1), _term(-1, u_b=2)],
        "(8) k0*v = u_a1^2": [_term(1, k0=1, v=1), _term(-1, u_a1=2)],
        "(9) k1*v = u_a0^2": [_term(1, k1=1, v=1), _term(-1, u_a0=2)],
    }
    families = [
        {"base": "S^-1 1/(a_b^j u_b^k)",
         "multipliers": ["a_a0", "a_a1", "u_a0", "u_a1", "v", "k0", "k1"]},
        {"base": "S^-1 1/(a_a0^j u_a0^k)",
         "multipliers": ["a_b", "a_a1", "u_b", "u_a1", "v", "k0", "k1"]},
        {"base": "S^-1 1/(a_a1^j u_a1^k)",
         "multipliers": ["a_b", "a_a0", "u_b", "u_a0", "v", "k0", "k1"]},
        {"base": "a_a1^-i k1^n u_a0^m a_a0^l S^-1 1/(a_b^j u_b^k)",
         "constraints": "b_s < i and k <= 2n + b_s + m",
         "multipliers": ["u_a1", "k0", "v"]},
        {"base": "a_a0^-i k0^n u_a1^m a_a1^l S^-1 1/(a_b^j u_b^k)",
         "constraints": "b_s < i and k <= 2n + b_s + m",
         "multipliers": ["u_a0", "k1", "v"]},
        {"base": "a_a1^-i k1^n u_b^m a_b^l S^-1 1/(a_a0^j u_a0^k)",
         "constraints": "b_s < i and k <= 2n + b_s + m",
         "multipliers": ["u_a1", "v", "k0"]},
        {"base": "a_a0^-i k0^n u_b^m a_b^l S^-1 1/(a_a1^j u_a1^k)",
         "constraints": "b_s < i and k <= 2n + b_s + m",
         "multipliers": ["u_a0", "v", "k1"]},
        {"base": "S^-1 1/(a_b^s u_b^t) * S^-1 1/(a_a0^j u_a0^k)",
         "multipliers": ["a_a1", "a_a1^-1", "u_a1", "v", "k0", "k1"]},
        {"base": "S^-1 1/(a_b^s u_b^t) * S^-1 1/(a_a1^j u_a1^k)",
         "multipliers": ["a_a0", "a_a0^-1", "u_a0", "v", "k0", "k1"]},
    ]
    identifications = [
        "(10) k0 * S^-1 1/(a_a1 u_a1) = k1 * S^-1 1/(a_a0 u_a0)",
        "(11) k_r * S^-1 1/(a_b u_b) = v * S^-1 1/(a_ar u_ar), r = 0, 1",
    ]
    return {"preset": "k4-point", "prime": 2, "model": "eg",
            "generators": gens, "images": images, "relations": relations,
            "families": families, "identifications": identifications}


def build_bc2() -> dict:
    gens = [
        ("a_b", "polynomial"), ("u_b", "polynomial"),
        ("c", "polynomial"), ("w", "polynomial"),
    ]
    # classifying-space classes: c = u_a0 a_a1 / v, w = a_a0 a_a1 / v
    images = {
        "a_b": [[1, {"x0": 1, "u_b": 1}], [1, {"x1": 1, "u_b": 1}]],
        "u_b": _mono_image(1, {"u_b": 1}),
        "c": _mono_image(1, {"x1": 1, "u_b": 1}),
        "w": _mono_image(1, {"x0": 1, "x1": 1, "u_b": 1}),
    }
    relations = {
        "c^2 = a_b*c + u_b*w": [
            _term(1, c=2), _term(-1, a_b=1, c=1), _term(-1, u_b=1, w=1)],
    }
    families = [{"base": "S^-1 1/(a_b^j u_b^k)", "multipliers": ["c", "w"]}]
    return {"preset": "bc2", "prime": 2, "model": "eg",
            "generators": gens, "images": images, "relations": relations,
            "families": families}


# -- odd-p presets --------------------------------------------------------------

def _odd_point_images(p: int) -> dict:
    """Images in the free-space model F_p[t0,t1,y0,y1,u_a*^pm,u_b^pm]/(t^2)."""

    def u_of(j):
        return "u_b" if j == p else f"u_a{j}"

    images = {
        "a_b": _mono_image(1, {"y1": 1, "u_b": 1}),
        "k_b": _mono_image(1, {"t1": 1, "u_b": 1}),
        "u_b": _mono_image(1, {"u_b": 1}),
    }
    for i in range(p):
        images[f"a_a{i}"] = [[1, {"y0": 1, f"u_a{i}": 1}],
                             [-i % p, {"y1": 1, f"u_a{i}": 1}]]
        images[f"k_a{i}"] = [[1, {"t0": 1, f"u_a{i}": 1}],
                             [-i % p, {"t1": 1, f"u_a{i}": 1}]]
        images[f"u_a{i}"] = _mono_image(1, {f"u_a{i}": 1})

    def prod_u(S, denom_name, denom_exp, extra):
        base = dict(extra)
        for j in S:
            base[u_of(j)] = base.get(u_of(j), 0) + 1
        base[denom_name] = base.get(denom_name, 0) - denom_exp
        return base

    # v_S = prod u / u_b^{|S|-1}, over subsets of [p-1]
    for S in subsets(range(p), 1):
        images[set_name("v", S)] = _mono_image(
            1, prod_u(S, "u_b", len(S) - 1, {}))
    # w_T, z_T: top classes over subsets of [p-1] of size >= 3
    for T in subsets(range(p), 3):
        s0, s1 = T[0], T[1]
        lead = (s0 - s1) % p
        images[set_name("w", T)] = _mono_image(
            lead, prod_u(T, "u_b", len(T) - 2, {"t0": 1, "t1": 1}))
        images[set_name("z", T)] = [
            [lead, prod_u(T, "u_b", len(T) - 2, {"t0": 1, "y1": 1})],
            [-lead % p, prod_u(T, "u_b", len(T) - 2, {"t1": 1, "y0": 1})],
        ]
    # k/phi/psi: the division classes for each subgroup H_i
    for i in range(p):
        pool = [j for j in range(p + 1) if j != i]
        for S in subsets(pool, 2):
            images[set_name(f"k{i}", S)] = _mono_image(
                1, prod_u(S, f"u_a{i}", len(S) - 1, {}))
        for T in subsets(pool, 3):
            s0, s1 = T[0], T[1]
            lead = (s0 - s1) % p
            images[set_name(f"f{i}", T)] = _mono_image(
                lead, prod_u(T, f"u_a{i}", len(T) - 2, {"t0": 1, "t1": 1}))
            images[set_name(f"s{i}", T)] = [
                [lead, prod_u(T, f"u_a{i}", len(T) - 2, {"t0": 1, "y1": 1})],
                [-lead % p, prod_u(T, f"u_a{i}", len(T) - 2, {"t1": 1, "y0": 1})],
            ]
    return images


def _division_relations(p: int, has_u_gens: bool) -> dict:
    """Relation instances among the v-classes (singletons are u's when present)."""
    rels = {}

    def vname(S):
        S = tuple(sorted(S))
        if len(S) == 1 and has_u_gens:
            return f"u_a{S[0]}"
        return set_name("v", S)

    # products: v_S1 v_S2 = v_union u_b (disjoint) or v_union v_inter
    for S1 in subsets(range(p), 1):
        for S2 in subsets(range(p), 1):
            if S1 >= S2:
                continue
            union = tuple(sorted(set(S1) | set(S2)))
            inter = tuple(sorted(set(S1) & set(S2)))
            lhs = [[1, _merge({vname(S1): 1}, {vname(S2): 1})]]
            if not inter:
                rhs = [[-1 % p, _merge({vname(union): 1}, {"u_b": 1})]]
            elif inter == S1:
                continue  # v_S1 v_S2 = v_S2 v_S1, nothing to check
            else:
                rhs = [[-1 % p, _merge({vname(union): 1}, {vname(inter): 1})]]
            rels[f"v{S1}*v{S2}"] = lhs + rhs
    # a_b and k_b trade across a subset against the two smallest legs
    for S in subsets(range(p), 2):
        j1, j2 = S[0], S[1]
        m = inv_mod(j2 - j1, p)
        for top, leg in (("a_b", "a_a"), ("k_b", "k_a")):
            rels[f"v{S}*{top}"] = [
                [1, _merge({vname(S): 1}, {top: 1})],
                [-m % p, _merge({vname(tuple(x for x in S if x != j1)): 1},
                                {f"{leg}{j1}": 1})],
                [m % p, _merge({vname(tuple(x for x in S if x != j2)): 1},
                               {f"{leg}{j2}": 1})],
            ]
    return rels


def _merge(*dicts) -> dict:
    out = {}
    for d in dicts:
        for k, v in d.items():
            out[k] = out.get(k, 0) + v
    return out


def build_cp_universal(p: int) -> dict:
    """Polynomial part of the free-quotient universal space, odd p."""
    images = _odd_point_images(p)
    gens = [("a_b", "polynomial"), ("k_b", "exterior"), ("u_b", "polynomial")]
    keep = {"a_b", "k_b", "u_b"}
    for i in range(p):
        gens += [(f"a_a{i}", "polynomial"), (f"k_a{i}", "exterior")]
        keep |= {f"a_a{i}", f"k_a{i}"}
    for S in subsets(range(p), 1):
        name = set_name("v", S)
        flavor = "invertible" if len(S) == p else "polynomial"
        gens.append((name, flavor))
        keep.add(name)
    for T in subsets(range(p), 3):
        gens += [(set_name("w", T), "exterior"), (set_name("z", T), "exterior")]
        keep |= {set_name("w", T), set_name("z", T)}
    images = {k: v for k, v in images.items() if k in keep}
    rels = _division_relations(p, set_name, has_u_gens=False)
    # the top classes against enough orientation data to pin them down
    for T in subsets(range(p), 3):
        s0, s1 = T[0], T[1]
        rest = tuple(x for x in T if x not in (s0, s1))
        lead = (s0 - s1) % p
        rels[f"w{T} def"] = [
            [1, _merge({set_name("w", T): 1}, {"u_b": len(T) - 2})],
            [-lead % p, _merge({f"k_a{s0}": 1}, {f"k_a{s1}": 1},
                               *({set_name("v", (d,)): 1} for d in rest))],
        ]
        rels[f"z{T} def"] = [
            [1, _merge({set_name("z", T): 1}, {"u_b": len(T) - 2})],
            [-lead % p, _merge({f"k_a{s0}": 1}, {f"a_a{s1}": 1},
                               *({set_name("v", (d,)): 1} for d in rest))],
            [lead % p, _merge({f"k_a{s1}": 1}, {f"a_a{s0}": 1},
                              *({set_name("v", (d,)): 1} for d in rest))],
        ]
    return {"preset": f"cp-universal-p{p}", "prime": p, "model": "eg",
            "generators": gens, "images": images, "relations": rels,
            "families": []}


def build_cp_point(p: int) -> dict:
    """Polynomial part of the point ring, odd p, with the division classes."""
    images = _odd_point_images(p)
    gens = [("a_b", "polynomial"), ("k_b", "exterior"), ("u_b", "polynomial")]
    for i in range(p):
        gens += [(f"a_a{i}", "polynomial"), (f"k_a{i}", "exterior"),
                 (f"u_a{i}", "polynomial")]
    for S in subsets(range(p), 2):
        gens.append((set_name("v", S), "polynomial"))
    for T in subsets(range(p), 3):
        gens += [(set_name("w", T), "exterior"), (set_name("z", T), "exterior")]
    for i in range(p):
        pool = [j for j in range(p + 1) if j != i]
        for S in subsets(pool, 2):
            gens.append((set_name(f"k{i}", S), "polynomial"))
        for T in subsets(pool, 3):
            gens += [(set_name(f"f{i}", T), "exterior"),
                     (set_name(f"s{i}", T), "exterior")]
    keep = {n for n, _ in gens}
    images = {k: v for k, v in images.items() if k in keep}

    def u_of(j):
        return "u_b" if j == p else f"u_a{j}"

    rels = _division_relations(p, set_name, has_u_gens=True)
    for i in range(p):
        pool = [j for j in range(p + 1) if j != i]
        for S in subsets(pool, 2):
            rels[f"k({i}){S} division"] = [
                [1, _merge({set_name(f"k{i}", S): 1}, {f"u_a{i}": len(S) - 1})],
                [-1 % p, _merge(*({u_of(j): 1} for j in S))],
            ]
        for T in subsets(pool, 3):
            s0, s1 = T[0], T[1]
            rest = tuple(x for x in T if x not in (s0, s1))
            rels[f"f({i}){T} division"] = [
                [1, _merge({set_name(f"f{i}", T): 1}, {f"u_a{i}": len(T) - 2})],
                [-1 % p, _merge({f"k_a{s0}": 1}, {f"k_a{s1}": 1},
                                *({u_of(j): 1} for j in rest))],
            ]
            rels[f"s({i}){T} division"] = [
                [1, _merge({set_name(f"s{i}", T): 1}, {f"u_a{i}": len(T) - 2})],
                [-1 % p, _merge({f"k_a{s0}": 1}, {f"a_a{s1}": 1},
                                *({u_of(j): 1} for j in rest))],
                [1, _merge({f"k_a{s1}": 1}, {f"a_a{s0}": 1},
                           *({u_of(j): 1} for j in rest))],
            ]
    return {"preset": f"cp-point-p{p}", "prime": p, "model": "eg",
            "generators": gens, "images": images, "relations": rels,
            "families": []}


def build_bcp_poly(p: int) -> dict:
    """Polynomial part of the classifying space of Z/p inside C_p, odd p.

    Degrees are the beta-graded line of the rank-two lattice.  One product
    in the printed relation list does not vanish under the generator
    images and is replaced by the two exterior products that do.
    """
    prods = [("y0", 1)]
    for j in range(1, p):
        prods.append((f"prod{j}", j))
    images = {
        "a_b": _mono_image(1, {"y1": 1, "u_b": 1}),
        "k_b": _mono_image(1, {"t1": 1, "u_b": 1}),
        "u_b": _mono_image(1, {"u_b": 1}),
        "nu": _mono_image(1, {"t0": 1, "u_b": 1}),
        "c": _mono_image(1, {"y0": 1, "u_b": 1}),
        "xi_c": _mono_image((p - 1) % p, {"t0": 1, "t1": 1, "u_b": 1}),
        "eta_c": [
            [(p - 1) % p, {"t0": 1, "y1": 1, "u_b": 1}],
            [1, {"t1": 1, "y0": 1, "u_b": 1}],
        ],
    }
    # b = prod_j (y0 - j y1) u_b^{p-1}; omega = t0 prod_{j>=1} (y0 - j y1) u_b^{p-1}
    images["b_c"] = _poly_prod(p, range(p), {"u_b": p - 1})
    images["omega"] = _poly_prod(p, range(1, p), {"t0": 1, "u_b": p - 1})
    gens = [("a_b", "polynomial"), ("u_b", "polynomial"), ("k_b", "exterior"),
            ("nu", "exterior"), ("c", "polynomial"), ("b_c", "polynomial"),
            ("eta_c", "exterior"), ("xi_c", "exterior"), ("omega", "exterior")]
    rels = {
        "c^p = u_b*b + a_b^(p-1)*c": (
            [_term(1, c=p), _term(-1, u_b=1, b_c=1),
             _term(-1, a_b=p - 1, c=1)]),
        "nu*xi": [_term(1, nu=1, xi_c=1)],
        "nu*omega": [_term(1, nu=1, omega=1)],
        "k_b*xi": [_term(1, k_b=1, xi_c=1)],
        "xi*eta": [_term(1, xi_c=1, eta_c=1)],
        "xi*omega": [_term(1, xi_c=1, omega=1)],
    }
    families = []
    return {"preset": f"bcp-poly-p{p}", "prime": p, "model": "eg",
            "generators": gens, "images": images, "relations": rels,
            "families": families}


def _poly_prod(p: int, js, extra: dict) -> list:
    """Expansion of prod_{j in js} (y0 - j y1) times a fixed monomial."""
    terms = {(0, 0): 1}
    for j in js:
        new = {}
        for (d0, d1), c in terms.items():
            for key, cc in (((d0 + 1, d1), c), ((d0, d1 + 1), c * (-j))):
                val = (new.get(key, 0) + cc) % p
                if val:
                    new[key] = val
                else:
                    new.pop(key, None)
        terms = new
    out = []
    for (d0, d1), c in sorted(terms.items()):
        mono = dict(extra)
        if d0:
            mono["y0"] = d0
        if d1:
            mono["y1"] = d1
        out.append([c, mono])
    return out


ALL_PRESETS = {
    "k4-universal": build_k4_universal,
    "k4-point": build_k4_point,
    "bc2": build_bc2,
    "cp-universal-p3": lambda: build_cp_universal(3),
    "cp-universal-p5": lambda: build_cp_universal(5),
    "cp-point-p3": lambda: build_cp_point(3),
    "cp-point-p5": lambda: build_cp_point(5),
    "bcp-poly-p3": lambda: build_bcp_poly(3),
    "bcp-poly-p5": lambda: build_bcp_poly(5),
}
