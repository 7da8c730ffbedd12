"""Ext algebra of the restricted enveloping algebra of the nilradical.

Builds u(u_J) over F_p on PBW monomials with x_gamma^p = 0, computes a
minimal free resolution of the trivial module by weight-blocked kernel
extraction, reads off Betti numbers with T-weights, and evaluates Yoneda
products by chain-map lifting.  This is the from-first-principles check of
the character-level predictions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import FormalCharacter, GradedCharacter
from .koszul import chevalley_constants
from .linalg import nullspace_mod_p, rref_mod_p, solve_mod_p
from .rootsystem import RootSystem

DEFAULT_DIM_BUDGET = 5 ** 6


class BudgetError(RuntimeError):
    pass


class RestrictedAlgebra:
    """u(u_J) over F_p: PBW monomials x^a, 0 <= a_gamma < p, x_gamma^p = 0."""

    def __init__(self, J, p: int, rs: RootSystem,
                 dim_budget: int = DEFAULT_DIM_BUDGET):
        self.rs = rs
        self.p = p
        self.J = tuple(sorted(set(J)))
        self.roots = rs.nilradical_roots(self.J)
        self.n = len(self.roots)
        if p ** self.n > dim_budget:
            raise BudgetError(
                f"algebra dimension p^N = {p}^{self.n} exceeds budget {dim_budget}")
        # structure constants restricted to the nilradical, indexed by
        # nilradical positions (a < b): [x_a, x_b] = c * x_{a+b}
        full = chevalley_constants(rs)
        pos = rs.positive_roots
        self.index = {g: k for k, g in enumerate(self.roots)}
        self.bracket = {}
        for (i, j), val in full.items():
            gi, gj = pos[i], pos[j]
            if gi in self.index and gj in self.index:
                a, b = self.index[gi], self.index[gj]
                if a > b:
                    a, b = b, a
                    val = -val
                s = tuple(x + y for x, y in zip(gi, gj))
                self.bracket[(a, b)] = (self.index[s], val % p)
        self._check_restricted()
        self._gen_cache: dict = {}
        self._mono_cache: dict = {}
        self._root_fund = [rs.root_to_fund(g) for g in self.roots]

    @property
    def dimension(self) -> int:
        return self.p ** self.n

    def _check_restricted(self):
        """(ad x_gamma)^p = 0: the adjoint operators are nilpotent of order
        at most the root-string length, which must stay below p."""
        for g in range(self.n):
            mat = [[0] * self.n for _ in range(self.n)]
            for (a, b), (k, c) in self.bracket.items():
                if a == g:
                    mat[k][b] = c
                elif b == g:
                    mat[k][a] = (-c) % self.p
            cur = [row[:] for row in mat]
            power = 1
            while any(any(row) for row in cur) and power <= self.p:
                cur = [[sum(cur[r][t] * mat[t][c] for t in range(self.n)) % self.p
                        for c in range(self.n)] for r in range(self.n)]
                power += 1
            if power > self.p:
                raise RuntimeError(
                    "(ad x)^p != 0: outside the modeled restricted regime")

    # -- multiplication ------------------------------------------------

    def weight(self, mono: tuple) -> tuple:
        """T-weight of x^a: sum of a_gamma * gamma (fundamental coords)."""
        w = [0] * self.rs.rank
        for k, a in enumerate(mono):
            if a:
                f = self._root_fund[k]
                for t in range(self.rs.rank):
                    w[t] += a * f[t]
        return tuple(w)

    def mult_gen(self, g: int, mono: tuple) -> dict:
        """x_g * x^mono as {monomial: coeff mod p}."""
        key = (g, mono)
        cached = self._gen_cache.get(key)
        if cached is not None:
            return cached
        p = self.p
        h = next((k for k, a in enumerate(mono) if a), None)
        if h is None or g <= h:
            if mono[g] + 1 == p:
                out = {}
            else:
                new = list(mono)
                new[g] += 1
                out = {tuple(new): 1}
        else:
            rest = list(mono)
            rest[h] -= 1
            rest = tuple(rest)
            out = {}
            # x_g x_h = x_h x_g + [x_g, x_h]
            for t, c in self.mult_gen(g, rest).items():
                for t2, c2 in self.mult_gen(h, t).items():
                    out[t2] = (out.get(t2, 0) + c * c2) % p
            br = self.bracket.get((h, g))
            if br is not None:
                k, cN = br
                c = (-cN) % p  # [x_g, x_h] = -[x_h, x_g]
                for t, c2 in self.mult_gen(k, rest).items():
                    out[t] = (out.get(t, 0) + c * c2) % p
            out = {t: c for t, c in out.items() if c}
        self._gen_cache[key] = out
        return out

    def mult_mono(self, a: tuple, mono: tuple) -> dict:
        """x^a * x^mono as {monomial: coeff mod p}."""
        if not any(a):
            return {mono: 1}
        key = (a, mono)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        g = max(k for k, v in enumerate(a) if v)
        head = list(a)
        head[g] -= 1
        head = tuple(head)
        out = {}
        for t, c in self.mult_gen(g, mono).items():
            for t2, c2 in self.mult_mono(head, t).items():
                out[t2] = (out.get(t2, 0) + c * c2) % self.p
        out = {t: c for t, c in out.items() if c}
        self._mono_cache[key] = out
        return out

    def multiply(self, x: dict, y: dict) -> dict:
        out = {}
        for ma, ca in x.items():
            for mb, cb in y.items():
                for t, c in self.mult_mono(ma, mb).items():
                    out[t] = (out.get(t, 0) + ca * cb * c) % self.p
        return {t: c for t, c in out.items() if c}

    def augmentation(self, x: dict) -> int:
        return x.get((0,) * self.n, 0) % self.p


def build_algebra(J, p: int, rs: RootSystem,
                  dim_budget: int = DEFAULT_DIM_BUDGET) -> RestrictedAlgebra:
    return RestrictedAlgebra(J, p, rs, dim_budget)


# ----------------------------------------------------------------------
# Minimal resolution
#
# Free module elements are dicts {(gen_index, monomial): coeff}.  The
# T-weight of (s, m) is gen_weight[s] + weight(m); differentials preserve
# weight, so kernels split into small blocks.


@dataclass
class ResolutionStage:
    degree: int
    gen_weights: list          # weight of each generator (fund coords)
    differential: list         # per generator: element of the previous stage
    # (stage 0 has one generator of weight 0 and differential [] -> k)


class MinimalResolution:
    def __init__(self, alg: RestrictedAlgebra, max_degree: int):
        self.alg = alg
        self.max_degree = max_degree
        self.stages: list[ResolutionStage] = []
        self._build()

    # -- helpers -------------------------------------------------------

    def _elem_weight_blocks(self, gen_weights):
        """Basis of A^{gens} grouped by weight: {wt: [(s, mono), ...]}."""
        alg = self.alg
        blocks: dict[tuple, list] = {}
        for s, gw in enumerate(gen_weights):
            for mono in alg_monomials(alg):
                wt = tuple(g + m for g, m in zip(gw, alg.weight(mono)))
                blocks.setdefault(wt, []).append((s, mono))
        return blocks

    def _apply_diff(self, stage_idx: int, elem: dict) -> dict:
        """Differential of an element of stage stage_idx (>=1)."""
        alg = self.alg
        diff = self.stages[stage_idx].differential
        out: dict = {}
        for (s, mono), c in elem.items():
            target = diff[s]
            for (t, m2), c2 in target.items():
                for m3, c3 in alg.mult_mono(mono, m2).items():
                    key = (t, m3)
                    out[key] = (out.get(key, 0) + c * c2 * c3) % alg.p
        return {k: v for k, v in out.items() if v}

    def _build(self):
        alg = self.alg
        p = alg.p
        zero_mono = (0,) * alg.n
        self.stages.append(ResolutionStage(0, [(0,) * alg.rs.rank], []))
        # stage-0 kernel: the augmentation ideal, basis = non-unit monomials
        kernel = [{(0, mono): 1} for mono in alg_monomials(alg)
                  if mono != zero_mono]
        for degree in range(1, self.max_degree + 1):
            gen_weights, diff = self._minimal_generators(kernel)
            self.stages.append(ResolutionStage(degree, gen_weights, diff))
            if degree < self.max_degree:
                kernel = self._kernel(degree)

    def _minimal_generators(self, kernel: list):
        """Split K / (A_+ K): returns (weights, representative elements)."""
        alg = self.alg
        p = alg.p
        prev_weights = self.stages[-1].gen_weights
        blocks = self._elem_weight_blocks(prev_weights)
        pos_of = {wt: {b: i for i, b in enumerate(items)}
                  for wt, items in blocks.items()}

        def coords(elem, wt):
            table = pos_of[wt]
            v = [0] * len(table)
            for key, c in elem.items():
                v[table[key]] = c % p
            return v

        def weight_of_elem(elem):
            (s, mono), _ = next(iter(elem.items()))
            return tuple(g + m for g, m in
                         zip(prev_weights[s], alg.weight(mono)))

        ker_by_wt: dict[tuple, list] = {}
        for elem in kernel:
            ker_by_wt.setdefault(weight_of_elem(elem), []).append(elem)

        # A_+ K contributions land at weight(k) + gamma
        aug_by_wt: dict[tuple, list] = {}
        for elem in kernel:
            wt = weight_of_elem(elem)
            for g in range(alg.n):
                gwt = tuple(a + b for a, b in zip(wt, alg._root_fund[g]))
                moved: dict = {}
                for (s, mono), c in elem.items():
                    for m2, c2 in alg.mult_gen(g, mono).items():
                        key = (s, m2)
                        moved[key] = (moved.get(key, 0) + c * c2) % p
                moved = {k: v for k, v in moved.items() if v}
                if moved:
                    aug_by_wt.setdefault(gwt, []).append(moved)

        gen_weights, diff = [], []
        for wt in sorted(ker_by_wt):
            span_rows = [coords(e, wt) for e in aug_by_wt.get(wt, [])]
            rref, pivots = rref_mod_p(span_rows, p) if span_rows else ([], [])
            pivot_set = list(pivots)
            rows = list(rref)
            for elem in ker_by_wt[wt]:
                v = coords(elem, wt)
                # reduce v against the current row space
                for r, pc in zip(rows, pivot_set):
                    if v[pc]:
                        f = v[pc]
                        v = [(x - f * y) % p for x, y in zip(v, r)]
                if any(v):
                    lead = next(i for i, x in enumerate(v) if x)
                    inv = pow(v[lead], p - 2, p)
                    rows.append([(x * inv) % p for x in v])
                    pivot_set.append(lead)
                    gen_weights.append(wt)
                    diff.append(elem)
        return gen_weights, diff

    def _kernel(self, degree: int) -> list:
        """Basis of ker(d_degree) as elements of stage `degree`."""
        alg = self.alg
        p = alg.p
        stage = self.stages[degree]
        prev = self.stages[degree - 1]
        dom_blocks = self._elem_weight_blocks(stage.gen_weights)
        cod_blocks = self._elem_weight_blocks(prev.gen_weights)
        kernel = []
        for wt in sorted(dom_blocks):
            dom = dom_blocks[wt]
            cod = cod_blocks.get(wt, [])
            cod_pos = {b: i for i, b in enumerate(cod)}
            matrix = [[0] * len(dom) for _ in cod]
            for c, (s, mono) in enumerate(dom):
                img = self._apply_diff(degree, {(s, mono): 1})
                for key, val in img.items():
                    matrix[cod_pos[key]][c] = val
            if cod:
                null = nullspace_mod_p(matrix, p)
            else:
                null = [[1 if i == c else 0 for i in range(len(dom))]
                        for c in range(len(dom))]
            for v in null:
                elem = {dom[i]: x for i, x in enumerate(v) if x}
                if elem:
                    kernel.append(elem)
        return kernel

    # -- outputs -------------------------------------------------------

    def betti(self) -> list[int]:
        return [len(st.gen_weights) for st in self.stages]

    def ext_character(self) -> GradedCharacter:
        """Ext^n graded by T-weight: the dual class of a generator of
        weight mu sits in weight -mu."""
        gc = GradedCharacter()
        for st in self.stages:
            chi: dict = {}
            for wt in st.gen_weights:
                neg = tuple(-c for c in wt)
                chi[neg] = chi.get(neg, 0) + 1
            gc.set_degree(st.degree, FormalCharacter(chi))
        return gc

    def check_minimal(self) -> bool:
        """No differential entry has a unit (constant-term) coefficient."""
        zero_mono = (0,) * self.alg.n
        for st in self.stages[1:]:
            for elem in st.differential:
                for (s, mono), c in elem.items():
                    if mono == zero_mono and c % self.alg.p:
                        return False
        return True

    def check_complex(self) -> bool:
        """d_{n-1} o d_n = 0 on every generator."""
        for degree in range(2, len(self.stages)):
            for s in range(len(self.stages[degree].gen_weights)):
                img = self._apply_diff(degree, {(s, (0,) * self.alg.n): 1})
                if self._apply_diff(degree - 1, img):
                    return False
        return True


def alg_monomials(alg: RestrictedAlgebra):
    """All PBW exponent tuples, in lexicographic order."""
    if getattr(alg, "_monomials", None) is None:
        out = [()]
        for _ in range(alg.n):
            out = [m + (a,) for m in out for a in range(alg.p)]
        alg._monomials = out
    return alg._monomials


def ext_dims(alg: RestrictedAlgebra, max_degree: int = 4):
    """(GradedCharacter, MinimalResolution) through the given degree."""
    if max_degree > 6:
        raise BudgetError("max_degree above the supported default of 6")
    res = MinimalResolution(alg, max_degree)
    assert res.check_minimal()
    return res.ext_character(), res


# ----------------------------------------------------------------------
# Yoneda products


def find_class_by_weight(res: MinimalResolution, degree: int, weight: tuple):
    """Indices of stage-degree generators whose Ext-weight is `weight`."""
    target = tuple(-c for c in weight)
    st = res.stages[degree]
    return [i for i, wt in enumerate(st.gen_weights) if wt == target]


def yoneda_product(res: MinimalResolution, z1, z2):
    """Yoneda/cup product of dual-basis classes z = (degree, gen_index).

    Lifts z2 to a chain map g_k: F_{d2+k} -> F_k and returns the composite
    z1 o g_{d1} as {gen index in degree d1+d2: coeff}."""
    d1, g1idx = z1
    d2, g2idx = z2
    alg = res.alg
    p = alg.p
    total = d1 + d2
    if total >= len(res.stages):
        raise ValueError("product degree beyond the computed resolution")
    zero_mono = (0,) * alg.n

    # g_0: F_{d2} -> F_0, e_s -> delta_{s,g2idx} * e_0
    chain: dict[int, list] = {}
    chain[0] = [({(0, zero_mono): 1} if s == g2idx else {})
                for s in range(len(res.stages[d2].gen_weights))]
    for k in range(1, d1 + 1):
        src = res.stages[d2 + k]
        tgt = res.stages[k]
        tgt_blocks = res._elem_weight_blocks(tgt.gen_weights)
        maps = []
        for s, swt in enumerate(src.gen_weights):
            # rhs = g_{k-1}(d_{d2+k}(e_s)), an element of F_{k-1}
            d_es = res.stages[d2 + k].differential[s]
            rhs: dict = {}
            for (t, mono), c in d_es.items():
                for (u, m2), c2 in chain[k - 1][t].items():
                    for m3, c3 in alg.mult_mono(mono, m2).items():
                        key = (u, m3)
                        rhs[key] = (rhs.get(key, 0) + c * c2 * c3) % p
            rhs = {key: v for key, v in rhs.items() if v}
            # solve d_k(x) = rhs with x in the weight block of F_k at
            # weight swt - weight(e_{g2idx})
            wt = tuple(a - b for a, b in
                       zip(swt, res.stages[d2].gen_weights[g2idx]))
            dom = tgt_blocks.get(wt, [])
            if not dom:
                if rhs:
                    raise RuntimeError("chain-map lifting failed (empty block)")
                maps.append({})
                continue
            prevgens = res.stages[k - 1].gen_weights
            cod_blocks = res._elem_weight_blocks(prevgens)
            cod = cod_blocks.get(wt, [])
            cod_pos = {b: i for i, b in enumerate(cod)}
            matrix = [[0] * len(dom) for _ in cod]
            for c, (s2, mono) in enumerate(dom):
                img = res._apply_diff(k, {(s2, mono): 1})
                for key, val in img.items():
                    matrix[cod_pos[key]][c] = val
            vec = [0] * len(cod)
            for key, v in rhs.items():
                vec[cod_pos[key]] = v
            sol = solve_mod_p(matrix, vec, p)
            if sol is None:
                raise RuntimeError("chain-map lifting failed (no solution)")
            maps.append({dom[i]: x for i, x in enumerate(sol) if x})
        chain[k] = maps

    # z1 o g_{d1}: evaluate the dual cocycle of generator g1idx on each
    # generator image (the unit-coefficient of the g1idx component)
    out = {}
    for s in range(len(res.stages[total].gen_weights)):
        # image of e_s under d then lifted map: actually g_{d1} is defined
        # on F_{d2+d1} = F_total
        val = chain[d1][s].get((g1idx, zero_mono), 0) if d1 > 0 else \
            (1 if s == g2idx and g1idx == 0 else 0)
        if val % p:
            out[s] = val % p
    return out


def square_certificate(res: MinimalResolution, degree: int, weight: tuple):
    """JSON-ready record that the unique class of the given Ext weight in
    the given degree has nonzero (or zero) square."""
    idxs = find_class_by_weight(res, degree, weight)
    if len(idxs) != 1:
        raise ValueError(
            f"weight space not one-dimensional ({len(idxs)} classes)")
    z = (degree, idxs[0])
    prod = yoneda_product(res, z, z)
    return {
        "degree": 2 * degree,
        "weight": [2 * c for c in weight],
        "nonzero": bool(prod),
        "components": {str(k): v for k, v in sorted(prod.items())},
    }


def certificate(alg: RestrictedAlgebra, res: MinimalResolution,
                example=None) -> dict:
    gc = res.ext_character()
    out = {
        "type": alg.rs.label,
        "p": alg.p,
        "J": list(alg.J),
        "dims": gc.dims(),
        "weights": gc.to_json(),
    }
    if example is not None:
        out["example_product"] = example
    return out
