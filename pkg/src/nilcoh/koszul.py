"""Brute-force Lie algebra cohomology oracle.

Builds integral structure constants for the nilpotent radical from the
positive-root strings (extraspecial-pair signs fixed positive, the rest
solved against the Jacobi identity), assembles the Chevalley-Eilenberg
cochain complex on the exterior algebra of the dual, and computes weight-
graded cohomology by exact rank computations over F_p or Q.  Independent
of the coset-representative decomposition, so it can confirm it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .characters import FormalCharacter, GradedCharacter
from .linalg import rank_frac, rank_mod_p, solve_frac, solve_mod_p
from .rootsystem import RootSystem, build

MAX_ORACLE_ROOTS = 14


class OracleBudgetError(RuntimeError):
    """The exterior algebra would exceed the supported size."""


# ----------------------------------------------------------------------
# Structure constants


def chevalley_constants(rs: RootSystem) -> dict:
    """N[(i, j)] for positive-root indices i < j with gamma_i + gamma_j a
    positive root: integral constants [x_i, x_j] = N * x_{i+j} satisfying
    the Jacobi identity, with |N| = q + 1 from the root string and the
    extraspecial pairs normalized to +."""
    return dict(_constants_cached(rs.label))


@lru_cache(maxsize=None)
def _constants_cached(label: str):
    rs = build(label)
    pos = rs.positive_roots
    index = {g: k for k, g in enumerate(pos)}
    allroots = set(pos) | {tuple(-c for c in g) for g in pos}

    def string_len(beta, delta):
        # largest q with delta - q*beta a root
        q = 0
        cur = tuple(d - b for d, b in zip(delta, beta))
        while cur in allroots:
            q += 1
            cur = tuple(c - b for c, b in zip(cur, beta))
        return q

    pairs = []  # (i, j) with i < j in convex order and gamma_i+gamma_j in Phi+
    magnitude = {}
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            s = tuple(a + b for a, b in zip(pos[i], pos[j]))
            if s in index:
                pairs.append((i, j))
                magnitude[(i, j)] = string_len(pos[i], pos[j]) + 1

    # extraspecial pairs: for each decomposable gamma, the pair with the
    # smallest first index; its sign is the normalization choice (+).
    extraspecial = {}
    for (i, j) in pairs:
        s = tuple(a + b for a, b in zip(pos[i], pos[j]))
        k = index[s]
        if k not in extraspecial or i < extraspecial[k][0]:
            extraspecial[k] = (i, j)
    fixed = set(extraspecial.values())

    free_pairs = [pq for pq in pairs if pq not in fixed]
    sign = {pq: 1 for pq in fixed}

    def n_of(a, b):
        """N for ordered indices a != b with gamma_a + gamma_b in Phi+."""
        if a < b:
            pq = (a, b)
            if pq not in magnitude:
                return 0
            if pq not in sign:
                return None  # not yet assigned
            return sign[pq] * magnitude[pq]
        val = n_of(b, a)
        return None if val is None else -val

    def jacobi_ok():
        """Check all currently fully-assigned Jacobi triples; None = pending."""
        complete = True
        for (a, b, c) in triples:
            terms = []
            for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                s = tuple(p + q for p, q in zip(pos[x], pos[y]))
                if s not in index:
                    terms.append(0)
                    continue
                n1 = n_of(x, y)
                if n1 is None:
                    complete = False
                    terms = None
                    break
                n2 = n_of(index[s], z)
                if n2 is None:
                    complete = False
                    terms = None
                    break
                terms.append(n1 * n2)
            if terms is None:
                continue
            if sum(terms) != 0:
                return False
        return True if complete else None

    # Jacobi triples with total sum a positive root (others vanish trivially
    # inside the nilpotent algebra)
    triples = []
    n = len(pos)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                tot = tuple(p + q + r for p, q, r in zip(pos[a], pos[b], pos[c]))
                if tot in index:
                    triples.append((a, b, c))

    def backtrack(k):
        state = jacobi_ok()
        if state is False:
            return False
        if k == len(free_pairs):
            return state is True
        pq = free_pairs[k]
        for s in (1, -1):
            sign[pq] = s
            if backtrack(k + 1):
                return True
            del sign[pq]
        return False

    if not backtrack(0):
        raise RuntimeError(f"no consistent sign assignment for {label}")
    out = {pq: sign[pq] * magnitude[pq] for pq in pairs}
    return tuple(sorted(out.items()))


# ----------------------------------------------------------------------
# Chevalley-Eilenberg complex


class CEComplex:
    """Cochain complex Lambda^*(u_J^*) with basis f_S, S a sorted index
    subset of the nilradical roots, graded by degree and T-weight."""

    def __init__(self, J, rs: RootSystem):
        self.rs = rs
        self.J = tuple(sorted(set(J)))
        self.roots = rs.nilradical_roots(self.J)
        if len(self.roots) > MAX_ORACLE_ROOTS:
            raise OracleBudgetError(
                f"nilradical has {len(self.roots)} roots; oracle supports"
                f" at most {MAX_ORACLE_ROOTS}")
        self.index = {g: k for k, g in enumerate(self.roots)}
        full = chevalley_constants(rs)
        fullpos = rs.positive_roots
        # restrict constants to the nilradical (an ideal in u, so sums stay in)
        self.N = {}
        for (i, j), val in full.items():
            gi, gj = fullpos[i], fullpos[j]
            if gi in self.index and gj in self.index:
                a, b = self.index[gi], self.index[gj]
                if a > b:
                    a, b = b, a
                    val = -val
                self.N[(a, b)] = val
        self._check_d_squared()

    def weight_of(self, subset) -> tuple:
        w = [0] * self.rs.rank
        for k in subset:
            f = self.rs.root_to_fund(self.roots[k])
            for t in range(self.rs.rank):
                w[t] -= f[t]
        return tuple(w)

    def basis(self, degree: int):
        return list(combinations(range(len(self.roots)), degree))

    def d_generator(self, k: int) -> dict:
        """d f_k = -sum_{a<b, gamma_a+gamma_b=gamma_k} N_{ab} f_a ^ f_b."""
        out = {}
        gk = self.roots[k]
        for (a, b), val in self.N.items():
            s = tuple(p + q for p, q in zip(self.roots[a], self.roots[b]))
            if s == gk:
                out[(a, b)] = out.get((a, b), 0) - val
        return out

    def d_basis_element(self, subset) -> dict:
        """Derivation extension: d(f_S) as dict {sorted subset: coeff}."""
        out = {}
        for pos_in_s, k in enumerate(subset):
            rest = subset[:pos_in_s] + subset[pos_in_s + 1:]
            lead_sign = -1 if pos_in_s % 2 else 1
            for (a, b), val in self.d_generator(k).items():
                if a in rest or b in rest:
                    continue
                merged = list(rest)
                sgn = lead_sign * val
                # wedge f_a ^ f_b onto f_rest: each insertion into sorted
                # position past cnt earlier factors flips the sign cnt times
                for x in (b, a):
                    cnt = sum(1 for y in merged if y < x)
                    if cnt % 2:
                        sgn = -sgn
                    merged.insert(cnt, x)
                key = tuple(merged)
                out[key] = out.get(key, 0) + sgn
        return {k: v for k, v in out.items() if v}

    def d_matrix(self, degree: int):
        """Matrix of d: C^degree -> C^{degree+1} in the subset bases."""
        dom = self.basis(degree)
        cod = self.basis(degree + 1)
        cod_index = {s: i for i, s in enumerate(cod)}
        rows = [[0] * len(dom) for _ in cod]
        for c, subset in enumerate(dom):
            for tgt, val in self.d_basis_element(subset).items():
                rows[cod_index[tgt]][c] += val
        return rows, dom, cod

    def _check_d_squared(self):
        for deg in range(len(self.roots)):
            m1, dom, mid = self.d_matrix(deg)
            m2, _, cod = self.d_matrix(deg + 1)
            for c in range(len(dom)):
                acc = {}
                for r in range(len(mid)):
                    if not m1[r][c]:
                        continue
                    for r2 in range(len(cod)):
                        if m2[r2][r]:
                            acc[r2] = acc.get(r2, 0) + m2[r2][r] * m1[r][c]
                assert all(v == 0 for v in acc.values()), \
                    f"d^2 != 0 at degree {deg}"


def _blocks_by_weight(ce: CEComplex, degree: int):
    out: dict[tuple, list] = {}
    for pos_idx, s in enumerate(ce.basis(degree)):
        out.setdefault(ce.weight_of(s), []).append((pos_idx, s))
    return out


def oracle_cohomology(J, rs: RootSystem, field: str = "Q",
                      p: int | None = None) -> GradedCharacter:
    """Weight-graded cohomology of the nilradical complex.

    field is "Q" or "Fp" (the latter needs p).  Returns the graded
    character; each degree's support lists T-weights with multiplicity.
    """
    ce = CEComplex(J, rs)
    if field not in ("Q", "Fp"):
        raise ValueError("field must be 'Q' or 'Fp'")
    if field == "Fp" and (p is None or p < 2):
        raise ValueError("Fp oracle needs a prime p")
    n = len(ce.roots)
    gc = GradedCharacter()
    # per-weight ranks of d at each degree
    rank_at: dict[tuple, dict[int, int]] = {}
    dim_at: dict[tuple, dict[int, int]] = {}
    for deg in range(n + 1):
        blocks = _blocks_by_weight(ce, deg)
        for wt, items in blocks.items():
            dim_at.setdefault(wt, {})[deg] = len(items)
        # matrix of d restricted to each weight block
        m, dom, cod = ce.d_matrix(deg)
        cod_blocks = _blocks_by_weight(ce, deg + 1)
        dom_blocks = blocks
        for wt, dom_items in dom_blocks.items():
            cod_items = cod_blocks.get(wt, [])
            rows = [[m[r][c] for (c, _) in dom_items] for (r, _) in cod_items]
            if field == "Q":
                rk = rank_frac(rows)
            else:
                rk = rank_mod_p(rows, p)
            rank_at.setdefault(wt, {})[deg] = rk
    for deg in range(n + 1):
        chi = {}
        for wt, dims in dim_at.items():
            d_here = dims.get(deg, 0)
            if not d_here:
                continue
            r_out = rank_at.get(wt, {}).get(deg, 0)
            r_in = rank_at.get(wt, {}).get(deg - 1, 0)
            h = d_here - r_out - r_in
            assert h >= 0
            if h:
                chi[wt] = h
        gc.set_degree(deg, FormalCharacter(chi))
    return gc


# ----------------------------------------------------------------------
# Cochain-level cup products


def inversion_cocycle(w, group, ce: CEComplex):
    """The basis cochain f_{Phi(w)} (indices of the inversion set of w)."""
    inv = group.inversion_set(w)
    subset = tuple(sorted(ce.index[g] for g in inv))
    return subset


def cochain_cup(w1, w2, group, rs: RootSystem, field: str = "Q",
                p: int | None = None):
    """Cup product [f_{Phi(w1)}] . [f_{Phi(w2)}] expressed in the basis of
    classes [f_{Phi(w)}], l(w) = l(w1) + l(w2).

    Returns a dict {w: coeff} over minimal-length elements whose inversion
    cochains span the target cohomology weight block (empty dict = zero).
    """
    ce = CEComplex((), rs)
    s1 = inversion_cocycle(w1, group, ce)
    s2 = inversion_cocycle(w2, group, ce)
    if set(s1) & set(s2):
        return {}
    # wedge f_{s1} ^ f_{s2}: sign = parity of merge inversions
    merged = list(s1) + list(s2)
    sgn = 1
    arr = list(merged)
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            if arr[i] > arr[j]:
                sgn = -sgn
    subset = tuple(sorted(merged))
    deg = len(subset)
    if deg == 0:
        return {group.identity: Fraction(1) if field == "Q" else 1}
    wt = ce.weight_of(subset)
    # express sgn*f_subset in span{f_{Phi(w)} : l(w)=deg, weight match}
    #                        + image of d on the weight block
    candidates = [w for w in group.elements if w.length == deg]
    cand_cochains = []
    cand_ws = []
    for w in candidates:
        s = inversion_cocycle(w, group, ce)
        if ce.weight_of(s) == wt:
            cand_cochains.append(s)
            cand_ws.append(w)
    dom_blocks = _blocks_by_weight(ce, deg - 1)
    m, dom, cod = ce.d_matrix(deg - 1)
    cod_basis = ce.basis(deg)
    cod_index = {s: i for i, s in enumerate(cod_basis)}
    wt_rows = [i for i, s in enumerate(cod_basis) if ce.weight_of(s) == wt]
    row_pos = {r: k for k, r in enumerate(wt_rows)}
    cols = []
    for s in cand_cochains:
        v = [0] * len(wt_rows)
        v[row_pos[cod_index[s]]] = 1
        cols.append(v)
    for (c, s) in dom_blocks.get(wt, []):
        v = [0] * len(wt_rows)
        for r in wt_rows:
            if m[r][c]:
                v[row_pos[r]] = m[r][c]
        cols.append(v)
    rhs = [0] * len(wt_rows)
    target = cod_index.get(subset)
    assert target in row_pos
    rhs[row_pos[target]] = sgn
    matrix = [[cols[c][r] for c in range(len(cols))] for r in range(len(wt_rows))]
    if field == "Q":
        sol = solve_frac(matrix, rhs)
    else:
        if p is None or p < 2:
            raise ValueError("Fp cup product needs a prime p")
        sol = solve_mod_p(matrix, [x % p for x in rhs], p)
    if sol is None:
        raise RuntimeError("cup product not expressible; complex inconsistent")
    out = {}
    for k, w in enumerate(cand_ws):
        coeff = sol[k]
        if coeff:
            out[w] = int(coeff) if field != "Q" else coeff
    return out
