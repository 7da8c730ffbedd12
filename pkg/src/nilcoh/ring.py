"""Multiplicative structure of the cohomology rings.

Classical model: S(u_J^*) tensor Lambda-span{e_w : w in ^JW}, with
e_w . e_w' = sign * e_{w''} when the inversion sets are disjoint and their
union is again an inversion set Phi(w''), zero otherwise.  The sign is the
parity of the permutation merging the concatenated inversion lists (each
taken in the fixed convex order) into convex order.

Quantum model: scalars are signed powers of a primitive l-th root of
unity; the exterior part is the zeta-twisted exterior algebra with
relations x_i x_j = -zeta^{(gamma_i, gamma_j)} x_j x_i (i < j), x_i^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .alcoves import PreconditionError, require_admissible
from .rootsystem import RootSystem
from .weyl import WeylElement, WeylGroup


# ----------------------------------------------------------------------
# Scalars: sign * zeta^exponent


@dataclass(frozen=True)
class CycScalar:
    """sign * zeta^exponent, zeta a primitive ell-th root of unity.

    ell = 1 models the classical case (every exponent is 0)."""
    sign: int
    exponent: int
    ell: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        object.__setattr__(self, "exponent",
                           0 if self.sign == 0 else self.exponent % self.ell)

    @classmethod
    def one(cls, ell=1):
        return cls(1, 0, ell)

    @classmethod
    def zero(cls, ell=1):
        return cls(0, 0, ell)

    def __mul__(self, other: "CycScalar") -> "CycScalar":
        if self.ell != other.ell:
            raise ValueError("mixed moduli")
        return CycScalar(self.sign * other.sign,
                         self.exponent + other.exponent, self.ell)

    def __neg__(self):
        return CycScalar(-self.sign, self.exponent, self.ell)

    def specialize_classical(self) -> int:
        """Value at zeta -> 1 (legitimate comparison only when exponent==0)."""
        return self.sign

    def __repr__(self):
        if self.sign == 0:
            return "0"
        s = "-" if self.sign < 0 else ""
        if self.exponent == 0:
            return f"{s}1"
        return f"{s}z^{self.exponent}"


def merge_sign(left: tuple, right: tuple) -> int:
    """Parity of the permutation sorting the concatenation of two sorted
    index tuples; 0 if they intersect."""
    if set(left) & set(right):
        return 0
    arr = list(left) + list(right)
    sgn = 1
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            if arr[i] > arr[j]:
                sgn = -sgn
    return sgn


# ----------------------------------------------------------------------
# Classical exterior part on ^JW


def nil_product(w1: WeylElement, w2: WeylElement, rs: RootSystem,
                group: WeylGroup, J=()):
    """(sign, w) with e_{w1} e_{w2} = sign * e_w, or None for zero."""
    inv1 = group.inversion_set(w1)
    inv2 = group.inversion_set(w2)
    if set(inv1) & set(inv2):
        return None
    union = frozenset(inv1) | frozenset(inv2)
    w = group.element_with_inversion_set(union)
    if w is None:
        return None
    order = {g: k for k, g in enumerate(rs.positive_roots)}
    left = tuple(order[g] for g in inv1)
    right = tuple(order[g] for g in inv2)
    sgn = merge_sign(left, right)
    if sgn == 0:
        return None
    return sgn, w


# ----------------------------------------------------------------------
# Quantum exterior algebra on the positive-root generators


def quantum_swap_factor(a: int, b: int, rs: RootSystem, ell: int) -> CycScalar:
    """Factor when commuting x_a past x_b with a > b:
    x_a x_b = -zeta^{(gamma_b, gamma_a)} x_b x_a."""
    gb = rs.positive_roots[b]
    ga = rs.positive_roots[a]
    v = rs.inner_roots(gb, ga)
    assert isinstance(v, int) or Fraction(v).denominator == 1
    return CycScalar(-1, int(v), ell)


def quantum_straighten(word: tuple, rs: RootSystem, ell: int):
    """Sort a product x_{i1}...x_{ik} of quantum exterior generators.

    Returns (CycScalar, sorted tuple); scalar zero on repeated indices."""
    arr = list(word)
    scal = CycScalar.one(ell)
    # insertion sort, tracking the commutation factor per adjacent swap
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            scal = scal * quantum_swap_factor(arr[j - 1], arr[j], rs, ell)
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            j -= 1
    if len(set(arr)) != len(arr):
        return CycScalar.zero(ell), tuple(arr)
    return scal, tuple(arr)


def quantum_nil_product(w1: WeylElement, w2: WeylElement, rs: RootSystem,
                        group: WeylGroup, ell: int):
    """(CycScalar, w) for e_{w1} e_{w2} in the quantum exterior model, or
    None when the union of inversion sets is not an inversion set."""
    inv1 = group.inversion_set(w1)
    inv2 = group.inversion_set(w2)
    if set(inv1) & set(inv2):
        return None
    union = frozenset(inv1) | frozenset(inv2)
    w = group.element_with_inversion_set(union)
    if w is None:
        return None
    order = {g: k for k, g in enumerate(rs.positive_roots)}
    word = tuple(order[g] for g in inv1) + tuple(order[g] for g in inv2)
    scal, srt = quantum_straighten(word, rs, ell)
    if scal.sign == 0:
        return None
    return scal, w


# ----------------------------------------------------------------------
# Full ring model: polynomial part x exterior part


@dataclass(frozen=True)
class BasisClass:
    """s_part: exponent tuple over the nilradical roots (polynomial part);
    w_part: element of ^JW (exterior part)."""
    s_part: tuple
    w_part: WeylElement

    def degree(self) -> int:
        return 2 * sum(self.s_part) + self.w_part.length


class RingElement:
    """Finite CycScalar-combination of BasisClass terms."""

    def __init__(self, terms=None, ell: int = 1):
        self.ell = ell
        self.terms: dict[BasisClass, CycScalar] = {}
        for cls, scal in (terms or {}).items():
            if scal.sign:
                self.terms[cls] = scal

    def __add__(self, other):
        if self.ell != other.ell:
            raise ValueError("mixed moduli")
        out = dict(self.terms)
        for cls, scal in other.terms.items():
            if cls in out:
                cur = out[cls]
                if cur.exponent == scal.exponent:
                    s = cur.sign + scal.sign
                    if s == 0:
                        del out[cls]
                    else:
                        # same monomial appearing twice with equal scalar
                        raise ValueError(
                            "coefficient outside the signed-monomial model")
                else:
                    raise ValueError(
                        "coefficient outside the signed-monomial model")
            else:
                out[cls] = scal
        return RingElement(out, self.ell)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, RingElement) and self.ell == other.ell \
            and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for cls, scal in sorted(self.terms.items(),
                                key=lambda kv: (kv[0].degree(), kv[0].s_part)):
            bits.append(f"{scal!r}*S{cls.s_part}e[{''.join(str(i+1) for i in cls.w_part.word) or 'e'}]")
        return " + ".join(bits)


class CohomologyRing:
    """Ring model for H^*((U_J)_1) (classical, ell=1) or its quantum
    analog (ell > 1): S(u_J^*) tensor the (twisted) exterior span of ^JW."""

    def __init__(self, rs: RootSystem, group: WeylGroup, J=(), mode="classical",
                 modulus: int | None = None, unsafe: bool = False):
        self.rs = rs
        self.group = group
        self.J = tuple(sorted(set(J)))
        self.mode = mode
        self.unsafe = bool(unsafe)
        self.formal_only = False
        h = rs.coxeter_number
        if mode == "classical":
            if modulus is None:
                raise PreconditionError("classical ring model needs a prime p")
            bound = 2 * (h - 1) if not self.J else 3 * (h - 1)
            if modulus <= bound:
                if not unsafe:
                    raise PreconditionError(
                        f"classical ring model requires p > {bound}"
                        f" (got {modulus}); pass unsafe to study the formal model")
                self.formal_only = True
            self.ell = 1
        elif mode == "quantum":
            if modulus is None:
                raise PreconditionError("quantum ring model needs a modulus l")
            try:
                require_admissible(modulus, rs, "ring")
            except PreconditionError:
                if not unsafe:
                    raise
                self.formal_only = True
            self.ell = modulus
        else:
            raise ValueError(f"unknown mode {mode!r}")
        self.modulus = modulus
        self.nil_roots = rs.nilradical_roots(self.J)
        self.reps = group.min_coset_reps(self.J)

    def label(self) -> str:
        tag = f"{self.mode} ring model, type {self.rs.label}, J={list(self.J)}," \
              f" modulus {self.modulus}"
        if self.formal_only:
            tag += " [FORMAL MODEL: stated bounds not met]"
        return tag

    def one(self) -> RingElement:
        zero_s = (0,) * len(self.nil_roots)
        return RingElement({BasisClass(zero_s, self.group.identity):
                            CycScalar.one(self.ell)}, self.ell)

    def basis_class(self, s_part, w_part) -> RingElement:
        cls = BasisClass(tuple(s_part), w_part)
        return RingElement({cls: CycScalar.one(self.ell)}, self.ell)

    def exterior_basis(self):
        return list(self.reps)

    def multiply_classes(self, c1: BasisClass, c2: BasisClass) -> RingElement:
        cached = getattr(self, "_mc_cache", None)
        if cached is None:
            cached = self._mc_cache = {}
        key = (c1, c2)
        hit = cached.get(key)
        if hit is not None:
            return hit
        out = self._multiply_classes(c1, c2)
        cached[key] = out
        return out

    def _multiply_classes(self, c1: BasisClass, c2: BasisClass) -> RingElement:
        s = tuple(a + b for a, b in zip(c1.s_part, c2.s_part))
        if self.ell == 1:
            res = nil_product(c1.w_part, c2.w_part, self.rs, self.group, self.J)
            if res is None:
                return RingElement({}, self.ell)
            sgn, w = res
            # polynomial part is central and even: no extra sign
            return RingElement({BasisClass(s, w): CycScalar(sgn, 0, 1)}, 1)
        res = quantum_nil_product(c1.w_part, c2.w_part, self.rs, self.group,
                                  self.ell)
        if res is None:
            return RingElement({}, self.ell)
        scal, w = res
        return RingElement({BasisClass(s, w): scal}, self.ell)

    def multiply(self, x: RingElement, y: RingElement) -> RingElement:
        out = RingElement({}, self.ell)
        for c1, s1 in x.terms.items():
            for c2, s2 in y.terms.items():
                prod = self.multiply_classes(c1, c2)
                for cls, scal in prod.terms.items():
                    out = out + RingElement({cls: s1 * s2 * scal}, self.ell)
        return out

    def exterior_table(self):
        """All pairwise products of the exterior basis classes e_w."""
        zero_s = (0,) * len(self.nil_roots)
        table = {}
        for w1 in self.reps:
            for w2 in self.reps:
                prod = self.multiply_classes(BasisClass(zero_s, w1),
                                             BasisClass(zero_s, w2))
                table[(w1, w2)] = prod
        return table

    def table_rows(self):
        """Rows (w, w', result_w'' or 0, sign, zeta_exponent)."""
        def name(w):
            return "".join(str(i + 1) for i in w.word) or "e"

        rows = []
        for (w1, w2), prod in self.exterior_table().items():
            if prod.is_zero():
                tgt, sign, expo = "0", 0, 0
            else:
                (cls, scal), = prod.terms.items()
                tgt, sign, expo = name(cls.w_part), scal.sign, scal.exponent
            rows.append((name(w1), name(w2), tgt, sign, expo))
        return rows

    def metadata(self) -> dict:
        return {
            "type": self.rs.label,
            "J": list(self.J),
            "mode": self.mode,
            "modulus": self.modulus,
            "formal_only": self.formal_only,
            "w0_word": [i + 1 for i in self.group.longest.word],
            "positive_root_order": [list(g) for g in self.rs.positive_roots],
        }


def check_ring_laws(ring: CohomologyRing) -> dict:
    """Associativity, graded commutativity (up to the twist), squares of
    odd classes, and identity, checked exhaustively on the exterior basis.

    Returns a dict of law name -> bool."""
    reps = ring.exterior_basis()
    zero_s = (0,) * len(ring.nil_roots)

    def cls(w):
        return BasisClass(zero_s, w)

    ok_assoc = True
    for a in reps:
        for b in reps:
            ab = ring.multiply_classes(cls(a), cls(b))
            for c in reps:
                left = _mult_elem(ring, ab, cls(c))
                bc = ring.multiply_classes(cls(b), cls(c))
                right = _mult_elem_rev(ring, cls(a), bc)
                if left != right:
                    ok_assoc = False
    ok_square = all(
        a.length == 0 or ring.multiply_classes(cls(a), cls(a)).is_zero()
        for a in reps)
    ident = ring.group.identity
    ok_identity = all(
        ring.multiply_classes(cls(ident), cls(a)) == ring.basis_class(zero_s, a)
        and ring.multiply_classes(cls(a), cls(ident)) == ring.basis_class(zero_s, a)
        for a in reps)
    ok_comm = True
    if ring.ell == 1:
        for a in reps:
            for b in reps:
                ab = ring.multiply_classes(cls(a), cls(b))
                ba = ring.multiply_classes(cls(b), cls(a))
                expect = _scale(ba, CycScalar(
                    -1 if (a.length * b.length) % 2 else 1, 0, 1))
                if ab != expect:
                    ok_comm = False
    else:
        ok_comm = defining_relations_hold(ring.rs, ring.ell)
    return {"associative": ok_assoc, "odd_squares_zero": ok_square,
            "identity": ok_identity, "graded_commutative": ok_comm}


def defining_relations_hold(rs: RootSystem, ell: int) -> bool:
    """x_i^2 = 0 and x_i x_j = -zeta^{-(gamma_i, gamma_j)} x_j x_i for i < j,
    checked on every generator pair via the straightening routine."""
    n = len(rs.positive_roots)
    for i in range(n):
        scal, _ = quantum_straighten((i, i), rs, ell)
        if scal.sign != 0:
            return False
        for j in range(i + 1, n):
            # straighten x_j x_i and compare against the stated relation
            scal, srt = quantum_straighten((j, i), rs, ell)
            v = rs.inner_roots(rs.positive_roots[i], rs.positive_roots[j])
            expect = CycScalar(-1, int(v), ell)
            if srt != (i, j) or scal != expect:
                return False
            # forward form: x_i x_j + zeta^{-(gi,gj)} x_j x_i = 0
            fwd, srt2 = quantum_straighten((i, j), rs, ell)
            lhs = CycScalar(1, 0, ell)  # coefficient of x_i x_j in x_i x_j
            if srt2 != (i, j) or not (lhs.sign + (CycScalar(1, -int(v), ell)
                                                  * scal).sign == 0
                                      and (CycScalar(1, -int(v), ell)
                                           * scal).exponent == 0):
                return False
    return True


def straightening_confluent(rs: RootSystem, ell: int, max_len: int = 3) -> bool:
    """All parenthesizations of short generator words straighten alike."""
    from itertools import permutations, product
    n = len(rs.positive_roots)
    idx = range(n)
    for word in product(idx, repeat=min(max_len, 3)):
        # ((xy)z) vs (x(yz)): straighten stepwise both ways
        a, b, c = word
        s1, m1 = quantum_straighten((a, b), rs, ell)
        s1b, m1b = quantum_straighten(m1 + (c,), rs, ell)
        left = (s1 * s1b, m1b) if s1.sign and s1b.sign else (CycScalar.zero(ell), ())
        s2, m2 = quantum_straighten((b, c), rs, ell)
        s2b, m2b = quantum_straighten((a,) + m2, rs, ell)
        right = (s2 * s2b, m2b) if s2.sign and s2b.sign else (CycScalar.zero(ell), ())
        flat = quantum_straighten((a, b, c), rs, ell)
        flat = (flat[0], flat[1]) if flat[0].sign else (CycScalar.zero(ell), ())
        if left[0].sign == 0 and right[0].sign == 0 and flat[0].sign == 0:
            continue
        if not (left == right == flat):
            return False
    return True


def square_free_basis(rs: RootSystem, ell: int):
    """All straightened square-free monomials; exactly 2^N of them."""
    n = len(rs.positive_roots)
    out = set()
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            scal, srt = quantum_straighten(combo, rs, ell)
            assert scal == CycScalar.one(ell) and srt == combo
            out.add(srt)
    assert len(out) == 2 ** n
    return sorted(out, key=lambda s: (len(s), s))


def _scale(elem: RingElement, scal: CycScalar) -> RingElement:
    return RingElement({cls: s * scal for cls, s in elem.terms.items()}, elem.ell)


def _mult_elem(ring, elem: RingElement, c2: BasisClass) -> RingElement:
    out = RingElement({}, ring.ell)
    for cls, scal in elem.terms.items():
        prod = ring.multiply_classes(cls, c2)
        for cls2, scal2 in prod.terms.items():
            out = out + RingElement({cls2: scal * scal2}, ring.ell)
    return out


def _mult_elem_rev(ring, c1: BasisClass, elem: RingElement) -> RingElement:
    out = RingElement({}, ring.ell)
    for cls, scal in elem.terms.items():
        prod = ring.multiply_classes(c1, cls)
        for cls2, scal2 in prod.terms.items():
            out = out + RingElement({cls2: scal * scal2}, ring.ell)
    return out
