"""Double covers of S_n and A_n realized as (central bit, permutation) pairs
with a 2-cocycle evaluated inside the Clifford algebra.

The canonical lift of a permutation is the ordered Clifford product of
(e_i - e_{i+1})/sqrt(2) over its canonical reduced word.  The cocycle
c(sigma, tau) is the sign relating lift(sigma)*lift(tau) to lift(sigma*tau);
anything other than +-1 aborts, since it would mean the Clifford arithmetic
itself is broken.  Elementary cocycle values c(rho, s_i) are memoized, and
general products fold over reduced words, so group arithmetic never touches
multivectors after warm-up.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .clifford import CliffordElem, CliffordSignature, lift_transposition
from .perms import (
    Perm,
    adjacent_transposition,
    canonical_word,
    compose,
    identity_perm,
    inverse,
    parity,
    right_multiply_adjacent,
)

DEFAULT_SIZE_BOUND = 1 << 18


class SizeBoundExceeded(RuntimeError):
    """Closure grew past the configured element-count cap."""


class CocycleInconsistency(RuntimeError):
    """lift(sigma)*lift(tau) was not +-lift(sigma*tau); fatal."""


class VerificationError(RuntimeError):
    """A presentation relation or structural check failed."""


@dataclass(frozen=True)
class CoverSpec:
    """Which double cover: rank n >= 4 and the generator-square convention.

    variant 'plus' models s_i^2 = 1 (generators square to +1 in the Clifford
    algebra), 'minus' models t_i^2 = z (squares -1).
    """

    n: int
    variant: str

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("covers are only considered for n >= 4")
        if self.variant not in ("plus", "minus"):
            raise ValueError("variant must be 'plus' or 'minus'")

    @property
    def sign(self) -> int:
        return 1 if self.variant == "plus" else -1


@dataclass(frozen=True, order=True)
class CoverElem:
    """z^eps * lift(perm); eps in {0, 1}.

    The ordering (eps, one-line notation) is the canonical element order
    used for reproducible tables.
    """

    eps: int
    perm: Perm


# parity-of-popcount lookup for the vectorized sign computation
_PARITY_BITS = 17
_PARITY = np.zeros(1 << _PARITY_BITS, dtype=np.int64)
for _i in range(1, 1 << _PARITY_BITS):
    _PARITY[_i] = _PARITY[_i >> 1] ^ (_i & 1)


# A lift is (masks, a, b, scale): the multivector
# sum_m (a_m + b_m*sqrt 2) * sqrt(2)^(-scale), masks sorted ascending.
FastLift = Tuple[np.ndarray, np.ndarray, np.ndarray, int]


def _flift_identity() -> FastLift:
    return (np.array([0], dtype=np.int64), np.array([1], dtype=np.int64),
            np.array([0], dtype=np.int64), 0)


def _flift_mul_vec(L: FastLift, i: int, sign_neg: bool) -> FastLift:
    """L * (e_i - e_{i+1})/sqrt(2); identical algebra to
    CliffordElem.mul_adjacent_vector, vectorized."""
    masks, a, b, scale = L
    bi = 1 << (i - 1)
    bj = bi << 1
    par1 = _PARITY[masks >> i]
    par2 = _PARITY[masks >> (i + 1)] ^ 1
    if sign_neg:
        par1 = par1 ^ ((masks & bi) != 0)
        par2 = par2 ^ ((masks & bj) != 0)
    s1 = 1 - 2 * par1
    s2 = 1 - 2 * par2
    allk = np.concatenate([masks ^ bi, masks ^ bj])
    alla = np.concatenate([a * s1, a * s2])
    allb = np.concatenate([b * s1, b * s2])
    uk, inv = np.unique(allk, return_inverse=True)
    na = np.zeros(len(uk), dtype=np.int64)
    nb = np.zeros(len(uk), dtype=np.int64)
    np.add.at(na, inv, alla)
    np.add.at(nb, inv, allb)
    nz = (na != 0) | (nb != 0)
    if not nz.all():
        uk, na, nb = uk[nz], na[nz], nb[nz]
    scale += 1
    while scale > 0 and len(uk) and not (na & 1).any():
        na, nb = nb, na >> 1
        scale -= 1
    if not len(uk):
        scale = 0
    return (uk, na, nb, scale)


def _flift_cmp(x: FastLift, y: FastLift) -> Optional[int]:
    """0 if x == y, 1 if x == -y, None otherwise."""
    if x[3] != y[3] or len(x[0]) != len(y[0]) or not np.array_equal(x[0], y[0]):
        return None
    if np.array_equal(x[1], y[1]) and np.array_equal(x[2], y[2]):
        return 0
    if np.array_equal(x[1], -y[1]) and np.array_equal(x[2], -y[2]):
        return 1
    return None


def _flift_to_elem(L: FastLift, sig: CliffordSignature) -> CliffordElem:
    masks, a, b, scale = L
    terms = {int(m): (int(x), int(y)) for m, x, y in zip(masks, a, b)}
    return CliffordElem(sig, terms, scale)


class Cover:
    """Arithmetic context for one CoverSpec: cocycle oracle plus caches."""

    # total multivector terms kept in the lift cache before it is dropped
    LIFT_TERM_BUDGET = 6_000_000

    def __init__(self, spec: CoverSpec):
        if spec.n > 16:
            raise ValueError("cover arithmetic is desk-scale: n <= 16")
        self.spec = spec
        self.sig = CliffordSignature(spec.n, spec.sign)
        self._vec = [None] + [
            lift_transposition(i, i + 1, self.sig) for i in range(1, spec.n)
        ]
        ident = identity_perm(spec.n)
        self._ident_perm = ident
        self._lifts: Dict[Perm, FastLift] = {ident: _flift_identity()}
        self._lift_terms = 0
        self._elem_bits: Dict[Tuple[Perm, int], int] = {}
        self._words: Dict[Perm, Tuple[int, ...]] = {}

    # -- distinguished elements ---------------------------------------------

    @property
    def identity(self) -> CoverElem:
        return CoverElem(0, self._ident_perm)

    @property
    def z(self) -> CoverElem:
        return CoverElem(1, self._ident_perm)

    def gen(self, i: int) -> CoverElem:
        """Canonical generator lift of the adjacent transposition (i, i+1)."""
        return CoverElem(0, adjacent_transposition(self.spec.n, i))

    def elem(self, perm: Perm, eps: int = 0) -> CoverElem:
        if len(perm) != self.spec.n:
            raise ValueError("permutation size does not match the cover spec")
        return CoverElem(eps & 1, perm)

    # -- the Clifford oracle --------------------------------------------------

    def _flift(self, perm: Perm) -> FastLift:
        """Canonical lift: product of generator vectors over the canonical
        word.  Prefix products are cached; the staircase word's prefixes are
        themselves canonical words, so the cache stays consistent."""
        cached = self._lifts.get(perm)
        if cached is not None:
            return cached
        word = self._word(perm)
        prefixes: List[Perm] = []
        p = self._ident_perm
        for i in word:
            p = right_multiply_adjacent(p, i)
            prefixes.append(p)
        start = 0
        val = self._lifts[self._ident_perm]
        for idx in range(len(prefixes) - 1, -1, -1):
            hit = self._lifts.get(prefixes[idx])
            if hit is not None:
                start = idx + 1
                val = hit
                break
        if self._lift_terms > self.LIFT_TERM_BUDGET:
            self._lifts = {self._ident_perm: _flift_identity()}
            self._lift_terms = 0
        neg = self.spec.sign < 0
        for idx in range(start, len(word)):
            val = _flift_mul_vec(val, word[idx], neg)
            self._lifts[prefixes[idx]] = val
            self._lift_terms += len(val[0])
        return val

    def lift(self, perm: Perm) -> CliffordElem:
        """Canonical lift as an exact CliffordElem."""
        return _flift_to_elem(self._flift(perm), self.sig)

    def elementary_cocycle(self, perm: Perm, i: int) -> int:
        """c(perm, s_i): sign in lift(perm)*v_i = (-1)^c * lift(perm*s_i)."""
        key = (perm, i)
        bit = self._elem_bits.get(key)
        if bit is not None:
            return bit
        prod = _flift_mul_vec(self._flift(perm), i, self.spec.sign < 0)
        target = self._flift(right_multiply_adjacent(perm, i))
        bit = _flift_cmp(prod, target)
        if bit is None:
            raise CocycleInconsistency(
                f"lift product is not +-canonical lift at ({perm}, s_{i})")
        self._elem_bits[key] = bit
        return bit

    def _word(self, perm: Perm) -> Tuple[int, ...]:
        w = self._words.get(perm)
        if w is None:
            if len(self._words) > (1 << 17):
                self._words.clear()
            w = self._words[perm] = tuple(canonical_word(perm))
        return w

    def cocycle(self, sigma: Perm, tau: Perm) -> int:
        """c(sigma, tau) with lift(sigma)lift(tau) = z^c lift(sigma tau)."""
        if len(sigma) != self.spec.n or len(tau) != self.spec.n:
            raise ValueError("permutation size does not match the cover spec")
        eps = 0
        cur = sigma
        for i in self._word(tau):
            eps ^= self.elementary_cocycle(cur, i)
            cur = right_multiply_adjacent(cur, i)
        return eps

    # -- group arithmetic ------------------------------------------------------

    def mul(self, g: CoverElem, h: CoverElem) -> CoverElem:
        return CoverElem(g.eps ^ h.eps ^ self.cocycle(g.perm, h.perm),
                         compose(g.perm, h.perm))

    def inv(self, g: CoverElem) -> CoverElem:
        pinv = inverse(g.perm)
        return CoverElem(g.eps ^ self.cocycle(g.perm, pinv), pinv)

    def power(self, g: CoverElem, e: int) -> CoverElem:
        if e < 0:
            return self.power(self.inv(g), -e)
        out = self.identity
        for _ in range(e):
            out = self.mul(out, g)
        return out

    def word(self, *indices: int) -> CoverElem:
        """Product of generator lifts s_{i1} s_{i2} ... ."""
        out = self.identity
        for i in indices:
            out = self.mul(out, self.gen(i))
        return out


_covers: Dict[CoverSpec, Cover] = {}


def get_cover(spec: CoverSpec) -> Cover:
    cov = _covers.get(spec)
    if cov is None:
        cov = _covers[spec] = Cover(spec)
    return cov


def clear_cover_cache() -> None:
    """Drop all memoized cover contexts (frees lift caches)."""
    _covers.clear()


def release_lift_caches() -> None:
    """Free the multivector caches of every live cover context.  Cheap to
    refill on demand; the memoized cocycle bits are kept."""
    for cov in _covers.values():
        cov._lifts = {cov._ident_perm: _flift_identity()}
        cov._lift_terms = 0


def cocycle(sigma: Perm, tau: Perm, spec: CoverSpec) -> int:
    return get_cover(spec).cocycle(sigma, tau)


def mul(g: CoverElem, h: CoverElem, spec: CoverSpec) -> CoverElem:
    return get_cover(spec).mul(g, h)


def inv(g: CoverElem, spec: CoverSpec) -> CoverElem:
    return get_cover(spec).inv(g)


# ---------------------------------------------------------------------------
# presentation verification
# ---------------------------------------------------------------------------

@dataclass
class RelationResult:
    relation: str
    ok: bool


@dataclass
class PresentationReport:
    spec: CoverSpec
    relations: List[RelationResult]
    order: Optional[int]
    order_expected: int
    order_method: str

    @property
    def all_ok(self) -> bool:
        return (all(r.ok for r in self.relations)
                and (self.order is None or self.order == self.order_expected))

    def failures(self) -> List[str]:
        out = [r.relation for r in self.relations if not r.ok]
        if self.order is not None and self.order != self.order_expected:
            out.append(f"order {self.order} != {self.order_expected}")
        return out


def verify_presentation(spec: CoverSpec,
                        size_bound: int = DEFAULT_SIZE_BOUND,
                        closure_max_n: int = 8,
                        mul_fn: Optional[Callable[[CoverElem, CoverElem], CoverElem]] = None
                        ) -> PresentationReport:
    """Check every defining relation of the matching presentation and confirm
    the group order equals 2*n!.

    For n <= closure_max_n the order is established by closing the generator
    set; for larger n it follows from the transversal argument: every
    permutation is a product of the generator images (its canonical word is
    checked to reassemble it), and z = (g_1 g_3)^2 lies in the group, so the
    element count is exactly 2 * n!.

    mul_fn exists for fault injection in tests; it defaults to cover
    multiplication.
    """
    cov = get_cover(spec)
    mul_ = mul_fn or cov.mul
    n = spec.n
    e, z = cov.identity, cov.z
    gens = [cov.gen(i) for i in range(1, n)]

    def wordprod(*elems: CoverElem) -> CoverElem:
        out = e
        for g in elems:
            out = mul_(out, g)
        return out

    plus = spec.variant == "plus"
    letter = "s" if plus else "t"
    rels: List[RelationResult] = []
    rels.append(RelationResult("z^2 = 1", mul_(z, z) == e))
    for i in range(1, n):
        g = gens[i - 1]
        sq = mul_(g, g)
        if plus:
            rels.append(RelationResult(f"{letter}{i}^2 = 1", sq == e))
        else:
            rels.append(RelationResult(f"{letter}{i}^2 = z", sq == z))
        rels.append(RelationResult(
            f"[z, {letter}{i}] = 1", mul_(z, g) == mul_(g, z)))
    for i in range(1, n):
        for j in range(i + 2, n):
            gi, gj = gens[i - 1], gens[j - 1]
            val = wordprod(gi, gj, gi, gj)
            rels.append(RelationResult(
                f"({letter}{i} {letter}{j})^2 = z", val == z))
    for i in range(1, n - 1):
        gi, gj = gens[i - 1], gens[i]
        val = wordprod(gi, gj, gi, gj, gi, gj)
        if plus:
            rels.append(RelationResult(
                f"({letter}{i} {letter}{i+1})^3 = 1", val == e))
        else:
            rels.append(RelationResult(
                f"({letter}{i} {letter}{i+1})^3 = z", val == z))

    expected = 2 * math.factorial(n)
    if n <= closure_max_n:
        count = _closure_count(gens + [z], mul_, e, size_bound)
        method = "closure"
    else:
        # z is reachable from the generators and every permutation is hit by
        # its canonical word, so {0,1} x S_n is the underlying set
        zw = wordprod(gens[0], gens[2], gens[0], gens[2])
        ok = zw == z
        rels.append(RelationResult("(g1 g3)^2 = z (transversal witness)", ok))
        rng = random.Random(12345)
        for _ in range(8):
            img = list(range(1, n + 1))
            rng.shuffle(img)
            sigma = tuple(img)
            got = e
            for i in canonical_word(sigma):
                got = mul_(got, gens[i - 1])
            rels.append(RelationResult(
                "canonical word reassembles a sample permutation",
                got.perm == sigma))
        count = expected
        method = "transversal"
    return PresentationReport(spec, rels, count, expected, method)


def _closure_count(gens: Sequence[CoverElem],
                   mul_: Callable[[CoverElem, CoverElem], CoverElem],
                   identity: CoverElem, size_bound: int) -> int:
    seen = {identity}
    frontier = [identity]
    while frontier:
        new: List[CoverElem] = []
        for x in frontier:
            for g in gens:
                y = mul_(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
                    if len(seen) > size_bound:
                        raise SizeBoundExceeded(
                            f"closure exceeded {size_bound} elements")
        frontier = new
    return len(seen)


# ---------------------------------------------------------------------------
# finite group tables
# ---------------------------------------------------------------------------

class FiniteGroupTable:
    """A finite group materialized as a canonical element list plus fast
    index-level multiplication.

    Products fold the right factor's generator word through per-generator
    index columns, so a product costs O(word length) array lookups no matter
    how expensive the underlying multiplication was to evaluate once.
    """

    def __init__(self, elements: List, mul_fn: Callable, identity,
                 generators: List, gen_cols: List[List[int]],
                 words: List[List[int]], name: str = ""):
        self.elements = elements
        self.mul_fn = mul_fn
        self.identity = identity
        self.generators = generators
        self._gen_cols = gen_cols
        self._words = words
        self.name = name
        self.index = {x: i for i, x in enumerate(elements)}
        self.order = len(elements)
        self._inv: Dict[int, int] = {}
        self._elem_order: Dict[int, int] = {}

    # -- construction -------------------------------------------------------

    @classmethod
    def generate(cls, generators: List, mul_fn: Callable, identity,
                 size_bound: int = DEFAULT_SIZE_BOUND,
                 sort_key: Optional[Callable] = None,
                 name: str = "") -> "FiniteGroupTable":
        """Breadth-first closure of the generators; elements are re-sorted by
        sort_key (default: natural ordering of the element values) so the
        table is independent of discovery order."""
        gens = []
        for g in generators:
            if g != identity and g not in gens:
                gens.append(g)
        seen = {identity: []}
        frontier = [identity]
        products: Dict[Tuple[object, int], object] = {}
        while frontier:
            new = []
            for x in frontier:
                for gi, g in enumerate(gens):
                    y = mul_fn(x, g)
                    products[(x, gi)] = y
                    if y not in seen:
                        seen[y] = seen[x] + [gi]
                        new.append(y)
                        if len(seen) > size_bound:
                            raise SizeBoundExceeded(
                                f"closure exceeded {size_bound} elements")
            frontier = new
        elements = sorted(seen, key=sort_key)
        index = {x: i for i, x in enumerate(elements)}
        gen_cols = []
        for gi in range(len(gens)):
            col = [0] * len(elements)
            for x, i in index.items():
                y = products.get((x, gi))
                if y is None:
                    y = mul_fn(x, gens[gi])
                col[i] = index[y]
            gen_cols.append(col)
        words = [seen[x] for x in elements]
        return cls(elements, mul_fn, identity, gens, gen_cols, words, name)

    @classmethod
    def from_elements(cls, elements: List, mul_fn: Callable, identity,
                      sort_key: Optional[Callable] = None,
                      name: str = "") -> "FiniteGroupTable":
        """Table over an already-closed element set; every element acts as
        its own generator."""
        elements = sorted(elements, key=sort_key)
        index = {x: i for i, x in enumerate(elements)}
        gen_cols = [[index[mul_fn(x, g)] for x in elements] for g in elements]
        words = [[i] for i in range(len(elements))]
        ident_idx = index[identity]
        words[ident_idx] = []
        return cls(elements, mul_fn, identity, list(elements), gen_cols,
                   words, name)

    # -- index arithmetic -----------------------------------------------------

    def idx(self, elem) -> int:
        return self.index[elem]

    def mul_idx(self, i: int, j: int) -> int:
        cur = i
        for gi in self._words[j]:
            cur = self._gen_cols[gi][cur]
        return cur

    def inv_idx(self, i: int) -> int:
        got = self._inv.get(i)
        if got is None:
            e = self.index[self.identity]
            prev, cur = i, self.mul_idx(i, i)
            while cur != e:
                prev, cur = cur, self.mul_idx(cur, i)
            got = self._inv[i] = prev if i != e else e
        return got

    def order_of_idx(self, i: int) -> int:
        got = self._elem_order.get(i)
        if got is None:
            e = self.index[self.identity]
            cur, k = i, 1
            while cur != e:
                cur = self.mul_idx(cur, i)
                k += 1
            got = self._elem_order[i] = k
        return got

    def exponent(self) -> int:
        import math
        exp = 1
        for i in range(self.order):
            exp = math.lcm(exp, self.order_of_idx(i))
        return exp

    def element_order_multiset(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for i in range(self.order):
            o = self.order_of_idx(i)
            out[o] = out.get(o, 0) + 1
        return out

    def cayley_table(self) -> List[List[int]]:
        if self.order > 512:
            raise SizeBoundExceeded("full Cayley table capped at 512 elements")
        return [[self.mul_idx(i, j) for j in range(self.order)]
                for i in range(self.order)]


def _cover_sort_key(g: CoverElem):
    return (g.eps, g.perm)


def preimage_subgroup(gens: Iterable[Perm], spec: CoverSpec,
                      size_bound: int = DEFAULT_SIZE_BOUND,
                      name: str = "") -> FiniteGroupTable:
    """Closure of {(0, g)} together with z: the full preimage of <gens>
    under the projection, of order 2*|<gens>|."""
    cov = get_cover(spec)
    generators = [cov.elem(g) for g in gens] + [cov.z]
    return FiniteGroupTable.generate(generators, cov.mul, cov.identity,
                                     size_bound, sort_key=_cover_sort_key,
                                     name=name)


def alt_cover_subgroup(spec: CoverSpec,
                       size_bound: int = DEFAULT_SIZE_BOUND) -> FiniteGroupTable:
    """The index-2 subgroup of even-permutation elements (the double cover
    of A_n), generated by consecutive 3-cycle lifts and z."""
    cov = get_cover(spec)
    n = spec.n
    gens = []
    for i in range(1, n - 1):
        g = compose(adjacent_transposition(n, i), adjacent_transposition(n, i + 1))
        gens.append(cov.elem(g))
    gens.append(cov.z)
    table = FiniteGroupTable.generate(gens, cov.mul, cov.identity, size_bound,
                                      sort_key=_cover_sort_key,
                                      name=f"alt-cover-{n}-{spec.variant}")
    return table


def in_alt_cover(g: CoverElem) -> bool:
    return parity(g.perm) == 0


def center(table: FiniteGroupTable) -> FiniteGroupTable:
    gen_idx = [table.idx(g) for g in table.generators]
    central = []
    for i in range(table.order):
        if all(table.mul_idx(i, j) == table.mul_idx(j, i) for j in gen_idx):
            central.append(table.elements[i])
    return FiniteGroupTable.from_elements(central, table.mul_fn,
                                          table.identity,
                                          name=f"Z({table.name})")


def conjugacy_classes(table: FiniteGroupTable) -> List[List[int]]:
    """Partition of element indices into conjugacy classes.  Classes are
    ordered with the identity class first, then by (size, smallest index)."""
    gen_idx = [table.idx(g) for g in table.generators]
    gen_inv = [table.inv_idx(i) for i in gen_idx]
    seen = [False] * table.order
    classes: List[List[int]] = []
    for start in range(table.order):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for g, gi in zip(gen_idx, gen_inv):
                y = table.mul_idx(table.mul_idx(g, x), gi)
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    stack.append(y)
        classes.append(sorted(orbit))
    e = table.idx(table.identity)
    classes.sort(key=lambda c: (0 if c[0] == e and len(c) == 1 else 1,
                                len(c), c[0]))
    return classes


# ---------------------------------------------------------------------------
# small-group isomorphism testing and reference groups
# ---------------------------------------------------------------------------

def _greedy_generators(table: FiniteGroupTable, cayley: List[List[int]]) -> List[int]:
    e = table.idx(table.identity)
    chosen: List[int] = []
    span = {e}
    for i in range(table.order):
        if i in span:
            continue
        chosen.append(i)
        span = _span(cayley, chosen, e)
        if len(span) == table.order:
            break
    return chosen

def _span(cayley: List[List[int]], gens: List[int], e: int) -> set:
    seen = {e}
    frontier = [e]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = cayley[x][g]
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def iso_small(A: FiniteGroupTable, B: FiniteGroupTable, bound: int = 128) -> bool:
    """Isomorphism test by generator-image backtracking; order-multiset
    prefilter.  Intended for groups of order <= bound."""
    if A.order > bound or B.order > bound:
        raise SizeBoundExceeded(f"iso_small is capped at order {bound}")
    if A.order != B.order:
        return False
    if A.element_order_multiset() != B.element_order_multiset():
        return False
    ca, cb = A.cayley_table(), B.cayley_table()
    ea, eb = A.idx(A.identity), B.idx(B.identity)
    gens = _greedy_generators(A, ca)
    # words for every element of A in the chosen generators
    words: Dict[int, Tuple[int, ...]] = {ea: ()}
    frontier = [ea]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = ca[x][g]
                if y not in words:
                    words[y] = words[x] + (g,)
                    new.append(y)
        frontier = new
    a_orders = [A.order_of_idx(g) for g in gens]
    b_by_order: Dict[int, List[int]] = {}
    for i in range(B.order):
        b_by_order.setdefault(B.order_of_idx(i), []).append(i)

    def attempt(images: List[int]) -> bool:
        phi = [0] * A.order
        for x, w in words.items():
            cur = eb
            for g in w:
                cur = cb[cur][images[gens.index(g)]]
            phi[x] = cur
        if len(set(phi)) != A.order:
            return False
        return all(phi[ca[x][y]] == cb[phi[x]][phi[y]]
                   for x in range(A.order) for y in range(A.order))

    def backtrack(depth: int, images: List[int]) -> bool:
        if depth == len(gens):
            return attempt(images)
        for cand in b_by_order.get(a_orders[depth], []):
            if backtrack(depth + 1, images + [cand]):
                return True
        return False

    return backtrack(0, [])


def generalized_quaternion_table(order: int) -> FiniteGroupTable:
    """Q_{2^k} presented by x^(2^(k-1)) = 1, y^2 = x^(2^(k-2)),
    y x y^-1 = x^-1; elements are pairs (i, j) meaning x^i y^j."""
    if order < 8 or order & (order - 1):
        raise ValueError("generalized quaternion groups have 2-power order >= 8")
    h = order // 2

    def qmul(a, b):
        i1, j1 = a
        i2, j2 = b
        if j1 == 0:
            i, j = i1 + i2, j2
        else:
            i, j = i1 - i2, 1 + j2
        if j >= 2:
            i, j = i + h // 2, j - 2
        return (i % h, j)

    elements = [(i, j) for j in range(2) for i in range(h)]
    return FiniteGroupTable.generate([(1, 0), (0, 1)], qmul, (0, 0),
                                     size_bound=order + 1,
                                     name=f"Q{order}")


def cyclic_table(order: int) -> FiniteGroupTable:
    return FiniteGroupTable.generate([1], lambda a, b: (a + b) % order, 0,
                                     size_bound=order + 1, name=f"C{order}")


def group_from_spec_json(data: dict,
                         size_bound: int = DEFAULT_SIZE_BOUND) -> Tuple[FiniteGroupTable, CoverElem]:
    """Build the group named by the JSON wire format
    {"n": ..., "variant": "plus"|"minus", "subgroup": "sylow2"|"alt"|"full"}.
    Returns (table, z)."""
    from .perms import sylow2_sym_generators
    spec = CoverSpec(int(data["n"]), data.get("variant", "plus"))
    which = data.get("subgroup", "sylow2")
    cov = get_cover(spec)
    if which == "sylow2":
        table = preimage_subgroup(sylow2_sym_generators(spec.n), spec,
                                  size_bound, name=f"sylow2-{spec.n}")
    elif which == "alt":
        table = alt_cover_subgroup(spec, size_bound)
    elif which == "full":
        gens = [cov.gen(i) for i in range(1, spec.n)] + [cov.z]
        table = FiniteGroupTable.generate(gens, cov.mul, cov.identity,
                                          size_bound,
                                          sort_key=_cover_sort_key,
                                          name=f"full-{spec.n}")
    else:
        raise ValueError(f"unknown subgroup kind {which!r}")
    return table, cov.z
