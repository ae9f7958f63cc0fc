"""Quadratic forms over Q, exactly: Hilbert symbols, Hasse invariants as
2-torsion Brauer classes (sets of ramified places), isotropy and Witt index
by the local-global criteria, trace forms of etale algebras, and the
splitting-tower bookkeeping for forms over fields containing sqrt(-1).

A Brauer class of exponent 2 over Q is faithfully encoded by its finite,
even-cardinality set of ramified places; the group law is symmetric
difference and the index is 1 or 2 according to whether the set is empty.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import polyq
from .numth import factorize, is_perfect_square, is_prime, legendre, valuation
from .polyq import Poly


# ---------------------------------------------------------------------------
# places of Q
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: a finite prime, or the real place (p = 0, sorts last
    via the is_infinite flag)."""

    is_infinite: bool
    p: int

    @classmethod
    def infinity(cls) -> "Place":
        return cls(True, 0)

    @classmethod
    def finite(cls, p: int) -> "Place":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(False, p)

    def __repr__(self):
        return "oo" if self.is_infinite else str(self.p)

    def to_json(self):
        return "inf" if self.is_infinite else self.p


INF = Place.infinity()
TWO = Place(False, 2)


class BrauerClass2:
    """2-torsion Brauer class over Q as its set of ramified places."""

    __slots__ = ("ramified",)

    def __init__(self, ramified: Iterable[Place] = ()):
        ram = frozenset(ramified)
        if len(ram) % 2:
            raise ValueError("a Brauer class over Q ramifies at an even "
                             "number of places")
        self.ramified = ram

    @classmethod
    def zero(cls) -> "BrauerClass2":
        return cls()

    def __add__(self, other: "BrauerClass2") -> "BrauerClass2":
        return BrauerClass2(self.ramified ^ other.ramified)

    def __eq__(self, other):
        if not isinstance(other, BrauerClass2):
            return NotImplemented
        return self.ramified == other.ramified

    def __hash__(self):
        return hash(self.ramified)

    def is_zero(self) -> bool:
        return not self.ramified

    def __repr__(self):
        inside = ", ".join(repr(v) for v in sorted(self.ramified))
        return "BrauerClass2{" + inside + "}"

    def to_json(self):
        return [v.to_json() for v in sorted(self.ramified)]


def brauer_index(c: BrauerClass2) -> int:
    """Over Q the index of a 2-torsion class equals its exponent."""
    return 1 if c.is_zero() else 2


# ---------------------------------------------------------------------------
# square classes
# ---------------------------------------------------------------------------

def _square_product(x: Fraction, y: Fraction) -> bool:
    """Is x*y a nonzero square in Q?  Factorization-free."""
    v = x * y
    if v <= 0:
        return False
    return is_perfect_square(v.numerator) and is_perfect_square(v.denominator)


class SquareClass:
    """A class in Q^x / (Q^x)^2.  Equality never factors; the canonical
    squarefree integer representative is materialized on demand."""

    __slots__ = ("value", "_rep")

    def __init__(self, value):
        value = Fraction(value)
        if value == 0:
            raise ValueError("0 is not a square class")
        self.value = value
        self._rep: Optional[int] = None

    @property
    def representative(self) -> int:
        if self._rep is None:
            n = self.value.numerator * self.value.denominator
            sign = -1 if n < 0 else 1
            rep = 1
            for p, e in factorize(n).items():
                if e % 2:
                    rep *= p
            self._rep = sign * rep
        return self._rep

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SquareClass(other)
        if not isinstance(other, SquareClass):
            return NotImplemented
        return _square_product(self.value, other.value)

    def __hash__(self):
        # hash on sign only: equality is up to squares, so finer hashing
        # would need the factored representative
        return hash(self.value > 0)

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return SquareClass(self.value * other.value)

    def is_one(self) -> bool:
        return _square_product(self.value, Fraction(1))

    def __repr__(self):
        if self._rep is not None:
            return f"SquareClass({self._rep})"
        return f"SquareClass(value={self.value})"


# ---------------------------------------------------------------------------
# Hilbert symbols
# ---------------------------------------------------------------------------

def _two_adic_sym(a: Fraction, b: Fraction) -> int:
    alpha, u = _val_unit(a, 2)
    beta, w = _val_unit(b, 2)
    eps_u = ((u - 1) // 2) & 1
    eps_w = ((w - 1) // 2) & 1
    om_u = ((u * u - 1) // 8) & 1
    om_w = ((w * w - 1) // 8) & 1
    e = eps_u * eps_w + alpha * om_w + beta * om_u
    return -1 if e & 1 else 1


def _val_unit(a: Fraction, p: int) -> Tuple[int, int]:
    """a = p^v * (x/y) with x, y prime to p; returns (v, unit mod lifting)
    where the unit is returned as an integer x*y' ... here simply x*y with
    the sign, which is a p-adic unit in the same square class."""
    vn, un = valuation(a.numerator, p)
    vd, ud = valuation(a.denominator, p)
    return vn - vd, un * ud


def hilbert_symbol(a, b, v: Place) -> int:
    """(a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
    solution over the completion at v."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if v.is_infinite:
        return -1 if (a < 0 and b < 0) else 1
    p = v.p
    if p == 2:
        return _two_adic_sym(a, b)
    alpha, u = _val_unit(a, p)
    beta, w = _val_unit(b, p)
    sym = 1
    if (alpha * beta) & 1 and p % 4 == 3:
        sym = -sym
    if beta & 1 and legendre(u, p) == -1:
        sym = -sym
    if alpha & 1 and legendre(w, p) == -1:
        sym = -sym
    return sym


_factor_cache: Dict[int, Dict[int, int]] = {}


def _cached_factorize(n: int) -> Dict[int, int]:
    got = _factor_cache.get(n)
    if got is None:
        got = _factor_cache[n] = factorize(n)
        if len(_factor_cache) > 100_000:
            _factor_cache.clear()
            _factor_cache[n] = got
    return got


def _odd_primes_of(x: Fraction) -> FrozenSet[int]:
    out = set()
    for n in (x.numerator, x.denominator):
        for p, e in _cached_factorize(n).items():
            if p != 2 and e % 2:
                out.add(p)
    return frozenset(out)


def quaternion_class(a, b) -> BrauerClass2:
    """The Brauer class of the quaternion algebra (a, b)."""
    a, b = Fraction(a), Fraction(b)
    candidates = {INF, TWO}
    for p in _odd_primes_of(a) | _odd_primes_of(b):
        candidates.add(Place(False, p))
    return BrauerClass2(
        v for v in candidates if hilbert_symbol(a, b, v) == -1)


# ---------------------------------------------------------------------------
# diagonal forms and their invariants
# ---------------------------------------------------------------------------

class QuadFormQ:
    """Non-degenerate diagonal form <a_1, ..., a_n> over Q."""

    __slots__ = ("diag",)

    def __init__(self, diag: Sequence):
        entries = [Fraction(d) for d in diag]
        if any(d == 0 for d in entries):
            raise ValueError("diagonal entries must be nonzero")
        self.diag = tuple(entries)

    @classmethod
    def parse(cls, text: str) -> "QuadFormQ":
        return cls([Fraction(t.strip()) for t in text.split(",") if t.strip()])

    @property
    def dim(self) -> int:
        return len(self.diag)

    def __repr__(self):
        return "<" + ", ".join(str(d) for d in self.diag) + ">"

    def orthogonal_sum(self, other: "QuadFormQ") -> "QuadFormQ":
        return QuadFormQ(self.diag + other.diag)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "diag": [str(d) for d in self.diag],
            "disc": discriminant(self).representative,
            "signature": list(signature(self)),
            "hasse_ramified": hasse_invariant(self).to_json(),
            "witt_index": witt_index(self),
        }


def discriminant(q: QuadFormQ) -> SquareClass:
    prod = Fraction(1)
    for d in q.diag:
        prod *= d
    return SquareClass(prod)


def signature(q: QuadFormQ) -> Tuple[int, int]:
    pos = sum(1 for d in q.diag if d > 0)
    return pos, q.dim - pos


def hasse_invariant(q: QuadFormQ) -> BrauerClass2:
    """w_2(q) = sum over i < j of the classes (a_i, a_j)."""
    candidates = {INF, TWO}
    for d in q.diag:
        for p in _odd_primes_of(d):
            candidates.add(Place(False, p))
    ramified = []
    for v in candidates:
        sym = 1
        for i in range(q.dim):
            for j in range(i + 1, q.dim):
                sym *= hilbert_symbol(q.diag[i], q.diag[j], v)
        if sym == -1:
            ramified.append(v)
    return BrauerClass2(ramified)


# -- local-global isotropy ----------------------------------------------------

@dataclass
class _Invariants:
    """(dim, disc, Hasse set, signature) with disc kept in factored form:
    sign and the parity of each odd prime exponent plus the 2-exponent."""

    dim: int
    disc_sign: int
    disc_parity: Dict[int, int]  # prime -> exponent mod 2 (odd entries only)
    hasse: FrozenSet[Place]
    pos: int
    neg: int

    def places(self) -> FrozenSet[Place]:
        out = {INF, TWO} | set(self.hasse)
        for p in self.disc_parity:
            if p != 2:
                out.add(Place(False, p))
        return frozenset(out)


def _invariants(q: QuadFormQ) -> _Invariants:
    disc_sign = 1
    parity: Dict[int, int] = {}
    for d in q.diag:
        if d < 0:
            disc_sign = -disc_sign
        for n in (d.numerator, d.denominator):
            for p, e in _cached_factorize(n).items():
                if e % 2:
                    parity[p] = parity.get(p, 0) ^ 1
    parity = {p: 1 for p, b in parity.items() if b}
    pos, neg = signature(q)
    return _Invariants(q.dim, disc_sign, parity, hasse_invariant(q).ramified,
                       pos, neg)


def _disc_is_local_square(inv: _Invariants, v: Place) -> bool:
    if v.is_infinite:
        return inv.disc_sign > 0
    p = v.p
    if inv.disc_parity.get(p):
        return False
    if p == 2:
        # odd unit part mod 8
        u = inv.disc_sign
        for q, _ in inv.disc_parity.items():
            if q != 2:
                u = u * q % 8
        return u % 8 == 1
    u = inv.disc_sign
    for q, _ in inv.disc_parity.items():
        if q != 2:
            u = u * (q % p) % p
        else:
            u = u * 2 % p
    return legendre(u % p, p) == 1


def _neg_disc_symbol(inv: _Invariants, v: Place) -> int:
    """(-1, -d)_v from the factored discriminant."""
    if v.is_infinite:
        # both arguments negative iff -d < 0 iff d > 0
        return -1 if inv.disc_sign > 0 else 1
    p = v.p
    if p == 2:
        # (-1, 2^e * u)_2 = (-1)^((u-1)/2); u = odd signed unit part of -d
        odd_unit = -inv.disc_sign
        for q in inv.disc_parity:
            if q != 2:
                odd_unit *= q
        return -1 if odd_unit % 4 == 3 else 1
    # odd p: (-1, b)_p = legendre(-1, p)^(v_p(b))
    if inv.disc_parity.get(p) and legendre(-1, p) == -1:
        return -1
    return 1


def _local_isotropic(inv: _Invariants, v: Place) -> bool:
    n = inv.dim
    if v.is_infinite:
        return inv.pos > 0 and inv.neg > 0
    if n >= 5:
        return True
    eps = -1 if v in inv.hasse else 1
    if n == 3:
        return eps == _neg_disc_symbol(inv, v)
    if n == 4:
        if not _disc_is_local_square(inv, v):
            return True
        return eps == hilbert_symbol(-1, -1, v)
    return False


def _is_isotropic_inv(inv: _Invariants) -> bool:
    if inv.dim < 2:
        return False
    if inv.dim >= 5:
        return inv.pos > 0 and inv.neg > 0
    if inv.dim == 2:
        # isotropic iff -d is a global square: negative sign and no odd
        # prime parities
        return inv.disc_sign == -1 and not inv.disc_parity
    return all(_local_isotropic(inv, v) for v in inv.places())


def _split_hyperbolic(inv: _Invariants) -> _Invariants:
    """Invariants of q' where q = H + q'."""
    new_sign = -inv.disc_sign
    new_parity = dict(inv.disc_parity)
    # w2(q) = w2(q') + (-1, d') with d' = -d
    sym_class = quaternion_class(-1, Fraction(new_sign) *
                                 _parity_product(new_parity))
    return _Invariants(inv.dim - 2, new_sign, new_parity,
                       inv.hasse ^ sym_class.ramified,
                       inv.pos - 1, inv.neg - 1)


def _parity_product(parity: Dict[int, int]) -> int:
    out = 1
    for p in parity:
        out *= p
    return out


def is_isotropic(q: QuadFormQ) -> bool:
    """Does q represent 0 nontrivially over Q (local criteria everywhere)."""
    return _is_isotropic_inv(_invariants(q))


def witt_index(q: QuadFormQ) -> int:
    """Number of hyperbolic planes split off, at the invariant level."""
    inv = _invariants(q)
    w = 0
    while inv.dim >= 2 and _is_isotropic_inv(inv):
        inv = _split_hyperbolic(inv)
        w += 1
    return w


def contains_ones(q: QuadFormQ, s: int) -> bool:
    """Does q contain s<1> as a subform?  By Witt cancellation this is
    witt_index(q + s<-1>) >= s."""
    if s < 0 or s > q.dim:
        raise ValueError("need 0 <= s <= dim q")
    if s == 0:
        return True
    probe = QuadFormQ(list(q.diag) + [Fraction(-1)] * s)
    return witt_index(probe) >= s


def is_isometric(q1: QuadFormQ, q2: QuadFormQ) -> bool:
    """Classification over Q: equal dimension, discriminant, Hasse class,
    and signature."""
    return (q1.dim == q2.dim
            and discriminant(q1) == discriminant(q2)
            and hasse_invariant(q1) == hasse_invariant(q2)
            and signature(q1) == signature(q2))


# ---------------------------------------------------------------------------
# Gram matrices and diagonalization
# ---------------------------------------------------------------------------

def diagonalize_gram(gram: List[List[Fraction]]) -> List[Fraction]:
    """Symmetric congruence diagonalization, exact.  Pivots are chosen with
    the smallest numerator*denominator bit size to limit coefficient growth.
    Raises on singular input."""
    m = [[Fraction(x) for x in row] for row in gram]
    n = len(m)
    diag: List[Fraction] = []
    idx = list(range(n))
    for step in range(n):
        size = n - step
        best = None
        for i in range(size):
            if m[i][i] != 0:
                cost = (abs(m[i][i].numerator).bit_length()
                        + m[i][i].denominator.bit_length())
                if best is None or cost < best[0]:
                    best = (cost, i)
        if best is None:
            # all diagonal zero: find off-diagonal entry and fold it in
            found = None
            for i in range(size):
                for j in range(i + 1, size):
                    if m[i][j] != 0:
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                raise ValueError("degenerate Gram matrix")
            i, j = found
            for k in range(size):
                m[i][k] += m[j][k]
            for k in range(size):
                m[k][i] += m[k][j]
            best = (0, i)
        _, piv = best
        if piv != 0:
            m[0], m[piv] = m[piv], m[0]
            for row in m:
                row[0], row[piv] = row[piv], row[0]
        d = m[0][0]
        diag.append(d)
        # Schur complement: the congruence-eliminated symmetric block
        m = [[m[i][j] - m[i][0] * m[j][0] / d for j in range(1, size)]
             for i in range(1, size)]
    return diag


# ---------------------------------------------------------------------------
# etale algebras and trace forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EtaleAlgebraQ:
    """Product of Q[x]/(f_i) for monic squarefree pairwise-coprime f_i."""

    factors: Tuple[Poly, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("need at least one factor")
        for f in self.factors:
            if polyq.degree(f) < 1 or not polyq.is_monic(f):
                raise ValueError("factors must be monic of positive degree")
            if not polyq.is_squarefree(f):
                raise ValueError(f"factor {polyq.format_poly(f)} is not squarefree")
        for i in range(len(self.factors)):
            for j in range(i + 1, len(self.factors)):
                g = polyq.gcd_poly(self.factors[i], self.factors[j])
                if polyq.degree(g) != 0:
                    raise ValueError("factors must be pairwise coprime")

    @classmethod
    def from_polynomial(cls, f: Poly) -> "EtaleAlgebraQ":
        return cls((f,))

    @property
    def dim(self) -> int:
        return sum(polyq.degree(f) for f in self.factors)

    def defining_polynomial(self) -> Poly:
        out = polyq.poly([1])
        for f in self.factors:
            out = polyq.mul(out, f)
        return out

    def __repr__(self):
        return " * ".join(f"Q[x]/({polyq.format_poly(f)})" for f in self.factors)


def trace_form(E: EtaleAlgebraQ) -> QuadFormQ:
    """The form x -> Tr(x^2): Gram matrix Tr(x^(i+j)) in the power basis of
    each factor (Newton power sums), diagonalized exactly."""
    if E.dim > 24:
        raise ValueError("trace forms capped at dimension 24")
    diag: List[Fraction] = []
    for f in E.factors:
        d = polyq.degree(f)
        sums = polyq.power_sums(f, 2 * d - 1)
        gram = [[sums[i + j] for j in range(d)] for i in range(d)]
        diag.extend(diagonalize_gram(gram))
    return QuadFormQ(diag)


def etale_discriminant(E: EtaleAlgebraQ) -> SquareClass:
    """Squarefree class of the discriminant of the defining polynomial:
    product of the factor discriminants times squared cross-resultants."""
    out = Fraction(1)
    for f in E.factors:
        out *= polyq.discriminant(f)
    for i in range(len(E.factors)):
        for j in range(i + 1, len(E.factors)):
            out *= polyq.resultant(E.factors[i], E.factors[j]) ** 2
    if out == 0:
        raise ValueError("degenerate etale algebra")
    return SquareClass(out)


def random_etale_algebra(n: int, rng: random.Random) -> EtaleAlgebraQ:
    """Seeded random n-dimensional etale algebra: a random composition of n
    into factor degrees, each factor a certified-irreducible monic integer
    polynomial.  Coefficient ranges shrink with the degree to keep
    discriminants at desk scale."""
    while True:
        parts: List[int] = []
        left = n
        while left:
            if rng.random() < 0.12:
                part = left
            else:
                part = min(left, 1 + min(rng.randrange(0, 7), rng.randrange(0, 7)))
            parts.append(part)
            left -= part
        factors: List[Poly] = []
        ok = True
        for d in parts:
            f = _random_irreducible(d, rng)
            if f is None:
                ok = False
                break
            factors.append(f)
        if not ok:
            continue
        try:
            return EtaleAlgebraQ(tuple(factors))
        except ValueError:
            continue


def _random_irreducible(d: int, rng: random.Random) -> Optional[Poly]:
    bound = 20 if d <= 5 else (5 if d <= 8 else 2)
    for _ in range(64):
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(d)]
        f = polyq.poly(coeffs + [Fraction(1)])
        if polyq.degree(f) != d or not polyq.is_squarefree(f):
            continue
        if polyq.certify_irreducible(f):
            return f
    return None


# ---------------------------------------------------------------------------
# splitting towers and the discriminant-1 Hasse identity
# ---------------------------------------------------------------------------

@dataclass
class TowerStep:
    pair: Tuple[Fraction, Fraction]
    adjoined: Optional[Fraction]  # -a/b, or None when already a square there
    derivation_ok: bool


@dataclass
class TowerReport:
    assumes_sqrt_minus_one: bool
    steps: List[TowerStep]
    residual: Optional[Fraction]
    degree: int

    @property
    def adjoined(self) -> List[Fraction]:
        return [s.adjoined for s in self.steps if s.adjoined is not None]

    @property
    def all_ok(self) -> bool:
        return all(s.derivation_ok for s in self.steps)


class _SquareClassGroup:
    """Subgroup of Q^x/(Q^x)^2 generated by -1 and adjoined classes, as a
    GF(2) row space over the prime-exponent coordinates."""

    def __init__(self):
        self.primes: List[int] = []
        self.rows: List[int] = [1]  # bit 0 = sign; -1 is always present

    def _vector(self, x: Fraction) -> int:
        vec = 1 if x < 0 else 0
        for n in (x.numerator, x.denominator):
            for p, e in _cached_factorize(n).items():
                if e % 2:
                    if p not in self.primes:
                        self.primes.append(p)
                    vec ^= 1 << (1 + self.primes.index(p))
        return vec

    def contains(self, x: Fraction) -> bool:
        return self._reduce(self._vector(x)) == 0

    def _reduce(self, vec: int) -> int:
        for row in self.rows:
            h = row.bit_length() - 1
            if vec >> h & 1:
                vec ^= row
        return vec

    def add(self, x: Fraction) -> bool:
        """Adjoin sqrt(x); returns False if x was already a square there."""
        vec = self._reduce(self._vector(x))
        if vec == 0:
            return False
        self.rows.append(vec)
        self.rows.sort(key=lambda r: -r.bit_length())
        return True


def splitting_tower(q: QuadFormQ) -> TowerReport:
    """Pair up the diagonal and adjoin sqrt(-a_{2i-1}/a_{2i}) for each pair;
    over the resulting field (with sqrt(-1) assumed present) every pair
    becomes <1, 1>.  The per-pair derivation is checked in the square-class
    group; the formal tower degree is 2^(number of honest adjunctions)."""
    group = _SquareClassGroup()
    steps: List[TowerStep] = []
    degree = 1
    diag = q.diag
    for k in range(q.dim // 2):
        a, b = diag[2 * k], diag[2 * k + 1]
        t = -a / b
        if group.add(t):
            adjoined: Optional[Fraction] = t
            degree *= 2
        else:
            adjoined = None
        # now -a/b is a square in the tower, so <a,b> ~ a<1,-1> ~ <1,1>
        ok = group.contains(-a / b)
        steps.append(TowerStep((a, b), adjoined, ok))
    residual = diag[-1] if q.dim % 2 else None
    return TowerReport(True, steps, residual, degree)


def lemma_disc_one_identity(q: QuadFormQ) -> bool:
    """For disc(q) = 1: w_2(q) equals w_2(<a_2, ..., a_n>) + (a_1, -1).

    The (a_1, a_1) = (a_1, -1) step is explicit here because sqrt(-1) is not
    in Q."""
    if not discriminant(q).is_one():
        raise ValueError("identity requires trivial discriminant")
    rest = QuadFormQ(q.diag[1:]) if q.dim > 1 else None
    rhs = quaternion_class(q.diag[0], -1)
    if rest is not None:
        rhs = rhs + hasse_invariant(rest)
    return hasse_invariant(q) == rhs
