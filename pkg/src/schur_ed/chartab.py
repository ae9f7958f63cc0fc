"""Character degrees and central signs of finite groups by Dixon's
finite-field method.

Everything is computed mod a prime p ≡ 1 (mod exp(G)) with p > 2*sqrt(|G|).
Degrees are recovered exactly: chi(1) <= sqrt(|G|) < p/2, so the residue
below p/2 is the degree.  Central signs chi(z)/chi(1) for a central
involution z are +-1 mod p, which determines them exactly since p is odd.
Full character values over C are never needed here.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .covers import FiniteGroupTable, VerificationError, center, conjugacy_classes
from .numth import next_prime, sqrt_mod


@dataclass(frozen=True)
class DixonPrime:
    p: int
    exponent: int

    def __post_init__(self):
        if self.p % 2 == 0 or self.p % self.exponent != 1:
            raise ValueError("need an odd prime p = 1 mod exponent")


def dixon_prime(order: int, exponent: int) -> DixonPrime:
    p = 2 * math.isqrt(order) + 1
    while True:
        p = next_prime(p)
        if p % exponent == 1 % exponent:
            return DixonPrime(p, exponent)


@dataclass
class CharTable:
    """Conjugacy data plus mod-p irreducible character values.

    values[i][t] is chi_i(g_t) mod p; degrees are exact integers; signs[i]
    maps each central involution's class index to chi_i(z)/chi_i(1) = +-1.
    """

    group_order: int
    prime: int
    class_reps: List
    class_sizes: List[int]
    degrees: List[int]
    values: List[List[int]]
    central_involution_classes: List[int]
    signs: List[Dict[int, int]]

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes)

    def central_sign(self, irrep: int, z_class: int) -> int:
        return self.signs[irrep][z_class]

    def to_json(self) -> dict:
        return {
            "order": self.group_order,
            "prime": self.prime,
            "classes": [
                {"representative": _elem_json(r), "size": s}
                for r, s in zip(self.class_reps, self.class_sizes)
            ],
            "degrees": self.degrees,
            "central_involution_classes": self.central_involution_classes,
            "central_signs": [
                [sg[c] for c in self.central_involution_classes]
                for sg in self.signs
            ],
        }


def _elem_json(e):
    if hasattr(e, "eps") and hasattr(e, "perm"):
        return {"eps": e.eps, "perm": list(e.perm)}
    return repr(e)


# ---------------------------------------------------------------------------
# GF(p) linear algebra (dense, numpy int64)
# ---------------------------------------------------------------------------

def _gf_rref(M: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    M = M % p
    rows, cols = M.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = None
        for i in range(r, rows):
            if M[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]
        M[r] = M[r] * pow(int(M[r, c]), p - 2, p) % p
        mask = M[:, c].copy()
        mask[r] = 0
        M -= np.outer(mask, M[r])
        M %= p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _gf_nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Rows span {v : M v = 0}."""
    R, pivots = _gf_rref(M, p)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-int(R[i, fc])) % p
    return basis


# ---------------------------------------------------------------------------
# Dixon's method
# ---------------------------------------------------------------------------

class _ClassData:
    def __init__(self, table: FiniteGroupTable):
        self.table = table
        self.classes = conjugacy_classes(table)
        self.n = len(self.classes)
        self.class_of = [0] * table.order
        for t, cls in enumerate(self.classes):
            for i in cls:
                self.class_of[i] = t
        self.reps = [cls[0] for cls in self.classes]
        self.sizes = [len(cls) for cls in self.classes]
        self.inv_class = [
            self.class_of[table.inv_idx(rep)] for rep in self.reps
        ]
        self._mats: Dict[int, np.ndarray] = {}

    def exponent(self) -> int:
        exp = 1
        for rep in self.reps:
            exp = math.lcm(exp, self.table.order_of_idx(rep))
        return exp

    def class_matrix(self, r: int) -> np.ndarray:
        """B_r with B_r[t, u] = #{x in C_r : x^-1 g_u in C_t}; the common
        eigenvectors of all B_r are the rows of the character table up to
        normalization."""
        got = self._mats.get(r)
        if got is not None:
            return got
        table, class_of = self.table, self.class_of
        B = np.zeros((self.n, self.n), dtype=np.int64)
        for x in self.classes[r]:
            xi = table.inv_idx(x)
            for u, gu in enumerate(self.reps):
                B[class_of[table.mul_idx(xi, gu)], u] += 1
        self._mats[r] = B
        return B


def _split_spaces(spaces: List[np.ndarray], B: np.ndarray, p: int) -> List[np.ndarray]:
    out: List[np.ndarray] = []
    for S in spaces:
        k = S.shape[0]
        if k == 1:
            out.append(S)
            continue
        S, pivots = _gf_rref(S, p)
        BST = B @ S.T % p
        R = BST[pivots, :] % p
        # invariance check: B S^T == S^T R
        if not np.array_equal(S.T @ R % p, BST):
            raise VerificationError("class matrix did not preserve a subspace")
        found = 0
        for lam in range(p):
            N = _gf_nullspace((R - lam * np.eye(k, dtype=np.int64)) % p, p)
            if N.shape[0]:
                out.append(N @ S % p)
                found += N.shape[0]
                if found == k:
                    break
        if found != k:
            raise VerificationError("eigenvalue scan failed to exhaust a space")
    return out


def dixon_character_table(table: FiniteGroupTable, seed: int = 0,
                          max_retries: int = 64) -> CharTable:
    data = _ClassData(table)
    n, order = data.n, table.order
    exponent = data.exponent()
    dp = dixon_prime(order, exponent)
    p = dp.p
    rng = random.Random((seed, order, n).__hash__())

    last_err: Optional[Exception] = None
    for attempt in range(max_retries):
        try:
            spaces = [np.eye(n, dtype=np.int64)]
            if n > 1:
                # seeded random mixture of a few class matrices splits most of
                # the space at once; individual matrices finish the job
                mix_count = min(n - 1, 8)
                M = np.zeros((n, n), dtype=np.int64)
                for r in range(1, 1 + mix_count):
                    M += rng.randrange(1, p) * data.class_matrix(r)
                spaces = _split_spaces(spaces, M % p, p)
                for r in range(1, n):
                    if all(S.shape[0] == 1 for S in spaces):
                        break
                    spaces = _split_spaces(spaces, data.class_matrix(r), p)
            if not all(S.shape[0] == 1 for S in spaces):
                raise VerificationError("common eigenspaces not 1-dimensional")
            return _assemble(table, data, p, spaces)
        except VerificationError as err:  # retry with a fresh mixture
            last_err = err
    raise VerificationError(f"Dixon splitting failed after {max_retries} tries: {last_err}")


def _assemble(table: FiniteGroupTable, data: _ClassData, p: int,
              spaces: List[np.ndarray]) -> CharTable:
    order = table.order
    n = data.n
    size_inv = [pow(s, p - 2, p) for s in data.sizes]
    irreps = []
    for S in spaces:
        w = [int(v) % p for v in S[0]]
        if w[0] == 0:
            raise VerificationError("eigenvector vanishes on the identity class")
        scale = pow(w[0], p - 2, p)
        w = [v * scale % p for v in w]
        denom = sum(w[u] * w[data.inv_class[u]] * size_inv[u] for u in range(n)) % p
        if denom == 0:
            raise VerificationError("degenerate norm in degree recovery")
        chi1_sq = order * pow(denom, p - 2, p) % p
        root = sqrt_mod(chi1_sq, p)
        degree = min(root, p - root)
        values = [degree * w[u] * size_inv[u] % p for u in range(n)]
        irreps.append((degree, values, w))
    irreps.sort(key=lambda iv: (iv[0], iv[1]))

    degrees = [d for d, _, _ in irreps]
    if sum(d * d for d in degrees) != order:
        raise VerificationError("sum of squared degrees does not match the order")
    values = [v for _, v, _ in irreps]

    # second orthogonality as a whole-table consistency check
    X = np.array(values, dtype=np.int64)
    gram = X.T @ X[:, data.inv_class] % p
    expected = np.zeros((n, n), dtype=np.int64)
    for t in range(n):
        expected[t, t] = order * size_inv[t] % p
    if not np.array_equal(gram % p, expected):
        raise VerificationError("column orthogonality failed mod p")

    central = [
        t for t in range(n)
        if data.sizes[t] == 1 and table.order_of_idx(data.reps[t]) == 2
    ]
    signs = []
    for _, _, w in irreps:
        sg: Dict[int, int] = {}
        for t in central:
            if w[t] == 1:
                sg[t] = 1
            elif w[t] == p - 1:
                sg[t] = -1
            else:
                raise VerificationError("central involution value is not +-1")
        signs.append(sg)

    return CharTable(
        group_order=order,
        prime=p,
        class_reps=[table.elements[r] for r in data.reps],
        class_sizes=list(data.sizes),
        degrees=degrees,
        values=values,
        central_involution_classes=central,
        signs=signs,
    )


# ---------------------------------------------------------------------------
# minimal faithful dimension extraction
# ---------------------------------------------------------------------------

def _z_class_index(table: FiniteGroupTable, ct: CharTable, z) -> int:
    z_idx = table.idx(z)
    zc = None
    for t in ct.central_involution_classes:
        if table.idx(ct.class_reps[t]) == z_idx:
            zc = t
    if zc is None:
        raise VerificationError("z is not a central involution of the group")
    return zc


def _check_center_is_z(table: FiniteGroupTable, z) -> None:
    cen = center(table)
    members = {table.idx(e) for e in cen.elements}
    if members != {table.idx(table.identity), table.idx(z)}:
        raise VerificationError(
            "center is not {1, z}: minimal faithful dimension theory "
            "requires a cyclic center of order 2")


def faithful_degrees(table: FiniteGroupTable, z,
                     chartable: Optional[CharTable] = None) -> List[int]:
    """Degrees of irreducibles rho with rho(z) = -1, i.e. the faithful ones
    when the center is exactly {1, z}."""
    _check_center_is_z(table, z)
    ct = chartable or dixon_character_table(table)
    zc = _z_class_index(table, ct, z)
    return [d for d, sg in zip(ct.degrees, ct.signs) if sg[zc] == -1]


def min_faithful_irrep_dim(table: FiniteGroupTable, z,
                           chartable: Optional[CharTable] = None) -> int:
    degs = faithful_degrees(table, z, chartable)
    if not degs:
        raise VerificationError("no irreducible sends z to -1")
    return min(degs)


def count_min_faithful(table: FiniteGroupTable, z,
                       chartable: Optional[CharTable] = None) -> int:
    degs = faithful_degrees(table, z, chartable)
    if not degs:
        raise VerificationError("no irreducible sends z to -1")
    m = min(degs)
    return sum(1 for d in degs if d == m)
