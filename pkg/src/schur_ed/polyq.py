"""Dense univariate polynomials over Q: the small toolkit needed for trace
forms of etale algebras (Newton power sums, resultants, squarefreeness) and
for certifying irreducibility of randomly drawn factors via reduction mod p.

A polynomial is a tuple of Fractions, ascending degree, no trailing zeros.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

Poly = Tuple[Fraction, ...]


def poly(coeffs: Sequence) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    return len(f) - 1


def is_monic(f: Poly) -> bool:
    return bool(f) and f[-1] == 1


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return poly([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                 for i in range(n)])


def neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return poly(out)


def scale(f: Poly, c) -> Poly:
    return poly([Fraction(c) * a for a in f])


def divmod_poly(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q: List[Fraction] = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    r = list(f)
    dg, lg = len(g) - 1, g[-1]
    while len(r) - 1 >= dg and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = r[-1] / lg
        k = len(r) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] -= c * b
        r.pop()
    return poly(q), poly(r)


def gcd_poly(f: Poly, g: Poly) -> Poly:
    a, b = f, g
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return ()
    return scale(a, 1 / a[-1])


def derivative(f: Poly) -> Poly:
    return poly([i * c for i, c in enumerate(f)][1:])


def is_squarefree(f: Poly) -> bool:
    return degree(gcd_poly(f, derivative(f))) == 0


def evaluate(f: Poly, x) -> Fraction:
    out = Fraction(0)
    for c in reversed(f):
        out = out * x + c
    return out


# ---------------------------------------------------------------------------
# resultants and discriminants (Sylvester determinant, exact)
# ---------------------------------------------------------------------------

def _bareiss_det(M: List[List[int]]) -> int:
    n = len(M)
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def resultant(f: Poly, g: Poly) -> Fraction:
    m, n = degree(f), degree(g)
    if m < 0 or n < 0:
        return Fraction(0)
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    den = lcm(*[c.denominator for c in f + g])
    fi = [int(c * den) for c in f]
    gi = [int(c * den) for c in g]
    size = m + n
    M = [[0] * size for _ in range(size)]
    for row in range(n):
        for i, c in enumerate(reversed(fi)):
            M[row][row + i] = c
    for row in range(m):
        for i, c in enumerate(reversed(gi)):
            M[n + row][row + i] = c
    det = _bareiss_det(M)
    return Fraction(det, den ** size)


def discriminant(f: Poly) -> Fraction:
    d = degree(f)
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f)) / f[-1]


def power_sums(f: Poly, count: int) -> List[Fraction]:
    """Newton power sums p_0..p_{count-1} of the roots of monic f."""
    if not is_monic(f):
        raise ValueError("power sums assume a monic polynomial")
    d = degree(f)
    c = list(f)  # c[i] is the coefficient of x^i
    p: List[Fraction] = [Fraction(d)]
    for k in range(1, count):
        if k <= d:
            acc = -k * c[d - k]
            for j in range(1, k):
                acc -= c[d - j] * p[k - j]
        else:
            acc = Fraction(0)
            for j in range(1, d + 1):
                acc -= c[d - j] * p[k - j]
        p.append(Fraction(acc))
    return p


# ---------------------------------------------------------------------------
# parsing: "x^3 - 2", "2*x^2 + x/3 - 1", or coefficient lists "1,0,-2"
# (descending degree)
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"\s*([+-]?)\s*"
    r"(?:(\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(x|X)?"
    r"(?:\s*\^\s*(\d+))?"
    r"(?:\s*/\s*(\d+))?"
)


def parse_poly(text: str) -> Poly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if "x" not in text and "X" not in text and "," in text:
        coeffs = [Fraction(t.strip()) for t in text.split(",")]
        return poly(list(reversed(coeffs)))
    pos = 0
    terms: List[Tuple[int, Fraction]] = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign_s, coeff_s, var, exp_s, div_s = m.groups()
        if coeff_s is None and var is None:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        coeff = Fraction(coeff_s) if coeff_s else Fraction(1)
        if sign_s == "-":
            coeff = -coeff
        if div_s:
            coeff /= int(div_s)
        if var:
            exp = int(exp_s) if exp_s else 1
        else:
            exp = 0
        terms.append((exp, coeff))
        pos = m.end()
    d = max(e for e, _ in terms)
    out = [Fraction(0)] * (d + 1)
    for e, c in terms:
        out[e] += c
    return poly(out)


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    bits = []
    for e in range(degree(f), -1, -1):
        c = f[e]
        if c == 0:
            continue
        s = "+ " if c > 0 else "- "
        c = abs(c)
        if e == 0:
            bits.append(f"{s}{c}")
        elif e == 1:
            bits.append(f"{s}{'' if c == 1 else str(c) + '*'}x")
        else:
            bits.append(f"{s}{'' if c == 1 else str(c) + '*'}x^{e}")
    out = " ".join(bits)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


# ---------------------------------------------------------------------------
# irreducibility certificates mod p (Rabin's test)
# ---------------------------------------------------------------------------

def _pm(f: Poly, p: int) -> List[int]:
    den = lcm(*[c.denominator for c in f]) if f else 1
    if den % p == 0:
        raise ValueError("denominator divisible by p")
    out = [int(c * den) % p for c in f]
    inv = pow(den % p, p - 2, p)
    out = [c * inv % p for c in out]
    while out and out[-1] == 0:
        out.pop()
    return out


def _pm_mulmod(a: List[int], b: List[int], m: List[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pm_rem(out, m, p)


def _pm_rem(a: List[int], m: List[int], p: int) -> List[int]:
    a = a[:]
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        if a[-1]:
            c = a[-1] * inv % p
            k = len(a) - 1 - dm
            for i, y in enumerate(m):
                a[k + i] = (a[k + i] - c * y) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_gcd(a: List[int], b: List[int], p: int) -> List[int]:
    while b:
        inv = pow(b[-1], p - 2, p)
        r = a[:]
        db = len(b) - 1
        while len(r) - 1 >= db:
            if r[-1]:
                c = r[-1] * inv % p
                k = len(r) - 1 - db
                for i, y in enumerate(b):
                    r[k + i] = (r[k + i] - c * y) % p
            r.pop()
        while r and r[-1] == 0:
            r.pop()
        a, b = b, r
    return a


def _pm_pow_x(q: int, m: List[int], p: int) -> List[int]:
    """x^q mod (m, p) by square and multiply."""
    result = [1]
    base = _pm_rem([0, 1], m, p)
    while q:
        if q & 1:
            result = _pm_mulmod(result, base, m, p)
        base = _pm_mulmod(base, base, m, p)
        q >>= 1
    return result


def _pm_sub(a: List[int], b: List[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def is_irreducible_mod_p(f: Poly, p: int) -> bool:
    """Rabin's test: f irreducible mod p certifies irreducibility over Q
    (for f whose degree does not drop mod p)."""
    try:
        fp = _pm(f, p)
    except ValueError:
        return False
    d = len(fp) - 1
    if d != degree(f) or d < 1:
        return False
    if d == 1:
        return True
    der = [(i * c) % p for i, c in enumerate(fp)][1:]
    while der and der[-1] == 0:
        der.pop()
    if not der or len(_pm_gcd(fp, der, p)) != 1:
        return False
    xm = _pm_rem([0, 1], fp, p)
    if _pm_sub(_pm_pow_x(p ** d, fp, p), xm, p):
        return False
    prime_divs = set()
    dd = d
    ell = 2
    while dd > 1:
        while dd % ell == 0:
            prime_divs.add(ell)
            dd //= ell
        ell += 1
    for ell in sorted(prime_divs):
        diff = _pm_sub(_pm_pow_x(p ** (d // ell), fp, p), xm, p)
        if not diff or len(_pm_gcd(fp, diff, p)) != 1:
            return False
    return True


_CERT_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def certify_irreducible(f: Poly) -> bool:
    """True if some small prime certifies irreducibility over Q.  A False
    return means 'not certified', not 'reducible'."""
    if degree(f) == 1:
        return True
    for p in _CERT_PRIMES:
        try:
            if is_irreducible_mod_p(f, p):
                return True
        except ValueError:
            continue
    return False
