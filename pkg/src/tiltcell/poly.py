"""Univariate polynomial helpers over an exact field.

Polynomials are tuples of coefficients in ascending degree with no trailing
zeros (the zero polynomial is the empty tuple).  Only what the structure
computations need lives here: gcd arithmetic, characteristic polynomials via
Hessenberg reduction, minimal polynomials, root extraction for polynomials
that split over the base field, and idempotents from coprime factorizations.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InconsistentSystem
from .linalg import Field, Matrix


def normalize(field, coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == field.zero():
        cs.pop()
    return tuple(cs)


def degree(f) -> int:
    return len(f) - 1  # -1 for the zero polynomial


def add(field, f, g):
    n = max(len(f), len(g))
    fz = list(f) + [field.zero()] * (n - len(f))
    gz = list(g) + [field.zero()] * (n - len(g))
    return normalize(field, [field.add(a, b) for a, b in zip(fz, gz)])


def scale(field, c, f):
    return normalize(field, [field.mul(c, a) for a in f])


def mul(field, f, g):
    if not f or not g:
        return ()
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == field.zero():
            continue
        for j, b in enumerate(g):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return normalize(field, out)


def divmod_poly(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [field.zero()] * max(0, len(f) - len(g) + 1)
    inv_lead = field.inv(g[-1])
    while len(f) >= len(g) and normalize(field, f):
        f = list(normalize(field, f))
        if len(f) < len(g):
            break
        shift = len(f) - len(g)
        c = field.mul(f[-1], inv_lead)
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = field.sub(f[shift + i], field.mul(c, b))
    return normalize(field, q), normalize(field, f)


def monic(field, f):
    if not f:
        return f
    return scale(field, field.inv(f[-1]), f)


def gcd(field, f, g):
    a, b = f, g
    while b:
        a, b = b, divmod_poly(field, a, b)[1]
    return monic(field, a)


def extended_gcd(field, f, g):
    """(d, u, v) with u f + v g = d = monic gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = (field.one(),), ()
    t0, t1 = (), (field.one(),)
    while r1:
        q, r = divmod_poly(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, add(field, s0, scale(field, field.neg(field.one()), mul(field, q, s1)))
        t0, t1 = t1, add(field, t0, scale(field, field.neg(field.one()), mul(field, q, t1)))
    if not r0:
        return (), (), ()
    lead_inv = field.inv(r0[-1])
    return scale(field, lead_inv, r0), scale(field, lead_inv, s0), scale(field, lead_inv, t0)


def evaluate(field, f, x):
    acc = field.zero()
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def eval_matrix(field, f, m: Matrix) -> Matrix:
    acc = Matrix.zeros(field, m.rows, m.cols)
    for c in reversed(f):
        acc = (acc @ m) + Matrix.identity(field, m.rows).scale(c)
    return acc


def derivative(field, f):
    return normalize(field, [field.mul(field.of(i), c) for i, c in enumerate(f)][1:])


def deflate_root(field, f, r):
    """Divide out (x - r); the remainder must be zero."""
    q, rem = divmod_poly(field, f, (field.neg(r), field.one()))
    assert not rem
    return q


def pow_mod(field, base, e: int, modulus):
    result = (field.one(),)
    base = divmod_poly(field, base, modulus)[1]
    while e:
        if e & 1:
            result = divmod_poly(field, mul(field, result, base), modulus)[1]
        e >>= 1
        if e:
            base = divmod_poly(field, mul(field, base, base), modulus)[1]
    return result


# -- root extraction ----------------------------------------------------------


def _int_divisors(n: int):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(f):
    """Roots in Q of a polynomial with Fraction coefficients, with multiplicity."""
    field = Field()
    roots = []
    # strip powers of x
    while f and f[0] == 0:
        roots.append(Fraction(0))
        f = f[1:]
    while degree(f) >= 1:
        if degree(f) == 1:
            roots.append(-f[0] / f[1])
            f = (f[1],)
            break
        denom_lcm = 1
        for c in f:
            denom_lcm = denom_lcm * c.denominator // _gcd_int(denom_lcm, c.denominator)
        zf = [int(c * denom_lcm) for c in f]
        found = None
        for pnum in _int_divisors(zf[0]) or [0]:
            for qden in _int_divisors(zf[-1]):
                for sign in (1, -1):
                    cand = Fraction(sign * pnum, qden)
                    if evaluate(field, f, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        f = deflate_root(field, f, found)
    return roots, f


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _prime_field_roots(field, f, rng):
    """Roots in F_p with multiplicity; leftover factor has no roots in F_p."""
    p = field.p
    roots = []
    while f and f[0] == field.zero():
        roots.append(field.zero())
        f = f[1:]
    if degree(f) < 1:
        return roots, f
    if p <= 4096:
        for a in range(p):
            while f and evaluate(field, f, a) == field.zero():
                roots.append(a)
                f = deflate_root(field, f, a)
            if degree(f) < 1:
                break
        return roots, f
    # large p: split off the product of linear factors, then equal-degree split
    fm = monic(field, f)
    while True:
        xt = pow_mod(field, (field.zero(), field.one()), p, fm)
        lin = gcd(field, fm, add(field, xt, scale(field, field.neg(field.one()), (field.zero(), field.one()))))
        if degree(lin) < 1:
            break
        for r in _split_linear(field, lin, rng):
            mult = 0
            while True:
                q, rem = divmod_poly(field, fm, (field.neg(r), field.one()))
                if rem:
                    break
                fm = q
                mult += 1
            roots.extend([r] * mult)
        break
    return roots, fm


def _split_linear(field, f, rng):
    """All roots of a monic product of distinct linear factors over F_p."""
    p = field.p
    if degree(f) == 0:
        return []
    if degree(f) == 1:
        return [field.neg(f[0])]
    while True:
        a = field.of(rng.randrange(p))
        shifted = (a, field.one())
        g = pow_mod(field, shifted, (p - 1) // 2, f)
        g = add(field, g, (field.neg(field.one()),))
        d = gcd(field, f, g)
        if 0 < degree(d) < degree(f):
            rest = divmod_poly(field, f, d)[0]
            return _split_linear(field, d, rng) + _split_linear(field, rest, rng)


def linear_roots(field, f, rng=None):
    """(roots with multiplicity, non-split leftover factor) of f over the field."""
    f = normalize(field, f)
    if not f or degree(f) == 0:
        return [], f
    if field.p is None:
        return _rational_roots(f)
    import random

    return _prime_field_roots(field, f, rng or random.Random(0))


# -- matrix polynomials --------------------------------------------------------


def charpoly(m: Matrix):
    """Characteristic polynomial det(xI - m) via Hessenberg reduction.

    Returns monic coefficients in ascending degree, length n + 1.
    """
    F = m.field
    n = m.rows
    if n == 0:
        return (F.one(),)
    h = [list(r) for r in m.entries]
    # similarity reduction to upper Hessenberg form
    for col in range(n - 2):
        pivot = None
        for r in range(col + 1, n):
            if h[r][col] != F.zero():
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != col + 1:
            h[pivot], h[col + 1] = h[col + 1], h[pivot]
            for r in range(n):
                h[r][pivot], h[r][col + 1] = h[r][col + 1], h[r][pivot]
        inv = F.inv(h[col + 1][col])
        for r in range(col + 2, n):
            if h[r][col] == F.zero():
                continue
            factor = F.mul(h[r][col], inv)
            h[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(h[r], h[col + 1])]
            for rr in range(n):
                h[rr][col + 1] = F.add(h[rr][col + 1], F.mul(factor, h[rr][r]))
    # recurrence over leading principal minors of the Hessenberg form
    polys = [(F.one(),)]
    for k in range(1, n + 1):
        # p_k = (x - h[k-1][k-1]) p_{k-1} - sum_i (prod subdiag) h[i-1][k-1] p_{i-1}
        term = mul(F, (F.neg(h[k - 1][k - 1]), F.one()), polys[k - 1])
        prod = F.one()
        for i in range(k - 1, 0, -1):
            prod = F.mul(prod, h[i][i - 1])
            coeff = F.mul(prod, h[i - 1][k - 1])
            term = add(F, term, scale(F, F.neg(coeff), polys[i - 1]))
        polys.append(term)
    out = list(polys[n]) + [F.zero()] * (n + 1 - len(polys[n]))
    return tuple(out[: n + 1])


def minpoly(m: Matrix):
    """Minimal polynomial of a square matrix, monic, ascending coefficients."""
    F = m.field
    n = m.rows
    if n == 0:
        return (F.one(),)
    from .linalg import vstack

    powers = [Matrix.identity(F, n)]
    rows = [Matrix.row(F, powers[0].flat())]
    k = 1
    while True:
        powers.append(powers[-1] @ m)
        stacked = vstack(rows)
        target = Matrix.row(F, powers[-1].flat())
        try:
            sol, _ = stacked.transpose().solve(target.transpose())
        except InconsistentSystem:
            rows.append(target)
            k += 1
            if k > n + 1:
                raise RuntimeError("minimal polynomial search failed") from None
            continue
        coeffs = [F.neg(sol.entries[i][0]) for i in range(k)] + [F.one()]
        return normalize(F, coeffs)


def _coprime_pair(field, f):
    """A factorization f = g h with gcd(g, h) = 1 and both nonconstant, or None."""
    f = monic(field, f)
    if degree(f) < 2:
        return None
    roots, leftover = linear_roots(field, f)
    distinct = sorted(set(roots), key=str)
    if distinct and (len(distinct) > 1 or degree(leftover) >= 1):
        r = distinct[0]
        g = (field.one(),)
        for _ in range(roots.count(r)):
            g = mul(field, g, (field.neg(r), field.one()))
        if 0 < degree(g) < degree(f):
            return g, divmod_poly(field, f, g)[0]
    df = derivative(field, f)
    if df:
        # separate the squarefree part from the repeated part when coprime
        d = gcd(field, f, df)
        if 0 < degree(d) < degree(f):
            s = divmod_poly(field, f, d)[0]
            shared = gcd(field, s, d)
            coprime_part = divmod_poly(field, s, shared)[0]
            if 0 < degree(coprime_part) < degree(f):
                return coprime_part, divmod_poly(field, f, coprime_part)[0]
    elif field.p is not None and degree(f) >= field.p:
        # f' = 0 over F_p means f = r(x)^p with r sharing f's coefficients
        r = normalize(field, [f[i] for i in range(0, len(f), field.p)])
        sub = _coprime_pair(field, r)
        if sub is not None:
            g = sub[0]
            gp = (field.one(),)
            for _ in range(field.p):
                gp = mul(field, gp, g)
            return gp, divmod_poly(field, f, gp)[0]
    return None


def coprime_split_idempotent(field, f):
    """A polynomial e with e^2 = e mod f and e != 0, 1 mod f, or None.

    Exists whenever f admits a coprime factorization the cheap searches can
    find; f a power of a single irreducible correctly yields None.
    """
    pair = _coprime_pair(field, f)
    if pair is None:
        return None
    g, h = pair
    d, u, v = extended_gcd(field, g, h)
    if degree(d) != 0:
        return None
    # e = u g  (== 0 mod g, == 1 mod h)
    return divmod_poly(field, mul(field, u, g), monic(field, f))[1]
