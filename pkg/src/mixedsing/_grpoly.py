"""Dense univariate polynomial helpers over GaussianRational.

Polynomials are plain coefficient lists in ascending degree order.  These
back the exact paths of the degeneracy rules and the lowest-part
factorization (square-free splitting via Yun's algorithm).
"""

from __future__ import annotations

from .mixedpoly import GR_ONE, GR_ZERO, GaussianRational

__all__ = [
    "strip",
    "mul",
    "eval_at",
    "derivative",
    "divmod_exact",
    "gcd_monic",
    "yun_squarefree",
]

Coeffs = list[GaussianRational]


def strip(p: Coeffs) -> Coeffs:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return []
    out = [GR_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return strip(out)


def eval_at(p: Coeffs, t: GaussianRational) -> GaussianRational:
    acc = GR_ZERO
    for c in reversed(p):
        acc = acc * t + c
    return acc


def derivative(p: Coeffs) -> Coeffs:
    return strip([p[k] * k for k in range(1, len(p))])


def divmod_exact(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    a = strip(a)
    b = strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [GR_ZERO] * max(len(a) - len(b) + 1, 1)
    inv = GR_ONE / b[-1]
    while a and len(a) >= len(b):
        f = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] = a[shift + i] - f * bi
        a = strip(a)
    return strip(q), a


def gcd_monic(a: Coeffs, b: Coeffs) -> Coeffs:
    a, b = strip(a), strip(b)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, strip(r)
    if not a:
        return []
    inv = GR_ONE / a[-1]
    return [c * inv for c in a]


def yun_squarefree(f: Coeffs) -> list[tuple[Coeffs, int]]:
    """Square-free decomposition f = lc * prod S_i^i (Yun's algorithm).

    Returns the monic square-free factors with their multiplicities,
    omitting trivial (constant) factors.
    """
    f = strip(f)
    if len(f) <= 1:
        return []
    inv = GR_ONE / f[-1]
    f = [c * inv for c in f]
    df = derivative(f)
    a = gcd_monic(f, df)
    b, _ = divmod_exact(f, a)
    c, _ = divmod_exact(df, a)
    d = strip([x - y for x, y in zip_pad(c, derivative(b))])
    out: list[tuple[Coeffs, int]] = []
    i = 1
    while len(b) > 1:
        a = gcd_monic(b, d)
        if len(a) > 1:
            out.append((a, i))
        b, _ = divmod_exact(b, a)
        c, _ = divmod_exact(d, a)
        d = strip([x - y for x, y in zip_pad(c, derivative(b))])
        i += 1
    return out


def zip_pad(a: Coeffs, b: Coeffs):
    n = max(len(a), len(b))
    a = a + [GR_ZERO] * (n - len(a))
    b = b + [GR_ZERO] * (n - len(b))
    return zip(a, b)
