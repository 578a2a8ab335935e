"""Exact integer counting for the pattern x in A3, w*x + y in A1, x*y in A2.

Everything here is integer-exact.  Character transforms appear only as
cross-checks, never as the counting authority.

Conventions
-----------
``f(x) = #{y : w*x + y in A1, x*y in A2}`` for x in Z_p*, where w = omega is
+1 or -1.  By default y runs over Z_p* (``include_zero_y=True`` widens it to
Z_p).  The kernel phi(y1, y2) takes y1, y2 over all of Z_p.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .field import CapacityError, ConsistencyError, PrimeContext, ZpSubset
from .transform import forward

MAX_DENSE_PHI = 4096

# cells per vectorized block in the O(p^2) loops
_CELLS = 1 << 22


class Certificate(NamedTuple):
    count: int
    witness: tuple | None


class SecondMoment(NamedTuple):
    sigma2: int
    sigma2_prime: int
    sigma2_dprime: int


class PhiMatrix(NamedTuple):
    omega: int
    vals: np.ndarray

    def total(self) -> int:
        return int(self.vals.sum(dtype=np.int64))


def _check_omega(omega: int) -> int:
    omega = int(omega)
    if omega not in (1, -1):
        raise ValueError(f"omega must be +1 or -1, got {omega}")
    return omega


def _x_blocks(xs: np.ndarray, width: int):
    step = max(1, _CELLS // max(width, 1))
    for lo in range(0, len(xs), step):
        yield xs[lo:lo + step]


def _hits(p, A1, A2, omega, xs, ys):
    """Boolean table [x, y] of w*x + y in A1 and x*y in A2."""
    X = xs[:, None]
    return A1.mask[(omega * X + ys) % p] & A2.mask[(X * ys) % p]


def _ys(p: int, include_zero_y: bool) -> np.ndarray:
    return np.arange(0 if include_zero_y else 1, p, dtype=np.int64)


def _counts(p, A1, A2, omega, xs, ys) -> np.ndarray:
    parts = [_hits(p, A1, A2, omega, blk, ys).sum(axis=1) for blk in _x_blocks(xs, len(ys))]
    return np.concatenate(parts).astype(np.int64) if parts else np.zeros(0, dtype=np.int64)


def f_values(ctx: PrimeContext, A1: ZpSubset, A2: ZpSubset, omega: int = 1,
             include_zero_y: bool = False) -> np.ndarray:
    """f(x) for x = 1..p-1 (position x-1)."""
    omega = _check_omega(omega)
    xs = np.arange(1, ctx.p, dtype=np.int64)
    return _counts(ctx.p, A1, A2, omega, xs, _ys(ctx.p, include_zero_y))


def sigma(ctx: PrimeContext, A1: ZpSubset, A2: ZpSubset, omega: int = 1,
          include_zero_y: bool = False, check: bool = True) -> int:
    """Number of pairs (x, y) with w*x + y in A1 and x*y in A2.

    With ``check`` the count is compared to the zeroth transform coefficient
    of f, which must agree to within 1e-6.
    """
    f = f_values(ctx, A1, A2, omega, include_zero_y)
    total = int(f.sum())
    if check:
        f0 = forward(ctx, f, zs=[0]).amp[0]
        if abs(f0 - total) > 1e-6:
            raise ConsistencyError(f"sigma={total} but transform gives {f0}")
    return total


def sigma_by_ratio(ctx: PrimeContext, A1: ZpSubset, A2: ZpSubset, omega: int = 1) -> int:
    """sigma recounted through y = lam*x: pairs (x, lam) in (Z_p*)^2 with
    x*(w + lam) in A1 and lam*x^2 in A2."""
    omega = _check_omega(omega)
    p = ctx.p
    lams = np.arange(1, p, dtype=np.int64)
    total = 0
    for blk in _x_blocks(np.arange(1, p, dtype=np.int64), len(lams)):
        X = blk[:, None]
        ok = A1.mask[(X * (omega + lams)) % p] & A2.mask[(lams * (X * X % p)) % p]
        total += int(ok.sum())
    return total


def _first_y(p, A1, A2, omega, x, include_zero_y=False):
    ys = _ys(p, include_zero_y)
    row = _hits(p, A1, A2, omega, np.array([x], dtype=np.int64), ys)[0]
    idx = np.flatnonzero(row)
    return int(ys[idx[0]]) if len(idx) else None


def sigma_tilde(ctx: PrimeContext, A1: ZpSubset, A2: ZpSubset, A3: ZpSubset, omega: int = 1,
                include_zero_y: bool = False) -> Certificate:
    """sum over x in A3 (x != 0) of f(x), with the (smallest x, smallest y)
    witness when positive."""
    omega = _check_omega(omega)
    xs = A3.units().elements()
    f = _counts(ctx.p, A1, A2, omega, xs, _ys(ctx.p, include_zero_y))
    total = int(f.sum())
    if total == 0:
        return Certificate(0, None)
    x = int(xs[np.flatnonzero(f)[0]])
    return Certificate(total, (x, _first_y(ctx.p, A1, A2, omega, x, include_zero_y)))


def _phi_rows(ctx: PrimeContext, A1: ZpSubset, omega: int, lo: int, hi: int) -> np.ndarray:
    # The fiber {y : w*x + y/x in A1} is x*(A1 - w*x); phi is the sum over x of
    # the outer products of these fibers.
    p = ctx.p
    a = A1.elements()
    block = np.zeros((hi - lo, p), dtype=np.int64)
    if len(a) == 0:
        return block
    for x in range(1, p):
        fiber = (x * ((a - omega * x) % p)) % p
        rows = fiber[(fiber >= lo) & (fiber < hi)]
        if len(rows):
            block[np.ix_(rows - lo, fiber)] += 1
    return block


def phi_matrix(ctx: PrimeContext, A1: ZpSubset, omega: int = 1,
               max_dense: int = MAX_DENSE_PHI) -> PhiMatrix:
    """phi(y1, y2) = #{x in Z_p* : w*x + y1/x in A1 and w*x + y2/x in A1}."""
    omega = _check_omega(omega)
    if ctx.p > max_dense:
        raise CapacityError(f"dense phi matrix limited to p <= {max_dense}")
    return PhiMatrix(omega, _phi_rows(ctx, A1, omega, 0, ctx.p))


def quadruple_count(ctx: PrimeContext, A1: ZpSubset, omega: int = 1,
                    max_dense: int = MAX_DENSE_PHI, rows: int = 256) -> int:
    """sum phi(y1, y2)^2, i.e. the number of (x1, x2, y1, y2) with all four
    of w*x_i + y_j/x_i in A1.  Streams row blocks when p exceeds ``max_dense``."""
    omega = _check_omega(omega)
    if ctx.p <= max_dense:
        vals = phi_matrix(ctx, A1, omega, max_dense).vals
        return int((vals * vals).sum())
    total = 0
    for lo in range(0, ctx.p, rows):
        blk = _phi_rows(ctx, A1, omega, lo, min(lo + rows, ctx.p))
        total += int((blk * blk).sum())
    return total


def quadruple_count_bruteforce(ctx: PrimeContext, A1: ZpSubset, omega: int = 1) -> int:
    """Literal enumeration of (x1, x2, y1, y2) in (Z_p*)^2 x Z_p^2 satisfying
    the four membership conditions.  O(p^4); meant for p around 30."""
    omega = _check_omega(omega)
    p = ctx.p
    xs = np.arange(1, p, dtype=np.int64)
    ys = np.arange(p, dtype=np.int64)
    inv = np.array([pow(int(x), -1, p) for x in xs], dtype=np.int64)
    # term[x, y] = A1(w*x + y/x)
    term = A1.mask[(omega * xs[:, None] + ys[None, :] * inv[:, None]) % p]
    x1 = term[:, None, :, None]
    x1b = term[:, None, None, :]
    x2 = term[None, :, :, None]
    x2b = term[None, :, None, :]
    return int((x1 & x1b & x2 & x2b).sum())


def phi_deviation(ctx: PrimeContext, A1: ZpSubset, omega: int = 1,
                  phi: PhiMatrix | None = None) -> Fraction:
    """sum over (y1, y2) of (phi - |A1|^2/p)^2, exactly."""
    if phi is None:
        phi = phi_matrix(ctx, A1, omega)
    p = ctx.p
    a2 = A1.card ** 2
    q = int((phi.vals * phi.vals).sum())
    s = phi.total()
    # sum (p*phi - a2)^2 expanded; each piece is an exact Python int
    scaled = p * p * q - 2 * p * a2 * s + p * p * a2 * a2
    return Fraction(scaled, p * p)


def second_moment(ctx: PrimeContext, A1: ZpSubset, A2: ZpSubset, omega: int = 1,
                  max_dense: int = MAX_DENSE_PHI, check: bool = True) -> SecondMoment:
    """(sigma2, sigma2', sigma2'').

    The decomposition sigma2 = sigma2' + sigma2'' is an identity for f taken
    with x and y ranging over all of Z_p: the x = 0 row contributes
    A2(0)*|A1|^2 and the x != 0 rows regroup into sum_{y1,y2 in A2} phi.
    sigma2 is computed that way, directly as a sum of squares.
    """
    omega = _check_omega(omega)
    p = ctx.p
    f = _counts(p, A1, A2, omega, np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64))
    s2 = int((f * f).sum())
    a2 = A2.elements()
    phi = phi_matrix(ctx, A1, omega, max_dense).vals
    s2p = int(phi[np.ix_(a2, a2)].sum())
    s2pp = int(A2.mask[0]) * A1.card ** 2
    if check and s2 != s2p + s2pp:
        raise ConsistencyError(f"sigma2={s2} != {s2p} + {s2pp}")
    return SecondMoment(s2, s2p, s2pp)


def _pair_set(p: int, A: ZpSubset, B: ZpSubset, op) -> ZpSubset:
    a = A.elements()[:, None]
    b = B.elements()[None, :]
    out = np.zeros(p, dtype=bool)
    if a.size and b.size:
        out[op(a, b) % p] = True
    return ZpSubset(p, out)


def circ_set(ctx: PrimeContext, A: ZpSubset, B: ZpSubset) -> ZpSubset:
    """A o B = {a^2 + a*b}."""
    return _pair_set(ctx.p, A, B, lambda a, b: a * a + a * b)


def star_set(ctx: PrimeContext, A: ZpSubset, B: ZpSubset) -> ZpSubset:
    """A * B = {a*b + a}."""
    return _pair_set(ctx.p, A, B, lambda a, b: a * b + a)


def count_equation_triples(ctx: PrimeContext, A1: ZpSubset, A2: ZpSubset,
                           A3: ZpSubset) -> Certificate:
    """Triples (a1, a2, a3) in A1 x A2 x A3 with a1^2 + a1*a2 + a3 = 0 mod p.

    Each (a1, a2) determines a3, so the count is over pairs; the witness is the
    lexicographically smallest (a1, a2).
    """
    p = ctx.p
    a1 = A1.elements()
    a2 = A2.elements()
    if not (len(a1) and len(a2) and A3.card):
        return Certificate(0, None)
    total = 0
    witness = None
    for blk in _x_blocks(a1, len(a2)):
        need = (-(blk[:, None] * blk[:, None] + blk[:, None] * a2[None, :])) % p
        ok = A3.mask[need]
        total += int(ok.sum())
        if witness is None and ok.any():
            i, j = np.argwhere(ok)[0]
            witness = (int(blk[i]), int(a2[j]), int(need[i, j]))
    return Certificate(total, witness)
