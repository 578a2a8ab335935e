"""Prime-field substrate: primitive roots, index (discrete log) tables,
multiplicative characters and the subsets of Z_p everything else works on.

Elements of Z_p are plain integers in ``range(p)``.  Functions on Z_p* are
numpy arrays of length ``p - 1`` where position ``i`` holds the value at
``x = i + 1``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

MAX_PRIME = 10**7


class NotPrimeError(ValueError):
    """Raised for a composite modulus; ``witness`` is a nontrivial divisor."""

    def __init__(self, n: int, witness: int | None):
        self.n = n
        self.witness = witness
        if witness is None:
            msg = f"{n} is not prime"
        else:
            msg = f"{n} is not prime (divisible by {witness})"
        super().__init__(msg)


class CapacityError(ValueError):
    pass


class ConsistencyError(ArithmeticError):
    """An identity that must hold exactly (or within tolerance) was violated."""


def smallest_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_factor(n) == n


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def prime_factors(n: int) -> list[int]:
    out = []
    while n > 1:
        q = smallest_factor(n)
        out.append(q)
        while n % q == 0:
            n //= q
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@dataclass(frozen=True, eq=False)
class PrimeContext:
    """A prime ``p`` together with a primitive root ``g`` and its tables.

    ``ind[x]`` is the discrete log of ``x`` (``ind[0]`` is unused and set to
    -1) and ``pow[t] = g**t mod p`` for ``0 <= t < p - 1``.
    """

    p: int
    g: int
    ind: np.ndarray
    pow: np.ndarray

    @property
    def n(self) -> int:
        """Order of Z_p*, i.e. the length of every spectrum."""
        return self.p - 1

    def inv(self, x: int) -> int:
        return pow(int(x), -1, self.p)

    def __repr__(self) -> str:
        return f"PrimeContext(p={self.p}, g={self.g})"


def _is_generator(g: int, p: int, factors: list[int]) -> bool:
    return all(pow(g, (p - 1) // q, p) != 1 for q in factors)


def make_context(p: int) -> PrimeContext:
    p = int(p)
    if p < 2:
        raise NotPrimeError(p, None)
    d = smallest_factor(p)
    if d != p:
        raise NotPrimeError(p, d)
    if p > MAX_PRIME:
        raise CapacityError(f"p={p} exceeds table limit {MAX_PRIME}")

    if p == 2:
        g = 1
    else:
        factors = prime_factors(p - 1)
        g = next(c for c in range(2, p) if _is_generator(c, p, factors))

    n = p - 1
    powers = np.empty(n, dtype=np.int64)
    acc = 1
    for t in range(n):
        powers[t] = acc
        acc = acc * g % p
    ind = np.full(p, -1, dtype=np.int64)
    ind[powers] = np.arange(n, dtype=np.int64)
    powers.setflags(write=False)
    ind.setflags(write=False)
    return PrimeContext(p=p, g=g, ind=ind, pow=powers)


def char_value(ctx: PrimeContext, z: int, x: int) -> complex:
    """chi_z(x) = exp(2 pi i z ind(x) / (p-1)), with chi_z(0) = 0 for every z."""
    x = int(x) % ctx.p
    if x == 0:
        return 0j
    k = (int(z) * int(ctx.ind[x])) % ctx.n
    return cmath.exp(2j * math.pi * k / ctx.n)


def unit_roots(n: int, sign: int = 1) -> np.ndarray:
    """exp(sign * 2 pi i k / n) for k in range(n)."""
    return np.exp(sign * 2j * np.pi * np.arange(n) / n)


def char_table(ctx: PrimeContext, z: int) -> np.ndarray:
    """Values of chi_z on all of Z_p (index = element), chi_z(0) = 0."""
    out = np.zeros(ctx.p, dtype=complex)
    out[1:] = unit_roots(ctx.n)[(int(z) * ctx.ind[1:]) % ctx.n]
    return out


class ZpSubset:
    """A subset of Z_p stored as a boolean membership mask of length p."""

    __slots__ = ("p", "mask")

    def __init__(self, p: int, mask):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (p,):
            raise ValueError(f"mask must have shape ({p},), got {mask.shape}")
        mask = mask.copy()
        mask.setflags(write=False)
        self.p = int(p)
        self.mask = mask

    @classmethod
    def from_elements(cls, p: int, elements: Iterable[int]) -> "ZpSubset":
        mask = np.zeros(p, dtype=bool)
        idx = np.fromiter((int(e) % p for e in elements), dtype=np.int64)
        mask[idx] = True
        return cls(p, mask)

    @classmethod
    def full(cls, p: int) -> "ZpSubset":
        return cls(p, np.ones(p, dtype=bool))

    @classmethod
    def empty(cls, p: int) -> "ZpSubset":
        return cls(p, np.zeros(p, dtype=bool))

    @classmethod
    def unit_group(cls, p: int) -> "ZpSubset":
        """Z_p* as a subset."""
        mask = np.ones(p, dtype=bool)
        mask[0] = False
        return cls(p, mask)

    @property
    def card(self) -> int:
        return int(self.mask.sum())

    def __len__(self) -> int:
        return self.card

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x) % self.p])

    def __iter__(self):
        return iter(self.elements().tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZpSubset):
            return NotImplemented
        return self.p == other.p and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self) -> int:
        return hash((self.p, self.mask.tobytes()))

    def __repr__(self) -> str:
        els = self.elements()
        body = ", ".join(map(str, els[:8].tolist()))
        if len(els) > 8:
            body += ", ..."
        return f"ZpSubset(p={self.p}, card={len(els)}, {{{body}}})"

    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def units(self) -> "ZpSubset":
        """A' = A minus {0}."""
        mask = self.mask.copy()
        mask[0] = False
        return ZpSubset(self.p, mask)

    def complement(self) -> "ZpSubset":
        return ZpSubset(self.p, ~self.mask)

    def shift(self, n: int) -> "ZpSubset":
        """A + n."""
        return ZpSubset(self.p, np.roll(self.mask, int(n) % self.p))

    def dilate(self, lam: int) -> "ZpSubset":
        """lam * A."""
        return ZpSubset.from_elements(self.p, (self.elements() * (int(lam) % self.p)) % self.p)

    def negate(self) -> "ZpSubset":
        return self.dilate(-1)

    def __and__(self, other: "ZpSubset") -> "ZpSubset":
        return ZpSubset(self.p, self.mask & other.mask)

    def __or__(self, other: "ZpSubset") -> "ZpSubset":
        return ZpSubset(self.p, self.mask | other.mask)

    def to_hex(self) -> str:
        value = sum(1 << int(e) for e in self.elements())
        return format(value, "x")


def subgroup(ctx: PrimeContext, d: int) -> ZpSubset:
    """The unique multiplicative subgroup of order ``d`` (``d`` must divide p-1)."""
    d = int(d)
    if d < 1 or ctx.n % d:
        raise ValueError(f"{d} does not divide p-1 = {ctx.n}")
    step = ctx.n // d
    return ZpSubset.from_elements(ctx.p, ctx.pow[::step])


def is_subgroup(R: ZpSubset) -> bool:
    els = R.elements()
    if len(els) == 0 or 0 in R or 1 not in R:
        return False
    prods = np.outer(els, els) % R.p
    return bool(R.mask[prods].all())


def special_set(ctx: PrimeContext, kind: str) -> ZpSubset:
    """Quadratic residues ``qr``, non-residues ``qnr``, or ``odd_half``,
    the odd numbers 2k+1 with 0 <= k <= (p-3)/4."""
    p = ctx.p
    if kind in ("qr", "qnr"):
        if p == 2:
            raise ValueError("quadratic residues need odd p")
        even = ctx.ind[1:] % 2 == 0
        units = np.arange(1, p)
        chosen = units[even] if kind == "qr" else units[~even]
        return ZpSubset.from_elements(p, chosen)
    if kind == "odd_half":
        if p < 5:
            raise ValueError("odd_half needs p >= 5")
        return ZpSubset.from_elements(p, (2 * k + 1 for k in range((p - 3) // 4 + 1)))
    raise ValueError(f"unsupported set kind {kind!r}")
