"""Searches for monochromatic patterns in colorings of Z_p and {1..N}.

Z_p searches let x and y range over Z_p* in ascending order (x first) and
skip pairs where x + y = 0.  The color of 0 is never consulted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .field import PrimeContext, ZpSubset


@dataclass(frozen=True, eq=False)
class Coloring:
    """Colors 1..k.  For ``domain="zp"`` ``colors[x]`` is the color of x in
    Z_p; for ``domain="segment"`` ``colors[i]`` is the color of i + 1."""

    domain: str
    k: int
    colors: np.ndarray

    def __post_init__(self):
        colors = np.asarray(self.colors, dtype=np.int64)
        if self.domain not in ("zp", "segment"):
            raise ValueError(f"unknown domain {self.domain!r}")
        if colors.ndim != 1 or len(colors) == 0:
            raise ValueError("colors must be a nonempty 1-d sequence")
        if colors.min() < 1 or colors.max() > self.k:
            raise ValueError(f"colors must lie in 1..{self.k}")
        colors.setflags(write=False)
        object.__setattr__(self, "colors", colors)

    @property
    def size(self) -> int:
        return len(self.colors)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Coloring) and self.domain == other.domain
                and self.k == other.k and np.array_equal(self.colors, other.colors))

    def color(self, v: int) -> int:
        if self.domain == "zp":
            return int(self.colors[v % self.size])
        return int(self.colors[v - 1])

    def color_class(self, c: int) -> ZpSubset:
        if self.domain != "zp":
            raise ValueError("color classes as ZpSubset need a Z_p coloring")
        return ZpSubset(self.size, self.colors == c)

    def largest_class(self) -> int:
        """Color with the most elements of Z_p* (smallest color on ties)."""
        body = self.colors[1:] if self.domain == "zp" else self.colors
        return int(np.argmax(np.bincount(body, minlength=self.k + 1)[1:]) + 1)

    def to_json(self) -> str:
        return json.dumps({"domain": self.domain, "k": self.k, "colors": self.colors.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        data = json.loads(text)
        if isinstance(data, list):
            return cls("zp", max(data), data)
        return cls(data["domain"], data["k"], data["colors"])

    def save(self, path) -> None:
        Path(path).write_text(self.to_json())

    @classmethod
    def load(cls, path) -> "Coloring":
        return cls.from_json(Path(path).read_text())


def random_coloring(p: int, k: int, seed, domain: str = "zp") -> Coloring:
    rng = np.random.default_rng(seed)
    return Coloring(domain, k, rng.integers(1, k + 1, size=p))


def coloring_from_sets(p: int, classes) -> Coloring:
    """Color i + 1 for members of ``classes[i]``; uncovered elements get the
    last color."""
    colors = np.full(p, len(classes), dtype=np.int64)
    for i, A in reversed(list(enumerate(classes))):
        colors[A.mask] = i + 1
    return Coloring("zp", max(len(classes), 1), colors)


def _zp(c: Coloring) -> tuple[int, np.ndarray]:
    if c.domain != "zp":
        raise ValueError("this search needs a coloring of Z_p")
    return c.size, c.colors


def find_mono_triple(ctx: PrimeContext, c: Coloring, strict: bool = False):
    """First (x, y, color) with x, x + y and x*y the same color.

    ``strict`` additionally rejects x = y and x + y = x*y.
    """
    p, col = _zp(c)
    ys = np.arange(1, p, dtype=np.int64)
    for x in range(1, p):
        s = (x + ys) % p
        m = (x * ys) % p
        ok = (s != 0) & (col[s] == col[x]) & (col[m] == col[x])
        if strict:
            ok &= (ys != x) & (s != m)
        hit = np.flatnonzero(ok)
        if len(hit):
            return int(x), int(ys[hit[0]]), int(col[x])
    return None


def find_mono_schur(N: int, c: Coloring):
    """First (x, y, x + y) in {1..N} with all three the same color."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if c.size < N:
        raise ValueError("coloring does not cover 1..N")
    col = c.colors
    for x in range(1, N):
        ys = np.arange(1, N - x + 1)
        ok = (col[ys - 1] == col[x - 1]) & (col[x + ys - 1] == col[x - 1])
        hit = np.flatnonzero(ok)
        if len(hit):
            y = int(ys[hit[0]])
            return x, y, x + y
    return None


def find_mono_quadruple(ctx: PrimeContext, c: Coloring, color: int | None = None):
    """First (x, y) with x, y, x + y, x*y the same color, optionally only
    inside the class of ``color``."""
    p, col = _zp(c)
    ys = np.arange(1, p, dtype=np.int64)
    for x in range(1, p):
        if color is not None and col[x] != color:
            continue
        s = (x + ys) % p
        m = (x * ys) % p
        cx = col[x]
        ok = (s != 0) & (col[ys] == cx) & (col[s] == cx) & (col[m] == cx)
        hit = np.flatnonzero(ok)
        if len(hit):
            return int(x), int(ys[hit[0]])
    return None


def density_increment(ctx: PrimeContext, A: ZpSubset):
    """(n, lam, A & (A + n), A & lam*A) with n and lam maximizing the meet
    sizes, smallest on ties.

    Averaging guarantees |A & (A + n)| >= |A|^2 / p and
    |A' & lam*A'| >= |A'|^2 / (p - 1) with A' = A minus {0}.
    """
    p = ctx.p
    mask = A.mask.astype(np.int64)
    # np.roll(mask, n) is the indicator of A + n
    shift_sizes = np.array([mask @ np.roll(mask, s) for s in range(p)], dtype=np.int64)
    n = int(np.argmax(shift_sizes))

    # in index coordinates dilation by g^s is a cyclic shift by s
    N = ctx.n
    h = np.zeros(N, dtype=np.int64)
    h[ctx.ind[A.units().elements()]] = 1
    by_shift = np.array([h @ np.roll(h, s) for s in range(N)], dtype=np.int64)
    dil_sizes = np.empty(N, dtype=np.int64)
    dil_sizes[ctx.pow - 1] = by_shift  # indexed by lam - 1
    lam = int(np.argmax(dil_sizes)) + 1
    return n, lam, A & A.shift(n), A & A.dilate(lam)


def _quadruple_pairs(p: int):
    x, y = np.meshgrid(np.arange(1, p), np.arange(1, p), indexing="ij")
    x, y = x.ravel(), y.ravel()
    keep = (x + y) % p != 0
    x, y = x[keep], y[keep]
    return np.stack([x, y, (x + y) % p, (x * y) % p], axis=1)


def count_mono_quadruples(c: Coloring) -> int:
    """Number of pairs (x, y) in (Z_p*)^2, x + y != 0, with x, y, x + y, xy
    one color."""
    p, col = _zp(c)
    cols = col[_quadruple_pairs(p)]
    return int((cols == cols[:, :1]).all(axis=1).sum())


def adversarial_search(ctx: PrimeContext, k: int, budget: int, seed, patience: int | None = None):
    """Local search for a k-coloring of Z_p with few monochromatic
    {x, y, x + y, xy} patterns.

    Each step recolors one element of Z_p* and is kept unless it increases the
    count; after ``patience`` steps without a new best the search restarts
    from a fresh random coloring.  The first random coloring counts as step 1.
    Returns ``(best_coloring, best_count)``.
    """
    if k < 2 or budget < 1:
        raise ValueError("need k >= 2 and budget >= 1")
    p = ctx.p
    rng = np.random.default_rng(seed)
    patience = patience or max(50, 10 * p)
    pairs = _quadruple_pairs(p)
    # touching[e] lists the pairs in which element e occurs
    touching = [np.flatnonzero((pairs == e).any(axis=1)) for e in range(p)]

    def fresh():
        col = rng.integers(1, k + 1, size=p)
        col[0] = 1
        return col

    def mono(col, idx):
        cols = col[pairs[idx]]
        return int((cols == cols[:, :1]).all(axis=1).sum())

    col = fresh()
    count = mono(col, slice(None))
    best, best_count = col.copy(), count
    stale = 0
    for _ in range(budget - 1):
        if best_count == 0:
            break
        if stale >= patience:
            col = fresh()
            count = mono(col, slice(None))
            stale = 0
        e = int(rng.integers(1, p))
        new = int(rng.integers(1, k))
        new += new >= col[e]
        before = mono(col, touching[e])
        old = col[e]
        col[e] = new
        delta = mono(col, touching[e]) - before
        if delta <= 0:
            count += delta
        else:
            col[e] = old
        if count < best_count:
            best, best_count = col.copy(), count
            stale = 0
        else:
            stale += 1
    return Coloring("zp", k, best), best_count
