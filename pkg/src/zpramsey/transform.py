"""Fourier analysis on Z_p* with multiplicative characters.

    forward:  F(z) = sum_{x in Z_p*} f(x) * conj(chi_z(x))
    inverse:  f(x) = 1/(p-1) * sum_z F(z) * chi_z(x)

The forward transform is unnormalized and the inverse carries the 1/(p-1).
``forward``/``inverse`` evaluate the sums literally through the index table;
``fast_forward``/``fast_inverse`` relabel x = g**t and run a length p-1 DFT via
Bluestein's chirp-z algorithm, so any p works regardless of how p-1 factors.

All transforms accept a single function (shape ``(p-1,)``) or a batch of
functions stacked along the first axis (shape ``(m, p-1)``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import ConsistencyError, PrimeContext, unit_roots

# rows of the character matrix materialized at once by the naive path
_BLOCK = 512


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Transform coefficients; ``amp[..., z]`` is the coefficient of chi_z."""

    p: int
    amp: np.ndarray

    def __len__(self) -> int:
        return self.amp.shape[-1]

    def __getitem__(self, z):
        return self.amp[..., z]

    def to_json(self) -> list:
        if self.amp.ndim != 1:
            raise ValueError("only single spectra serialize")
        return [[float(c.real), float(c.imag)] for c in self.amp]

    @classmethod
    def from_json(cls, p: int, pairs) -> "Spectrum":
        arr = np.asarray(pairs, dtype=float).reshape(-1, 2)
        return cls(p, arr[:, 0] + 1j * arr[:, 1])


def _check(ctx: PrimeContext, f) -> np.ndarray:
    f = np.asarray(f, dtype=complex)
    if f.ndim not in (1, 2) or f.shape[-1] != ctx.n:
        raise ValueError(f"expected last axis of length p-1 = {ctx.n}, got shape {f.shape}")
    return f


def _naive(ctx: PrimeContext, f: np.ndarray, sign: int, zs: np.ndarray) -> np.ndarray:
    # out[..., j] = sum_x f[..., x-1] * exp(sign * 2 pi i zs[j] ind(x) / n)
    n = ctx.n
    roots = unit_roots(n, sign)
    ind = ctx.ind[1:]
    out = np.empty(f.shape[:-1] + (len(zs),), dtype=complex)
    for lo in range(0, len(zs), _BLOCK):
        z = zs[lo:lo + _BLOCK]
        kernel = roots[np.outer(z, ind) % n]
        out[..., lo:lo + _BLOCK] = f @ kernel.T
    return out


def forward(ctx: PrimeContext, f, zs=None) -> Spectrum:
    """Character transform by direct summation.

    ``zs`` restricts the output to selected character indices (the result
    then has ``len(zs)`` coefficients in that order).
    """
    f = _check(ctx, f)
    zs = np.arange(ctx.n) if zs is None else np.asarray(zs, dtype=np.int64) % ctx.n
    return Spectrum(ctx.p, _naive(ctx, f, -1, zs))


def inverse(ctx: PrimeContext, s) -> np.ndarray:
    """Inverse transform by direct summation; returns values on Z_p*."""
    amp = _check(ctx, s.amp if isinstance(s, Spectrum) else s)
    # f(x) = 1/n sum_z F(z) e^{2 pi i z ind(x)/n}: same kernel shape with z <-> ind(x)
    n = ctx.n
    roots = unit_roots(n, 1)
    ind = ctx.ind[1:]
    out = np.empty(amp.shape, dtype=complex)
    zs = np.arange(n)
    for lo in range(0, n, _BLOCK):
        t = ind[lo:lo + _BLOCK]
        kernel = roots[np.outer(t, zs) % n]
        out[..., lo:lo + _BLOCK] = amp @ kernel.T
    return out / n


def _chirp(n: int) -> np.ndarray:
    # exp(-pi i k^2 / n); k^2 reduced mod 2n keeps the phase exact for large k
    k = np.arange(n, dtype=np.int64)
    return np.exp(-1j * np.pi * ((k * k) % (2 * n)) / n)


def bluestein_dft(x: np.ndarray) -> np.ndarray:
    """DFT X[k] = sum_t x[t] exp(-2 pi i k t / n) along the last axis for
    arbitrary n, through a power-of-two circular convolution."""
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    if n == 1:
        return x.copy()
    w = _chirp(n)
    m = 1 << (2 * n - 1).bit_length()
    a = np.zeros(x.shape[:-1] + (m,), dtype=complex)
    a[..., :n] = x * w
    b = np.zeros(m, dtype=complex)
    b[:n] = np.conj(w)
    b[m - n + 1:] = np.conj(w[1:])[::-1]
    conv = np.fft.ifft(np.fft.fft(a, axis=-1) * np.fft.fft(b), axis=-1)
    return conv[..., :n] * w


def fast_forward(ctx: PrimeContext, f) -> Spectrum:
    f = _check(ctx, f)
    h = f[..., ctx.pow - 1]  # h[t] = f(g^t)
    return Spectrum(ctx.p, bluestein_dft(h))


def fast_inverse(ctx: PrimeContext, s) -> np.ndarray:
    amp = _check(ctx, s.amp if isinstance(s, Spectrum) else s)
    h = np.conj(bluestein_dft(np.conj(amp))) / ctx.n  # h[t] = f(g^t)
    out = np.empty_like(h)
    out[..., ctx.pow - 1] = h
    return out


def parseval_sides(ctx: PrimeContext, f, fast: bool = False) -> tuple[float, float]:
    """(sum |f|^2, 1/(p-1) sum |F|^2)."""
    f = _check(ctx, f)
    spec = fast_forward(ctx, f) if fast else forward(ctx, f)
    lhs = np.sum(np.abs(f) ** 2, axis=-1)
    rhs = np.sum(np.abs(spec.amp) ** 2, axis=-1) / ctx.n
    return lhs, rhs


def inner_product(ctx: PrimeContext, f, g, fast: bool = False, rtol: float = 1e-9) -> complex:
    """sum_x f(x) conj(g(x)), checked against the spectral side
    1/(p-1) sum_z F(z) conj(G(z))."""
    f = _check(ctx, f)
    g = _check(ctx, g)
    if f.ndim != 1 or g.ndim != 1:
        raise ValueError("inner_product takes single functions")
    direct = complex(np.vdot(g, f))
    tr = fast_forward if fast else forward
    spectral = complex(np.vdot(tr(ctx, g).amp, tr(ctx, f).amp)) / ctx.n
    scale = max(1.0, float(np.linalg.norm(f) * np.linalg.norm(g)))
    if abs(direct - spectral) > rtol * scale:
        raise ConsistencyError(f"inner product mismatch: {direct} vs {spectral}")
    return direct
