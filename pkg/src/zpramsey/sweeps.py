"""Seeded verification sweeps.

Instance ``i`` of a sweep draws from ``default_rng([seed, i])``, so results do
not depend on the number of worker threads or on scheduling order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import bounds
from .coloring import find_mono_triple, random_coloring
from .counting import (
    phi_deviation,
    phi_matrix,
    quadruple_count,
    quadruple_count_bruteforce,
    second_moment,
)
from .field import ZpSubset, make_context, next_prime
from .report import VerificationReport
from .transform import fast_forward, forward, inverse


def _rng(seed: int, *path: int) -> np.random.Generator:
    return np.random.default_rng([seed, *path])


def _subset(rng, p: int, size: int) -> ZpSubset:
    return ZpSubset.from_elements(p, rng.choice(p, size=size, replace=False))


def random_pair(rng, p: int, min_product: int) -> tuple[ZpSubset, ZpSubset]:
    """Two random subsets of Z_p with |A1||A2| >= min_product."""
    a = int(rng.integers(-(-min_product // p), p + 1))
    b = int(rng.integers(-(-min_product // a), p + 1))
    return _subset(rng, p, a), _subset(rng, p, b)


def _map(fn, items, threads: int):
    if threads <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _flat(chunks):
    return [r for chunk in chunks for r in chunk]


def transform_suite(seed: int = 0, threads: int = 1, primes=(23, 101, 499, 10007),
                    samples: int = 100) -> list[VerificationReport]:
    def one(p):
        ctx = make_context(p)
        rng = _rng(seed, p)
        f = rng.normal(size=(samples, ctx.n)) + 1j * rng.normal(size=(samples, ctx.n))
        naive = forward(ctx, f).amp
        fast = fast_forward(ctx, f).amp
        lhs = np.sum(np.abs(f) ** 2, axis=1)
        rhs = np.sum(np.abs(naive) ** 2, axis=1) / ctx.n
        parseval = float(np.max(np.abs(lhs - rhs) / lhs))
        back = inverse(ctx, naive)
        scale = 1 + np.abs(f).max(axis=1)
        roundtrip = float(np.max(np.abs(back - f).max(axis=1) / scale))
        agree = float(np.abs(fast - naive).max())
        common = {"inputs": {"samples": samples, "distribution": "complex normal"}, "seed": seed}
        return [
            VerificationReport("parseval", p, condition_met=True, measured=parseval, bound=1e-9,
                               passed=parseval <= 1e-9, **common),
            VerificationReport("roundtrip", p, condition_met=True, measured=roundtrip, bound=1e-9,
                               passed=roundtrip <= 1e-9, **common),
            VerificationReport("fast_forward", p, condition_met=True, measured=agree, bound=1e-8,
                               passed=agree <= 1e-8, **common),
        ]

    return _flat(_map(one, primes, threads))


def two_set_suite(seed: int = 0, threads: int = 1, primes=(23, 101, 499),
                  samples: int = 200) -> list[VerificationReport]:
    def one(job):
        p, i = job
        ctx = make_context(p)
        A1, A2 = random_pair(_rng(seed, p, i), p, 20 * p)
        out = []
        for omega in (1, -1):
            r = bounds.verify_two_set(ctx, A1, A2, omega, seed=seed)
            r.details["instance"] = i
            out.append(r)
        return out

    return _flat(_map(one, [(p, i) for p in primes for i in range(samples)], threads))


def main_suite(seed: int = 0, threads: int = 1, p: int = 2003,
               samples: int = 20) -> list[VerificationReport]:
    ctx = make_context(p)
    lo = math.ceil(0.965 * p)

    def one(i):
        rng = _rng(seed, p, i)
        A1, A2, A3 = (_subset(rng, p, int(rng.integers(lo, p + 1))) for _ in range(3))
        r = bounds.verify_main(ctx, A1, A2, A3, omega=1, seed=seed)
        r.details["instance"] = i
        return r

    return _map(one, range(samples), threads)


def identities_suite(seed: int = 0, threads: int = 1, primes=(11, 23, 61),
                     samples: int = 50, oracle_limit: int = 31) -> list[VerificationReport]:
    def one(job):
        p, i = job
        ctx = make_context(p)
        rng = _rng(seed, p, i)
        A1 = ZpSubset(p, rng.random(p) < rng.uniform(0.05, 1.0))
        A2 = ZpSubset(p, rng.random(p) < rng.uniform(0.05, 1.0))
        a = A1.card
        inputs = {"A1": bounds.describe(A1), "A2": bounds.describe(A2)}
        out = []
        for omega in (1, -1):
            def rep(claim, measured, bound, passed):
                return VerificationReport(claim, p, inputs, True, measured, bound, passed,
                                          seed=seed, details={"omega": omega, "instance": i})

            phi = phi_matrix(ctx, A1, omega)
            total = phi.total()
            out.append(rep("phi_total", total, (p - 1) * a * a, total == (p - 1) * a * a))
            sm = second_moment(ctx, A1, A2, omega, check=False)
            out.append(rep("second_moment_split", sm.sigma2, [sm.sigma2_prime, sm.sigma2_dprime],
                           sm.sigma2 == sm.sigma2_prime + sm.sigma2_dprime))
            q = quadruple_count(ctx, A1, omega)
            if p <= oracle_limit:
                brute = quadruple_count_bruteforce(ctx, A1, omega)
                out.append(rep("quadruple_oracle", q, brute, q == brute))
            qb = a**4 + 8 * p * a * a
            out.append(rep("quadruple_bound", q, qb, q <= qb))
            dev = phi_deviation(ctx, A1, omega, phi)
            out.append(rep("phi_deviation", str(dev), 10 * p * a * a, dev <= 10 * p * a * a))
        return out

    return _flat(_map(one, [(p, i) for p in primes for i in range(samples)], threads))


def random_johnsen_config(rng, p: int) -> tuple[list[int], list[int]]:
    """m <= 4 characters with fewer than m principal ones, distinct shifts."""
    m = int(rng.integers(1, 5))
    m0 = int(rng.integers(0, m))
    zs = [0] * m0 + [int(z) for z in rng.integers(1, p - 1, size=m - m0)]
    zs = [zs[j] for j in rng.permutation(m)]
    bs = [int(b) for b in rng.choice(p, size=m, replace=False)]
    return zs, bs


def johnsen_suite(seed: int = 0, threads: int = 1, primes=(101, 499),
                  samples: int = 500) -> list[VerificationReport]:
    def one(job):
        p, i = job
        ctx = make_context(p)
        zs, bs = random_johnsen_config(_rng(seed, p, i), p)
        _, r = bounds.johnsen_sum(ctx, zs, bs, seed=seed)
        r.details["instance"] = i
        return r

    return _map(one, [(p, i) for p in primes for i in range(samples)], threads)


def circ_suite(seed: int = 0, threads: int = 1, primes=(499, 2003),
               samples: int = 50) -> list[VerificationReport]:
    def one(job):
        p, i = job
        ctx = make_context(p)
        rng = _rng(seed, p, i)
        sizes = [max(1, round(float(rng.uniform(0.05, 1.0)) * p)) for _ in range(2)]
        A, B = (_subset(rng, p, s) for s in sizes)
        r = bounds.verify_circ_corollary(ctx, A, B, seed=seed)
        r.details["instance"] = i
        return r

    return _map(one, [(p, i) for p in primes for i in range(samples)], threads)


def subgroup_suite(seed: int = 0, threads: int = 1, p: int = 2003,
                   density: float = 0.95) -> list[VerificationReport]:
    ctx = make_context(p)
    rng = _rng(seed, p)
    size = round(density * p)
    A1, A2 = _subset(rng, p, size), _subset(rng, p, size)
    return [bounds.verify_subgroup(ctx, ZpSubset.unit_group(p), A1, A2, seed=seed)]


def spectral_suite(seed: int = 0, threads: int = 1, primes=(101, 499),
                   samples: int = 50) -> list[VerificationReport]:
    def one(job):
        p, i = job
        ctx = make_context(p)
        A1, A2 = random_pair(_rng(seed, p, i), p, 20 * p)
        r = bounds.max_nonzero_spectrum_bound(ctx, A1, A2, omega=1, seed=seed)
        r.details["instance"] = i
        return r

    return _map(one, [(p, i) for p in primes for i in range(samples)], threads)


def _scan_maxima(A: ZpSubset) -> tuple[int, int, int, int]:
    # independent plain-Python scan over all shifts and dilations
    p = A.p
    S = set(A.elements().tolist())
    U = S - {0}
    best_n, best_s = 0, -1
    for n in range(p):
        s = len(S & {(a + n) % p for a in S})
        if s > best_s:
            best_n, best_s = n, s
    best_l, best_d = 1, -1
    for lam in range(1, p):
        d = len(U & {a * lam % p for a in U})
        if d > best_d:
            best_l, best_d = lam, d
    return best_n, best_s, best_l, best_d


def density_suite(seed: int = 0, threads: int = 1, primes=(23, 101),
                  samples: int = 100) -> list[VerificationReport]:
    from .coloring import density_increment

    def one(job):
        p, i = job
        ctx = make_context(p)
        rng = _rng(seed, p, i)
        A = ZpSubset(p, rng.random(p) < rng.uniform(0.05, 1.0))
        n, lam, meet_s, meet_d = density_increment(ctx, A)
        au = A.units().card
        need_s = -(-A.card**2 // p)
        need_d = -(-au**2 // (p - 1))
        size_d = (A.units() & A.units().dilate(lam)).card
        sn, ss, sl, sd = _scan_maxima(A)
        matches = (n, meet_s.card, lam, size_d) == (sn, ss, sl, sd)
        ok = meet_s.card >= need_s and size_d >= need_d and matches
        return VerificationReport(
            "density_increment", p, {"A": bounds.describe(A)}, True,
            [meet_s.card, size_d], [need_s, need_d], ok, witness=[n, lam], seed=seed,
            details={"instance": i, "scan": [sn, ss, sl, sd], "scan_match": matches},
        )

    return _map(one, [(p, i) for p in primes for i in range(samples)], threads)


def coloring_suite(seed: int = 0, threads: int = 1, k: int = 2,
                   samples: int = 5) -> list[VerificationReport]:
    """find_mono_triple at the prime where the density theorem guarantees a
    monochromatic x, x + y, xy for every k-coloring."""
    p = next_prime(1600 * k**6)
    ctx = make_context(p)

    def one(i):
        cseed = seed * 1000 + i
        c = random_coloring(p, k, cseed)
        hit = find_mono_triple(ctx, c)
        ok = False
        if hit is not None:
            x, y, col = hit
            ok = c.color(x) == c.color(x + y) == c.color(x * y) == col and (x + y) % p != 0
        return VerificationReport(
            "mono_triple", p, {"coloring": f"random:k={k},seed={cseed}"}, True,
            None if hit is None else 1, 1, ok, witness=None if hit is None else list(hit),
            seed=seed, details={"instance": i, "k": k},
        )

    return _map(one, range(samples), threads)


SUITES = {
    "transform": transform_suite,
    "two-set": two_set_suite,
    "main": main_suite,
    "identities": identities_suite,
    "johnsen": johnsen_suite,
    "circ": circ_suite,
    "subgroup": subgroup_suite,
    "spectral": spectral_suite,
    "density": density_suite,
    "coloring": coloring_suite,
}


def run_suite(name: str, seed: int = 0, threads: int = 1) -> list[VerificationReport]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(seed=seed, threads=threads)
