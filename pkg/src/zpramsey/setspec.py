"""Textual descriptors for subsets of Z_p.

    list:1,2,4            explicit elements
    hex:1f                bitmask, bit i set <=> i in A
    random:density=0.5,seed=42
    subgroup:d=3          multiplicative subgroup of order d
    qr | qnr | odd_half
    interval:3..9         inclusive range
    full | empty
"""

from __future__ import annotations

import numpy as np

from .coloring import Coloring, random_coloring
from .field import PrimeContext, ZpSubset, make_context, special_set, subgroup


class SetSpecError(ValueError):
    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


def _int(text, s, pos):
    try:
        return int(s)
    except ValueError:
        raise SetSpecError(text, pos, f"expected an integer, got {s!r}") from None


def _kv(text, body, offset, keys):
    out = {}
    pos = offset
    for part in body.split(","):
        if "=" not in part:
            raise SetSpecError(text, pos, "expected key=value")
        k, v = part.split("=", 1)
        if k not in keys:
            raise SetSpecError(text, pos, f"unknown key {k!r}")
        out[k] = (v, pos + len(k) + 1)
        pos += len(part) + 1
    missing = [k for k in keys if k not in out]
    if missing:
        raise SetSpecError(text, len(text), f"missing key {missing[0]!r}")
    return out


def _check_range(text, p, values, pos):
    for v in values:
        if not 0 <= v < p:
            raise SetSpecError(text, pos, f"value {v} outside 0..{p - 1}")


def parse_set_spec(p: int, text: str, ctx: PrimeContext | None = None) -> ZpSubset:
    text = text.strip()
    head, sep, body = text.partition(":")
    off = len(head) + len(sep)
    if head in ("full", "empty", "qr", "qnr", "odd_half") and not sep:
        if head == "full":
            return ZpSubset.full(p)
        if head == "empty":
            return ZpSubset.empty(p)
        return special_set(ctx or make_context(p), head)
    if not sep:
        raise SetSpecError(text, 0, f"unknown set kind {head!r}")

    if head == "list":
        values = []
        pos = off
        for item in body.split(","):
            if item.strip():
                values.append(_int(text, item.strip(), pos))
            pos += len(item) + 1
        _check_range(text, p, values, off)
        return ZpSubset.from_elements(p, values)
    if head == "hex":
        try:
            value = int(body, 16)
        except ValueError:
            raise SetSpecError(text, off, "bad hexadecimal mask") from None
        if value >> p:
            raise SetSpecError(text, off, f"mask has bits at or above p={p}")
        return ZpSubset.from_elements(p, (i for i in range(value.bit_length()) if value >> i & 1))
    if head == "random":
        kv = _kv(text, body, off, ("density", "seed"))
        try:
            d = float(kv["density"][0])
        except ValueError:
            raise SetSpecError(text, kv["density"][1], "bad density") from None
        if not 0.0 <= d <= 1.0:
            raise SetSpecError(text, kv["density"][1], "density must lie in [0, 1]")
        seed = _int(text, kv["seed"][0], kv["seed"][1])
        rng = np.random.default_rng(seed)
        return ZpSubset(p, rng.random(p) < d)
    if head == "subgroup":
        kv = _kv(text, body, off, ("d",))
        d = _int(text, kv["d"][0], kv["d"][1])
        try:
            return subgroup(ctx or make_context(p), d)
        except ValueError as exc:
            raise SetSpecError(text, kv["d"][1], str(exc)) from None
    if head == "interval":
        a, dots, b = body.partition("..")
        if not dots:
            raise SetSpecError(text, off, "expected a..b")
        lo = _int(text, a, off)
        hi = _int(text, b, off + len(a) + 2)
        _check_range(text, p, (lo, hi), off)
        return ZpSubset.from_elements(p, range(lo, hi + 1))
    raise SetSpecError(text, 0, f"unknown set kind {head!r}")


def parse_coloring_spec(p: int, text: str, ctx: PrimeContext | None = None) -> Coloring:
    """``random:k=2,seed=1``, ``qr`` (residues vs. the rest), or a path to a
    JSON coloring."""
    text = text.strip()
    head, sep, body = text.partition(":")
    if head == "random" and sep:
        kv = _kv(text, body, len(head) + 1, ("k", "seed"))
        k = _int(text, kv["k"][0], kv["k"][1])
        seed = _int(text, kv["seed"][0], kv["seed"][1])
        return random_coloring(p, k, seed)
    if text == "qr":
        qr = special_set(ctx or make_context(p), "qr")
        return Coloring("zp", 2, np.where(qr.mask, 1, 2))
    c = Coloring.load(text)
    if c.size != p:
        raise ValueError(f"coloring has {c.size} entries, expected {p}")
    return c
