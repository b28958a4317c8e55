"""Deterministic generators for benchmark string families.

Families span the compressibility spectrum: random (incompressible), unary
and periodic (tiny run/phrase counts), fibonacci and thue-morse (classic
low-complexity words), runs(k) (fixed-length runs), and copy-paste(r)
(random seed grown by r copy operations, so few LZ phrases).
"""
from __future__ import annotations

import random
import re

from .text import Text

FAMILIES = ("random", "unary", "periodic", "fibonacci", "thue-morse", "runs(k)", "copy-paste(r)")

_RUNS_RE = re.compile(r"runs\((\d+)\)\Z")
_COPY_RE = re.compile(r"copy-paste\((\d+)\)\Z")


def generate(family: str, n: int, sigma: int, seed: int = 0) -> Text:
    """A length-n string of the given family; pure in all four arguments."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "random":
        rng = random.Random(seed)
        return Text(bytes(rng.choices(range(1, sigma + 1), k=n)), sigma)
    if family == "unary":
        return Text(b"\x01" * n, max(1, sigma))
    if family == "periodic":
        block = bytes((i % sigma) + 1 for i in range(max(2, sigma)))
        reps = -(-n // len(block))
        return Text((block * reps)[:n], sigma)
    if family == "fibonacci":
        if sigma != 2:
            raise ValueError("fibonacci strings are binary")
        a, b = b"\x01", b"\x01\x02"
        while len(b) < n:
            a, b = b, b + a
        return Text(b[:n], 2)
    if family == "thue-morse":
        if sigma != 2:
            raise ValueError("thue-morse strings are binary")
        return Text(bytes((i.bit_count() & 1) + 1 for i in range(n)), 2)
    m = _RUNS_RE.match(family)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise ValueError("run length must be >= 1")
        out = bytearray()
        sym = 0
        while len(out) < n:
            out.extend(bytes(((sym % sigma) + 1,)) * k)
            sym += 1
        return Text(bytes(out[:n]), sigma)
    m = _COPY_RE.match(family)
    if m:
        r = int(m.group(1))
        if r < 1:
            raise ValueError("need at least one copy operation")
        rng = random.Random(seed)
        seed_len = max(1, n // (r + 1))
        out = bytearray(rng.choices(range(1, sigma + 1), k=min(n, seed_len)))
        while len(out) < n:
            take = max(1, min(len(out), -(-(n - len(out)) // r)))
            start = rng.randrange(0, len(out) - take + 1)
            out.extend(out[start : start + take])
        return Text(bytes(out[:n]), sigma)
    raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
