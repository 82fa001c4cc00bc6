"""Permutations as tuples of 0-based images, with 1-based cycle notation I/O.

Composition follows function notation: ``mul(a, b)`` applies ``b`` first,
then ``a``.
"""

from __future__ import annotations

import re
from typing import Iterable, List, Sequence, Tuple

Perm = Tuple[int, ...]


class PermParseError(ValueError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(a: Perm, b: Perm) -> Perm:
    return tuple(a[i] for i in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def conjugate(x: Perm, a: Perm) -> Perm:
    """x a x^-1."""
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[x[i]] = x[v]
    return tuple(out)


def order(a: Perm) -> int:
    from math import lcm

    out = 1
    for c in cycles(a):
        out = lcm(out, len(c))
    return out


def fixed_points(a: Perm) -> List[int]:
    return [i for i, v in enumerate(a) if i == v]


def cycles(a: Perm) -> List[Tuple[int, ...]]:
    """Nontrivial cycles, each starting at its least point, sorted."""
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i]:
            continue
        c = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            c.append(j)
            seen[j] = True
            j = a[j]
        if len(c) > 1:
            out.append(tuple(c))
    return out


def cycle_type(a: Perm) -> Tuple[int, ...]:
    """Sorted cycle lengths including fixed points (a partition of the degree)."""
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            n += 1
        out.append(n)
    return tuple(sorted(out))


def format_cycles(a: Perm) -> str:
    cs = cycles(a)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cs)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Perm:
    """Parse ``(1 2 3)(4 5)`` on points 1..degree (commas also accepted)."""
    text = text.strip()
    if not text:
        raise PermParseError("empty permutation")
    pos = 0
    cyc: List[List[int]] = []
    for m in _CYCLE.finditer(text):
        if text[pos : m.start()].strip():
            raise PermParseError(f"junk between cycles: {text[pos:m.start()]!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(t) for t in body]
        except ValueError:
            raise PermParseError(f"non-integer point in {m.group(0)!r}") from None
        if len(set(pts)) != len(pts):
            raise PermParseError(f"repeated point in {m.group(0)!r}")
        cyc.append(pts)
        pos = m.end()
    if text[pos:].strip():
        raise PermParseError(f"trailing junk: {text[pos:]!r}")
    top = max((max(c) for c in cyc if c), default=0)
    n = degree if degree is not None else top
    if top > n or any(v < 1 for c in cyc for v in c):
        raise PermParseError(f"point out of range 1..{n}")
    img = list(range(n))
    # cycles compose right to left, like a product of functions
    for c in reversed(cyc):
        step = list(range(n))
        for i, v in enumerate(c):
            step[v - 1] = c[(i + 1) % len(c)] - 1
        img = [step[img[i]] for i in range(n)]
    return tuple(img)


def parse_generators(lines: Iterable[str], degree: int | None = None) -> List[Perm]:
    """One permutation per non-empty, non-comment line, all on a common degree."""
    texts = [ln.split("#", 1)[0].strip() for ln in lines]
    texts = [t for t in texts if t]
    if degree is None:
        degree = 0
        for t in texts:
            for m in _CYCLE.finditer(t):
                for tok in m.group(1).replace(",", " ").split():
                    if tok.isdigit():
                        degree = max(degree, int(tok))
    return [parse_cycles(t, degree) for t in texts]


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))
