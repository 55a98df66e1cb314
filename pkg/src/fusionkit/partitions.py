"""Partitions, level-restriction predicates, and the rank-level duality map.

Partitions are plain tuples of weakly decreasing nonnegative integers.
Trailing zeros carry no meaning; every function normalizes them away, so
``(2, 1)`` and ``(2, 1, 0)`` denote the same partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

Partition = tuple[int, ...]


def normalize(parts) -> Partition:
    """Validate a weakly decreasing nonnegative sequence and strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form, e.g. ``"3,2,1"``; ``""`` and ``"0"`` are empty."""
    text = text.strip()
    if text == "":
        return ()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return normalize(parts)


def format_partition(p) -> str:
    p = normalize(p)
    return ",".join(str(x) for x in p) if p else "0"


def size(p) -> int:
    return sum(p)


def padded(p, n: int) -> Partition:
    """The partition as exactly ``n`` parts (trailing zeros restored)."""
    p = normalize(p)
    if len(p) > n:
        raise ValueError(f"{p} has more than {n} parts")
    return p + (0,) * (n - len(p))


def contains(outer, inner) -> bool:
    """Diagram containment: inner fits inside outer."""
    outer, inner = normalize(outer), normalize(inner)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def conjugate(p) -> Partition:
    """Column-lengths partition (transpose of the diagram)."""
    p = normalize(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


@dataclass(frozen=True, slots=True)
class FusionContext:
    """The pair (n, k): row bound and level governing restriction predicates.

    n = 1 is degenerate but admitted; the rank-level dual of an (n, 1)
    context needs it.
    """

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    def dual(self) -> "FusionContext":
        return FusionContext(self.k, self.n)


def _span(p, ctx: FusionContext) -> int | None:
    """First part minus n-th part, or None if p has more than n rows."""
    p = normalize(p)
    if len(p) > ctx.n:
        return None
    return (p[0] if p else 0) - (p[ctx.n - 1] if len(p) == ctx.n else 0)


def is_restricted(p, ctx: FusionContext) -> bool:
    """At most n rows and first-minus-last part at most k (difference 0 allowed)."""
    d = _span(p, ctx)
    return d is not None and d <= ctx.k


def is_edge(p, ctx: FusionContext) -> bool:
    """First-minus-last part exactly k."""
    return _span(p, ctx) == ctx.k


def is_border(p, ctx: FusionContext) -> bool:
    """First-minus-last part exactly k + 1."""
    return _span(p, ctx) == ctx.k + 1


def quotient(p, ctx: FusionContext) -> Partition:
    """Subtract the n-th part from the first n-1: the reduced label of p's class."""
    p = normalize(p)
    if len(p) > ctx.n:
        raise ValueError(f"{p} has more than {ctx.n} parts")
    full = padded(p, ctx.n)
    return normalize(tuple(full[i] - full[-1] for i in range(ctx.n - 1)))


def rank_level_dual(p, ctx: FusionContext) -> Partition:
    """The rank-level duality bijection onto (k, n)-restricted partitions.

    Slice the diagram into vertical slabs of width k, conjugate each slab,
    and glue by part-wise addition.  Bijective on restricted partitions;
    composing with the dual of the swapped context is the identity.
    """
    p = normalize(p)
    if not is_restricted(p, ctx):
        raise ValueError(f"{p} is not ({ctx.n},{ctx.k})-restricted")
    k = ctx.k
    result: list[int] = [0] * k
    t = 0
    while p and t * k < p[0]:
        slab = normalize(tuple(min(max(x - t * k, 0), k) for x in p))
        for i, part in enumerate(conjugate(slab)):
            result[i] += part
        t += 1
    return normalize(result)


def sigma_dot(sigma, mu_conj, m: int) -> tuple[int, ...]:
    """Permuted-composition action: entry i is (rho + mu')_{sigma^-1(i)} - rho_i.

    rho = (m-1, ..., 1, 0).  Entries may be negative; a negative entry means
    the corresponding path set is empty.
    """
    sigma = tuple(sigma)
    mu_conj = tuple(mu_conj)
    if len(sigma) != m or len(mu_conj) != m:
        raise ValueError("sigma and mu_conj must both have length m")
    rho = tuple(m - 1 - i for i in range(m))
    v = tuple(rho[i] + mu_conj[i] for i in range(m))
    inv = [0] * m
    for pos, val in enumerate(sigma):
        inv[val - 1] = pos
    return tuple(v[inv[i]] - rho[i] for i in range(m))


def perm_sign(sigma) -> int:
    sigma = tuple(sigma)
    inversions = sum(
        1
        for i in range(len(sigma))
        for j in range(i + 1, len(sigma))
        if sigma[i] > sigma[j]
    )
    return -1 if inversions % 2 else 1


def all_permutations(m: int):
    """One-line permutations of {1..m}."""
    return permutations(range(1, m + 1))


def partitions_of(total: int, max_part: int | None = None, max_len: int | None = None):
    """Yield all partitions of ``total`` (optionally bounding part size / length)."""
    if max_part is None:
        max_part = total
    if max_len is None:
        max_len = total

    def rec(rest, cap, slots, prefix):
        if rest == 0:
            yield tuple(prefix)
            return
        if slots == 0:
            return
        for part in range(min(cap, rest), 0, -1):
            prefix.append(part)
            yield from rec(rest - part, part, slots - 1, prefix)
            prefix.pop()

    yield from rec(total, max_part, max_len, [])


def partitions_up_to(total: int, max_len: int | None = None):
    for s in range(total + 1):
        yield from partitions_of(s, max_len=max_len)


def subpartitions(nu):
    """All partitions contained in the diagram of nu."""
    nu = normalize(nu)

    def rec(i, cap, prefix):
        if i == len(nu):
            yield normalize(prefix)
            return
        for part in range(min(cap, nu[i]), -1, -1):
            prefix.append(part)
            yield from rec(i + 1, part, prefix)
            prefix.pop()

    yield from rec(0, nu[0] if nu else 0, [])


def restricted_partitions_of(total: int, ctx: FusionContext):
    """Partitions of ``total`` that are (n, k)-restricted."""
    for p in partitions_of(total, max_len=ctx.n):
        if is_restricted(p, ctx):
            yield p


def restricted_supersets(la, extra: int, ctx: FusionContext):
    """Restricted partitions obtained from la by adding ``extra`` boxes."""
    la = normalize(la)
    lo = padded(la, ctx.n)

    def rec(i, remaining, cap, prefix):
        if i == ctx.n:
            if remaining == 0:
                q = normalize(prefix)
                if is_restricted(q, ctx):
                    yield q
            return
        # part i must cover lo[i], stay <= cap, and leave enough room
        for part in range(lo[i], cap + 1):
            add = part - lo[i]
            if add > remaining:
                break
            prefix.append(part)
            yield from rec(i + 1, remaining - add, part, prefix)
            prefix.pop()

    yield from rec(0, extra, (lo[0] if lo else 0) + extra, [])
