"""The three Temperley-Lieb-type quotients: ideal generators, dimension
formulas, d-partition combinatorics, two-column irreducibility classifiers,
and a brute-force checker for when the trace kills the defining ideal.

The factoring checker is deliberately an oracle: it expands tr(a * r * b)
over every pair of basis words of Y_{d,3} symbolically in (u, z, x_s) once
per quotient kind, and then evaluates the distinct residues at the requested
parameter values.  Nothing from the factoring theorems is assumed.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .algebra import Algebra, Element, Presentation, TraceParams, multiply, trace
from .rings import Poly


class QuotientKind(enum.Enum):
    YTL = "ytl"
    CTL = "ctl"
    FTL = "ftl"


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return comb(2 * k, k) // (k + 1)


def compositions(d: int, n: int) -> Iterator[tuple[int, ...]]:
    """All d-tuples of nonnegative integers summing to n."""
    if d == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(d - 1, n - first):
            yield (first,) + rest


def dim_y(d: int, n: int) -> int:
    return factorial(n) * d ** n


def dim_ytl(d: int, n: int) -> int:
    return d * catalan(n) + (d * (d - 1) // 2) * sum(comb(n, k) ** 2 for k in range(1, n))


def dim_ctl(d: int, n: int) -> int:
    total = 0
    for mu in compositions(d, n):
        multinom = factorial(n)
        for part in mu:
            multinom //= factorial(part)
        rest = 1
        for part in mu[1:]:
            rest *= factorial(part)
        total += multinom ** 2 * catalan(mu[0]) * rest
    return total


def dim_ftl(d: int, n: int) -> int:
    total = 0
    for mu in compositions(d, n):
        multinom = factorial(n)
        term = 1
        for part in mu:
            multinom //= factorial(part)
            term *= catalan(part)
        total += multinom ** 2 * term
    return total


# ---------------------------------------------------------------------------
# d-partitions and the representation-theoretic dimension oracle
# ---------------------------------------------------------------------------

Partition = tuple[int, ...]
DPartition = tuple[Partition, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    def rec(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + (p,))
    rec(n, n, ())
    return tuple(out)


def dpartitions(d: int, n: int) -> Iterator[DPartition]:
    for mu in compositions(d, n):
        choices = [partitions(k) for k in mu]
        def rec(i: int, acc: tuple):
            if i == d:
                yield acc
                return
            for p in choices[i]:
                yield from rec(i + 1, acc + (p,))
        yield from rec(0, ())


def standard_tableaux_count(p: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    n = sum(p)
    if n == 0:
        return 1
    hooks = 1
    cols = [0] * (p[0] if p else 0)
    for row in p:
        for j in range(row):
            cols[j] += 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j) + (cols[j] - i) - 1
    return factorial(n) // hooks


def dpartition_dim(lam: DPartition) -> int:
    n = sum(sum(p) for p in lam)
    multinom = factorial(n)
    dim = 1
    for p in lam:
        multinom //= factorial(sum(p))
        dim *= standard_tableaux_count(p)
    return multinom * dim


def _columns(p: Partition) -> int:
    return p[0] if p else 0


def is_irrep(kind: QuotientKind, lam: DPartition) -> bool:
    """Whether the d-partition labels an irreducible representation of the
    quotient: YTL caps the total column count at two, CTL restricts only the
    first diagram, FTL restricts every diagram."""
    if kind is QuotientKind.YTL:
        return sum(_columns(p) for p in lam) <= 2
    if kind is QuotientKind.CTL:
        return _columns(lam[0]) <= 2
    return all(_columns(p) <= 2 for p in lam)


# ---------------------------------------------------------------------------
# ideal generators and the factoring oracle
# ---------------------------------------------------------------------------

def _tl_relation(alg: Algebra) -> Element:
    """1 + g1 + g2 + g1 g2 + g2 g1 + g1 g2 g1."""
    g1, g2 = alg.g(1), alg.g(2)
    return (alg.one() + g1 + g2 + multiply(g1, g2) + multiply(g2, g1)
            + multiply(multiply(g1, g2), g1))


def ideal_generator(kind: QuotientKind, d: int, n: int,
                    pres: Presentation = Presentation.U) -> Element:
    """The canonical generator of the defining ideal (built at strands 1..3;
    each ideal is principal)."""
    if n < 3:
        raise ValueError("the quotient relations live on three strands")
    alg = Algebra(d, n, pres)
    g12 = _tl_relation(alg)
    if kind is QuotientKind.YTL:
        return g12
    framings = alg.zero()
    if kind is QuotientKind.CTL:
        triples = [(a, b, c) for a in range(d) for b in range(d) for c in range(d)]
    else:
        triples = [(a, b, (-a - b) % d) for a in range(d) for b in range(d)]
    for a, b, c in triples:
        f = [0] * n
        f[0], f[1], f[2] = a, b, c
        framings = framings + alg.monomial(f, tuple(range(n)))
    return multiply(framings, g12)


@lru_cache(maxsize=None)
def _factoring_residues(kind: QuotientKind, d: int, n: int) -> tuple[Poly, ...]:
    """Distinct generic values tr(a * r * b) over all basis word pairs."""
    alg = Algebra(d, n, Presentation.U)
    r = ideal_generator(kind, d, n)
    basis = [alg.monomial(f, w) for (f, w) in alg.basis()]
    residues: set[Poly] = set()
    for b in basis:
        rb = multiply(r, b)
        for a in basis:
            residues.add(trace(multiply(a, rb)))
    return tuple(residues)


def factoring_check(kind: QuotientKind, d: int, params: TraceParams, n: int = 3) -> bool:
    """True iff the trace with the given parameters vanishes on the whole
    defining ideal of the quotient at the given size (exhaustive over basis
    pairs, with the symbolic residue table shared between parameter sets)."""
    if params.d != d:
        raise ValueError("parameter modulus mismatch")
    bindings = params.bindings()
    for res in _factoring_residues(kind, d, n):
        if not bindings:
            if not res.is_zero():
                return False
            continue
        value = res.substitute(bindings)
        if not value.is_zero():
            return False
    return True
