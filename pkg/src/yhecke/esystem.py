"""Solutions of the E-system and the parameter conditions under which the
Markov trace factors through the Temperley-Lieb-type quotients.

A solution is indexed by a nonempty subset D of Z/dZ:

    x_s = (1/|D|) sum_{m in D} zeta_d^{ms},

and E_D = (1/d) sum_s x_s x_{d-s} comes out as 1/|D| (verified exhaustively,
not assumed).  The exhaustive verifier works with integer vectors in the
group ring Z[x]/(x^d - 1), scaling away all denominators, and only reduces
modulo the cyclotomic polynomial for the final zero tests; this keeps the
d <= 12 sweep comfortably fast without floating point or field arithmetic in
the inner loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .rings import Cyclo, Poly, RatFun, _phi, euler_phi


@dataclass(frozen=True)
class ESolution:
    d: int
    D: tuple[int, ...]
    x: tuple[Cyclo, ...]
    E_D: Cyclo


def esolution(d: int, D) -> ESolution:
    """The E-system solution attached to a nonempty subset D of Z/dZ."""
    D = tuple(sorted({m % d for m in D}))
    if not D:
        raise ValueError("D must be nonempty")
    k = len(D)
    x = []
    for s in range(d):
        acc = Cyclo.from_rational(0)
        for m in D:
            acc = acc + Cyclo.root(d, m * s)
        x.append(acc / k)
    x = tuple(x)
    e_d = Cyclo.from_rational(0)
    for s in range(d):
        e_d = e_d + x[s] * x[(d - s) % d]
    e_d = e_d / d
    sol = ESolution(d, D, x, e_d)
    if not verify_esystem(x):
        raise AssertionError(f"constructed vector for D={D} fails the E-system")
    return sol


def verify_esystem(x) -> bool:
    """Exact check of the d-1 E-system equations for an arbitrary vector
    (entries coercible to Cyclo) with x_0 = 1."""
    x = tuple(Cyclo.of(v) for v in x)
    d = len(x)
    if d == 0 or not x[0].is_one():
        return False
    total = Cyclo.from_rational(0)
    for s in range(d):
        total = total + x[s] * x[(d - s) % d]
    for m in range(1, d):
        lhs = Cyclo.from_rational(0)
        for s in range(d):
            lhs = lhs + x[(m + s) % d] * x[(d - s) % d]
        if lhs != x[m] * total:
            return False
    return True


# ---------------------------------------------------------------------------
# exhaustive integer-arithmetic sweep
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _count_vectors(d: int) -> tuple[tuple[int, ...], ...]:
    """G_k[j] = #{s in Z/d : ks = j}; the group-ring image of sum_s x^{ks}."""
    out = []
    for k in range(d):
        row = [0] * d
        for s in range(d):
            row[(k * s) % d] += 1
        out.append(tuple(row))
    return tuple(out)


@lru_cache(maxsize=None)
def _reduction_rows(d: int) -> tuple[tuple[Fraction, ...], ...]:
    """x^j mod Phi_d for j < d, as coefficient rows of length deg Phi_d."""
    deg = euler_phi(d)
    phi = [Fraction(c) for c in _phi(d)]
    rows = []
    for j in range(d):
        if j < deg:
            row = [Fraction(0)] * deg
            row[j] = Fraction(1)
        else:
            # x * previous, reduced: shift then subtract lead * Phi
            prev = rows[j - 1]
            row = [Fraction(0)] + list(prev[: deg - 1])
            lead = prev[deg - 1]
            if lead:
                for i in range(deg):
                    row[i] -= lead * phi[i]
        rows.append(tuple(row))
    return tuple(rows)


def _reduces_to_constant(d: int, vec, constant: int) -> bool:
    rows = _reduction_rows(d)
    deg = euler_phi(d)
    acc = [Fraction(0)] * deg
    for j, c in enumerate(vec):
        if c:
            row = rows[j]
            for i in range(deg):
                acc[i] += c * row[i]
    if acc[0] != constant:
        return False
    return all(a == 0 for a in acc[1:])


def verify_subset_fast(d: int, D: tuple[int, ...]) -> bool:
    """Integer-arithmetic verification that the solution indexed by D
    satisfies every E-system equation and that E_D = 1/|D|.

    Works with y_s = |D| x_s in Z[x]/(x^d-1): the m-th equation, scaled by
    |D|^3, reads |D| * sum_s y_{m+s} y_{-s} = y_m * S with
    S = sum_s y_s y_{-s}; both sides are assembled as integer vectors and
    compared after one reduction mod Phi_d.
    """
    k = len(D)
    G = _count_vectors(d)
    # Y[a][j] = #{m in D : m*a = j}  (group-ring image of y_a)
    Y = []
    for a in range(d):
        row = [0] * d
        for m in D:
            row[(m * a) % d] += 1
        Y.append(row)
    # S = sum_s y_s y_{-s} = sum_{m1,m2 in D} G_{m1-m2}
    S = [0] * d
    for m1 in D:
        for m2 in D:
            g = G[(m1 - m2) % d]
            for j in range(d):
                S[j] += g[j]
    # E_D = 1/|D|  <=>  S reduces to the constant d*|D|
    if not _reduces_to_constant(d, S, d * k):
        return False
    # m-th equation: |D| * sum_{m1,m2} x^{m1 m} G_{m1-m2}  =  y_m * S
    # H[m1] = sum_{m2} G_{m1-m2} is shared across all m.
    H = {}
    for m1 in D:
        row = [0] * d
        for m2 in D:
            g = G[(m1 - m2) % d]
            for j in range(d):
                row[j] += g[j]
        H[m1] = row
    for m in range(1, d):
        lhs = [0] * d
        for m1 in D:
            h = H[m1]
            r = (m1 * m) % d
            for j in range(d):
                lhs[(j + r) % d] += h[j]
        for j in range(d):
            lhs[j] *= k
        rhs = [0] * d
        ym = Y[m]
        for j, cnt in enumerate(ym):
            if cnt:
                for i in range(d):
                    rhs[(i + j) % d] += cnt * S[i]
        diff = [a - b for a, b in zip(lhs, rhs)]
        if not _reduces_to_constant(d, diff, 0):
            return False
    return True


def sweep_all_subsets(d: int) -> int:
    """Verify every nonempty D for this d; returns the number checked."""
    count = 0
    base = list(range(d))
    for size in range(1, d + 1):
        for D in combinations(base, size):
            if not verify_subset_fast(d, D):
                raise AssertionError(f"E-system verification failed for d={d}, D={D}")
            count += 1
    return count


# ---------------------------------------------------------------------------
# trace factoring parameter data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FtlCondition:
    """Trace parameters under which the trace factors through the d-framing
    Temperley-Lieb quotient: supports Sup1, Sup2 (disjoint, not both empty),
    x_k = -z (sum_{Sup1} zeta^{mk} + (u+1) sum_{Sup2} zeta^{mk}) and
    z = -1 / (|Sup1| + (u+1)|Sup2|), as exact rational functions of u."""

    d: int
    sup1: tuple[int, ...]
    sup2: tuple[int, ...]
    x: tuple[RatFun, ...]
    z: RatFun


def ftl_params(d: int, sup1, sup2) -> FtlCondition:
    sup1 = tuple(sorted({m % d for m in sup1}))
    sup2 = tuple(sorted({m % d for m in sup2}))
    if set(sup1) & set(sup2):
        raise ValueError("supports must be disjoint")
    if not sup1 and not sup2:
        raise ValueError("supports cannot both be empty")
    u = Poly.var("u")
    u1 = u + Poly.one()
    z = RatFun.new(Poly.const(-1), Poly.const(len(sup1)) + u1 * len(sup2))
    xs = []
    for k in range(d):
        char_sum = Poly.zero()
        for m in sup1:
            char_sum = char_sum + Poly.const(Cyclo.root(d, m * k))
        for m in sup2:
            char_sum = char_sum + u1 * Poly.const(Cyclo.root(d, m * k))
        xs.append(-z * char_sum)
    return FtlCondition(d, sup1, sup2, tuple(xs), z)


def ytl_params(d: int, case: str, m: int = 0, pair: tuple[int, int] = (0, 1)):
    """Trace parameters under which the trace factors through the plain
    Temperley-Lieb-type quotient.

    case 'i'    : x_l = zeta_d^{ml}, z = -1/(u+1)
    case 'i-z1' : x_l = zeta_d^{ml}, z = -1
    case 'ii'   : x from the two-element subset ``pair``, z = -1/2
    """
    if case in ("i", "i-z1"):
        x = tuple(Cyclo.root(d, (m * l) % d) for l in range(d))
        if case == "i":
            u = Poly.var("u")
            z = RatFun.new(Poly.const(-1), u + Poly.one())
        else:
            z = RatFun.of(-1)
        return x, z
    if case == "ii":
        m1, m2 = pair
        if (m1 - m2) % d == 0:
            raise ValueError("case (ii) needs two distinct residues")
        x = esolution(d, (m1, m2)).x
        return x, RatFun.of(Fraction(-1, 2))
    raise ValueError(f"unknown case {case!r}")
