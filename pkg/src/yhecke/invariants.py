"""Oriented-link invariants from the Markov trace, each computed by as many
independent routes as the theory provides.

Variable conventions (fixed here once, asserted by the cross-route tests):

* q-family: theta-type invariants live in q (and sqrt_lambda, E); the trace
  parameter of the q-presentation is eliminated via
  z = (q - q^-1) E_D / (1 - lambda), lambda = sqrt_lambda^2, E_D = 1/d.
  The one-variable family is the specialization sqrt_lambda -> q^2.
* u-family: the framed invariants and the classical Jones construction live
  in u (and sqrt_u = u^(1/2), sqrt_w); with the trace factoring value
  z = -1/((u+1)|D|) the rescaling factor becomes w = u.  The two families
  meet at u = q^2 (checked on the trefoil and the whole small-braid corpus).
* Split unions: Theta(disjoint union of r knots) = (mu/E)^(r-1) prod P(K_i)
  with mu = (lambda^-1/2 - lambda^1/2)/(q - q^-1); this is what the trace
  route and the partition formula both produce, and the skein evaluator's
  base case follows it.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .algebra import Presentation, embed_braid, trace
from .braids import BraidWord, FramedBraid, closure_components, conway_triple, delete_components
from .esystem import esolution
from .rings import Poly, RatFun


class SkeinGuardError(RuntimeError):
    """The skein recursion exceeded its progress bound (internal error)."""


# Upper bound on entries per shared memo table; exceeding it clears the table
# (values are pure functions of their keys, so dropping them is always safe).
_MEMO_LIMIT = int(os.environ.get("YHECKE_MEMO_LIMIT", "500000"))


def _trim(table: dict):
    if len(table) > _MEMO_LIMIT:
        table.clear()


def _braid_key(b: BraidWord) -> tuple:
    return (b.strands, b.letters)


# ---------------------------------------------------------------------------
# trace route: the theta family (q-presentation)
# ---------------------------------------------------------------------------

_TRACE_ROUTE_MEMO: dict = {}


def _theta_trace_value(b: BraidWord, d: int, modulus: int | None = None,
                       D=None, lam_q4: bool = False) -> RatFun:
    """(prefactor)^(n-1) (sqrt_lambda)^eps tr_{d,D}(embedded braid), with the
    trace parameter z eliminated by the rescaling relation.

    ``modulus``/``D`` default to the canonical choice D = Z/dZ; any other
    solution subset of the same cardinality d must give the same value."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    modulus = d if modulus is None else modulus
    D = tuple(range(d)) if D is None else tuple(D)
    memo_key = (_braid_key(b), d, modulus, D, lam_q4)
    cached = _TRACE_ROUTE_MEMO.get(memo_key)
    if cached is not None:
        return cached
    sol = esolution(modulus, D)
    if len(sol.D) != d:
        raise ValueError(f"|D| = {len(sol.D)} does not match d = {d}")
    elem = embed_braid(b, modulus, Presentation.Q)
    generic = trace(elem)  # Poly in q, z, x_1..x_{modulus-1}
    e_d = Fraction(1, d)
    q = Poly.var("q")
    if lam_q4:
        zval = RatFun.new(Poly.const(-e_d) * q ** -1, q * q + Poly.one())
    else:
        lam = Poly.var("sqrt_lambda") ** 2
        zval = RatFun.new((q - q ** -1) * Poly.const(e_d), Poly.one() - lam)
    bindings: dict = {"z": zval}
    for s in range(1, modulus):
        bindings[f"x{s}"] = sol.x[s]
    value = generic.substitute(bindings)
    n, eps = b.strands, b.exponent_sum()
    k = eps - n + 1
    unit = Poly.var("q") ** (2 * k) if lam_q4 else Poly.var("sqrt_lambda") ** k
    result = (RatFun.of(1) / zval) ** (n - 1) * unit * value
    _trim(_TRACE_ROUTE_MEMO)
    _TRACE_ROUTE_MEMO[memo_key] = result
    return result


def _exact(val: RatFun):
    """Prefer the Laurent-polynomial form when the quotient clears."""
    try:
        return val.to_laurent()
    except Exception:
        return val


def theta_d_cap(b: BraidWord, d: int, modulus: int | None = None, D=None):
    """The two-variable invariant in (q, sqrt_lambda) attached to d."""
    return _exact(_theta_trace_value(b, d, modulus, D, lam_q4=False))


def theta_d_small(b: BraidWord, d: int, modulus: int | None = None, D=None):
    """The one-variable specialization (sqrt_lambda -> q^2)."""
    return _exact(_theta_trace_value(b, d, modulus, D, lam_q4=True))


@lru_cache(maxsize=None)
def _homflypt_cached(key: tuple) -> RatFun:
    b = BraidWord(key[0], key[1])
    return RatFun.of(_theta_trace_value(b, 1, lam_q4=False))


def homflypt(b: BraidWord):
    """The two-variable classical invariant (d = 1 trace route)."""
    return _exact(_homflypt_cached(_braid_key(b)))


@lru_cache(maxsize=None)
def _jones_cached(key: tuple) -> RatFun:
    b = BraidWord(key[0], key[1])
    return RatFun.of(_theta_trace_value(b, 1, lam_q4=True))


def jones(b: BraidWord):
    """Jones polynomial in the q convention (t = q^2), via the d = 1 trace."""
    return _exact(_jones_cached(_braid_key(b)))


def jones_u(b: BraidWord) -> Poly:
    """Jones polynomial by the classical route: d = 1 trace in the u
    presentation with z = -1/(u+1) and prefactor (-(1+u)/sqrt_u)^(n-1)
    (sqrt_u)^eps; output in sqrt_u.  Must match ``jones`` under sqrt_u -> q."""
    elem = embed_braid(b, 1, Presentation.U)
    generic = trace(elem)  # Poly in u, z
    su = Poly.var("sqrt_u")
    u_val = su * su
    z_val = RatFun.new(Poly.const(-1), u_val + Poly.one())
    value = generic.substitute({"z": z_val, "u": u_val})
    n, eps = b.strands, b.exponent_sum()
    pref = RatFun.new(-(Poly.one() + u_val), su)
    return (pref ** (n - 1) * RatFun.of(su) ** eps * value).to_laurent()


# ---------------------------------------------------------------------------
# framed invariants (u-presentation)
# ---------------------------------------------------------------------------

def _sqrt_power(base_sq: RatFun, half_var: str, k: int) -> RatFun:
    """(sqrt of base)^k written as base^(k//2) * half_var^(k mod 2), keeping
    the formal square root variable to first power only."""
    m, r = divmod(k, 2)
    out = base_sq ** m
    if r:
        out = out * Poly.var(half_var)
    return out


def gamma_framed(fb: FramedBraid, D) -> RatFun:
    """Framed-link invariant with generic trace parameter z, as an exact
    rational function of (z, u) and at most one factor of the formal square
    root sqrt_w of the rescaling factor w = (z + (1-u) E_D) / (u z)."""
    D = tuple(sorted({m % fb.d for m in D}))
    if not D:
        raise ValueError("D must be nonempty")
    sol = esolution(fb.d, D)
    e_d = Fraction(1, len(D))
    elem = embed_braid(fb, fb.d, Presentation.U)
    generic = trace(elem)
    bindings = {f"x{s}": sol.x[s] for s in range(1, fb.d)}
    value = generic.substitute(bindings) if bindings else RatFun.of(generic)
    u, z = Poly.var("u"), Poly.var("z")
    w = RatFun.new(z + (Poly.one() - u) * Poly.const(e_d), u * z)
    n, eps = fb.word.strands, fb.word.exponent_sum()
    pref = (RatFun.of(1) / RatFun.of(z)) ** (n - 1)
    return pref * _sqrt_power(w, "sqrt_w", eps - n + 1) * value


def gamma_specialized(fb: FramedBraid, D):
    """The one-variable framed invariant: z = -1/((u+1)|D|), under which the
    rescaling factor becomes w = u; output in sqrt_u."""
    D = tuple(sorted({m % fb.d for m in D}))
    if not D:
        raise ValueError("D must be nonempty")
    sol = esolution(fb.d, D)
    elem = embed_braid(fb, fb.d, Presentation.U)
    generic = trace(elem)
    su = Poly.var("sqrt_u")
    u_val = su * su
    z_val = RatFun.new(Poly.const(-1), (u_val + Poly.one()) * len(D))
    bindings: dict = {"z": z_val, "u": u_val}
    for s in range(1, fb.d):
        bindings[f"x{s}"] = sol.x[s]
    value = generic.substitute(bindings)
    n, eps = fb.word.strands, fb.word.exponent_sum()
    pref = (RatFun.of(1) / z_val) ** (n - 1)
    return _exact(pref * _sqrt_power(RatFun.of(u_val), "sqrt_u", eps - n + 1) * value)


def delta(b: BraidWord, d: int, D, specialized: bool):
    """Classical-link restriction: the framed invariant on the all-zero
    framing lift."""
    fb = FramedBraid.classical(b, d)
    return gamma_specialized(fb, D) if specialized else gamma_framed(fb, D)


# ---------------------------------------------------------------------------
# partition combinatorics
# ---------------------------------------------------------------------------

def set_partitions(items) -> list[tuple[tuple, ...]]:
    """All partitions of a finite collection into unordered nonempty blocks
    (Bell-number many), in a deterministic order."""
    items = list(items)
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for part in set_partitions(rest):
        out.append(((first,),) + part)
        for i, block in enumerate(part):
            out.append(part[:i] + ((first,) + block,) + part[i + 1:])
    return [tuple(sorted(tuple(sorted(b)) for b in p)) for p in out]


def nu(blocks, closure) -> int:
    """Sum of linking numbers over pairs of components separated by the
    partition."""
    total = 0
    blocks = list(blocks)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for ci in blocks[i]:
                for cj in blocks[j]:
                    total += closure.lk(ci, cj)
    return total


def e_k_factor(k: int) -> Poly:
    """E_1 = 1, E_k = (E^-1 - 1)(E^-1 - 2)...(E^-1 - k + 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    e_inv = Poly.var("E") ** -1
    out = Poly.one()
    for j in range(1, k):
        out = out * (e_inv - Poly.const(j))
    return out


# ---------------------------------------------------------------------------
# combinatorial route (closed partition formula)
# ---------------------------------------------------------------------------

def theta_combinatorial(b: BraidWord) -> RatFun:
    """The three-variable invariant in (q, sqrt_lambda, E):
    sum_k mu^(k-1) E_k sum_pi lambda^nu(pi) * product of the two-variable
    values of the sublinks cut out by the partition pi."""
    closure = closure_components(b)
    m = len(closure.components)
    q, sl = Poly.var("q"), Poly.var("sqrt_lambda")
    mu = RatFun.new(sl ** -1 - sl, q - q ** -1)
    total = RatFun.of(0)
    for part in set_partitions(range(m)):
        k = len(part)
        term = RatFun.of(e_k_factor(k)) * (sl ** (2 * nu(part, closure)))
        for block in part:
            term = term * _homflypt_cached(_braid_key(delete_components(b, block)))
        total = total + mu ** (k - 1) * term
    return total


def theta2_combinatorial(b: BraidWord):
    """The two-variable invariant in (q, E): the same partition formula at
    lambda = q^4, with Jones values of sublinks (mu becomes -(q + q^-1))."""
    closure = closure_components(b)
    m = len(closure.components)
    q = Poly.var("q")
    mu2 = -(q + q ** -1)
    total = RatFun.of(0)
    for part in set_partitions(range(m)):
        k = len(part)
        term = RatFun.of(e_k_factor(k)) * (q ** (4 * nu(part, closure)))
        for block in part:
            term = term * _jones_cached(_braid_key(delete_components(b, block)))
        total = total + RatFun.of(mu2) ** (k - 1) * term
    return _exact(total)


# ---------------------------------------------------------------------------
# skein route
# ---------------------------------------------------------------------------

def _first_wrong_mixed(b: BraidWord) -> int | None:
    """First letter position whose crossing is between different components
    and is not yet 'descending' (smaller component passing over)."""
    closure = closure_components(b)
    comp_of = {s: closure.component_of(s) for s in range(1, b.strands + 1)}
    occupant = list(range(1, b.strands + 1))
    for p, a in enumerate(b.letters):
        i = abs(a) - 1
        c1, c2 = comp_of[occupant[i]], comp_of[occupant[i + 1]]
        if c1 != c2:
            over_first = a > 0
            correct = (c1 < c2) if over_first else (c2 < c1)
            if not correct:
                return p
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    return None


_SKEIN_MEMO: dict = {}


def theta_skein(b: BraidWord, generic_lambda: bool = False) -> RatFun:
    """Skein evaluation of the theta family on a braid closure.

    Mixed crossings are switched toward a layered (descending) form in a fixed
    scan order; each branch strictly reduces (word length, wrong-crossing
    count), and the terminal split unions of knots are evaluated through the
    trace engine.  The value carries E as a variable."""
    return _theta_skein_rec(b, generic_lambda, 2 * len(b.letters) + 8)


def _theta_skein_rec(b: BraidWord, generic_lambda: bool, budget: int) -> RatFun:
    if budget < 0:
        raise SkeinGuardError("skein recursion failed to make progress")
    key = (generic_lambda, _braid_key(b))
    cached = _SKEIN_MEMO.get(key)
    if cached is not None:
        return cached
    q = Poly.var("q")
    if generic_lambda:
        sl = Poly.var("sqrt_lambda")
        lam = RatFun.of(sl * sl)
        half = RatFun.of(sl)
        mu = RatFun.new(sl ** -1 - sl, q - q ** -1)
    else:
        lam = RatFun.of(q ** 4)
        half = RatFun.of(q * q)
        mu = RatFun.of(-(q + q ** -1))
    p = _first_wrong_mixed(b)
    if p is None:
        closure = closure_components(b)
        r = len(closure.components)
        e_inv = RatFun.of(Poly.var("E") ** -1)
        value = (mu * e_inv) ** (r - 1)
        for k in range(r):
            knot = delete_components(b, (k,))
            base = _homflypt_cached(_braid_key(knot)) if generic_lambda \
                else _jones_cached(_braid_key(knot))
            value = value * base
    else:
        l_plus, l_minus, l_zero = conway_triple(b, p)
        coeff0 = (q - q ** -1)
        if b.letters[p] > 0:
            # lambda^(-1/2) T(L+) - lambda^(1/2) T(L-) = (q-q^-1) T(L0)
            value = lam * _theta_skein_rec(l_minus, generic_lambda, budget - 1) \
                + half * coeff0 * _theta_skein_rec(l_zero, generic_lambda, budget - 1)
        else:
            value = (RatFun.of(1) / lam) * _theta_skein_rec(l_plus, generic_lambda, budget - 1) \
                - (RatFun.of(1) / half) * coeff0 * _theta_skein_rec(l_zero, generic_lambda, budget - 1)
    _trim(_SKEIN_MEMO)
    _SKEIN_MEMO[key] = value
    return value


# ---------------------------------------------------------------------------
# route dispatch (used by the service layer)
# ---------------------------------------------------------------------------

def theta_routes(b: BraidWord, d: int) -> dict[str, RatFun]:
    """The one-variable invariant by all three routes, each specialized to
    E = 1/d where E is carried symbolically."""
    e_val = Fraction(1, d)
    comb = theta2_combinatorial(b)
    comb = RatFun.of(comb).substitute({"E": e_val})
    skein = theta_skein(b).substitute({"E": e_val})
    return {
        "trace": RatFun.of(theta_d_small(b, d)),
        "comb": comb,
        "skein": skein,
    }


def theta_cap_routes(b: BraidWord, d: int) -> dict[str, RatFun]:
    e_val = Fraction(1, d)
    return {
        "trace": RatFun.of(theta_d_cap(b, d)),
        "comb": theta_combinatorial(b).substitute({"E": e_val}),
        "skein": theta_skein(b, generic_lambda=True).substitute({"E": e_val}),
    }
