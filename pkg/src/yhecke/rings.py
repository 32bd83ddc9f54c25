"""Exact coefficient arithmetic: cyclotomic rationals, Laurent polynomials,
rational functions.

Everything here is immutable and exact (no floats).  The coefficient tower is

    Fraction  ->  Cyclo (element of Q(zeta_d))  ->  Poly (multivariate Laurent
    polynomial over Cyclo)  ->  RatFun (quotient of two Polys)

Values of Q(zeta_d) are stored reduced modulo the d-th cyclotomic polynomial,
so equality and the zero test are decidable coefficient-wise.  Rational values
are always demoted to conductor 1; mixing two non-rational conductors promotes
both into Q(zeta_lcm).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


class PoleError(ZeroDivisionError):
    """A substitution or division hit a zero denominator (or a quotient that
    is not a Laurent polynomial where one was required)."""


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.pos = pos


# ---------------------------------------------------------------------------
# integer / rational dense univariate helpers (only what Phi_d needs)
# ---------------------------------------------------------------------------

def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Dense univariate division over Fraction; den must be non-zero."""
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]
    _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    r = list(num)
    _trim(r)
    while len(r) >= len(den):
        k = len(r) - len(den)
        c = r[-1] / den[-1]
        q[k] = c
        for i, dc in enumerate(den):
            r[i + k] -= c * dc
        _trim(r)
    return q, r


_PHI_CACHE: dict[int, tuple[int, ...]] = {}


def _phi(d: int) -> tuple[int, ...]:
    """Dense integer coefficients (low to high) of the cyclotomic polynomial
    Phi_d, computed by dividing x^d - 1 by Phi_e over the proper divisors e."""
    if d < 1:
        raise ValueError("conductor must be positive")
    if d in _PHI_CACHE:
        return _PHI_CACHE[d]
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            q, r = _poly_divmod(poly, list(_phi(e)))
            assert not r, "cyclotomic division must be exact"
            poly = q
    result = tuple(int(c) for c in poly)
    assert all(c == int(c) for c in poly)
    _PHI_CACHE[d] = result
    return result


def euler_phi(d: int) -> int:
    return len(_phi(d)) - 1


# ---------------------------------------------------------------------------
# cyclotomic rationals
# ---------------------------------------------------------------------------

class Cyclo:
    """An element of Q(zeta_d), stored as a vector of rationals of length
    deg Phi_d (the image of a polynomial in zeta_d reduced mod Phi_d).

    Rational values always live at conductor 1, so ``is_rational`` and
    cross-conductor equality behave canonically.  Two non-rational values are
    combined by promotion into Q(zeta_lcm).
    """

    __slots__ = ("d", "c")

    def __init__(self, d: int, coeffs: tuple[Fraction, ...]):
        # private: use from_rational / root / of instead
        self.d = d
        self.c = coeffs

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rational(x) -> "Cyclo":
        return Cyclo(1, (Fraction(x),))

    @staticmethod
    def of(x) -> "Cyclo":
        if isinstance(x, Cyclo):
            return x
        return Cyclo.from_rational(x)

    @staticmethod
    def root(d: int, k: int = 1) -> "Cyclo":
        """zeta_d^k, reduced mod Phi_d."""
        if d < 1:
            raise ValueError("conductor must be positive")
        k %= d
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return _make_cyclo(d, coeffs)

    # -- representation maintenance -----------------------------------------

    def _promoted(self, d2: int) -> tuple[Fraction, ...]:
        """Coefficients of self inside Q(zeta_d2); requires d | d2."""
        if self.d == d2:
            return self.c
        step = d2 // self.d
        raw = [Fraction(0)] * ((len(self.c) - 1) * step + 1) if self.c else [Fraction(0)]
        for k, a in enumerate(self.c):
            raw[k * step] += a
        return _reduce_mod_phi(d2, raw)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.c)

    def is_rational(self) -> bool:
        return self.d == 1

    def is_one(self) -> bool:
        return self.d == 1 and self.c[0] == 1

    def as_fraction(self) -> Fraction:
        if self.d != 1:
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    # -- arithmetic -----------------------------------------------------------

    def _pair(self, other: "Cyclo") -> tuple[int, tuple, tuple]:
        if self.d == other.d:
            return self.d, self.c, other.c
        m = self.d * other.d // gcd(self.d, other.d)
        return m, self._promoted(m), other._promoted(m)

    def __add__(self, other):
        other = Cyclo.of(other)
        if self.d == 1 and other.d == 1:
            return Cyclo(1, (self.c[0] + other.c[0],))
        d, a, b = self._pair(other)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return _make_cyclo(d, out, reduced=True)

    def __neg__(self):
        return Cyclo(self.d, tuple(-a for a in self.c))

    def __sub__(self, other):
        return self + (-Cyclo.of(other))

    def __rsub__(self, other):
        return Cyclo.of(other) - self

    def __mul__(self, other):
        other = Cyclo.of(other)
        if self.d == 1 and other.d == 1:
            return Cyclo(1, (self.c[0] * other.c[0],))
        if self.d == 1:
            r = self.c[0]
            return _make_cyclo(other.d, [r * a for a in other.c], reduced=True)
        if other.d == 1:
            r = other.c[0]
            return _make_cyclo(self.d, [r * a for a in self.c], reduced=True)
        d, a, b = self._pair(other)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return _make_cyclo(d, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.d == 1:
            return Cyclo(1, (1 / self.c[0],))
        # extended Euclid in Q[x] against Phi_d
        phi = [Fraction(x) for x in _phi(self.d)]
        r0, r1 = phi, list(self.c)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        _trim(r1)
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = list(s0)
            qs = _poly_mul_dense(q, s1)
            s = [a - b for a, b in _zip_pad(s, qs)]
            r0, r1, s0, s1 = r1, r, s1, _trim(s)
        # r1 is the gcd (a nonzero constant, Phi_d being irreducible)
        lead = r1[0]
        inv = [a / lead for a in s1]
        return _make_cyclo(self.d, inv)

    def __truediv__(self, other):
        other = Cyclo.of(other)
        if other.d == 1:
            r = other.c[0]
            if r == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclo(self.d, tuple(a / r for a in self.c))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclo.of(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- equality / hashing ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        if self.d == other.d:
            return self.c == other.c
        d, a, b = self._pair(other)
        return _trim(list(a)) == _trim(list(b))

    def __hash__(self):
        if self.d == 1:
            return hash(self.c[0])
        return hash((self.d, self.c))

    def __repr__(self):
        return f"Cyclo({self})"

    def __str__(self):
        if self.d == 1:
            return str(self.c[0])
        parts = []
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            if k == 0:
                parts.append(str(a))
            else:
                mono = f"zeta{self.d}" if k == 1 else f"zeta{self.d}^{k}"
                parts.append(f"{a}*{mono}")
        return "(" + " + ".join(parts) + ")"


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    for i in range(n):
        x = a[i] if i < len(a) else Fraction(0)
        y = b[i] if i < len(b) else Fraction(0)
        yield x, y


def _poly_mul_dense(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _reduce_mod_phi(d: int, coeffs: list) -> tuple[Fraction, ...]:
    deg = euler_phi(d)
    coeffs = [Fraction(x) for x in coeffs]
    if len(coeffs) > deg:
        _, coeffs = _poly_divmod(coeffs, [Fraction(x) for x in _phi(d)])
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs[:deg])


def _make_cyclo(d: int, coeffs: list, reduced: bool = False) -> Cyclo:
    if d == 1:
        c = coeffs[0] if coeffs else Fraction(0)
        return Cyclo(1, (Fraction(c),))
    c = tuple(coeffs) if reduced and len(coeffs) == euler_phi(d) else _reduce_mod_phi(d, list(coeffs))
    if all(a == 0 for a in c[1:]):
        return Cyclo(1, (c[0],))  # demote rational values to conductor 1
    return Cyclo(d, c)


ZERO = Cyclo.from_rational(0)
ONE = Cyclo.from_rational(1)


def root_of_unity_power(d: int, k: int) -> Cyclo:
    """zeta_d^k as an exact element of Q(zeta_d)."""
    return Cyclo.root(d, k)


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------

# Fixed global variable order used for canonical printing: q, sqrt_lambda, E,
# u, z, then x_1, x_2, ..., then anything else alphabetically.
_VAR_RANK = {"q": 0, "sqrt_lambda": 1, "E": 2, "u": 3, "sqrt_u": 4, "z": 5, "sqrt_w": 6}
_X_RE = re.compile(r"x(\d+)\Z")


def _var_key(name: str):
    r = _VAR_RANK.get(name)
    if r is not None:
        return (0, r, 0, "")
    m = _X_RE.match(name)
    if m:
        return (1, 0, int(m.group(1)), "")
    return (2, 0, 0, name)


Mono = tuple  # tuple[tuple[str, int], ...] sorted by _var_key, exponents nonzero

_EMPTY_MONO: Mono = ()


def _mono(pairs: Iterable[tuple[str, int]]) -> Mono:
    acc: dict[str, int] = {}
    for name, e in pairs:
        acc[name] = acc.get(name, 0) + e
    return tuple(sorted(((n, e) for n, e in acc.items() if e), key=lambda p: _var_key(p[0])))


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    return _mono(list(a) + list(b))


def _mono_key(m: Mono, universe: tuple[str, ...]):
    """Graded (total degree) then lexicographic key over a fixed variable list."""
    d = dict(m)
    return (sum(d.values()), tuple(d.get(v, 0) for v in universe))


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Multivariate Laurent polynomial with Cyclo coefficients.

    Terms are stored sparsely as a map monomial -> nonzero coefficient;
    exponents may be negative.  Instances are immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = terms

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly({})

    @staticmethod
    def one() -> "Poly":
        return Poly({_EMPTY_MONO: ONE})

    @staticmethod
    def const(c) -> "Poly":
        c = Cyclo.of(c)
        return Poly({} if c.is_zero() else {_EMPTY_MONO: c})

    @staticmethod
    def var(name: str, exp: int = 1) -> "Poly":
        if exp == 0:
            return Poly.one()
        return Poly({((name, exp),): ONE})

    @staticmethod
    def of(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction, Cyclo)):
            return Poly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    @staticmethod
    def from_terms(pairs: Iterable[tuple[Mono, Cyclo]]) -> "Poly":
        acc: dict = {}
        for m, c in pairs:
            s = acc.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                acc.pop(m, None)
            else:
                acc[m] = s
        return Poly(acc)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and _EMPTY_MONO in self.terms and self.terms[_EMPTY_MONO].is_one()

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _EMPTY_MONO in self.terms)

    def constant_value(self) -> Cyclo:
        if self.is_zero():
            return ZERO
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[_EMPTY_MONO]

    def variables(self) -> tuple[str, ...]:
        seen = {name for m in self.terms for name, _ in m}
        return tuple(sorted(seen, key=_var_key))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = Poly.of(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                acc.pop(m, None)
            else:
                acc[m] = s
        return Poly(acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.of(other))

    def __rsub__(self, other):
        return Poly.of(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            c0 = Cyclo.of(other)
            if c0.is_zero():
                return Poly.zero()
            return Poly({m: c * c0 for m, c in self.terms.items()})
        other = Poly.of(other)
        if not self.terms or not other.terms:
            return Poly.zero()
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                s = acc.get(m)
                s = c if s is None else s + c
                if s.is_zero():
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return Poly(acc)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        return self * Cyclo.of(c)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            if len(self.terms) == 1:
                (m, c), = self.terms.items()
                inv = Poly({_mono((name, -e) for name, e in m): c.inverse()})
                return inv ** (-n)
            raise ValueError("negative power of a non-monomial; use RatFun")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self * Cyclo.of(other).inverse()
        return RatFun.of(self) / other

    # -- equality / hashing -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure ------------------------------------------------------------------

    def _universe(self, *others: "Poly") -> tuple[str, ...]:
        seen = {name for m in self.terms for name, _ in m}
        for p in others:
            seen |= {name for m in p.terms for name, _ in m}
        return tuple(sorted(seen, key=_var_key))

    def sorted_terms(self) -> list[tuple[Mono, Cyclo]]:
        universe = self._universe()
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0], universe))

    def leading(self, universe=None) -> tuple[Mono, Cyclo]:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        universe = universe or self._universe()
        m = max(self.terms, key=lambda t: _mono_key(t, universe))
        return m, self.terms[m]

    def trailing(self, universe=None) -> tuple[Mono, Cyclo]:
        if self.is_zero():
            raise ValueError("zero polynomial has no trailing term")
        universe = universe or self._universe()
        m = min(self.terms, key=lambda t: _mono_key(t, universe))
        return m, self.terms[m]

    def shift(self, mono: Mono, coeff: Cyclo | None = None) -> "Poly":
        """Multiply by a single monomial (and optionally a coefficient)."""
        out = {}
        for m, c in self.terms.items():
            out[_mono_mul(m, mono)] = c if coeff is None else c * coeff
        return Poly(out)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name`` (0 if absent)."""
        best = 0
        for m in self.terms:
            for v, e in m:
                if v == name and e > best:
                    best = e
        return best

    # -- substitution ------------------------------------------------------------------

    def substitute(self, bindings: Mapping[str, object]) -> "RatFun":
        """Exact substitution of variables by values (RatFun / Poly / scalars).

        Unbound variables stay symbolic.  The result is assembled over a single
        common denominator, so towers like sum_k c_k z^k at z = a/b do not blow
        up intermediate representations.  Raises PoleError if a denominator
        vanishes.
        """
        vals = {name: RatFun.of(v) for name, v in bindings.items()}
        # exponent range [lo_v, hi_v] (0 included) of every bound variable that
        # actually occurs; the common denominator is
        #     prod_v den_v^hi_v * num_v^(-lo_v)
        # and a term with exponent e contributes num_v^(e-lo_v) * den_v^(hi_v-e)
        # to the numerator (both exponents nonnegative by construction).
        lo: dict[str, int] = {}
        hi: dict[str, int] = {}
        for m in self.terms:
            for name, e in m:
                if name in vals:
                    lo[name] = min(lo.get(name, 0), e)
                    hi[name] = max(hi.get(name, 0), e)
        for name in lo:
            if lo[name] < 0 and vals[name].num.is_zero():
                raise PoleError(f"substituting 0 into a negative power of {name}")
        common_den = Poly.one()
        for name in lo:
            rf = vals[name]
            if hi[name] > 0:
                common_den = common_den * rf.den ** hi[name]
            if lo[name] < 0:
                common_den = common_den * rf.num ** (-lo[name])
        pow_cache: dict[tuple[str, str, int], Poly] = {}

        def _power(name: str, which: str, k: int) -> Poly:
            key = (name, which, k)
            p = pow_cache.get(key)
            if p is None:
                base = vals[name].num if which == "n" else vals[name].den
                p = base ** k
                pow_cache[key] = p
            return p

        num_acc = Poly.zero()
        for m, c in self.terms.items():
            exps = dict(m)
            sym = [(name, e) for name, e in m if name not in vals]
            factor = Poly.const(c)
            for name in lo:
                e = exps.get(name, 0)
                if e - lo[name]:
                    factor = factor * _power(name, "n", e - lo[name])
                if hi[name] - e:
                    factor = factor * _power(name, "d", hi[name] - e)
            num_acc = num_acc + factor.shift(_mono(sym))
        return RatFun.new(num_acc, common_den)

    # -- printing -----------------------------------------------------------------------

    def canonical_str(self) -> str:
        """Canonical text form, e.g. ``-1*q^-2 + 2*q^3*E^-1``.

        Terms are ordered graded-lexicographically (ascending); every term
        carries an explicit coefficient.  ``parse_expr`` reads this back.
        """
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [] if (c.is_one() and m) else [str(c)]
            for name, e in m:
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.canonical_str()

    def __repr__(self):
        return f"Poly({self.canonical_str()!r})"


def poly_gcd_content(p: Poly) -> tuple[Mono, Cyclo]:
    """Monomial content (exponent-wise minimum) and leading coefficient of p
    with respect to the canonical order; used for unit normalization."""
    universe = p._universe()
    mins: dict[str, int] = {}
    first = True
    for m in p.terms:
        d = dict(m)
        if first:
            mins = {v: d.get(v, 0) for v in universe}
            first = False
        else:
            for v in universe:
                mins[v] = min(mins[v], d.get(v, 0))
    content = _mono((v, e) for v, e in mins.items() if e)
    _, lead = p.leading(universe)
    return content, lead


def _min_exponents(p: Poly, universe: tuple[str, ...]) -> dict[str, int]:
    mins = {v: 0 for v in universe}
    first = True
    for m in p.terms:
        d = dict(m)
        if first:
            mins = {v: d.get(v, 0) for v in universe}
            first = False
        else:
            for v in universe:
                e = d.get(v, 0)
                if e < mins[v]:
                    mins[v] = e
    return mins


def exact_div(num: Poly, den: Poly) -> Poly:
    """Exact division of Laurent polynomials; raises PoleError when the
    quotient is not a Laurent polynomial.

    Both operands are shifted by their per-variable minimal exponents into
    ordinary polynomials.  Since the lowest graded slice of a product is the
    product of the lowest slices, the shifted quotient is ordinary too, and
    leading-term elimination under graded-lex on nonnegative exponents is
    well-founded: a leading term not divisible by the divisor's proves the
    division inexact.
    """
    if den.is_zero():
        raise PoleError("division by the zero polynomial")
    if num.is_zero():
        return Poly.zero()
    universe = num._universe(den)
    num_shift = _min_exponents(num, universe)
    den_shift = _min_exponents(den, universe)
    n = num.shift(_mono((v, -e) for v, e in num_shift.items()))
    d = den.shift(_mono((v, -e) for v, e in den_shift.items()))
    lt_m, lt_c = d.leading(universe)
    lt_exps = dict(lt_m)
    lt_inv = lt_c.inverse()
    lt_m_inv = _mono((name, -e) for name, e in lt_m)
    q: dict = {}
    r = n
    while not r.is_zero():
        rm, rc = r.leading(universe)
        r_exps = dict(rm)
        if any(r_exps.get(v, 0) < e for v, e in lt_exps.items()):
            raise PoleError("inexact polynomial division")
        t_mono = _mono_mul(rm, lt_m_inv)
        t_coeff = rc * lt_inv
        q[t_mono] = t_coeff
        r = r - d.shift(t_mono, t_coeff)
    back = _mono((v, num_shift[v] - den_shift[v]) for v in universe)
    return Poly(q).shift(back)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFun:
    """Quotient of two Laurent polynomials; denominator never zero.

    The pair is unit-normalized (denominator divided by its monomial content
    and made monic) and reduced to a plain polynomial whenever the division
    happens to be exact.  Equality is decided by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    @staticmethod
    def new(num: Poly, den: Poly) -> "RatFun":
        if den.is_zero():
            raise PoleError("zero denominator")
        if num.is_zero():
            return RatFun(Poly.zero(), Poly.one())
        if den.is_constant():
            c = den.constant_value()
            return RatFun(num * c.inverse(), Poly.one())
        try:
            return RatFun(exact_div(num, den), Poly.one())
        except PoleError:
            pass
        content, lead = poly_gcd_content(den)
        unit_mono = _mono((name, -e) for name, e in content)
        unit_coeff = lead.inverse()
        return RatFun(num.shift(unit_mono, unit_coeff), den.shift(unit_mono, unit_coeff))

    @staticmethod
    def of(x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        return RatFun.new(Poly.of(x), Poly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def to_laurent(self) -> Poly:
        """The value as a Laurent polynomial; PoleError if it is not one."""
        if self.den.is_one():
            return self.num
        return exact_div(self.num, self.den)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = RatFun.of(other)
        if self.den == other.den:
            return RatFun.new(self.num + other.num, self.den)
        return RatFun.new(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFun.of(other))

    def __rsub__(self, other):
        return RatFun.of(other) - self

    def __mul__(self, other):
        other = RatFun.of(other)
        return RatFun.new(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFun.of(other)
        if other.num.is_zero():
            raise PoleError("division by zero value")
        return RatFun.new(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFun.of(other) / self

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            if self.num.is_zero():
                raise PoleError("negative power of zero")
            return RatFun.new(self.den, self.num) ** (-n)
        result = RatFun.of(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, bindings: Mapping[str, object]) -> "RatFun":
        num = self.num.substitute(bindings)
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise PoleError("substitution produced a pole")
        return num / den

    # -- equality -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclo, Poly)):
            other = RatFun.of(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def canonical_str(self) -> str:
        if self.den.is_one():
            return self.num.canonical_str()
        return f"({self.num.canonical_str()}) / ({self.den.canonical_str()})"

    def __str__(self):
        return self.canonical_str()

    def __repr__(self):
        return f"RatFun({self.canonical_str()!r})"


def cyclotomic_phi(d: int) -> Poly:
    """The d-th cyclotomic polynomial as a Poly in the variable ``x``."""
    return Poly.from_terms(
        ((("x", k),) if k else _EMPTY_MONO, Cyclo.from_rational(c))
        for k, c in enumerate(_phi(d))
        if c
    )


def poly_substitute(p: Poly, bindings: Mapping[str, object]) -> RatFun:
    """Module-level convenience wrapper around Poly.substitute."""
    return Poly.of(p).substitute(bindings)


# ---------------------------------------------------------------------------
# parser for the canonical text form
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)
_ZETA_RE = re.compile(r"zeta(\d+)\Z")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos]!r}", pos)
                break
            if m.group("int"):
                self.toks.append(("int", m.group("int"), m.start()))
            elif m.group("name"):
                self.toks.append(("name", m.group("name"), m.start()))
            else:
                self.toks.append(("op", m.group("op"), m.start()))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.text))

    def next(self):
        t = self.peek()
        self.i += 1
        return t


def _parse_sum(ts: _Tokens) -> RatFun:
    kind, val, _ = ts.peek()
    negate = False
    if kind == "op" and val in "+-":
        ts.next()
        negate = val == "-"
    acc = _parse_product(ts)
    if negate:
        acc = -acc
    while True:
        kind, val, _ = ts.peek()
        if kind == "op" and val in "+-":
            ts.next()
            term = _parse_product(ts)
            acc = acc - term if val == "-" else acc + term
        else:
            return acc


def _parse_product(ts: _Tokens) -> RatFun:
    acc = _parse_factor(ts)
    while True:
        kind, val, _ = ts.peek()
        if kind == "op" and val in "*/":
            ts.next()
            rhs = _parse_factor(ts)
            if val == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise PoleError("division by zero in expression")
                acc = acc / rhs
        else:
            return acc


def _parse_exponent(ts: _Tokens) -> int:
    sign = 1
    kind, val, pos = ts.next()
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        kind, val, pos = ts.next()
    if kind != "int":
        raise ParseError("expected integer exponent", pos)
    return sign * int(val)


def _parse_factor(ts: _Tokens) -> RatFun:
    kind, val, pos = ts.next()
    if kind == "op" and val == "-":
        return -_parse_factor(ts)
    if kind == "op" and val == "(":
        inner = _parse_sum(ts)
        kind, val, pos = ts.next()
        if not (kind == "op" and val == ")"):
            raise ParseError("expected ')'", pos)
        base = inner
    elif kind == "int":
        base = RatFun.of(int(val))
    elif kind == "name":
        zm = _ZETA_RE.match(val)
        if zm:
            base = RatFun.of(Poly.const(Cyclo.root(int(zm.group(1)), 1)))
        else:
            base = RatFun.of(Poly.var(val))
    else:
        raise ParseError(f"unexpected token {val!r}", pos)
    kind, val, _ = ts.peek()
    if kind == "op" and val == "^":
        ts.next()
        e = _parse_exponent(ts)
        base = base ** e
    return base


def parse_expr(text: str) -> RatFun:
    """Parse the canonical text grammar (sums/products/powers/quotients of
    integers, variables and zeta constants) into an exact value."""
    ts = _Tokens(text)
    value = _parse_sum(ts)
    kind, val, pos = ts.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {val!r}", pos)
    return value


def parse_poly(text: str) -> Poly:
    """Parse text that must denote a Laurent polynomial."""
    return parse_expr(text).to_laurent()
