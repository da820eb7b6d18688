"""Exact coefficient fields: Laurent polynomials in q, Q(q), and Q(zeta_p').

Two kinds of field elements are used throughout the package:

* :class:`RationalFunction` -- a reduced quotient of Laurent polynomials,
  used when ``q`` is generic (not a root of unity);
* :class:`CyclotomicNumber` -- a residue modulo the ``p'``-th cyclotomic
  polynomial, used when ``q`` is a primitive ``p'``-th root of unity.

A :class:`FieldMode` selects one of them and produces ``q``, constants and
q-integers in the right representation.  All values are immutable and
hashable; equality is structural because every value is kept in a canonical
form.

Text syntax
-----------
Laurent polynomials render as ``2*q^3 - q + 1/2 + q^-1``.  Rational
functions render as ``(<poly>)/(<poly>)`` whenever the denominator is not 1.
Cyclotomic numbers render as their reduced polynomial followed by
``@root p'``, e.g. ``-q - 1 @root 3``.  :meth:`FieldMode.parse` accepts any
arithmetic expression in ``q`` built from integers, ``+ - * / ^`` and
parentheses (juxtaposition means multiplication), plus an optional trailing
``@root p'`` that must agree with the mode.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, ParseError, SpecializationPole

Poly = tuple  # coefficients of a polynomial, lowest degree first, trimmed

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pscale(a, s):
    if s == 0:
        return ()
    return tuple(x * s for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) - 1 < db:
        return (), _trim(rem)
    quo = [_ZERO] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = c / lead
        quo[i - db] = c
        for j, y in enumerate(b):
            rem[i - db + j] -= c * y
    return _trim(quo), _trim(rem[:db])


def _pmonic(a):
    if not a or a[-1] == 1:
        return a
    lead = a[-1]
    return tuple(x / lead for x in a)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _pxgcd(a, b):
    """Return ``(g, s)`` with ``s*a = g (mod b)`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = (_ONE,), ()
    while r1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub(s0, _pmul(quo, s1))
    if not r0:
        return (), ()
    lead = r0[-1]
    return _pscale(r0, 1 / lead), _pscale(s0, 1 / lead)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


# ---------------------------------------------------------------------------
# Laurent polynomials

class LaurentPoly:
    """A finitely supported sum ``sum c_n q^n`` with rational ``c_n``.

    Stored densely as a valuation plus a coefficient tuple whose first and
    last entries are nonzero.
    """

    __slots__ = ("val", "coeffs", "_hash")

    def __init__(self, val: int = 0, coeffs=()):
        coeffs = [_as_fraction(c) for c in coeffs]
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        coeffs = _trim(coeffs[lo:])
        self.val = val + lo if coeffs else 0
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, val, coeffs):
        # caller guarantees canonical input
        obj = cls.__new__(cls)
        obj.val = val
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, n: int, c=1) -> "LaurentPoly":
        return cls(n, (c,))

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPoly":
        terms = {n: c for n, c in terms.items() if c != 0}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(n, 0) for n in range(lo, hi + 1)])

    def to_dict(self) -> dict:
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return self.val + len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.val == other.val and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly(0, (other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.val, self.coeffs))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw(self.val, _pneg(self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        v = min(self.val, other.val)
        a = (_ZERO,) * (self.val - v) + self.coeffs
        b = (_ZERO,) * (other.val - v) + other.coeffs
        return LaurentPoly(v, _padd(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._raw(self.val, _pscale(self.coeffs, other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        return LaurentPoly._raw(self.val + other.val, _pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by ``q^n``."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.val + n, self.coeffs)

    def __repr__(self):
        return f"LaurentPoly({render_laurent(self)!r})"

    def __str__(self):
        return render_laurent(self)


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_laurent(p: LaurentPoly, var: str = "q") -> str:
    """Render with descending exponents, e.g. ``q^2 - 3/2*q + 1 + q^-1``."""
    if not p.coeffs:
        return "0"
    parts = []
    for n in range(p.degree, p.val - 1, -1):
        c = p.coeffs[n - p.val]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if n == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if n == 1 else f"{var}^{n}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# the rational function field Q(q)

class RationalFunction:
    """Reduced quotient ``numerator / denominator`` of Laurent polynomials.

    Canonical form: the denominator is an honest polynomial with nonzero
    constant term and leading coefficient 1; powers of ``q`` live in the
    numerator; numerator and denominator share no polynomial factor.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly(0, (num,))
        if den is None:
            self.num, self.den, self._hash = num, _LP_ONE, None
            return
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly(0, (den,))
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @property
    def mode(self) -> "FieldMode":
        return GENERIC

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den is _LP_ONE or self.den == _LP_ONE

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_laurent() and self.num == other
        if isinstance(other, LaurentPoly):
            return self.is_laurent() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_laurent() and len(self.num.coeffs) <= 1 and self.num.val == 0:
                # agree with hash of the equal int/Fraction
                self._hash = hash(self.num.coeffs[0] if self.num.coeffs else 0)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RationalFunction(other)
        return None

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.is_laurent():
                return RationalFunction._raw(self.num + other.num, _LP_ONE)
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return _RF_ZERO
        if self.is_laurent() and other.is_laurent():
            return RationalFunction._raw(self.num * other.num, _LP_ONE)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        return _power(self, n, _RF_ONE)

    def render(self) -> str:
        if self.is_laurent():
            return render_laurent(self.num)
        return f"({render_laurent(self.num)})/({render_laurent(self.den)})"

    __str__ = render

    def __repr__(self):
        return f"RationalFunction({self.render()!r})"


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return LaurentPoly(), _LP_ONE
    # move q-powers of the denominator into the numerator
    nval = num.val - den.val
    npoly, dpoly = num.coeffs, den.coeffs
    if len(dpoly) > 1:
        g = _pgcd(npoly, dpoly)
        if len(g) > 1:
            npoly = _pdivmod(npoly, g)[0]
            dpoly = _pdivmod(dpoly, g)[0]
    lead = dpoly[-1]
    if lead != 1:
        npoly = tuple(x / lead for x in npoly)
        dpoly = tuple(x / lead for x in dpoly)
    if len(dpoly) == 1:
        return LaurentPoly._raw(nval, npoly), _LP_ONE
    return LaurentPoly._raw(nval, npoly), LaurentPoly._raw(0, dpoly)


def _power(x, n: int, one):
    if n < 0:
        x = x.inverse()
        n = -n
    result = one
    while n:
        if n & 1:
            result = result * x
        x = x * x
        n >>= 1
    return result


_LP_ONE = LaurentPoly(0, (1,))
_RF_ZERO = RationalFunction._raw(LaurentPoly(), _LP_ONE)
_RF_ONE = RationalFunction._raw(_LP_ONE, _LP_ONE)


# ---------------------------------------------------------------------------
# cyclotomic fields

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    """Coefficients of the ``n``-th cyclotomic polynomial, lowest first."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    poly = (Fraction(-1),) + (_ZERO,) * (n - 1) + (_ONE,)  # q^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _pdivmod(poly, cyclotomic_polynomial(d))[0]
    return poly


@lru_cache(maxsize=None)
def _q_power_residues(order: int):
    phi = cyclotomic_polynomial(order)
    return tuple(_pdivmod((_ZERO,) * j + (_ONE,), phi)[1] for j in range(order))


class CyclotomicNumber:
    """An element of Q(zeta) for a primitive ``order``-th root of unity zeta.

    ``residue`` holds the polynomial in ``q`` of degree below
    ``phi(order)``, reduced modulo the cyclotomic polynomial.
    """

    __slots__ = ("residue", "order", "_hash")

    def __init__(self, residue, order: int):
        phi = cyclotomic_polynomial(order)
        residue = _trim(_as_fraction(c) for c in residue)
        if len(residue) >= len(phi):
            residue = _pdivmod(residue, phi)[1]
        self.residue = residue
        self.order = order
        self._hash = None

    @classmethod
    def _raw(cls, residue, order):
        obj = cls.__new__(cls)
        obj.residue, obj.order, obj._hash = residue, order, None
        return obj

    @property
    def mode(self) -> "FieldMode":
        return FieldMode(self.order)

    def is_zero(self) -> bool:
        return not self.residue

    def __bool__(self):
        return bool(self.residue)

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.residue == other.residue
        if isinstance(other, (int, Fraction)):
            return self.residue == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if len(self.residue) <= 1:
                self._hash = hash(self.residue[0] if self.residue else 0)
            else:
                self._hash = hash((self.order, self.residue))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise TypeError("cyclotomic numbers of different orders")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(_trim((Fraction(other),)), self.order)
        return None

    def __neg__(self):
        return CyclotomicNumber._raw(_pneg(self.residue), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(_padd(self.residue, other.residue), self.order)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(_psub(self.residue, other.residue), self.order)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        prod = _pmul(self.residue, other.residue)
        phi = cyclotomic_polynomial(self.order)
        if len(prod) >= len(phi):
            prod = _pdivmod(prod, phi)[1]
        return CyclotomicNumber._raw(prod, self.order)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if not self.residue:
            raise DivisionByZero("inverse of zero")
        g, s = _pxgcd(self.residue, cyclotomic_polynomial(self.order))
        # Phi is irreducible, so any nonzero residue is coprime to it
        assert g == (_ONE,)
        return CyclotomicNumber(s, self.order)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        return _power(self, n, CyclotomicNumber._raw((_ONE,), self.order))

    def render(self) -> str:
        return f"{render_laurent(LaurentPoly(0, self.residue))} @root {self.order}"

    __str__ = render

    def __repr__(self):
        return f"CyclotomicNumber({self.render()!r})"


Scalar = Union[RationalFunction, CyclotomicNumber]


def specialize(x, order: int) -> CyclotomicNumber:
    """Evaluate ``x`` in Q(q) at a primitive ``order``-th root of unity."""
    if isinstance(x, (int, Fraction)):
        x = RationalFunction(x)
    if isinstance(x, LaurentPoly):
        x = RationalFunction(x)
    if isinstance(x, CyclotomicNumber):
        if x.order != order:
            raise TypeError("cannot respecialize a cyclotomic number")
        return x
    num = _laurent_mod(x.num, order)
    den = _laurent_mod(x.den, order)
    if den.is_zero():
        raise SpecializationPole(
            f"denominator {render_laurent(x.den)} vanishes at a primitive {order}-th root of unity")
    return num / den


def _laurent_mod(p: LaurentPoly, order: int) -> CyclotomicNumber:
    residues = _q_power_residues(order)
    acc = ()
    for i, c in enumerate(p.coeffs):
        if c:
            acc = _padd(acc, _pscale(residues[(p.val + i) % order], c))
    return CyclotomicNumber._raw(acc, order)


# ---------------------------------------------------------------------------
# field modes

@dataclass(frozen=True)
class FieldMode:
    """Which coefficient field is active.

    ``order`` is ``None`` for generic ``q`` and ``p'`` when ``q`` is a
    primitive ``p'``-th root of unity.
    """

    order: int | None = None

    def __post_init__(self):
        if self.order is not None and self.order < 3:
            raise ValueError(f"root-of-unity order must be >= 3, got {self.order}")

    @classmethod
    def generic(cls) -> "FieldMode":
        return cls(None)

    @classmethod
    def root_of_unity(cls, order: int) -> "FieldMode":
        return cls(order)

    @classmethod
    def from_tag(cls, tag: str) -> "FieldMode":
        """Parse ``generic`` or ``root:<p'>``."""
        tag = tag.strip()
        if tag == "generic":
            return cls(None)
        m = re.fullmatch(r"root:(-?\d+)", tag)
        if not m:
            raise ValueError(f"unknown mode {tag!r}; expected 'generic' or 'root:<p'>'")
        return cls(int(m.group(1)))

    @property
    def is_generic(self) -> bool:
        return self.order is None

    @property
    def p(self) -> int | None:
        """``p'`` for odd ``p'``, ``p'/2`` for even ``p'``; None when generic."""
        if self.order is None:
            return None
        return self.order if self.order % 2 else self.order // 2

    @property
    def tag(self) -> str:
        return "generic" if self.order is None else f"root:{self.order}"

    def describe(self) -> dict:
        if self.order is None:
            return {"tag": "generic"}
        return {"tag": self.tag, "pPrime": self.order, "p": self.p}

    def __str__(self):
        return self.tag

    # -- element construction -------------------------------------------
    def __call__(self, x) -> Scalar:
        return self.coerce(x)

    def coerce(self, x) -> Scalar:
        if self.order is None:
            if isinstance(x, RationalFunction):
                return x
            if isinstance(x, CyclotomicNumber):
                raise TypeError("cyclotomic number in generic mode")
            return RationalFunction(x)
        if isinstance(x, CyclotomicNumber):
            if x.order != self.order:
                raise TypeError(f"cyclotomic number of order {x.order} in mode {self.tag}")
            return x
        if isinstance(x, (int, Fraction)):
            return CyclotomicNumber._raw(_trim((Fraction(x),)), self.order)
        return specialize(x, self.order)

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    @property
    def q(self) -> Scalar:
        return self.q_power(1)

    def q_power(self, n: int) -> Scalar:
        return _q_power(self, n)

    def q_integer(self, n: int) -> Scalar:
        return q_integer(n, self)

    def parse(self, text: str) -> Scalar:
        return parse_scalar(text, self)


GENERIC = FieldMode(None)


@lru_cache(maxsize=4096)
def _q_power(mode: FieldMode, n: int) -> Scalar:
    if mode.order is None:
        return RationalFunction._raw(LaurentPoly._raw(n, (_ONE,)), _LP_ONE)
    return CyclotomicNumber._raw(_q_power_residues(mode.order)[n % mode.order], mode.order)


@lru_cache(maxsize=4096)
def q_integer(n: int, mode: FieldMode = GENERIC) -> Scalar:
    """The q-integer ``(q^n - q^-n)/(q - q^-1)``.

    For ``n > 0`` this is ``q^(n-1) + q^(n-3) + ... + q^(1-n)``; ``[0] = 0``
    and ``[-n] = -[n]``.
    """
    if n < 0:
        return -q_integer(-n, mode)
    if n == 0:
        return mode.zero
    poly = LaurentPoly(1 - n, [(1 if i % 2 == 0 else 0) for i in range(2 * n - 1)])
    value = RationalFunction._raw(poly, _LP_ONE)
    if mode.order is None:
        return value
    return specialize(value, mode.order)


def parse_scalar(text: str, mode: FieldMode = GENERIC) -> Scalar:
    """Parse the text syntax described in the module docstring."""
    from .parsing import evaluate

    text = text.strip()
    m = re.search(r"@\s*root\s+(\d+)\s*$", text)
    if m:
        order = int(m.group(1))
        if order != mode.order:
            raise ParseError(f"literal is tagged @root {order} but mode is {mode.tag}")
        text = text[: m.start()]
    value = evaluate(text, {"q": mode.q}, mode.coerce)
    return mode.coerce(value)
