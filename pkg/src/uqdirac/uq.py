"""U_q(sl2) in the PBW basis E^i K^j F^k.

Elements are dictionaries from monomial keys ``(i, j, k)`` to scalars of a
fixed :class:`~uqdirac.scalars.FieldMode`.  Products are brought to normal
form with the rewriting rules

    K^j E   -> q^(2j) E K^j
    F K^j   -> q^(2j) K^j F
    F E     -> E F - (K - K^-1)/(q - q^-1)

applied one step at a time.  Normal forms of ``F^c E^d`` are memoized per
mode; that table is the only shared state in the module.
"""

from __future__ import annotations

import os
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotCentral, ParseError, TermLimitExceeded
from .scalars import CyclotomicNumber, FieldMode, RationalFunction, GENERIC
from .verification import Verification, check_equal

Key = tuple  # (i, j, k) for E^i K^j F^k

MAX_TERMS_ENV = "UQDIRAC_MAX_TERMS"
DEFAULT_MAX_TERMS = 10**6

_SCALAR_TYPES = (int, Fraction, RationalFunction, CyclotomicNumber)


def max_terms() -> int:
    raw = os.environ.get(MAX_TERMS_ENV)
    return int(raw) if raw else DEFAULT_MAX_TERMS


def _guard(terms: dict) -> dict:
    limit = max_terms()
    if len(terms) > limit:
        raise TermLimitExceeded(f"normal form has {len(terms)} terms (limit {limit})")
    return terms


def _clean(acc: dict) -> dict:
    return _guard({key: c for key, c in acc.items() if c})


def scalar_text(c) -> str:
    """Render a scalar so that it parses back inside a larger expression."""
    if isinstance(c, CyclotomicNumber):
        text = c.render().rsplit(" @root", 1)[0]
    else:
        text = c.render()
    return text


def _coeff_prefix(c) -> str:
    if c == 1:
        return ""
    if c == -1:
        return "-"
    return f"({scalar_text(c)})*"


def render_monomial(key: Key) -> str:
    i, j, k = key
    parts = []
    if i:
        parts.append("E" if i == 1 else f"E^{i}")
    if j:
        parts.append("K" if j == 1 else f"K^{j}")
    if k:
        parts.append("F" if k == 1 else f"F^{k}")
    return " ".join(parts) if parts else "1"


class UqElement:
    """A finite linear combination of PBW monomials ``E^i K^j F^k``."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms: dict | None = None, mode: FieldMode = GENERIC):
        self.mode = mode
        self.terms = {key: mode.coerce(c) for key, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms, mode):
        obj = cls.__new__(cls)
        obj.terms, obj.mode = terms, mode
        return obj

    @classmethod
    def monomial(cls, i: int, j: int, k: int, mode: FieldMode = GENERIC, coeff=1) -> "UqElement":
        if i < 0 or k < 0:
            raise ValueError("E and F exponents must be non-negative")
        return cls({(i, j, k): coeff}, mode)

    @classmethod
    def scalar(cls, c, mode: FieldMode = GENERIC) -> "UqElement":
        return cls({(0, 0, 0): c}, mode)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, key: Key):
        return self.terms.get(key, self.mode.zero)

    def _lift(self, other):
        if isinstance(other, UqElement):
            if other.mode != self.mode:
                raise TypeError(f"mode mismatch: {self.mode} vs {other.mode}")
            return other
        if isinstance(other, _SCALAR_TYPES):
            return UqElement.scalar(other, self.mode)
        return None

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return UqElement._raw({key: -c for key, c in self.terms.items()}, self.mode)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc[key] + c if key in acc else c
        return UqElement._raw(_clean(acc), self.mode)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "UqElement":
        c = self.mode.coerce(c)
        if not c:
            return UqElement._raw({}, self.mode)
        return UqElement._raw({key: v * c for key, v in self.terms.items()}, self.mode)

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, UqElement):
            if set(other.terms) != {(0, 0, 0)}:
                raise ValueError("can only divide by a nonzero scalar")
            other = other.terms[(0, 0, 0)]
        if not isinstance(other, _SCALAR_TYPES):
            return NotImplemented
        return self.scale(1 / self.mode.coerce(other))

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only scalar multiples of K^j can be inverted")
            ((i, j, k), c), = self.terms.items()
            if i or k:
                raise ValueError("only scalar multiples of K^j can be inverted")
            return UqElement._raw({(0, -j * -n, 0): c ** n}, self.mode)
        result = UqElement.scalar(1, self.mode)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms):
            c = self.terms[key]
            mono = render_monomial(key)
            if mono == "1":
                pieces.append(f"({scalar_text(c)})" if c != 1 else "1")
            else:
                pieces.append(_coeff_prefix(c) + mono)
        return " + ".join(pieces)

    def __repr__(self):
        return f"UqElement({str(self)!r}, mode={self.mode.tag})"


# ---------------------------------------------------------------------------
# generators

def E(mode: FieldMode = GENERIC) -> UqElement:
    return UqElement.monomial(1, 0, 0, mode)


def F(mode: FieldMode = GENERIC) -> UqElement:
    return UqElement.monomial(0, 0, 1, mode)


def K(mode: FieldMode = GENERIC, power: int = 1) -> UqElement:
    return UqElement.monomial(0, power, 0, mode)


def one(mode: FieldMode = GENERIC) -> UqElement:
    return UqElement.scalar(1, mode)


# ---------------------------------------------------------------------------
# rewriting

@lru_cache(maxsize=None)
def _f_times_e(mode: FieldMode, c: int, d: int) -> tuple:
    """Normal form of ``F^c E^d`` as a tuple of ``((i, j, k), coeff)``."""
    if c == 0 or d == 0:
        return (((d, 0, c), mode.one),)
    if c == 1:
        acc = defaultdict(lambda: mode.zero)
        # F E^d = E (F E^(d-1)) - H E^(d-1),  H = (K - K^-1)/(q - q^-1)
        for (i, j, k), x in _f_times_e(mode, 1, d - 1):
            acc[(i + 1, j, k)] += x
        inv = 1 / (mode.q - 1 / mode.q)
        acc[(d - 1, 1, 0)] -= mode.q_power(2 * (d - 1)) * inv
        acc[(d - 1, -1, 0)] += mode.q_power(-2 * (d - 1)) * inv
        return tuple((key, x) for key, x in acc.items() if x)
    acc = defaultdict(lambda: mode.zero)
    # F^c E^d = F^(c-1) (F E^d)
    for (i, j, k), x in _f_times_e(mode, 1, d):
        for (i2, j2, k2), y in _f_times_e(mode, c - 1, i):
            acc[(i2, j2 + j, k2 + k)] += x * y * mode.q_power(2 * k2 * j)
    return tuple((key, x) for key, x in acc.items() if x)


@lru_cache(maxsize=200_000)
def _monomial_product(mode: FieldMode, a: Key, b: Key) -> tuple:
    i1, j1, k1 = a
    i2, j2, k2 = b
    out = []
    for (i, j, k), x in _f_times_e(mode, k1, i2):
        # E^i1 K^j1 (E^i K^j F^k) K^j2 F^k2
        factor = mode.q_power(2 * j1 * i + 2 * k * j2)
        out.append(((i1 + i, j1 + j + j2, k + k2), x * factor))
    return tuple(out)


def multiply(x: UqElement, y: UqElement) -> UqElement:
    """Product of two normal-form elements, in normal form."""
    if x.mode != y.mode:
        raise TypeError(f"mode mismatch: {x.mode} vs {y.mode}")
    mode = x.mode
    acc: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            cab = ca * cb
            for key, c in _monomial_product(mode, a, b):
                term = cab * c
                acc[key] = acc[key] + term if key in acc else term
    return UqElement._raw(_clean(acc), mode)


def clear_cache() -> None:
    _f_times_e.cache_clear()
    _monomial_product.cache_clear()


# ---------------------------------------------------------------------------
# U_q(k) = Laurent polynomials in K

class UqKElement:
    """A Laurent polynomial ``sum c_j K^j``."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms: dict | None = None, mode: FieldMode = GENERIC):
        self.mode = mode
        self.terms = {j: mode.coerce(c) for j, c in (terms or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, UqKElement):
            return self.mode == other.mode and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _lift(self, other):
        if isinstance(other, UqKElement):
            return other
        if isinstance(other, _SCALAR_TYPES):
            return UqKElement({0: other}, self.mode)
        return None

    def __neg__(self):
        return UqKElement({j: -c for j, c in self.terms.items()}, self.mode)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for j, c in other.terms.items():
            acc[j] = acc[j] + c if j in acc else c
        return UqKElement(acc, self.mode)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc: dict = {}
        for j1, c1 in self.terms.items():
            for j2, c2 in other.terms.items():
                acc[j1 + j2] = acc.get(j1 + j2, self.mode.zero) + c1 * c2
        return UqKElement(acc, self.mode)

    __rmul__ = __mul__

    def to_uq(self) -> UqElement:
        return UqElement({(0, j, 0): c for j, c in self.terms.items()}, self.mode)

    def evaluate(self, value):
        """Substitute a nonzero scalar for ``K``."""
        value = self.mode.coerce(value)
        total = self.mode.zero
        for j, c in self.terms.items():
            total = total + c * value ** j
        return total

    def __str__(self):
        return str(self.to_uq())

    def __repr__(self):
        return f"UqKElement({str(self)!r}, mode={self.mode.tag})"


# ---------------------------------------------------------------------------
# Casimir elements and the center

def _q_minus_qinv_sq_inv(mode: FieldMode):
    d = mode.q - 1 / mode.q
    return 1 / (d * d)


def casimir_q_prime(mode: FieldMode = GENERIC) -> UqElement:
    """``EF + (q K^-1 + q^-1 K)/(q - q^-1)^2``."""
    q = mode.q
    s = _q_minus_qinv_sq_inv(mode)
    return UqElement({(1, 0, 1): 1, (0, -1, 0): q * s, (0, 1, 0): s / q}, mode)


def casimir_q(mode: FieldMode = GENERIC) -> UqElement:
    """``2EF + (2q K^-1 + 2q^-1 K - 2(q + q^-1))/(q - q^-1)^2``."""
    q = mode.q
    s = _q_minus_qinv_sq_inv(mode)
    return UqElement({(1, 0, 1): 2, (0, -1, 0): 2 * q * s, (0, 1, 0): 2 * s / q,
                      (0, 0, 0): -2 * (q + 1 / q) * s}, mode)


def casimir_k(mode: FieldMode = GENERIC) -> UqKElement:
    """The U_q(k) Casimir ``(q + q^-1)(K + K^-1 - 2)/(q - q^-1)^2``."""
    q = mode.q
    c = (q + 1 / q) * _q_minus_qinv_sq_inv(mode)
    return UqKElement({1: c, -1: c, 0: -2 * c}, mode)


def commutator(x: UqElement, y: UqElement) -> UqElement:
    return x * y - y * x


def is_central(z: UqElement) -> bool:
    """True iff ``z`` commutes with E, F and K."""
    mode = z.mode
    return all(commutator(z, g).is_zero() for g in (E(mode), F(mode), K(mode)))


def central_generators(mode: FieldMode) -> dict[str, UqElement]:
    """Named generators of the center: Cas_q, plus E^p, F^p, K^±p at roots of unity."""
    gens = {"Cas": casimir_q(mode)}
    if mode.p is not None:
        p = mode.p
        gens[f"E^{p}"] = UqElement.monomial(p, 0, 0, mode)
        gens[f"F^{p}"] = UqElement.monomial(0, 0, p, mode)
        gens[f"K^{p}"] = K(mode, p)
        gens[f"K^{-p}"] = K(mode, -p)
    return gens


# ---------------------------------------------------------------------------
# Harish-Chandra maps

def hc_mu(z: UqElement) -> UqKElement:
    """Projection onto U_q(k) along E U + U F: keep the terms with i = k = 0."""
    return UqKElement({j: c for (i, j, k), c in z.terms.items() if i == 0 and k == 0}, z.mode)


def hc_sigma(x: UqKElement) -> UqKElement:
    """The shift ``K^j -> q^j K^j``."""
    return UqKElement({j: c * x.mode.q_power(j) for j, c in x.terms.items()}, x.mode)


def hc_gamma(z: UqElement) -> UqKElement:
    if not is_central(z):
        raise NotCentral(f"{z} is not central")
    return hc_sigma(hc_mu(z))


# ---------------------------------------------------------------------------
# Hopf structure

class UqTensorSquare:
    """An element of U_q(sl2) ⊗ U_q(sl2) keyed by pairs of PBW monomials."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms: dict | None = None, mode: FieldMode = GENERIC):
        self.mode = mode
        self.terms = {key: mode.coerce(c) for key, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms, mode):
        obj = cls.__new__(cls)
        obj.terms, obj.mode = terms, mode
        return obj

    @classmethod
    def pure(cls, x: UqElement, y: UqElement) -> "UqTensorSquare":
        acc = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                acc[(a, b)] = ca * cb
        return cls._raw(_clean(acc), x.mode)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, UqTensorSquare):
            return self.terms == other.terms
        return NotImplemented

    def __neg__(self):
        return UqTensorSquare._raw({key: -c for key, c in self.terms.items()}, self.mode)

    def __add__(self, other):
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc[key] + c if key in acc else c
        return UqTensorSquare._raw(_clean(acc), self.mode)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        mode = self.mode
        acc: dict = {}
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                cab = ca * cb
                left = _monomial_product(mode, a1, b1)
                right = _monomial_product(mode, a2, b2)
                for k1, x in left:
                    for k2, y in right:
                        key = (k1, k2)
                        term = cab * x * y
                        acc[key] = acc[key] + term if key in acc else term
        return UqTensorSquare._raw(_clean(acc), mode)

    def map_left(self, f) -> "UqTensorSquare":
        """Apply a linear map ``U -> U`` to the first factor."""
        out = UqTensorSquare({}, self.mode)
        for (a, b), c in self.terms.items():
            out = out + UqTensorSquare.pure(f(UqElement.monomial(*a, self.mode)),
                                            UqElement.monomial(*b, self.mode, coeff=c))
        return out

    def contract(self) -> UqElement:
        """Multiply the two tensor factors together."""
        total = UqElement({}, self.mode)
        for (a, b), c in self.terms.items():
            total = total + multiply(UqElement.monomial(*a, self.mode, coeff=c),
                                     UqElement.monomial(*b, self.mode))
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{_coeff_prefix(c)}({render_monomial(a)})⊗({render_monomial(b)})"
                          for (a, b), c in sorted(self.terms.items()))


def _tensor_power(t: UqTensorSquare, n: int) -> UqTensorSquare:
    result = UqTensorSquare({((0, 0, 0), (0, 0, 0)): 1}, t.mode)
    for _ in range(n):
        result = result * t
    return result


@lru_cache(maxsize=4096)
def _coproduct_monomial(mode: FieldMode, key: Key) -> UqTensorSquare:
    i, j, k = key
    one_ = (0, 0, 0)
    dE = UqTensorSquare({((1, 0, 0), (0, 1, 0)): 1, (one_, (1, 0, 0)): 1}, mode)
    dF = UqTensorSquare({((0, 0, 1), one_): 1, ((0, -1, 0), (0, 0, 1)): 1}, mode)
    dK = UqTensorSquare({((0, j, 0), (0, j, 0)): 1}, mode)
    return _tensor_power(dE, i) * dK * _tensor_power(dF, k)


def coproduct(x: UqElement) -> UqTensorSquare:
    out = UqTensorSquare({}, x.mode)
    for key, c in x.terms.items():
        d = _coproduct_monomial(x.mode, key)
        out = out + UqTensorSquare._raw({k2: v * c for k2, v in d.terms.items()}, x.mode)
    return out


def counit(x: UqElement):
    total = x.mode.zero
    for (i, j, k), c in x.terms.items():
        if i == 0 and k == 0:
            total = total + c
    return total


def antipode(x: UqElement) -> UqElement:
    """The anti-automorphism with S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1."""
    mode = x.mode
    sE = UqElement({(1, -1, 0): -1}, mode)
    sF = UqElement({(0, 1, 1): -1}, mode)
    out = UqElement({}, mode)
    for (i, j, k), c in x.terms.items():
        out = out + (sF ** k) * K(mode, -j) * (sE ** i) * c
    return out


def _id_tensor_coproduct(t: UqTensorSquare, side: str) -> dict:
    # returns a dict keyed by triples of monomials
    acc: dict = {}
    for (a, b), c in t.terms.items():
        inner = _coproduct_monomial(t.mode, b if side == "right" else a)
        for (x, y), v in inner.terms.items():
            key = (a, x, y) if side == "right" else (x, y, b)
            term = c * v
            acc[key] = acc[key] + term if key in acc else term
    return {key: c for key, c in acc.items() if c}


def hopf_checks(mode: FieldMode, samples: Sequence[UqElement] | None = None) -> list[Verification]:
    """Coassociativity, counit and antipode laws on generators (and samples)."""
    gens = [("E", E(mode)), ("F", F(mode)), ("K", K(mode)), ("K^-1", K(mode, -1))]
    elements = gens + [("EF", E(mode) * F(mode))]
    if samples:
        elements += [(str(s), s) for s in samples]
    out = []
    tag = mode.tag
    for name, x in elements:
        d = coproduct(x)
        lhs = _id_tensor_coproduct(d, "left")
        rhs = _id_tensor_coproduct(d, "right")
        diff = {key: lhs.get(key, mode.zero) - rhs.get(key, mode.zero) for key in set(lhs) | set(rhs)}
        nonzero = {key: c for key, c in diff.items() if c}
        out.append(Verification(f"coassociativity({name})", tag, not nonzero,
                                "0" if not nonzero else f"{len(nonzero)} nonzero terms"))
        left_counit = UqElement({}, mode)
        right_counit = UqElement({}, mode)
        for (a, b), c in d.terms.items():
            left_counit = left_counit + UqElement.monomial(*b, mode, coeff=c * counit(UqElement.monomial(*a, mode)))
            right_counit = right_counit + UqElement.monomial(*a, mode, coeff=c * counit(UqElement.monomial(*b, mode)))
        out.append(check_equal(f"counit-left({name})", tag, left_counit, x))
        out.append(check_equal(f"counit-right({name})", tag, right_counit, x))
        unit = UqElement.scalar(counit(x), mode)
        out.append(check_equal(f"antipode-left({name})", tag, d.map_left(antipode).contract(), unit))
        right = UqElement({}, mode)
        for (a, b), c in d.terms.items():
            right = right + UqElement.monomial(*a, mode, coeff=c) * antipode(UqElement.monomial(*b, mode))
        out.append(check_equal(f"antipode-right({name})", tag, right, unit))
    return out


# ---------------------------------------------------------------------------
# text syntax

def uq_symbols(mode: FieldMode) -> dict:
    return {
        "q": mode.q,
        "E": E(mode),
        "F": F(mode),
        "K": K(mode),
        "Cas": casimir_q(mode),
        "Casp": casimir_q_prime(mode),
        "CasK": casimir_k(mode).to_uq(),
    }


def parse_uq(text: str, mode: FieldMode = GENERIC) -> UqElement:
    """Parse an expression such as ``2*E^2 K^-1 F + (q - q^-1) K`` or ``Cas^2``.

    Recognized names: ``q``, ``E``, ``F``, ``K``, ``Cas`` (normalized
    Casimir), ``Casp`` (unnormalized Casimir) and ``CasK`` (the U_q(k)
    Casimir).  ``K^-n`` is allowed; other negative powers are not.
    """
    from .parsing import evaluate

    value = evaluate(text, uq_symbols(mode), lambda n: UqElement.scalar(n, mode))
    if isinstance(value, _SCALAR_TYPES):
        value = UqElement.scalar(value, mode)
    if not isinstance(value, UqElement):
        raise ParseError(f"{text!r} does not denote an element of U_q(sl2)")
    return value


def random_element(rng, mode: FieldMode, max_degree: int = 4, n_terms: int = 3,
                   coeff_range: int = 3) -> UqElement:
    """A random element with small integer coefficients (testing helper)."""
    terms = {}
    for _ in range(n_terms):
        i = rng.randint(0, max_degree)
        k = rng.randint(0, max_degree - i)
        j = rng.randint(-2, 2)
        c = rng.randint(-coeff_range, coeff_range) or 1
        terms[(i, j, k)] = c
    return UqElement(terms, mode)


def sum_elements(xs: Iterable[UqElement], mode: FieldMode) -> UqElement:
    total = UqElement({}, mode)
    for x in xs:
        total = total + x
    return total
