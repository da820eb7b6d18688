"""The Clifford algebra C(p) on c(E0), c(F0), the map alpha, and the spin module.

C(p) is four-dimensional with ordered basis ``1, cE, cF, cEcF`` (indices
0..3) and relations ``cE^2 = cF^2 = 0``, ``cE cF + cF cE = 1``.  It is the
ordinary, undeformed Clifford algebra; ``K`` enters only through
``alpha(K) = q^-1 + (q - q^-1) cEcF``.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import CyclotomicNumber, FieldMode, RationalFunction, GENERIC
from .uq import UqKElement

BASIS_NAMES = ("1", "cE", "cF", "cEcF")
ONE, CE, CF, CECF = range(4)

# _TABLE[a][b] = coefficients of basis[a] * basis[b]
_TABLE = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 0)),
    ((0, 0, 1, 0), (1, 0, 0, -1), (0, 0, 0, 0), (0, 0, 1, 0)),
    ((0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 1)),
)
BASIS_PRODUCTS = tuple(
    tuple(tuple((idx, c) for idx, c in enumerate(row) if c) for row in rows) for rows in _TABLE
)

_SCALAR_TYPES = (int, Fraction, RationalFunction, CyclotomicNumber)


class CliffordElement:
    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs=(0, 0, 0, 0), mode: FieldMode = GENERIC):
        if len(coeffs) != 4:
            raise ValueError("a Clifford element has four coefficients")
        self.mode = mode
        self.coeffs = tuple(mode.coerce(c) for c in coeffs)

    @classmethod
    def basis(cls, index: int, mode: FieldMode = GENERIC) -> "CliffordElement":
        coeffs = [0, 0, 0, 0]
        coeffs[index] = 1
        return cls(coeffs, mode)

    @classmethod
    def scalar(cls, c, mode: FieldMode = GENERIC) -> "CliffordElement":
        return cls((c, 0, 0, 0), mode)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _lift(self, other):
        if isinstance(other, CliffordElement):
            return other
        if isinstance(other, _SCALAR_TYPES):
            return CliffordElement.scalar(other, self.mode)
        return None

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return CliffordElement(tuple(-c for c in self.coeffs), self.mode)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return CliffordElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.mode)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            c = self.mode.coerce(other)
            return CliffordElement(tuple(x * c for x in self.coeffs), self.mode)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return cl_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self * (1 / self.mode.coerce(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in general")
        result = CliffordElement.scalar(1, self.mode)
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        parts = []
        for name, c in zip(BASIS_NAMES, self.coeffs):
            if not c:
                continue
            text = c.render().rsplit(" @root", 1)[0]
            if name == "1":
                parts.append(f"({text})")
            elif c == 1:
                parts.append(name)
            else:
                parts.append(f"({text})*{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CliffordElement({str(self)!r}, mode={self.mode.tag})"


def cl_multiply(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    out = [x.mode.zero] * 4
    for a, ca in enumerate(x.coeffs):
        if not ca:
            continue
        for b, cb in enumerate(y.coeffs):
            if not cb:
                continue
            for idx, c in BASIS_PRODUCTS[a][b]:
                out[idx] = out[idx] + ca * cb * c
    return CliffordElement(out, x.mode)


def cl_commutator(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    return x * y - y * x


def c_e(mode: FieldMode = GENERIC) -> CliffordElement:
    return CliffordElement.basis(CE, mode)


def c_f(mode: FieldMode = GENERIC) -> CliffordElement:
    return CliffordElement.basis(CF, mode)


def alpha_k(mode: FieldMode = GENERIC, power: int = 1) -> CliffordElement:
    """``alpha(K)^power``; ``alpha(K^-1) = q - (q - q^-1) cEcF``."""
    q = mode.q
    if power >= 0:
        base = CliffordElement((1 / q, 0, 0, q - 1 / q), mode)
    else:
        base = CliffordElement((q, 0, 0, -(q - 1 / q)), mode)
    return base ** abs(power)


def alpha(x: UqKElement) -> CliffordElement:
    """Extend ``alpha`` linearly and multiplicatively to Laurent polynomials in K."""
    mode = x.mode
    out = CliffordElement((0, 0, 0, 0), mode)
    for j, c in x.terms.items():
        out = out + alpha_k(mode, j) * c
    return out


def alpha_h(mode: FieldMode = GENERIC) -> CliffordElement:
    """``alpha(H) = 2 cEcF - 1``."""
    return CliffordElement((-1, 0, 0, 2), mode)


# ---------------------------------------------------------------------------
# spin module S = C s_-1 + C s_1

class SpinVector:
    """Coefficients on the basis ``(s_-1, s_1)``."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs=(0, 0), mode: FieldMode = GENERIC):
        if len(coeffs) != 2:
            raise ValueError("a spin vector has two coefficients")
        self.mode = mode
        self.coeffs = tuple(mode.coerce(c) for c in coeffs)

    def __eq__(self, other):
        if isinstance(other, SpinVector):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return SpinVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.mode)

    def __mul__(self, c):
        c = self.mode.coerce(c)
        return SpinVector(tuple(x * c for x in self.coeffs), self.mode)

    __rmul__ = __mul__

    def __repr__(self):
        return f"SpinVector({self.coeffs[0]} s_-1 + {self.coeffs[1]} s_1)"


def s_minus(mode: FieldMode = GENERIC) -> SpinVector:
    return SpinVector((1, 0), mode)


def s_plus(mode: FieldMode = GENERIC) -> SpinVector:
    return SpinVector((0, 1), mode)


# columns: images of s_-1 and s_1 under each basis element
_SPIN_MATRICES = (
    ((1, 0), (0, 1)),   # 1
    ((0, 0), (1, 0)),   # cE: s_-1 -> s_1, s_1 -> 0
    ((0, 1), (0, 0)),   # cF: s_-1 -> 0,   s_1 -> s_-1
    ((0, 0), (0, 1)),   # cEcF: s_-1 -> 0, s_1 -> s_1
)


def spin_matrix(index: int) -> tuple:
    """Integer 2x2 matrix (rows, columns indexed by s_-1, s_1) of a basis element."""
    return _SPIN_MATRICES[index]


def spin_act(x: CliffordElement, v: SpinVector) -> SpinVector:
    out = [x.mode.zero, x.mode.zero]
    for idx, c in enumerate(x.coeffs):
        if not c:
            continue
        m = _SPIN_MATRICES[idx]
        for r in range(2):
            for s in range(2):
                if m[r][s]:
                    out[r] = out[r] + c * m[r][s] * v.coeffs[s]
    return SpinVector(out, x.mode)
