"""U_q(sl2) ⊗ C(p): the Dirac element, the diagonal embedding and Vogan's identity.

A :class:`TensorElement` is a dictionary from ``(pbw_key, clifford_index)``
to scalars.  The main entry points check, exactly, the identities

* ``D^2 = 1/2 Cas_q ⊗ 1 - delta(Cas_q(k))/(q + q^-1) + (q + q^-1 - 2)/(q - q^-1)^2``,
* ``(K ⊗ alpha(K)) D (K^-1 ⊗ alpha(K^-1)) = D``,
* ``z ⊗ 1 = zeta(z) + D a + a D`` with explicit witnesses ``a``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .clifford import BASIS_NAMES, BASIS_PRODUCTS, CECF, CE, CF, CliffordElement, alpha_k
from .errors import UnsupportedCentralElement
from .scalars import CyclotomicNumber, FieldMode, RationalFunction, GENERIC
from .uq import (UqElement, UqKElement, _clean, _coeff_prefix, _monomial_product,
                 casimir_k, casimir_q, central_generators, hc_gamma, render_monomial)
from .verification import Verification, check_equal

_SCALAR_TYPES = (int, Fraction, RationalFunction, CyclotomicNumber)


class TensorElement:
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
    def pure(cls, u: UqElement, c: CliffordElement) -> "TensorElement":
        """The simple tensor ``u ⊗ c``."""
        acc = {}
        for key, cu in u.terms.items():
            for idx, cc in enumerate(c.coeffs):
                if cc:
                    acc[(key, idx)] = cu * cc
        return cls._raw(_clean(acc), u.mode)

    @classmethod
    def scalar(cls, c, mode: FieldMode = GENERIC) -> "TensorElement":
        return cls({((0, 0, 0), 0): c}, mode)

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other):
        if isinstance(other, TensorElement):
            if other.mode != self.mode:
                raise TypeError(f"mode mismatch: {self.mode} vs {other.mode}")
            return other
        if isinstance(other, _SCALAR_TYPES):
            return TensorElement.scalar(other, self.mode)
        return None

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return TensorElement._raw({k: -c for k, c in self.terms.items()}, self.mode)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc[key] + c if key in acc else c
        return TensorElement._raw(_clean(acc), self.mode)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TensorElement":
        c = self.mode.coerce(c)
        return TensorElement._raw(_clean({k: v * c for k, v in self.terms.items()}), self.mode)

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return t_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        result = TensorElement.scalar(1, self.mode)
        for _ in range(n):
            result = result * self
        return result

    def components(self) -> dict[int, UqElement]:
        """Split as ``sum_idx u_idx ⊗ basis[idx]``."""
        parts: dict[int, dict] = {}
        for (key, idx), c in self.terms.items():
            parts.setdefault(idx, {})[key] = c
        return {idx: UqElement(t, self.mode) for idx, t in parts.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (key, idx) in sorted(self.terms, key=lambda t: (t[1], t[0])):
            c = self.terms[(key, idx)]
            pieces.append(f"{_coeff_prefix(c)}{render_monomial(key)}⊗{BASIS_NAMES[idx]}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"TensorElement({str(self)!r}, mode={self.mode.tag})"


def t_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    mode = x.mode
    acc: dict = {}
    for (a, ia), ca in x.terms.items():
        for (b, ib), cb in y.terms.items():
            cl = BASIS_PRODUCTS[ia][ib]
            if not cl:
                continue
            cab = ca * cb
            for key, cu in _monomial_product(mode, a, b):
                for idx, s in cl:
                    k = (key, idx)
                    term = cab * cu * s
                    acc[k] = acc[k] + term if k in acc else term
    return TensorElement._raw(_clean(acc), mode)


def tensor_one(u: UqElement) -> TensorElement:
    """``u ⊗ 1``."""
    return TensorElement.pure(u, CliffordElement.scalar(1, u.mode))


def dirac(mode: FieldMode = GENERIC) -> TensorElement:
    """``D = E ⊗ c(F0) + F ⊗ c(E0)``."""
    return TensorElement({((1, 0, 0), CF): 1, ((0, 0, 1), CE): 1}, mode)


def delta_k(mode: FieldMode = GENERIC, power: int = 1) -> TensorElement:
    """``delta(K)^power``; ``delta(K^-1)`` is the inverse of ``delta(K)``."""
    q = mode.q
    if power >= 0:
        base = TensorElement({((0, 1, 0), 0): 1 / q, ((0, 1, 0), CECF): q - 1 / q}, mode)
    else:
        base = TensorElement({((0, -1, 0), 0): q, ((0, -1, 0), CECF): -(q - 1 / q)}, mode)
    return base ** abs(power)


def delta(x: UqKElement) -> TensorElement:
    """The diagonal embedding ``(i ⊗ alpha) ∘ coproduct`` on U_q(k)."""
    out = TensorElement({}, x.mode)
    for j, c in x.terms.items():
        out = out + delta_k(x.mode, j).scale(c)
    return out


def zeta(z: UqElement) -> TensorElement:
    """``delta(gamma(z))`` for central ``z``."""
    return delta(hc_gamma(z))


def _q_consts(mode: FieldMode):
    q = mode.q
    s = q + 1 / q
    d = q - 1 / q
    return s, d * d


def specialize_tensor(x: TensorElement, mode: FieldMode) -> TensorElement:
    """Map the coefficients of a generic element into ``mode``."""
    if x.mode == mode:
        return x
    return TensorElement({k: mode.coerce(c) for k, c in x.terms.items()}, mode)


def d_squared_rhs(mode: FieldMode = GENERIC, cas_coefficient=Fraction(1, 2)) -> TensorElement:
    """Right-hand side of the D^2 formula; ``cas_coefficient`` is normally 1/2.

    Built over Q(q) and then specialized: at q = i the factor 1/(q + q^-1)
    only makes sense after it cancels against delta(Cas_q(k)).
    """
    s, d2 = _q_consts(GENERIC)
    rhs = (tensor_one(casimir_q(GENERIC)).scale(cas_coefficient)
           - delta(casimir_k(GENERIC)).scale(1 / s)
           + TensorElement.scalar((s - 2) / d2, GENERIC))
    return specialize_tensor(rhs, mode)


def verify_d_squared(mode: FieldMode = GENERIC, cas_coefficient=Fraction(1, 2)) -> Verification:
    d = dirac(mode)
    return check_equal("D^2", mode, d * d, d_squared_rhs(mode, cas_coefficient))


def k_conjugate(x: TensorElement) -> TensorElement:
    """``(K ⊗ alpha(K)) x (K^-1 ⊗ alpha(K^-1))``."""
    mode = x.mode
    left = TensorElement.pure(UqElement.monomial(0, 1, 0, mode), alpha_k(mode, 1))
    right = TensorElement.pure(UqElement.monomial(0, -1, 0, mode), alpha_k(mode, -1))
    return left * x * right


def verify_k_invariance(x: TensorElement) -> bool:
    return k_conjugate(x) == x


# ---------------------------------------------------------------------------
# Vogan's identity z ⊗ 1 = zeta(z) + D a + a D

def vogan_witness(z: UqElement) -> tuple[str, TensorElement]:
    """Return ``(name, a)`` for a recognised central generator ``z``.

    Cas_q uses ``a = D``; at a root of unity ``E^p`` uses ``E^(p-1) ⊗ c(E0)``,
    ``F^p`` uses ``F^(p-1) ⊗ c(F0)`` and ``K^(±p)`` use ``a = 0``.
    """
    mode = z.mode
    for name, gen in central_generators(mode).items():
        if z != gen:
            continue
        if name == "Cas":
            return name, dirac(mode)
        p = mode.p
        if name.startswith("E"):
            return name, TensorElement({((p - 1, 0, 0), CE): 1}, mode)
        if name.startswith("F"):
            return name, TensorElement({((0, 0, p - 1), CF): 1}, mode)
        return name, TensorElement({}, mode)
    raise UnsupportedCentralElement(f"no known witness for {z} in mode {mode.tag}")


def combine_witnesses(zeta1: TensorElement, a1: TensorElement,
                      zeta2: TensorElement, a2: TensorElement) -> TensorElement:
    """Witness for ``z1 z2`` from witnesses of ``z1`` and ``z2``.

    With ``X1 = D a1 + a1 D`` (which commutes with D) the product is
    ``zeta1 zeta2 + D b + b D`` for ``b = zeta1 a2 + zeta2 a1 + X1 a2``.
    The shorter ``a1 a2`` in place of ``X1 a2`` does not work in general.
    """
    d = dirac(zeta1.mode)
    return zeta1 * a2 + zeta2 * a1 + (d * a1 + a1 * d) * a2


def verify_vogan(z: UqElement | Sequence[UqElement]) -> tuple[TensorElement, Verification]:
    """Build the witness ``a`` and check ``z ⊗ 1 = zeta(z) + D a + a D``.

    ``z`` may be a single recognised generator or a sequence of generators
    whose product is checked; witnesses of products are assembled factor by
    factor.  The returned record fails if either the identity or the
    K-invariance of ``a`` fails.
    """
    factors = [z] if isinstance(z, UqElement) else list(z)
    if not factors:
        raise UnsupportedCentralElement("empty product")
    mode = factors[0].mode
    names = []
    product = None
    zeta_acc = None
    a_acc = None
    for factor in factors:
        name, a = vogan_witness(factor)
        names.append(name)
        zf = zeta(factor)
        if product is None:
            product, zeta_acc, a_acc = factor, zf, a
        else:
            a_acc = combine_witnesses(zeta_acc, a_acc, zf, a)
            zeta_acc = zeta_acc * zf
            product = product * factor
    d = dirac(mode)
    rhs = zeta_acc + d * a_acc + a_acc * d
    label = "*".join(names)
    record = check_equal(f"vogan({label})", mode, tensor_one(product), rhs)
    if record.ok and not verify_k_invariance(a_acc):
        record = Verification(record.name, record.mode, False, "witness is not K-invariant")
    return a_acc, record


def verify_zeta_multiplicative(z1: UqElement, z2: UqElement) -> Verification:
    return check_equal("zeta-multiplicative", z1.mode, zeta(z1 * z2), zeta(z1) * zeta(z2))


def verification_suite(mode: FieldMode) -> list[Verification]:
    """D^2, K-invariance of D, and Vogan's identity on all supported central elements."""
    from .uq import hopf_checks

    records = [verify_d_squared(mode)]
    d = dirac(mode)
    records.append(Verification("K-invariance(D)", mode.tag, verify_k_invariance(d),
                                "0" if verify_k_invariance(d) else str(k_conjugate(d) - d)))
    gens = central_generators(mode)
    for gen in gens.values():
        records.append(verify_vogan(gen)[1])
    records.append(verify_vogan([gens["Cas"], gens["Cas"]])[1])
    if mode.p is not None:
        p = mode.p
        records.append(verify_vogan([gens["Cas"], gens[f"E^{p}"]])[1])
        records.append(verify_vogan([gens[f"E^{p}"], gens[f"F^{p}"]])[1])
    records.extend(hopf_checks(mode))
    return records
