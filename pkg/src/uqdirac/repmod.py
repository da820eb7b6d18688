"""Module families of U_q(sl2) as exact matrices.

``make_T_omega_k``
    The (2k+1)-dimensional modules, written in a rescaled basis where
    ``E v_m = [k-m] v_(m+1)`` and ``F v_m = omega [k+m] v_(m-1)``.  The usual
    presentation uses ``sqrt([k-m][k+m+1])`` on both sides; the products of
    consecutive E/F coefficients, the K-weights and all kernels and images
    are unchanged, and every entry stays in the base field.
``make_T_abl``
    The p-dimensional modules at a root of unity (cyclic, semicyclic, and the
    reducible indecomposable ``a = b = 0`` cases).
``make_verma``
    A finite window ``t = 0..N`` of the Verma module, basis ``v_(lambda-2t)``.

Descriptors use the text form ``Tok omega=+1 twok=4``,
``Tabl a=<scalar> b=<scalar> lambda=<scalar>`` and
``verma lambda=<int> window=<int>`` (see :func:`parse_descriptor`).
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass

from .errors import InvalidParameter, ParseError
from .linalg import ExactMatrix
from .scalars import FieldMode, GENERIC, q_integer
from .uq import UqElement, scalar_text


@dataclass(frozen=True)
class ModuleDescriptor:
    family: str
    params: tuple  # ((name, value), ...)

    def get(self, name):
        return dict(self.params)[name]

    def __str__(self):
        parts = [self.family]
        for name, value in self.params:
            if isinstance(value, int):
                text = f"{value:+d}" if name == "omega" else str(value)
            else:
                text = scalar_text(value)
                if " " in text:
                    text = f'"{text}"'
            parts.append(f"{name}={text}")
        return " ".join(parts)


def _half(twice: int) -> str:
    return str(twice // 2) if twice % 2 == 0 else f"{twice}/2"


def vector_label(index_text: str) -> str:
    return f"v_{{{index_text}}}"


class FiniteModule:
    """Generator matrices on a finite basis, with the family descriptor.

    ``E``, ``F``, ``K``, ``Kinv`` act on column vectors in the basis
    ``labels``.  The relations are checked on construction unless
    ``check=False``.
    """

    def __init__(self, labels, E, F, K, Kinv, mode: FieldMode, descriptor: ModuleDescriptor,
                 check: bool = True):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.E, self.F, self.K, self.Kinv = E, F, K, Kinv
        self.mode = mode
        self.descriptor = descriptor
        for m in (E, F, K, Kinv):
            if m.shape != (self.dim, self.dim):
                raise InvalidParameter("generator matrix has the wrong shape")
        if check and not check_relations(self):
            from .errors import RelationCheckFailed
            raise RelationCheckFailed(f"{descriptor} does not satisfy the defining relations")

    def replace(self, **changes) -> "FiniteModule":
        """A copy with some generator matrices replaced and no relation check."""
        kw = dict(labels=self.labels, E=self.E, F=self.F, K=self.K, Kinv=self.Kinv,
                  mode=self.mode, descriptor=self.descriptor)
        kw.update(changes)
        return FiniteModule(check=False, **kw)

    def k_power(self, j: int) -> ExactMatrix:
        return self.K ** j if j >= 0 else self.Kinv ** (-j)

    def act(self, x: UqElement) -> ExactMatrix:
        """Matrix of a U_q(sl2) element."""
        out = ExactMatrix.zeros(self.dim, self.dim, self.mode)
        cache: dict = {}

        def power(name, mat, n):
            if (name, n) not in cache:
                cache[(name, n)] = mat ** n if n >= 0 else self.Kinv ** (-n)
            return cache[(name, n)]

        for (i, j, k), c in x.terms.items():
            term = power("E", self.E, i) @ power("K", self.K, j) @ power("F", self.F, k)
            out = out + term.scale(c)
        return out

    def __repr__(self):
        return f"FiniteModule({self.descriptor}, dim={self.dim}, mode={self.mode.tag})"


def check_relations(m) -> bool:
    """Exact check of the defining relations on a module or weight window."""
    if isinstance(m, GradedWindowModule):
        return _check_window(m)
    mode = m.mode
    q = mode.q
    n = m.dim
    ident = ExactMatrix.identity(n, mode)
    if m.K @ m.Kinv != ident or m.Kinv @ m.K != ident:
        return False
    if m.K @ m.E != (m.E @ m.K).scale(q * q):
        return False
    if m.K @ m.F != (m.F @ m.K).scale(1 / (q * q)):
        return False
    return m.E @ m.F - m.F @ m.E == (m.K - m.Kinv).scale(1 / (q - 1 / q))


# ---------------------------------------------------------------------------
# the (2k+1)-dimensional modules

def make_T_omega_k(omega: int, twok: int, mode: FieldMode = GENERIC) -> FiniteModule:
    """``T_(omega,k)`` with ``k = twok/2``; basis ``v_-k, ..., v_k``."""
    if omega not in (1, -1):
        raise InvalidParameter("omega must be +1 or -1")
    if twok < 0:
        raise InvalidParameter("twok must be non-negative")
    n = twok + 1
    ms = list(range(-twok, twok + 1, 2))  # values of 2m
    E = ExactMatrix.zeros(n, n, mode)
    F = ExactMatrix.zeros(n, n, mode)
    kdiag, kinv = [], []
    for idx, m2 in enumerate(ms):
        if idx + 1 < n:
            E.rows[idx + 1][idx] = q_integer((twok - m2) // 2, mode)
        if idx > 0:
            F.rows[idx - 1][idx] = omega * q_integer((twok + m2) // 2, mode)
        kdiag.append(omega * mode.q_power(m2))
        kinv.append(omega * mode.q_power(-m2))
    labels = [vector_label(_half(m2)) for m2 in ms]
    desc = ModuleDescriptor("Tok", (("omega", omega), ("twok", twok)))
    return FiniteModule(labels, E, F, ExactMatrix.diagonal(kdiag, mode),
                        ExactMatrix.diagonal(kinv, mode), mode, desc)


# ---------------------------------------------------------------------------
# the p-dimensional modules at a root of unity

def tabl_e_coefficient(m: int, a, b, lam, mode: FieldMode):
    """``ab + [m](lam q^(1-m) - lam^-1 q^(m-1))/(q - q^-1)``."""
    q = mode.q
    return a * b + q_integer(m, mode) * (lam * mode.q_power(1 - m)
                                         - mode.q_power(m - 1) / lam) / (q - 1 / q)


def make_T_abl(a, b, lam, mode: FieldMode) -> FiniteModule:
    """``T_(a,b,lambda)`` on ``v_0, ..., v_(p-1)``."""
    if mode.is_generic:
        raise InvalidParameter("T_(a,b,lambda) is only defined at a root of unity")
    a, b, lam = mode.coerce(a), mode.coerce(b), mode.coerce(lam)
    if not lam:
        raise InvalidParameter("lambda must be nonzero")
    p = mode.p
    E = ExactMatrix.zeros(p, p, mode)
    F = ExactMatrix.zeros(p, p, mode)
    E.rows[p - 1][0] = a
    for m in range(1, p):
        E.rows[m - 1][m] = tabl_e_coefficient(m, a, b, lam, mode)
    for m in range(p - 1):
        F.rows[m + 1][m] = mode.one
    F.rows[0][p - 1] = b
    kdiag = [lam * mode.q_power(-2 * m) for m in range(p)]
    K = ExactMatrix.diagonal(kdiag, mode)
    Kinv = ExactMatrix.diagonal([1 / x for x in kdiag], mode)
    labels = [vector_label(str(m)) for m in range(p)]
    desc = ModuleDescriptor("Tabl", (("a", a), ("b", b), ("lambda", lam)))
    return FiniteModule(labels, E, F, K, Kinv, mode, desc)


def module_class(m: FiniteModule) -> str:
    """``finite``, ``cyclic``, ``semicyclic-highest``, ``semicyclic-lowest`` or ``nilpotent``."""
    if m.descriptor.family == "Tok":
        return "finite"
    a, b = m.descriptor.get("a"), m.descriptor.get("b")
    if a and b:
        return "cyclic"
    if b:
        return "semicyclic-highest"
    if a:
        return "semicyclic-lowest"
    return "nilpotent"


def is_irreducible(module: FiniteModule) -> tuple[bool, str]:
    """Irreducibility criterion for the family; the reason names the failing condition."""
    desc, mode = module.descriptor, module.mode
    if desc.family == "Tok":
        twok = desc.get("twok")
        if mode.is_generic:
            return True, "generic q: every T_(omega,k) is irreducible"
        p = mode.p
        if twok < p:
            return True, f"2k = {twok} < p = {p}"
        return False, f"2k = {twok} >= p = {p}"
    if desc.family != "Tabl":
        raise InvalidParameter(f"no irreducibility criterion for {desc.family}")
    a, b, lam = desc.get("a"), desc.get("b"), desc.get("lambda")
    p = mode.p
    q = mode.q
    if not a and not b:
        for m in range(p - 1):
            for sign in (1, -1):
                if lam == sign * mode.q_power(m):
                    return False, f"lambda = {'+' if sign > 0 else '-'}q^{m} with m = {m} <= p-2 = {p - 2}"
        return True, f"lambda != ±q^m for m in 0..{p - 2}"
    if a and b:
        for m in range(p):
            if not tabl_e_coefficient(m, a, b, lam, mode):
                return False, f"ab + [m](lambda q^(1-m) - lambda^-1 q^(m-1))/(q - q^-1) = 0 at m = {m}"
        return True, f"ab + [m](...) != 0 for all m in 0..{p - 1}"
    lam_p = lam ** p
    if lam_p == 1 or lam_p == -1:
        return False, f"lambda^p = {scalar_text(lam_p)} = ±1"
    return True, "lambda^p != ±1"


# ---------------------------------------------------------------------------
# Verma modules on a weight window

class GradedWindowModule:
    """Weight window ``t = 0..N`` of a module with one-dimensional weight spaces.

    ``e_coeffs[t]`` is the coefficient of ``E v_t = e v_(t-1)`` (``e_coeffs[0]``
    is always zero) and ``f_coeffs[t]`` the coefficient of
    ``F v_t = f v_(t+1)``.  ``F v_N`` leaves the window, so relations and the
    Casimir are only checked on the interior ``t < N``.
    """

    def __init__(self, lam: int, window: int, e_coeffs, f_coeffs, mode: FieldMode,
                 descriptor: ModuleDescriptor):
        self.lam = lam
        self.window = window
        self.e_coeffs = tuple(e_coeffs)
        self.f_coeffs = tuple(f_coeffs)
        self.mode = mode
        self.descriptor = descriptor
        if len(self.e_coeffs) != window + 1 or len(self.f_coeffs) != window + 1:
            raise InvalidParameter("coefficient lists do not match the window")

    def weight(self, t: int) -> int:
        """Exponent of the K-eigenvalue on ``v_t``."""
        return self.lam - 2 * t

    def k_eigenvalue(self, t: int):
        return self.mode.q_power(self.weight(t))

    def label(self, t: int) -> str:
        return vector_label(str(self.weight(t)))

    def e_coeff(self, t: int):
        return self.e_coeffs[t]

    def f_coeff(self, t: int):
        return self.f_coeffs[t]

    def replace(self, e_coeffs=None, f_coeffs=None) -> "GradedWindowModule":
        return GradedWindowModule(self.lam, self.window,
                                  self.e_coeffs if e_coeffs is None else e_coeffs,
                                  self.f_coeffs if f_coeffs is None else f_coeffs,
                                  self.mode, self.descriptor)

    def casimir_on(self, t: int):
        """Eigenvalue of Cas_q on ``v_t`` for ``t < N`` (uses E v_(t+1))."""
        mode = self.mode
        q = mode.q
        mu = self.k_eigenvalue(t)
        ef = self.f_coeffs[t] * self.e_coeffs[t + 1]
        d = q - 1 / q
        return 2 * ef + (2 * q / mu + 2 * mu / q - 2 * (q + 1 / q)) / (d * d)

    def __repr__(self):
        return f"GradedWindowModule({self.descriptor}, mode={self.mode.tag})"


def default_window(mode: FieldMode) -> int:
    return 20 if mode.is_generic else 3 * mode.order + 2


def make_verma(lam: int, window: int | None = None, mode: FieldMode = GENERIC) -> GradedWindowModule:
    """``F v_(lam-2t) = [t+1] v_(lam-2t-2)``, ``E v_(lam-2t) = [lam-t+1] v_(lam-2t+2)``, ``E v_lam = 0``."""
    if window is None:
        window = default_window(mode)
    if window < 2:
        raise InvalidParameter("window must be at least 2")
    if not isinstance(lam, int):
        raise InvalidParameter("Verma highest weight must be an integer")
    e = [mode.zero] + [q_integer(lam - t + 1, mode) for t in range(1, window + 1)]
    f = [q_integer(t + 1, mode) for t in range(window + 1)]
    desc = ModuleDescriptor("verma", (("lambda", lam), ("window", window)))
    return GradedWindowModule(lam, window, e, f, mode, desc)


def _check_window(m: GradedWindowModule) -> bool:
    mode = m.mode
    q = mode.q
    # weights are automatic from the indexing; only [E, F] needs checking
    for t in range(m.window):
        comm = m.f_coeffs[t] * m.e_coeffs[t + 1] - (m.e_coeffs[t] * m.f_coeffs[t - 1] if t else 0)
        mu = m.k_eigenvalue(t)
        if comm != (mu - 1 / mu) / (q - 1 / q):
            return False
    return True


# ---------------------------------------------------------------------------
# descriptor text

def parse_descriptor(text: str, mode: FieldMode):
    """Build a module from ``Tok ...``, ``Tabl ...`` or ``verma ...`` text."""
    try:
        words = shlex.split(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if not words:
        raise ParseError("empty module descriptor")
    family, rest = words[0], words[1:]
    params = {}
    for word in rest:
        if "=" not in word:
            raise ParseError(f"expected name=value, got {word!r}")
        name, value = word.split("=", 1)
        params[name.strip()] = value.strip()

    def need(*names):
        missing = [n for n in names if n not in params]
        extra = [n for n in params if n not in names]
        if missing or extra:
            raise ParseError(f"{family} needs exactly {', '.join(names)}")

    def as_int(name):
        try:
            return int(params[name])
        except ValueError as exc:
            raise ParseError(f"{name} must be an integer") from exc

    if family == "Tok":
        need("omega", "twok")
        omega = as_int("omega")
        if omega not in (1, -1):
            raise ParseError("omega must be +1 or -1")
        twok = as_int("twok")
        if twok < 0:
            raise ParseError("twok must be non-negative")
        return make_T_omega_k(omega, twok, mode)
    if family == "Tabl":
        need("a", "b", "lambda")
        if mode.is_generic:
            raise ParseError("Tabl modules need a root-of-unity mode")
        a, b, lam = (mode.parse(params[n]) for n in ("a", "b", "lambda"))
        if not lam:
            raise ParseError("lambda must be nonzero")
        return make_T_abl(a, b, lam, mode)
    if family == "verma":
        allowed = ("lambda", "window")
        if "lambda" not in params or any(n not in allowed for n in params):
            raise ParseError("verma needs lambda and optionally window")
        lam = as_int("lambda")
        window = as_int("window") if "window" in params else None
        if window is not None and window < 2:
            raise ParseError("window must be at least 2")
        return make_verma(lam, window, mode)
    raise ParseError(f"unknown module family {family!r}")


def is_monomial(x, mode: FieldMode) -> bool:
    """True when ``x = ±q^j`` for some j."""
    if mode.is_generic:
        terms = x.num.to_dict() if x.is_laurent() else {}
        return len(terms) == 1 and abs(next(iter(terms.values()))) == 1
    return any(x == s * mode.q_power(j) for j in range(mode.order) for s in (1, -1))


__all__ = [
    "FiniteModule", "GradedWindowModule", "ModuleDescriptor", "check_relations",
    "default_window", "is_irreducible", "make_T_abl", "make_T_omega_k", "make_verma",
    "is_monomial", "module_class", "parse_descriptor", "tabl_e_coefficient",
]
