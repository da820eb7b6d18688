import cmath
import random

import pytest

from uqdirac.scalars import CyclotomicNumber, FieldMode, GENERIC, RationalFunction

# a generic-looking point for numerical evaluation of Q(q)
GENERIC_POINT = 0.83 + 0.41j

ROOT_MODES = [FieldMode(n) for n in (3, 4, 5, 6, 8)]
ALL_MODES = [GENERIC] + ROOT_MODES


def to_complex(x, point=GENERIC_POINT) -> complex:
    """Numerical value of an exact scalar; cyclotomic numbers use q = exp(2 pi i / p')."""
    if isinstance(x, CyclotomicNumber):
        z = cmath.exp(2j * cmath.pi / x.order)
        return sum(complex(float(c)) * z ** i for i, c in enumerate(x.residue))
    if isinstance(x, RationalFunction):
        def ev(p):
            return sum(complex(float(c)) * point ** (p.val + i) for i, c in enumerate(p.coeffs))
        return ev(x.num) / ev(x.den)
    return complex(x)


@pytest.fixture
def rng():
    return random.Random(20261015)


def mode_id(mode):
    return mode.tag


from hypothesis import settings  # noqa: E402

settings.register_profile("uqdirac", deadline=None, derandomize=True, max_examples=100)
settings.load_profile("uqdirac")


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in mod.CRITERIA:
        if key in mod.RESULTS:
            terminalreporter.write_line(mod.line(key))
