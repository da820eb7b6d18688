import numpy as np
import pytest
from hypothesis import given, strategies as st

from uqdirac.cohomology import (DiracCohomologyReport, SPIN_MINUS, casimir_scalar, dirac_cohomology,
                                euler_count, exact_classes, infinitesimal_character_check,
                                tensor_action_matrix)
from uqdirac.errors import DimensionMismatch, NotInfinitesimalCharacter, RelationCheckFailed
from uqdirac.linalg import ExactMatrix, image, kernel, quotient_basis
from uqdirac.repmod import FiniteModule, make_T_abl, make_T_omega_k, make_verma
from uqdirac.scalars import FieldMode, GENERIC
from uqdirac.tensoralg import d_squared_rhs, delta_k, dirac
from uqdirac.uq import casimir_q, hc_gamma

from conftest import ALL_MODES, ROOT_MODES, to_complex
from strategies import nonzero_scalars, scalars

q = GENERIC.q


# ---------------------------------------------------------------------------
# an independent numerical oracle: ranks of complex matrices

def numeric(mat: ExactMatrix) -> np.ndarray:
    return np.array([[to_complex(x) for x in row] for row in mat.rows], dtype=complex).reshape(mat.shape)


def oracle_dims(module) -> tuple[int, int]:
    e, f = numeric(module.E), numeric(module.F)
    n = module.dim

    def rank(a):
        return int(np.linalg.matrix_rank(a, tol=1e-8)) if a.size else 0

    s_plus = (n - rank(e)) - (rank(f) - rank(e @ f))
    s_minus = (n - rank(f)) - (rank(e) - rank(f @ e))
    return s_minus, s_plus


@st.composite
def small_modules(draw):
    """Random modules of dimension at most 6."""
    if draw(st.booleans()):
        mode = draw(st.sampled_from(ALL_MODES))
        return make_T_omega_k(draw(st.sampled_from([1, -1])), draw(st.integers(0, 5)), mode)
    mode = draw(st.sampled_from(ROOT_MODES))
    zero = mode.zero
    a = draw(st.one_of(st.just(zero), scalars(mode, max_len=2)))
    b = draw(st.one_of(st.just(zero), scalars(mode, max_len=2)))
    special = [s * mode.q_power(m) for m in range(mode.order) for s in (1, -1)]
    lam = draw(st.one_of(st.sampled_from(special), nonzero_scalars(mode, max_len=3)))
    return make_T_abl(a, b, lam, mode)


@given(small_modules())
def test_brute_force_oracle_agrees(module):
    report = dirac_cohomology(module)
    assert report.dims == oracle_dims(module)


@given(small_modules())
def test_euler_count_matches_total(module):
    assert euler_count(module) == dirac_cohomology(module).totalDim


# ---------------------------------------------------------------------------
# linear algebra

def test_kernel_and_image_of_t_omega_1():
    m = make_T_omega_k(1, 2)
    one, zero = GENERIC.one, GENERIC.zero
    assert kernel(m.F) == [(one, zero, zero)]
    im = image(m.E)
    assert len(im) == 2 and all(not v[0] for v in im)
    assert len(kernel(ExactMatrix.zeros(2, 2))) == 2


def test_quotient_prefers_basis_vectors():
    one, zero = GENERIC.one, GENERIC.zero
    space = [(one, one, zero), (zero, one, zero)]
    sub = [(one, one, zero)]
    reps = quotient_basis(sub, space, GENERIC, 3)
    assert reps == [(one, zero, zero)]


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        ExactMatrix.identity(2) @ ExactMatrix.identity(3)


# ---------------------------------------------------------------------------
# cohomology of the module families

@pytest.mark.parametrize("omega", [1, -1])
def test_t_omega_k_generic(omega):
    for twok in range(0, 7):
        report = dirac_cohomology(make_T_omega_k(omega, twok))
        k = twok / 2
        label = str(int(k)) if twok % 2 == 0 else f"{twok}/2"
        neg = "-" + label if twok else "0"
        assert [c.vector for c in report.sMinus] == [f"v_{{{neg}}}"]
        assert [c.vector for c in report.sPlus] == [f"v_{{{label}}}"]
        assert report.sMinus[0].eigenvalue == str(omega * q ** (-twok - 1))
        assert report.sPlus[0].eigenvalue == str(omega * q ** (twok + 1))


def test_t_001_at_cube_root():
    report = dirac_cohomology(make_T_abl(0, 0, 1, FieldMode(3)))
    assert [c.vector for c in report.sMinus] == ["v_{2}"]
    assert [c.vector for c in report.sPlus] == ["v_{0}"]
    assert report.sMinus[0].eigenvalue == report.sPlus[0].eigenvalue == "q"
    assert not report.notes


def test_nilpotent_family_eigenvalue_is_lambda_q():
    mode = FieldMode(5)
    lam = mode.coerce(2)
    m = make_T_abl(0, 0, lam, mode)
    classes = exact_classes(m)
    assert [c.eigenvalue for c in classes] == [lam * mode.q, lam * mode.q]
    report = dirac_cohomology(m)
    assert any("lambda factor" in n for n in report.notes)


def test_cyclic_module_has_zero_cohomology():
    mode = FieldMode(5)
    report = dirac_cohomology(make_T_abl(1, 1, mode.q, mode))
    assert report.totalDim == 0


def test_semicyclic_modules_compute_to_zero():
    # F (resp. E) is invertible, so its image is everything
    mode = FieldMode(5)
    for a, b in ((0, 1), (1, 0)):
        report = dirac_cohomology(make_T_abl(a, b, 2, mode))
        assert report.totalDim == 0
        assert any("invertible" in n for n in report.notes)


def test_verma_examples_at_cube_root():
    r3 = FieldMode(3)
    v0 = dirac_cohomology(make_verma(0, 20, r3))
    assert [c.vector for c in v0.sPlus] == ["v_{0}"] and not v0.sMinus
    assert v0.sPlus[0].eigenvalue == "q"
    assert not v0.is_infinite
    v2 = dirac_cohomology(make_verma(2, 20, r3))
    assert [c.vector for c in v2.sPlus] == [f"v_{{{2 - 6 * i}}}" for i in range(7)]
    assert [c.vector for c in v2.sMinus] == [f"v_{{{-2 - 6 * i}}}" for i in range(6)]
    assert v2.infiniteHint["period"] == 6
    assert v2.certifiedWindow["sMinus"] == [0, 19]


def test_verma_zero_kernel_of_f():
    # Ker F is spanned by v_(-4-6i) for lambda = 0 at a cube root of unity
    v = make_verma(0, 20, FieldMode(3))
    kernel_weights = [v.weight(t) for t in range(v.window + 1) if not v.f_coeff(t)]
    assert kernel_weights == [-4 - 6 * i for i in range(len(kernel_weights))]
    # Im E and Im F cover the same weight spaces inside the window
    im_e = {v.weight(t - 1) for t in range(1, v.window + 1) if v.e_coeff(t)}
    im_f = {v.weight(t + 1) for t in range(v.window) if v.f_coeff(t)}
    assert im_e & set(v.weight(t) for t in range(v.window)) == im_f & set(v.weight(t) for t in range(v.window))


@pytest.mark.parametrize("lam", [-3, -2, -1, 5, 6, 7, 8])
def test_generic_verma(lam):
    report = dirac_cohomology(make_verma(lam, 20))
    assert [c.vector for c in report.sPlus] == [f"v_{{{lam}}}"] and not report.sMinus
    assert report.sPlus[0].eigenvalue == str(q ** (lam + 1))


# ---------------------------------------------------------------------------
# module-level identities

@given(small_modules())
def test_d_squared_and_delta_k_on_modules(module):
    mode = module.mode
    d = tensor_action_matrix(dirac(mode), module)
    assert d @ d == tensor_action_matrix(d_squared_rhs(mode), module)
    dk = tensor_action_matrix(delta_k(mode), module)
    for c in exact_classes(module):
        vec = [mode.zero] * (2 * module.dim)
        for i, x in enumerate(c.coords):
            vec[2 * i + c.spin] = x
        assert all(not x for x in d.apply(vec))
        assert list(dk.apply(vec)) == [c.eigenvalue * x for x in vec]
        twist = 1 / mode.q if c.spin == SPIN_MINUS else mode.q
        assert c.eigenvalue == twist * c.k_eigenvalue


def test_infinitesimal_character_t_omega_k():
    d = q - 1 / q
    for omega in (1, -1):
        for twok in range(0, 5):
            result = infinitesimal_character_check(make_T_omega_k(omega, twok))
            expected = (omega * (q ** (twok + 1) + q ** (-twok - 1)) - (q + 1 / q)) * 2 / (d * d)
            assert result.ok and result.casimir == str(expected)
            assert len(result.checks) == 2
    trivial = infinitesimal_character_check(make_T_omega_k(1, 0))
    assert trivial.casimir == "0" and trivial.checks[1][0] == "q"


def test_infinitesimal_character_semicyclic_at_lambda_q():
    mode = FieldMode(5)
    lam = mode.coerce(2)
    m = make_T_abl(0, 1, lam, mode)
    scalar = casimir_scalar(m)
    assert hc_gamma(casimir_q(mode)).evaluate(lam * mode.q) == scalar


def direct_sum(m1, m2):
    def block(a, b):
        n1, n2 = a.nrows, b.nrows
        rows = [list(r) + [GENERIC.zero] * n2 for r in a.rows]
        rows += [[GENERIC.zero] * n1 + list(r) for r in b.rows]
        return ExactMatrix(rows, GENERIC)
    return FiniteModule(m1.labels + m2.labels, block(m1.E, m2.E), block(m1.F, m2.F),
                        block(m1.K, m2.K), block(m1.Kinv, m2.Kinv), GENERIC, m1.descriptor)


def test_not_infinitesimal_character():
    m = direct_sum(make_T_omega_k(1, 0), make_T_omega_k(1, 2))
    assert dirac_cohomology(m).dims == (2, 2)
    with pytest.raises(NotInfinitesimalCharacter):
        infinitesimal_character_check(m)


def test_relation_failure_is_reported():
    m = make_T_omega_k(1, 2)
    bad = m.replace(E=m.E.with_entry(1, 0, 7))
    with pytest.raises(RelationCheckFailed):
        dirac_cohomology(bad)


@pytest.mark.parametrize("module", [
    make_T_omega_k(1, 4), make_T_abl(0, 0, 2, FieldMode(5)), make_verma(2, 20, FieldMode(3)),
])
def test_report_json_round_trip(module):
    report = dirac_cohomology(module)
    assert DiracCohomologyReport.from_json(report.to_json()) == report
    assert report.to_dict()["schemaVersion"] == 1
    assert "delta(K)-eigenvalue" in report.to_table()
