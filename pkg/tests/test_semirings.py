"""Scalar semiring instances: closure, inverses, order, axioms, counting."""

import math
import random

import pytest
from hypothesis import given, strategies as st

import semipath as sp
from semipath import NEG_INF, POS_INF

NN = sp.get_semiring("nonneg-real")
MP = sp.get_semiring("max-plus")
MPC = sp.get_semiring("max-plus-complete")
MM = sp.get_semiring("max-min")
BOOL = sp.get_semiring("boolean")

ALL = [NN, MP, MPC, MM, BOOL]


class BrokenMul(sp.Semiring):
    """Negative control: multiplication replaced by subtraction."""

    name = "broken-mul"
    zero = 0
    one = 0

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a - b

    def closure(self, a):
        return None

    def mul_inverse(self, a):
        return None

    def contains(self, v):
        return isinstance(v, int)

    def sample(self, rng):
        return rng.randint(-5, 5)


# -- closure -----------------------------------------------------------------

@pytest.mark.parametrize("sr,a,expected", [
    (MP, -3, 0),
    (MP, 0, 0),           # boundary a = one is included
    (MP, NEG_INF, 0),
    (MP, 2, None),
    (MP, 0.5, None),
    (MM, 17, POS_INF),
    (MM, NEG_INF, POS_INF),
    (NN, 0.5, 2.0),
    (NN, 0, 1),
    (NN, 1.5, None),
    (NN, 1.0, None),
    (MPC, 2, POS_INF),
    (MPC, POS_INF, POS_INF),
    (MPC, -1, 0),
    (BOOL, 0, 1),
    (BOOL, 1, 1),
])
def test_scalar_closure(sr, a, expected):
    assert sr.closure(a) == expected


def test_closure_satisfies_quasi_inverse_on_samples():
    for sr in ALL:
        for a in sr.default_samples():
            c = sr.closure(a)
            if c is None:
                continue
            assert sr.eq(c, sr.add(sr.one, sr.mul(a, c)))
            assert sr.eq(c, sr.add(sr.one, sr.mul(c, a)))


@given(st.integers(-50, 0))
def test_maxplus_closure_quasi_inverse(a):
    c = MP.closure(a)
    assert c == MP.add(MP.one, MP.mul(a, c))


@given(st.floats(min_value=0.0, max_value=0.999, allow_nan=False))
def test_nonneg_closure_quasi_inverse(a):
    c = NN.closure(a)
    assert c is not None
    assert NN.eq(c, NN.add(NN.one, NN.mul(a, c)))


# -- inverses ------------------------------------------------------------------

@pytest.mark.parametrize("sr,a,expected", [
    (MP, -4, 4),
    (MP, 0, 0),
    (MP, NEG_INF, None),
    (NN, 0.25, 4.0),
    (NN, 0, None),
    (BOOL, 0, None),
    (BOOL, 1, 1),
    (MPC, 3, -3),
    (MPC, POS_INF, None),
    (MPC, NEG_INF, None),
    (MM, 5, None),
    (MM, POS_INF, POS_INF),
])
def test_scalar_mul_inverse(sr, a, expected):
    assert sr.mul_inverse(a) == expected


def test_defined_inverses_multiply_to_one():
    for sr in ALL:
        for a in sr.default_samples():
            inv = sr.mul_inverse(a)
            if inv is None:
                continue
            assert sr.eq(sr.mul(a, inv), sr.one)


# -- canonical order ------------------------------------------------------------

def test_canonical_leq_examples():
    assert MP.leq(-3, -1)
    assert not MP.leq(-1, -3)
    assert not BOOL.leq(1, 0)
    assert BOOL.leq(0, 1)
    assert MM.leq(4, 4)


def test_canonical_leq_rejects_non_idempotent():
    with pytest.raises(sp.UnsupportedInstance):
        NN.leq(1, 2)


@pytest.mark.parametrize("sr", [MP, MPC, MM, BOOL])
def test_canonical_leq_is_partial_order(sr):
    samples = sr.default_samples()
    for a in samples:
        assert sr.leq(a, a)
    for a in samples:
        for b in samples:
            if sr.leq(a, b) and sr.leq(b, a):
                assert sr.eq(a, b)
            for c in samples:
                if sr.leq(a, b) and sr.leq(b, c):
                    assert sr.leq(a, c)


# -- axioms -----------------------------------------------------------------------

@pytest.mark.parametrize("sr", ALL, ids=lambda s: s.name)
def test_axiom_suite_passes_for_registered_instances(sr):
    report = sp.axiom_suite(sr)
    assert all(report.values()), {k: v for k, v in report.items() if not v}


def test_axiom_suite_reports_broken_mul_associativity():
    report = sp.axiom_suite(BrokenMul(), samples=[1, 2, 3])
    assert report["mul_associative"] is False


def test_axiom_suite_rejects_empty_samples():
    with pytest.raises(ValueError):
        sp.axiom_suite(MP, samples=[])


def test_maxplus_complete_annihilation_never_nan():
    assert MPC.mul(MPC.zero, POS_INF) == MPC.zero
    assert MPC.mul(POS_INF, MPC.zero) == MPC.zero
    v = MPC.mul(MPC.zero, POS_INF)
    assert v == v  # NaN would fail
    # the uncompleted instance would have produced NaN from -inf + inf
    assert math.isnan(NEG_INF + POS_INF)


def test_maxplus_complete_infinity_absorbs_nonzero():
    assert MPC.mul(3, POS_INF) == POS_INF
    assert MPC.add(-7, POS_INF) == POS_INF


# -- samples and carriers -------------------------------------------------------

def test_default_samples_include_units_and_sentinels():
    for sr in ALL:
        samples = sr.default_samples()
        assert sr.zero in samples
        assert sr.one in samples
        for s in sr.sentinels():
            assert s in samples
        assert samples == sr.default_samples()  # deterministic


def test_default_samples_small_carrier():
    assert BOOL.default_samples() == [0, 1]


@pytest.mark.parametrize("sr,value,expected", [
    (MP, -3.5, True),
    (MP, NEG_INF, True),
    (MP, POS_INF, False),
    (NN, 2.0, True),
    (NN, -1, False),
    (NN, POS_INF, False),
    (BOOL, 1, True),
    (BOOL, 0.5, False),
    (MM, POS_INF, True),
    (MPC, POS_INF, True),
])
def test_contains(sr, value, expected):
    assert sr.contains(value) is expected


# -- counting wrapper -------------------------------------------------------------

def test_counting_wrapper_is_observationally_identical():
    for base in ALL:
        wrapped = sp.CountingSemiring(base)
        samples = base.default_samples()
        for a in samples:
            assert wrapped.closure(a) == base.closure(a)
            assert wrapped.mul_inverse(a) == base.mul_inverse(a)
            for b in samples:
                assert wrapped.add(a, b) == base.add(a, b)
                assert wrapped.mul(a, b) == base.mul(a, b)


def test_counting_wrapper_counts_every_call():
    counter = sp.OpCounter()
    sr = sp.CountingSemiring(MP, counter)
    sr.add(1, 2)
    sr.add(0, 0)
    sr.mul(1, 2)
    sr.closure(-1)
    sr.mul_inverse(3)
    assert counter.as_dict() == {
        "add_count": 2, "mul_count": 1, "closure_count": 1, "inverse_count": 1,
    }


def test_counting_wrapper_matches_base_on_matrix_products():
    rng = random.Random(7)
    base_mat = sp.Matrix(3, 3, [rng.randint(-5, 0) for _ in range(9)], MP)
    counter = sp.OpCounter()
    wrapped_sr = sp.CountingSemiring(MP, counter)
    wrapped_mat = sp.Matrix(3, 3, base_mat.to_flat(), wrapped_sr)
    assert wrapped_mat.mul(wrapped_mat).to_flat() == base_mat.mul(base_mat).to_flat()
    # 3x3 product: 27 muls, 18 adds
    assert counter.mul_count == 27
    assert counter.add_count == 18


def test_counting_wrapper_delegates_flags_and_eq():
    sr = sp.CountingSemiring(NN)
    assert sr.approximate and sr.has_inverses and not sr.idempotent
    assert sr.name == "nonneg-real"
    assert sr.eq(1.0, 1.0 + 1e-14)
    assert sr.counter.add_count == 0


def test_registry_names():
    assert list(sp.REGISTRY) == [
        "nonneg-real", "max-plus", "max-plus-complete", "max-min", "boolean",
    ]
    with pytest.raises(sp.UnknownSemiring):
        sp.get_semiring("min-plus")
