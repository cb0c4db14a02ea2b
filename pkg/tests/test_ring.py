from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from essring import (
    EnumerationCapExceeded,
    InvalidPresentation,
    RingMismatch,
    RingPresentation,
    ScalarSpec,
    UnsupportedScalar,
    commutative_control,
    elements,
    full_matrix,
    grassmann,
    is_commutative,
    noninvariant,
    opposite,
    quotient_mod,
    rationalize,
    representatives,
    triangular,
    validate,
)
from conftest import A, B, C, F2, F3, Q, Z, coords, element_of, f_index

RING8 = noninvariant(8)
GRASSMANN = grassmann(3, 3)


@pytest.mark.parametrize(
    "ring",
    [
        noninvariant(7),
        noninvariant(9, Q),
        noninvariant(7, ScalarSpec.mod(6)),
        grassmann(3, 3),
        grassmann(2, 2),
        full_matrix(2, F2),
        triangular(3, Z),
        commutative_control("cyclic", 4, Z),
        commutative_control("truncated", 3, F3),
    ],
    ids=lambda ring: ring.name,
)
def test_families_validate(ring):
    report = validate(ring)
    assert report.passed
    assert report.triples_checked == ring.rank**3
    assert report.to_dict(ring.scalar)["passed"] is True


def test_associativity_failure_is_reported():
    # x * x = y and y * x = x, so (x x) x = x while x (x x) = 0
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    table = [
        identity,
        [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 1], [0, 1, 0], [0, 0, 0]],
    ]
    ring = RingPresentation("broken", Z, [1, 0, 0], table)
    report = validate(ring)
    assert not report.passed
    assert (1, 1, 1, (0, 1, 0)) in report.associativity_failures
    assert report.identity_failures == []
    assert not report


def test_identity_failure_is_reported():
    table = [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]
    report = validate(RingPresentation("no-one", Z, [1, 0], table))
    assert any(index == 0 for index, _, _ in report.identity_failures)
    assert not report.passed


class TestSerialization:
    @pytest.mark.parametrize("ring", [noninvariant(7), noninvariant(7, Q), grassmann(2, 3)], ids=str)
    def test_round_trip(self, ring):
        raw = ring.dumps()
        parsed = RingPresentation.loads(raw)
        assert parsed == ring
        assert parsed.name == ring.name
        assert parsed.dumps() == raw

    def test_document_shape(self, ring7):
        data = json.loads(ring7.dumps())
        assert list(data) == ["name", "scalar", "rank", "one", "table"]
        assert data["rank"] == 7
        assert data["one"] == ["1", "0", "0", "0", "0", "0", "0"]
        assert data["scalar"] == {"kind": "integer"}

    def test_modulus_is_a_string(self):
        data = json.loads(noninvariant(7, F2).dumps())
        assert data["scalar"] == {"kind": "integer-mod-m", "modulus": "2"}

    @pytest.mark.parametrize(
        ("mutate", "field"),
        [
            (lambda d: d.pop("table"), "table"),
            (lambda d: d.__setitem__("rank", "seven"), "rank"),
            (lambda d: d["table"][0].pop(), "table[0]"),
            (lambda d: d["table"][0][1].__setitem__(0, "x"), "table[0][1][0]"),
            (lambda d: d["table"][2][3].__setitem__(4, 1.5), "table[2][3][4]"),
            (lambda d: d["scalar"].__setitem__("kind", "real"), "scalar.kind"),
            (lambda d: d.__setitem__("one", ["1"]), "one"),
        ],
    )
    def test_errors_name_the_field(self, ring7, mutate, field):
        data = json.loads(ring7.dumps())
        mutate(data)
        with pytest.raises(InvalidPresentation) as info:
            RingPresentation.from_dict(data)
        assert info.value.field == field

    def test_garbage(self):
        with pytest.raises(InvalidPresentation) as info:
            RingPresentation.loads(b"{not json")
        assert info.value.field == "<document>"

    def test_shape_is_checked(self):
        with pytest.raises(InvalidPresentation):
            RingPresentation("bad", Z, [1, 0], [[[1, 0], [0, 1]]])


class TestArithmetic:
    @given(element_of(RING8), element_of(RING8), element_of(RING8))
    def test_associative(self, x, y, z):
        assert (x * y) * z == x * (y * z)

    @given(element_of(RING8), element_of(RING8), element_of(RING8))
    def test_distributive(self, x, y, z):
        assert x * (y + z) == x * y + x * z
        assert (y + z) * x == y * x + z * x

    @given(element_of(RING8), element_of(RING8), element_of(RING8), st.integers(-5, 5))
    def test_commutator_bilinear(self, x, y, z, k):
        assert x.commutator(y + k * z) == x.commutator(y) + k * x.commutator(z)
        assert x.commutator(y) == -y.commutator(x)

    @settings(max_examples=1000)
    @given(element_of(RING8), element_of(RING8), st.sampled_from([2, 3, 4, 6]))
    def test_reduction_is_a_homomorphism(self, x, y, m):
        q = quotient_mod(RING8, m)
        assert q(x * y) == q(x) * q(y)
        assert q(x + y) == q(x) + q(y)
        assert q(q.lift(q(x))) == q(x)

    @given(element_of(GRASSMANN, 2))
    def test_generators_square_to_zero(self, x):
        for i in range(1, 4):
            g = GRASSMANN.basis(i)
            assert g * g == GRASSMANN.zero
        assert (x * x) * x == x * (x * x)

    def test_example_products(self, ring7):
        a, b, c = ring7.basis(A), ring7.basis(B), ring7.basis(C)
        d, e, f = ring7.basis(4), ring7.basis(5), ring7.basis(6)
        assert a * b == c
        assert b * a == ring7.zero
        assert a * d == d * a == f
        assert b * e == e * b == f
        assert a * e == ring7.zero

    def test_powers_and_scalars(self, ring7):
        x = ring7.element([1, 1, 0, 0, 0, 0, 0])
        assert x**0 == ring7.identity
        assert x**2 == x * x
        assert 3 * x == x + x + x
        assert x * 2 == x.scale(2)
        with pytest.raises(ValueError):
            x ** -1

    def test_mixing_rings(self, ring7, grassmann33):
        with pytest.raises(RingMismatch):
            ring7.basis(1) + grassmann33.basis(1)


class TestConstructions:
    def test_quotient_mod(self, ring7):
        q = quotient_mod(ring7, 2)
        assert q.target.scalar == F2
        assert q.target.name.endswith(":mod2")
        assert quotient_mod(q.target, 2).target.scalar == F2

        square = quotient_mod(ring7, 4).target
        assert quotient_mod(square, 2).target == q.target

    @pytest.mark.parametrize("m", [0, 1])
    def test_quotient_mod_rejects_small_moduli(self, ring7, m):
        with pytest.raises(ValueError):
            quotient_mod(ring7, m)

    def test_quotient_mod_rejects_non_divisors(self):
        with pytest.raises(ValueError):
            quotient_mod(noninvariant(7, ScalarSpec.mod(4)), 3)
        with pytest.raises(UnsupportedScalar):
            quotient_mod(noninvariant(7, Q), 2)

    def test_rationalize(self, ring7):
        rational = rationalize(ring7)
        assert rational.scalar == Q
        assert rational.name == ring7.name + ":rat"
        with pytest.raises(UnsupportedScalar):
            rationalize(rational)

    def test_opposite(self, ring7):
        op = opposite(ring7)
        assert op.name == ring7.name + ":op"
        assert opposite(op) == ring7
        assert opposite(op).name == ring7.name
        assert op.multiply(ring7.unit(A), ring7.unit(B)) == ring7.multiply(ring7.unit(B), ring7.unit(A))
        assert validate(op).passed

    def test_elements(self, ring7_f2):
        everything = list(elements(ring7_f2))
        assert len(everything) == 128
        assert everything[0] == ring7_f2.zero
        assert everything[1].coords == coords(ring7_f2, f_index(ring7_f2))
        assert len(list(representatives(ring7_f2))) == 127

    def test_representatives_over_prime_field(self):
        ring = grassmann(2, 3)
        found = list(representatives(ring))
        assert len(found) == (3**4 - 1) // 2
        assert all(next(v for v in x.coords if v) == 1 for x in found)

    def test_enumeration_cap(self, ring7, ring7_f2):
        with pytest.raises(EnumerationCapExceeded) as info:
            elements(ring7_f2, cap=100)
        assert info.value.size == 128
        assert info.value.cap == 100
        with pytest.raises(UnsupportedScalar):
            elements(ring7)

    def test_is_commutative(self, ring7):
        assert is_commutative(ring7) == (False, (A, B))
        assert is_commutative(grassmann(3, 2)) == (True, None)
        assert is_commutative(commutative_control("truncated", 4, Z)) == (True, None)
        assert not is_commutative(grassmann(3, 3))[0]

    def test_family_parameters(self):
        with pytest.raises(ValueError):
            noninvariant(6)
        with pytest.raises(ValueError):
            commutative_control("laurent", 3)
        assert grassmann(3, 3).rank == 8
        assert full_matrix(3).rank == 9
        assert triangular(3).rank == 6
