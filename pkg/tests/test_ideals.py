from __future__ import annotations

import logging
import math

import pytest

from essring import (
    EnumerationCapExceeded,
    IdealClosureError,
    IdealRep,
    Idempotent,
    IdempotentLiftError,
    IncompleteSearch,
    InvalidPresentation,
    NotArtinian,
    NotPrime,
    RingPresentation,
    ScalarSpec,
    Side,
    Submodule,
    UnsupportedScalar,
    cap_complement,
    closure,
    commutative_control,
    full_matrix,
    generate,
    idempotents,
    intersect_powers,
    is_closed,
    is_essential,
    is_essential_in,
    is_local,
    is_quasi_invariant,
    is_right_invariant,
    is_right_regular,
    is_two_sided,
    jacobson_radical,
    left_annihilator,
    lift_idempotent,
    maximal_right_ideals,
    minimal_right_ideals,
    nilradical_tffr,
    noninvariant,
    p_height,
    power,
    product,
    quotient_algebra,
    rationalize,
    right_annihilator,
    socle_right,
)
from conftest import A, B, C, F2, d_index, e_index, f_index


def span(ring, *indices):
    return Submodule(ring.rank, ring.scalar, [ring.unit(i) for i in indices])


def right_ideal_of_b(ring):
    return generate(ring, Side.right, [ring.basis(B)])


class TestGenerate:
    def test_right_ideal(self, ring7):
        ideal = right_ideal_of_b(ring7)
        assert ideal.sub == span(ring7, B, f_index(ring7))
        assert ideal.side is Side.right
        assert ideal.revalidate()

    def test_left_ideal(self, ring7):
        ideal = generate(ring7, Side.left, [ring7.basis(A)])
        assert ideal.sub == span(ring7, A, f_index(ring7))

    def test_two_sided(self, ring7):
        ideal = generate(ring7, Side.two_sided, [ring7.basis(B)])
        assert ideal.sub == span(ring7, B, C, f_index(ring7))
        assert is_two_sided(ideal) == (True, None)

    def test_not_two_sided(self, ring7):
        ideal = right_ideal_of_b(ring7)
        verdict, (r, x) = is_two_sided(ideal)
        assert not verdict
        assert x in ideal
        assert r * x not in ideal

    def test_coordinates_as_generators(self, ring7):
        assert generate(ring7, Side.right, [ring7.unit(B)]) == right_ideal_of_b(ring7)

    def test_declared_side_is_checked(self, ring7):
        with pytest.raises(IdealClosureError) as info:
            IdealRep(ring7, Side.right, span(ring7, B))
        assert info.value.witness["side"] == "right"
        with pytest.raises(IdealClosureError):
            right_ideal_of_b(ring7).with_side(Side.two_sided)

    def test_whole_and_zero(self, ring7):
        assert IdealRep.whole(ring7).is_whole()
        assert IdealRep.zero(ring7, Side.left).is_zero()
        assert generate(ring7, Side.right, [ring7.identity]).is_whole()

    def test_mirrored(self, ring7):
        left = generate(ring7, Side.left, [ring7.basis(A)])
        mirrored = left.mirrored()
        assert mirrored.side is Side.right
        assert mirrored.sub == left.sub
        assert mirrored.ring.name.endswith(":op")

    def test_document(self, ring7):
        ideal = right_ideal_of_b(ring7)
        assert IdealRep.from_dict(ring7, ideal.to_dict()) == ideal
        data = {"side": "right", "generators": [["0", "0", "1", "0", "0", "0", "0"]]}
        assert IdealRep.from_dict(ring7, data) == ideal

    @pytest.mark.parametrize(
        ("data", "field"),
        [
            ({"side": "middle", "generators": []}, "side"),
            ({"side": "right"}, "generators"),
            ({"side": "right", "generators": [["1", "0"]]}, "generators[0]"),
            ({"side": "right", "generators": [["x"] * 7]}, "generators[0]"),
        ],
    )
    def test_bad_documents(self, ring7, data, field):
        with pytest.raises(InvalidPresentation) as info:
            IdealRep.from_dict(ring7, data)
        assert info.value.field == field


class TestProducts:
    def test_radical_powers(self, ring7_f2):
        radical = IdealRep(ring7_f2, Side.two_sided, jacobson_radical(ring7_f2).jacobson)
        assert power(radical, 2) == span(ring7_f2, C, f_index(ring7_f2))
        assert power(radical, 3).is_zero()
        assert product(radical, radical) == power(radical, 2)
        with pytest.raises(ValueError):
            power(radical, 0)

    def test_annihilators(self, ring7):
        sub = span(ring7, A)
        # a * b = c and a * d = f
        assert right_annihilator(ring7, sub) == span(ring7, A, C, e_index(ring7), f_index(ring7))
        assert left_annihilator(ring7, sub) == span(ring7, A, B, C, e_index(ring7), f_index(ring7))

    def test_regular_elements(self, ring7):
        assert is_right_regular(ring7.identity)
        assert is_right_regular(2 * ring7.identity + ring7.basis(A))
        assert not is_right_regular(ring7.basis(A))
        assert not is_right_regular(ring7.zero)

    def test_intersect_powers(self, ring7_f2, ring7, caplog):
        radical = IdealRep(ring7_f2, Side.two_sided, jacobson_radical(ring7_f2).jacobson)
        chain = intersect_powers(radical)
        assert chain.complete
        assert chain.submodule.is_zero()

        doubled = generate(ring7, Side.two_sided, [2 * ring7.identity])
        with caplog.at_level(logging.WARNING, logger="essring.ideals.lattice"):
            chain = intersect_powers(doubled, cap=5)
        assert not chain.complete
        assert chain.steps == 5
        assert caplog.records

    def test_intersect_powers_of_idempotent_ideals(self, matrix2):
        for m in maximal_right_ideals(matrix2):
            assert not is_two_sided(m)[0]
            chain = intersect_powers(m)
            assert chain.complete
            assert chain.submodule == m.sub

    def test_quotient_algebra(self, ring7_f2, matrix2):
        radical = jacobson_radical(ring7_f2).jacobson
        quotient = quotient_algebra(ring7_f2, radical)
        assert quotient.ring.rank == 1
        assert quotient.project(ring7_f2.basis(A)) == quotient.ring.zero
        assert quotient.lift(quotient.ring.identity) == ring7_f2.identity
        with pytest.raises(IdealClosureError):
            quotient_algebra(matrix2, span(matrix2, 1))
        with pytest.raises(UnsupportedScalar):
            quotient_algebra(noninvariant(7), span(noninvariant(7), A))


class TestRadical:
    def test_finite(self, ring7_f2):
        data = jacobson_radical(ring7_f2)
        assert data.jacobson == span(ring7_f2, *range(1, 7))
        assert data.nil == data.jacobson
        assert data.nilpotency_index == 3

    def test_rational(self, ring7):
        rational = rationalize(ring7)
        assert jacobson_radical(rational).jacobson == span(rational, *range(1, 7))
        assert nilradical_tffr(ring7) == span(ring7, *range(1, 7))
        with pytest.raises(NotArtinian):
            jacobson_radical(ring7)
        with pytest.raises(UnsupportedScalar):
            nilradical_tffr(rational)

    def test_grassmann(self, grassmann33):
        data = jacobson_radical(grassmann33)
        assert data.jacobson.rank == 7
        assert data.nilpotency_index == 4
        assert socle_right(grassmann33) == span(grassmann33, 7)

    def test_semisimple(self, matrix2, triangular2):
        assert jacobson_radical(matrix2).jacobson.is_zero()
        assert jacobson_radical(matrix2).nilpotency_index == 1
        assert jacobson_radical(triangular2).jacobson == span(triangular2, 1)
        assert socle_right(matrix2).is_full()

    def test_composite_modulus(self):
        ring = noninvariant(7, ScalarSpec.mod(4))
        radical = jacobson_radical(ring).jacobson
        assert (2 * ring.identity).coords in radical
        assert ring.basis(A).coords in radical
        assert ring.identity.coords not in radical

    def test_socle(self, ring7, ring7_f2):
        assert socle_right(ring7_f2) == span(ring7_f2, C, f_index(ring7_f2))
        rational = rationalize(ring7)
        assert socle_right(rational) == span(rational, C, f_index(rational))


def principal(ring):
    return {x: generate(ring, Side.right, [x]).sub for x in ring_elements(ring)}


def ring_elements(ring):
    return [ring.element(c) for c in Submodule.full(ring.rank, ring.scalar).elements()]


def meeting(ideal, table):
    # elements whose principal right ideal meets `ideal`
    return {x for x, sub in table.items() if not (sub & ideal).is_zero()}


def essential_by_search(ring, ideal, within, table):
    meets = meeting(ideal, table)
    return all(ring.element(y) in meets for y in within.elements() if any(y))


def closed_by_search(ring, ideal, table):
    meets = meeting(ideal, table)
    for x in table:
        if x.coords in ideal:
            continue
        extension = generate(ring, Side.right, list(ideal.basis) + [x.coords]).sub
        if all(ring.element(y) in meets for y in extension.elements() if any(y)):
            return False
    return True


class TestLattice:
    def test_closure_of_right_ideal(self, ring7):
        ideal = right_ideal_of_b(ring7)
        closed = closure(ideal)
        assert not is_closed(ideal)
        assert closed.sub == span(ring7, B, d_index(ring7), e_index(ring7), f_index(ring7))
        assert closed.side is Side.right
        assert is_closed(closed)
        assert is_essential_in(ideal, closed)
        assert closed.revalidate()

    def test_complement_of_right_ideal(self, ring7):
        ideal = right_ideal_of_b(ring7)
        complement = cap_complement(ideal)
        assert ring7.unit(C) in complement
        assert (complement.sub & ideal.sub).is_zero()
        assert is_closed(complement)

    def test_left_side(self, ring7):
        ideal = generate(ring7, Side.left, [ring7.basis(A)])
        closed = closure(ideal)
        assert closed.side is Side.left
        assert closed.sub == span(ring7, A, d_index(ring7), e_index(ring7), f_index(ring7))
        assert ring7.unit(C) in cap_complement(ideal)
        assert not is_closed(ideal)

    def test_complement_with_base(self, ring7):
        ideal = right_ideal_of_b(ring7)
        base = generate(ring7, Side.right, [ring7.basis(C)])
        assert cap_complement(ideal, base) == cap_complement(ideal)
        with pytest.raises(ValueError):
            cap_complement(ideal, generate(ring7, Side.right, [ring7.basis(f_index(ring7))]))

    def test_essential(self, ring7):
        socle = generate(ring7, Side.right, [ring7.basis(C), ring7.basis(f_index(ring7))])
        assert is_essential(socle)
        assert not is_essential(right_ideal_of_b(ring7))
        assert is_essential(IdealRep.whole(ring7, Side.right))
        with pytest.raises(ValueError):
            is_essential_in(IdealRep.whole(ring7, Side.right), socle)

    def test_integers_modulo_composite_are_artinian(self):
        ring = noninvariant(7, ScalarSpec.mod(4))
        ideal = right_ideal_of_b(ring)
        assert not is_essential(ideal)
        assert is_essential(IdealRep.whole(ring, Side.right))

    @pytest.mark.parametrize(
        "generators",
        [
            [(0, 0, 1, 0, 0, 0, 0)],
            [(0, 0, 1, 0, 1, 0, 0)],
            [(0, 0, 0, 1, 0, 0, 0)],
            [(0, 1, 0, 0, 0, 0, 0)],
            [(0, 1, 1, 0, 0, 0, 0)],
            [(0, 0, 0, 0, 1, 1, 0), (0, 0, 0, 1, 0, 0, 0)],
        ],
    )
    def test_against_search(self, ring7_f2, generators):
        table = principal(ring7_f2)
        ideal = generate(ring7_f2, Side.right, generators)
        whole = Submodule.full(ring7_f2.rank, F2)

        assert is_essential(ideal) == essential_by_search(ring7_f2, ideal.sub, whole, table)
        assert is_closed(ideal) == closed_by_search(ring7_f2, ideal.sub, table)

        closed = closure(ideal)
        assert closed_by_search(ring7_f2, closed.sub, table)
        assert essential_by_search(ring7_f2, ideal.sub, closed.sub, table)

        complement = cap_complement(ideal)
        assert (complement.sub & ideal.sub).is_zero()
        assert essential_by_search(ring7_f2, complement.sub + ideal.sub, whole, table)

    def test_infinite_rings_are_rejected(self):
        ring = noninvariant(7, ScalarSpec.mod(4))
        with pytest.raises(UnsupportedScalar):
            maximal_right_ideals(noninvariant(7))
        with pytest.raises(UnsupportedScalar):
            minimal_right_ideals(noninvariant(7))
        assert len(maximal_right_ideals(ring)) == 1


class TestMaximalMinimal:
    def test_local_ring(self, ring7_f2):
        maximal = maximal_right_ideals(ring7_f2)
        assert [ideal.sub for ideal in maximal] == [jacobson_radical(ring7_f2).jacobson]
        assert is_local(ring7_f2)

    def test_matrix_ring(self, matrix2):
        maximal = maximal_right_ideals(matrix2)
        assert len(maximal) == 3
        assert all(ideal.rank == 2 for ideal in maximal)
        assert not any(is_two_sided(ideal)[0] for ideal in maximal)
        assert not is_local(matrix2)

    def test_triangular_ring(self, triangular2):
        maximal = maximal_right_ideals(triangular2)
        assert len(maximal) == 2
        assert all(is_two_sided(ideal)[0] for ideal in maximal)

    def test_minimal(self, ring7_f2, grassmann33):
        minimal = minimal_right_ideals(ring7_f2)
        assert len(minimal) == 3
        assert all(ideal.rank == 1 for ideal in minimal)
        assert [ideal.sub for ideal in minimal_right_ideals(grassmann33)] == [span(grassmann33, 7)]

    def test_quasi_invariance(self, ring7_f2, matrix2, triangular2):
        assert is_quasi_invariant(ring7_f2) == (True, None)
        assert is_quasi_invariant(triangular2) == (True, None)
        verdict, witness = is_quasi_invariant(matrix2)
        assert not verdict
        assert not is_two_sided(witness)[0]
        with pytest.raises(NotArtinian):
            is_quasi_invariant(noninvariant(7))
        with pytest.raises(IncompleteSearch):
            is_quasi_invariant(full_matrix(2, ScalarSpec.rationals()))

    def test_right_invariance(self, ring7_f2, triangular2):
        assert is_right_invariant(ring7_f2) == (False, ring7_f2.basis(B))
        verdict, witness = is_right_invariant(triangular2)
        assert not verdict
        assert not is_two_sided(generate(triangular2, Side.right, [witness]))[0]
        assert is_right_invariant(commutative_control("truncated", 3, F2)) == (True, None)


class TestIdempotents:
    def test_local_ring(self, ring7_f2):
        found = idempotents(ring7_f2)
        assert [i.e for i in found] == [ring7_f2.zero, ring7_f2.identity]
        assert all(i.trivial and i.central for i in found)

    def test_matrix_ring(self, matrix2, triangular2):
        found = idempotents(matrix2)
        assert len(found) == 8
        assert sum(1 for i in found if i.central) == 2
        assert len(idempotents(triangular2)) == 6

    def test_limits(self, ring7, matrix2):
        with pytest.raises(UnsupportedScalar):
            idempotents(ring7)
        with pytest.raises(EnumerationCapExceeded):
            idempotents(matrix2, cap=4)

    def test_lift(self):
        ring = full_matrix(2, ScalarSpec.mod(4))
        nil = Submodule(4, ring.scalar, [[2 * int(i == j) for j in range(4)] for i in range(4)])
        x = 3 * ring.basis(0)
        lifted = lift_idempotent(x, nil)
        assert lifted.e == ring.basis(0)
        assert lift_idempotent(lifted.e, nil) == lifted
        assert (lifted.e - x).coords in nil

    @pytest.mark.parametrize(("x", "expected"), [(3, 0), (7, 1), (4, 1), (1, 1), (0, 0)])
    def test_lift_modulo_nine(self, x, expected):
        ring = RingPresentation("Z/9", ScalarSpec.mod(9), [1], [[[1]]])
        nil = Submodule(1, ring.scalar, [[3]])
        assert lift_idempotent(ring.element([x]), nil).e == ring.element([expected])

    def test_lift_errors(self, matrix2):
        with pytest.raises(IdempotentLiftError):
            lift_idempotent(matrix2.basis(1), Submodule.zero(4, F2))
        with pytest.raises(IdempotentLiftError):
            lift_idempotent(matrix2.basis(0), span(matrix2, 1))
        with pytest.raises(IdempotentLiftError):
            lift_idempotent(matrix2.identity, Submodule.full(4, F2))
        with pytest.raises(ValueError):
            Idempotent(matrix2.basis(1))

    def test_p_height(self, ring7):
        x = 4 * ring7.basis(A) + 8 * ring7.basis(B)
        assert p_height(x, 2) == 2
        assert p_height(x, 3) == 0
        assert p_height(ring7.zero, 2) == math.inf
        with pytest.raises(NotPrime):
            p_height(x, 4)
        with pytest.raises(UnsupportedScalar):
            p_height(noninvariant(7, F2).identity, 2)
