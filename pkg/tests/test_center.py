from __future__ import annotations

import logging

import pytest
from hypothesis import assume, given

from essring import (
    Config,
    DecisionMethod,
    EnumerationCapExceeded,
    RingPresentation,
    ScalarSpec,
    Submodule,
    UnsupportedScalar,
    Verdict,
    center_basis,
    central_partner,
    commutative_control,
    default_corpus,
    essential_witness,
    find_family,
    full_matrix,
    grassmann,
    is_central,
    is_centrally_essential,
    noninvariant,
    refute_by_sampling,
    validate,
)
from conftest import A, B, C, F2, Z, element_of, f_index

RING9 = noninvariant(9)


def test_center_of_noninvariant(ring7, ring8):
    center = center_basis(ring7)
    units = [ring7.unit(i) for i in (0, 3, 4, 5, 6)]
    assert center.sub == Submodule(7, Z, units)
    assert center.rank == 5
    assert center_basis(ring8).rank == 6
    assert ring7.basis(C) in center
    assert ring7.basis(A) not in center


def test_center_of_grassmann(grassmann33, grassmann23):
    # the even part together with the top monomial
    assert center_basis(grassmann33).rank == 5
    assert center_basis(grassmann23).rank == 2
    assert center_basis(grassmann(3, 2)).rank == 8


def test_center_members_are_central(ring7, grassmann33):
    for ring in (ring7, grassmann33):
        for element in center_basis(ring).elements():
            assert is_central(element)
    assert not is_central(ring7.basis(B))


def test_central_partner(ring7):
    witness = central_partner(ring7.basis(A))
    assert witness is not None
    assert witness.revalidate()
    assert witness.y == ring7.basis(A) * witness.x


class TestDecision:
    def test_integer_ring(self, ring7):
        decision = is_centrally_essential(ring7)
        assert decision.verdict is Verdict.yes
        assert decision.method is DecisionMethod.rationalized
        assert decision.evidence is None
        assert decision.to_dict()["verdict"] == "yes"

    def test_small_finite_ring(self, ring7_f2):
        decision = is_centrally_essential(ring7_f2)
        assert decision.verdict is Verdict.yes
        assert decision.method is DecisionMethod.exhaustive

    def test_grassmann(self, grassmann33, grassmann23):
        assert is_centrally_essential(grassmann33, backend="socle").verdict is Verdict.yes

        decision = is_centrally_essential(grassmann23)
        assert decision.verdict is Verdict.no
        assert decision.evidence is not None
        assert decision.revalidate()
        assert central_partner(decision.evidence) is None
        assert "evidence" in decision.to_dict()

    def test_matrices(self, matrix2, triangular2):
        for ring in (matrix2, triangular2):
            decision = is_centrally_essential(ring)
            assert decision.verdict is Verdict.no
            assert decision.revalidate()

    @pytest.mark.parametrize(
        "ring",
        [
            entry.ring
            for entry in default_corpus()
            if entry.ring.scalar.modulus in (2, 3) and entry.ring.size <= Config().exhaustive_limit
        ],
        ids=lambda ring: ring.name,
    )
    def test_backends_agree(self, ring):
        exhaustive = is_centrally_essential(ring, backend="exhaustive")
        socle = is_centrally_essential(ring, backend="socle")
        assert exhaustive.method is DecisionMethod.exhaustive
        assert socle.method is DecisionMethod.socle_criterion
        assert exhaustive.verdict is socle.verdict
        if socle.verdict is Verdict.no:
            assert socle.evidence is not None
            assert socle.revalidate()

    def test_socle_evidence_outside_the_center(self):
        # F2 x M2(F2) on (1, E11), (0, E12), (0, E21), (0, E22), (0, E11)
        products = {
            (0, 0): 0, (0, 1): 1, (0, 4): 4,
            (1, 2): 4, (1, 3): 1,
            (2, 0): 2, (2, 1): 3, (2, 4): 2,
            (3, 2): 2, (3, 3): 3,
            (4, 0): 4, (4, 1): 1, (4, 4): 4,
        }
        table = [
            [[int(k == products.get((i, j))) for k in range(5)] for j in range(5)] for i in range(5)
        ]
        ring = RingPresentation("split", F2, [1, 0, 0, 1, 0], table)
        assert validate(ring).passed

        socle = is_centrally_essential(ring, backend="socle")
        assert socle.verdict is Verdict.no
        assert socle.evidence == ring.element([0, 0, 0, 0, 1])
        assert socle.revalidate()
        assert is_centrally_essential(ring, backend="exhaustive").verdict is Verdict.no

        again = is_centrally_essential(ring, backend="socle")
        assert again.evidence == socle.evidence

    def test_rational_algebra(self):
        decision = is_centrally_essential(noninvariant(8, ScalarSpec.rationals()))
        assert decision.verdict is Verdict.yes
        assert decision.method is DecisionMethod.socle_criterion

    def test_family_backend(self, ring7, grassmann33):
        decision = is_centrally_essential(ring7, backend="family")
        assert decision.method is DecisionMethod.witness_family
        with pytest.raises(ValueError):
            is_centrally_essential(grassmann33, backend="family")

    def test_forced_backends_check_the_domain(self, ring7, ring7_f2):
        with pytest.raises(UnsupportedScalar):
            is_centrally_essential(ring7, backend="exhaustive")
        with pytest.raises(UnsupportedScalar):
            is_centrally_essential(noninvariant(7, ScalarSpec.mod(4)), backend="socle")
        with pytest.raises(EnumerationCapExceeded):
            is_centrally_essential(ring7_f2, Config(enumeration_cap=10), backend="exhaustive")
        with pytest.raises(ValueError):
            is_centrally_essential(ring7_f2, backend="guess")  # type: ignore

    def test_unknown(self, caplog):
        ring = commutative_control("truncated", 3, ScalarSpec.mod(4))
        with caplog.at_level(logging.WARNING, logger="essring.center"):
            decision = is_centrally_essential(ring, Config(exhaustive_limit=10, samples=20))
        assert decision.verdict is Verdict.unknown
        assert decision.evidence is None
        assert any("unknown" in record.getMessage() for record in caplog.records)

    def test_sampling_refutes_composite_modulus(self):
        ring = full_matrix(2, ScalarSpec.mod(4))
        decision = is_centrally_essential(ring, Config(exhaustive_limit=10, samples=5))
        assert decision.verdict is Verdict.no
        assert decision.method is DecisionMethod.sampling_refuted
        assert decision.revalidate()
        assert find_family(noninvariant(7, ScalarSpec.mod(4))) is None


class TestWitness:
    @given(element_of(RING9))
    def test_family_witness(self, a):
        assume(bool(a))
        witness = essential_witness(a)
        assert witness is not None
        assert witness.revalidate()

    def test_family_witness_formula(self, ring7):
        a = ring7.element([2, 1, 1, 0, 0, 0, 0])
        witness = essential_witness(a)
        assert witness.x.coords == (0, 0, 0, 0, 1, 1, 0)
        assert witness.y.coords == (0, 0, 0, 0, 2, 2, 2)
        assert witness.revalidate()
        assert witness.to_dict()["y"] == ["0", "0", "0", "0", "2", "2", "2"]

    def test_central_elements_are_their_own_witness(self, ring7):
        a = ring7.basis(f_index(ring7))
        witness = essential_witness(a)
        assert witness.x == ring7.identity
        assert witness.y == a

    def test_zero(self, ring7):
        with pytest.raises(ValueError):
            essential_witness(ring7.zero)

    def test_no_witness(self, grassmann23):
        evidence = is_centrally_essential(grassmann23).evidence
        assert essential_witness(evidence) is None

    def test_refute_by_sampling(self, matrix2, ring7_f2):
        found = refute_by_sampling(matrix2, 10, 1)
        assert found is not None
        assert central_partner(found) is None
        assert refute_by_sampling(ring7_f2, 30, 1) is None
