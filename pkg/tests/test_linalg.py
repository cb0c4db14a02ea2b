from __future__ import annotations

import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, QQ

from essring import (
    Mat,
    ScalarMismatch,
    ScalarSpec,
    Submodule,
    UnsupportedScalar,
    hermite_normal_form,
    integer_points,
    invariant_factors,
    is_pure,
    kernel,
    preimage,
    saturate,
    smith_normal_form,
)
from conftest import F2, F3, Q, Z


def matrices(max_rows: int = 4, max_cols: int = 4, bound: int = 9):
    return st.integers(1, max_rows).flatmap(
        lambda rows: st.integers(1, max_cols).flatmap(
            lambda cols: st.lists(
                st.lists(st.integers(-bound, bound), min_size=cols, max_size=cols),
                min_size=rows,
                max_size=rows,
            )
        )
    )


def determinantal_divisors(rows: list[list[int]]) -> list[int]:
    m = Matrix(rows)
    out = []
    for k in range(1, min(m.shape) + 1):
        g = 0
        for picked in itertools.combinations(range(m.rows), k):
            for cols in itertools.combinations(range(m.cols), k):
                g = gcd(g, int(m.extract(list(picked), list(cols)).det()))
        if g == 0:
            break
        out.append(g)
    return out


class TestHermiteNormalForm:
    @given(matrices())
    def test_transform_and_shape(self, rows):
        m = Mat(rows, Z)
        h, transform = hermite_normal_form(m)
        assert transform @ m == h
        assert abs(transform.determinant()) == 1

        pivots = []
        for row in h.rows:
            lead = next((j for j, v in enumerate(row) if v), None)
            if lead is None:
                continue
            assert not pivots or lead > pivots[-1]
            pivots.append(lead)
        zero_rows = [i for i, row in enumerate(h.rows) if not any(row)]
        assert zero_rows == list(range(len(pivots), h.nrows))

        for r, c in enumerate(pivots):
            pivot = h[r, c]
            assert pivot > 0
            for above in range(r):
                assert 0 <= h[above, c] < pivot

    @given(matrices(max_rows=3, max_cols=3).filter(lambda rows: len(rows) == len(rows[0])))
    def test_pivot_product_is_determinant(self, rows):
        det = int(Matrix(rows).det())
        h, _ = hermite_normal_form(Mat(rows, Z))
        product = 1
        for i in range(h.nrows):
            product *= h[i, i]
        assert product == abs(det)

    def test_rejects_other_scalars(self):
        with pytest.raises(UnsupportedScalar):
            hermite_normal_form(Mat([[1, 2]], F3))


class TestSmithNormalForm:
    @settings(max_examples=60)
    @given(matrices(max_rows=3, max_cols=4, bound=7))
    def test_decomposition(self, rows):
        m = Mat(rows, Z)
        s, left, right = smith_normal_form(m)
        assert left @ m @ right == s
        assert abs(left.determinant()) == 1
        assert abs(right.determinant()) == 1
        for i in range(s.nrows):
            for j in range(s.ncols):
                if i != j:
                    assert s[i, j] == 0
        diagonal = [s[i, i] for i in range(min(s.shape))]
        assert all(v >= 0 for v in diagonal)
        nonzero = [v for v in diagonal if v]
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))

    @settings(max_examples=60)
    @given(matrices(max_rows=3, max_cols=3, bound=7))
    def test_invariant_factors_match_determinantal_divisors(self, rows):
        divisors = determinantal_divisors(rows)
        expected = [d // previous for previous, d in zip([1] + divisors, divisors)]
        assert list(invariant_factors(Mat(rows, Z))) == expected

    def test_known_factors(self):
        assert invariant_factors(Mat([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], Z)) == (2, 6, 12)


class TestKernel:
    @given(matrices())
    def test_integer_kernel_is_full_solution_lattice(self, rows):
        ncols = len(rows[0])
        solutions = kernel(rows, Z, ncols=ncols)
        assert solutions.rank == len(rows) - Matrix(rows).rank()
        for x in solutions.basis:
            assert all(
                sum(x[i] * rows[i][j] for i in range(len(rows))) == 0 for j in range(ncols)
            )
        assert is_pure(solutions)

    @given(matrices(bound=2))
    def test_prime_field_kernel(self, rows):
        ncols = len(rows[0])
        solutions = kernel(rows, F3, ncols=ncols)
        for x in solutions.basis:
            assert all(
                sum(x[i] * rows[i][j] for i in range(len(rows))) % 3 == 0 for j in range(ncols)
            )

    def test_empty_matrix(self):
        assert kernel([], Z, ncols=3).is_zero()
        assert kernel([[0, 0], [0, 0]], Z).is_full()

    def test_plain_rows_need_scalar(self):
        with pytest.raises(TypeError):
            kernel([[1, 2]])


class TestSubmodule:
    @given(
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
        st.integers(-4, 4),
    )
    def test_canonical_form(self, first, second, k):
        a = Submodule(3, Z, [first, second])
        b = Submodule(3, Z, [[x + k * y for x, y in zip(first, second)], second])
        assert a == b
        assert hash(a) == hash(b)

    def test_intersection_and_sum(self):
        left = Submodule(2, Z, [[2, 0], [0, 1]])
        right = Submodule(2, Z, [[1, 0], [0, 3]])
        assert left & right == Submodule(2, Z, [[2, 0], [0, 3]])
        assert left + right == Submodule.full(2, Z)
        assert left & right <= left

    def test_field_membership(self):
        plane = Submodule(3, F2, [[1, 1, 0], [0, 1, 1]])
        assert plane.rank == 2
        assert [1, 0, 1] in plane
        assert [1, 0, 0] not in plane
        assert plane.size() == 4
        assert sorted(plane.elements()) == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]

    def test_composite_modulus(self):
        spec = ScalarSpec.mod(4)
        sub = Submodule(2, spec, [[2, 0]])
        assert sub.size() == 2
        assert sorted(sub.elements()) == [(0, 0), (2, 0)]
        assert (6, 0) in sub
        assert (1, 0) not in sub
        assert Submodule(2, spec, [[2, 0]]) & Submodule(2, spec, [[1, 0]]) == sub

    def test_mismatch(self):
        with pytest.raises(ScalarMismatch):
            Submodule(2, Z) <= Submodule(2, F2)  # noqa: B015
        with pytest.raises(ScalarMismatch):
            Submodule(2, Z, [[1, 2, 3]])

    def test_purity(self):
        assert not is_pure(Submodule(2, Z, [[2, 4]]))
        assert saturate(Submodule(2, Z, [[2, 4]])) == Submodule(2, Z, [[1, 2]])
        assert is_pure(Submodule(2, Z, [[1, 1]]))
        assert saturate(Submodule.full(3, Z)) == Submodule.full(3, Z)
        with pytest.raises(UnsupportedScalar):
            is_pure(Submodule(2, F3))

    def test_preimage(self):
        rows = [[1, 0], [0, 2]]
        assert preimage(rows, Submodule(2, Z, [[0, 1]])) == Submodule(2, Z, [[0, 1]])
        assert preimage(rows, Submodule(2, Z, [[1, 0], [0, 4]])) == Submodule(2, Z, [[1, 0], [0, 2]])
        assert preimage(rows, Submodule(2, F2, [[1, 0]])) == Submodule.full(2, F2)

    def test_integer_points(self):
        line = Submodule(2, Q, [[QQ(1, 2), 1]])
        assert integer_points(line) == Submodule(2, Z, [[1, 2]])
        with pytest.raises(UnsupportedScalar):
            integer_points(Submodule(2, Z, [[1, 2]]))


class TestScalars:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("int", ScalarSpec.integers()),
            ("Z", ScalarSpec.integers()),
            ("rat", ScalarSpec.rationals()),
            ("mod:6", ScalarSpec.mod(6)),
            ("Z/4", ScalarSpec.mod(4)),
            ("F3", F3),
        ],
    )
    def test_parse(self, text, expected):
        assert ScalarSpec.parse(text) == expected
        assert ScalarSpec.parse(str(expected)) == expected

    @pytest.mark.parametrize("text", ["F4", "mod:1", "reals", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            ScalarSpec.parse(text)

    def test_properties(self):
        assert F3.is_prime_field and F3.is_field and F3.is_finite
        assert not ScalarSpec.mod(4).is_field
        assert Q.is_field and not Q.is_finite
        assert Z.characteristic == 0 and F2.characteristic == 2
        assert Q.format_value(QQ(-3, 4)) == "-3/4"
        assert Q.parse_value("-3/4") == QQ(-3, 4)
        assert ScalarSpec.mod(5).parse_value("-1") == 4
        assert ScalarSpec.from_dict(ScalarSpec.mod(9).to_dict()) == ScalarSpec.mod(9)

    def test_determinant(self):
        assert Mat([[2, 1], [1, 1]], Z).determinant() == 1
        assert Mat([[1, 2], [2, 1]], F3).determinant() == 0
        with pytest.raises(UnsupportedScalar):
            Mat([[1, 2], [2, 1]], ScalarSpec.mod(4)).determinant()
