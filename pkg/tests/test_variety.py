import random

import pytest

from balcone.errors import DegreeMismatchError, ValidationError
from balcone.ring import AmbientSpace, divisor_class, linear_combination
from balcone.variety import CompleteIntersection

from _helpers import random_fraction


@pytest.fixture
def quintic_ci():
    return CompleteIntersection(AmbientSpace([4, 1]), [(1, 1), (4, 1)])


def basis(ci):
    # factor 0 carries beta (the P^4 hyperplane), factor 1 carries alpha
    return ci.space.generator(1), ci.space.generator(0)


class TestConstruction:
    def test_dimension(self, quintic_ci):
        assert quintic_ci.dim == 3

    def test_ambient_as_intersection(self):
        ci = CompleteIntersection(AmbientSpace([2]), [])
        assert ci.dim == 2
        assert ci.fundamental_class() == ci.space.one()

    def test_dimension_zero_rejected(self):
        with pytest.raises(ValidationError, match="dimension"):
            CompleteIntersection(AmbientSpace([4, 1]), [(1, 0)] * 5)

    def test_zero_fundamental_class_rejected(self):
        # two divisors pulled back from the P^1 factor multiply to zero
        with pytest.raises(ValidationError, match="annihilate"):
            CompleteIntersection(AmbientSpace([4, 1]), [(0, 1), (0, 1)])


class TestFundamentalClass:
    def test_quintic(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        assert quintic_ci.fundamental_class() == 5 * (alpha * beta) + 4 * (beta * beta)

    def test_quadric_in_p3(self):
        ci = CompleteIntersection(AmbientSpace([3]), [(2,)])
        assert ci.fundamental_class() == 2 * ci.space.generator(0)


class TestIntersectionNumber:
    def test_alpha_beta_beta(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        assert quintic_ci.intersection_number([alpha, beta, beta]) == 4

    def test_beta_beta_beta(self, quintic_ci):
        _, beta = basis(quintic_ci)
        assert quintic_ci.intersection_number([beta, beta, beta]) == 5

    def test_alpha_alpha_beta(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        assert quintic_ci.intersection_number([alpha, alpha, beta]) == 0

    def test_degree_mismatch(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        with pytest.raises(DegreeMismatchError) as info:
            quintic_ci.intersection_number([alpha, beta])
        assert info.value.expected == 3
        assert info.value.actual == 2

    def test_zero_factor_short_circuits(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        assert quintic_ci.intersection_number([alpha, beta, quintic_ci.space.zero()]) == 0

    def test_multilinear_and_symmetric(self, quintic_ci):
        rng = random.Random(7)
        alpha, beta = basis(quintic_ci)
        for _ in range(100):
            coords = [(random_fraction(rng), random_fraction(rng)) for _ in range(3)]
            factors = [
                linear_combination([(c1, alpha), (c2, beta)]) for c1, c2 in coords
            ]
            base = quintic_ci.intersection_number(factors)
            shuffled = factors[:]
            rng.shuffle(shuffled)
            assert quintic_ci.intersection_number(shuffled) == base
            a = random_fraction(rng)
            b = random_fraction(rng)
            extra = linear_combination([(random_fraction(rng), alpha),
                                        (random_fraction(rng), beta)])
            mixed = linear_combination([(a, factors[0]), (b, extra)])
            lhs = quintic_ci.intersection_number([mixed, factors[1], factors[2]])
            rhs = a * base + b * quintic_ci.intersection_number(
                [extra, factors[1], factors[2]]
            )
            assert lhs == rhs


class TestPairingMatrix:
    def test_quintic_pairing(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        pm = quintic_ci.pairing_matrix(
            [alpha, beta], [alpha * beta, beta * beta]
        )
        assert pm.entries == ((0, 4), (4, 5))
        assert pm.determinant == -16
        assert pm.nondegenerate

    def test_projective_plane(self):
        ci = CompleteIntersection(AmbientSpace([2]), [])
        h = ci.space.generator(0)
        pm = ci.pairing_matrix([h], [h])
        assert pm.entries == ((1,),)
        assert pm.determinant == 1

    def test_p1_x_p1(self):
        ci = CompleteIntersection(AmbientSpace([1, 1]), [])
        h0, h1 = ci.space.generator(0), ci.space.generator(1)
        pm = ci.pairing_matrix([h0, h1], [h0, h1])
        assert pm.entries == ((0, 1), (1, 0))

    def test_entries_recompute(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        rows = [alpha, beta]
        cols = [alpha * beta, beta * beta]
        pm = quintic_ci.pairing_matrix(rows, cols)
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                assert pm.entries[i][j] == quintic_ci.intersection_number([r, c])

    def test_row_degree_validated(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        with pytest.raises(ValidationError, match="row"):
            quintic_ci.pairing_matrix([alpha * beta], [alpha * beta])

    def test_col_degree_validated(self, quintic_ci):
        alpha, beta = basis(quintic_ci)
        with pytest.raises(ValidationError, match="column"):
            quintic_ci.pairing_matrix([alpha], [beta])


class TestDivisorRelations:
    def test_exceptional_classes(self, quintic_ci):
        space = quintic_ci.space
        alpha, beta = basis(quintic_ci)
        e1 = divisor_class(space, (1, 0)) - divisor_class(space, (0, 1))
        e2 = divisor_class(space, (4, 0)) - divisor_class(space, (0, 1))
        assert e1 == beta - alpha
        assert e2 == 4 * beta - alpha
