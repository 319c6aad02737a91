import random
from fractions import Fraction
from itertools import combinations

import pytest

from balcone.cones import Ray, cone_new, is_subcone
from balcone.errors import ComputationError, ValidationError
from balcone.pipeline import (
    Scenario,
    balanced_cone,
    balanced_image_closure,
    divisor_bound_functional,
    express_in_basis,
    gap_report,
    quintic_conifold_scenario,
)
from balcone.ring import AmbientSpace
from balcone.variety import CompleteIntersection


@pytest.fixture(scope="module")
def sc():
    return quintic_conifold_scenario()


def with_effective(sc, cone):
    return Scenario(
        ci=sc.ci,
        h11_names=sc.h11_names,
        h11_classes=sc.h11_classes,
        codim_names=sc.codim_names,
        codim_classes=sc.codim_classes,
        kahler_cone=sc.kahler_cone,
        effective_cone=cone,
        prime_divisors=sc.prime_divisors,
        codim_exprs=sc.codim_exprs,
    )


class TestScenario:
    def test_pairing_matrix(self, sc):
        assert sc.pairing_matrix.entries == ((0, 4), (4, 5))
        assert sc.pairing_matrix.determinant == -16

    def test_dimension(self, sc):
        assert sc.ci.dim == 3

    def test_exceptional_divisor_coords_consistent(self, sc):
        # 4*(0,1) + 1*(-1,0) = (-1,4), matching class(4,0) - class(0,1)
        coords = dict(sc.prime_divisors)["E2"]
        assert coords == (-1, 4)
        assert (4 * 0 + (-1), 4 * 1 + 0) == coords

    def test_unknown_prime(self, sc):
        with pytest.raises(ValidationError):
            sc.prime_divisor_coords("E9")


class TestExpressInBasis:
    def test_basis_element(self, sc):
        beta = sc.h11_classes[1]
        got = express_in_basis(sc.ci, beta * beta, sc.h11_classes, sc.codim_classes)
        assert got == (0, 1)

    def test_square_of_sum(self, sc):
        alpha, beta = sc.h11_classes
        got = express_in_basis(
            sc.ci, (alpha + beta) ** 2, sc.h11_classes, sc.codim_classes
        )
        assert got == (2, 1)

    def test_zero_class(self, sc):
        alpha = sc.h11_classes[0]
        got = express_in_basis(
            sc.ci, alpha * alpha, sc.h11_classes, sc.codim_classes
        )
        assert got == (0, 0)


class TestBalancedImageClosure:
    def test_quintic(self, sc):
        assert balanced_image_closure(sc) == cone_new((1, 0), (0, 1))

    def test_interior_sample(self, sc):
        alpha, beta = sc.h11_classes
        coords = express_in_basis(
            sc.ci, (alpha + beta) ** 2, sc.h11_classes, sc.codim_classes
        )
        assert balanced_image_closure(sc).contains(coords, "open")

    def test_v_dominant_ray_is_top_power(self, sc):
        beta = sc.h11_classes[1]
        coords = express_in_basis(sc.ci, beta * beta, sc.h11_classes, sc.codim_classes)
        assert Ray(*(int(c) for c in coords)) in balanced_image_closure(sc).generators()

    def test_scaling_generators_is_invariant(self, sc):
        scaled = Scenario(
            ci=sc.ci,
            h11_names=sc.h11_names,
            h11_classes=sc.h11_classes,
            codim_names=sc.codim_names,
            codim_classes=sc.codim_classes,
            kahler_cone=cone_new((Fraction(7, 3), 0), (0, Fraction(2, 5))),
            effective_cone=sc.effective_cone,
            prime_divisors=sc.prime_divisors,
            codim_exprs=sc.codim_exprs,
        )
        assert balanced_image_closure(scaled) == balanced_image_closure(sc)


class TestBalancedCone:
    def test_quintic(self, sc):
        assert balanced_cone(sc) == cone_new((1, 0), (-1, 4))

    def test_nef_closure_as_effective(self, sc):
        got = balanced_cone(with_effective(sc, cone_new((1, 0), (0, 1))))
        assert got == cone_new((1, 0), (-5, 4))

    def test_identity_pairing_quadrant(self):
        space = AmbientSpace([1, 1])
        ci = CompleteIntersection(space, [])
        h0, h1 = space.generator(0), space.generator(1)
        scenario = Scenario(
            ci=ci,
            h11_names=("h0", "h1"),
            h11_classes=(h0, h1),
            codim_names=("c0", "c1"),
            codim_classes=(h1, h0),  # pairing is the identity with this order
            kahler_cone=cone_new((1, 0), (0, 1)),
            effective_cone=cone_new((1, 0), (0, 1)),
        )
        assert scenario.pairing_matrix.entries == ((1, 0), (0, 1))
        assert balanced_cone(scenario) == cone_new((1, 0), (0, 1))


class TestBoundFunctional:
    def test_proportional_ample(self, sc):
        assert divisor_bound_functional(sc, (-1, 1), (3, 4)) == (16, 16)

    def test_unit_ample(self, sc):
        assert divisor_bound_functional(sc, (-1, 1), (1, 1)) == (4, 5)

    def test_zero_prime(self, sc):
        assert divisor_bound_functional(sc, (0, 0), (3, 4)) == (0, 0)

    def test_nonpositive_ample_rejected(self, sc):
        with pytest.raises(ValidationError, match="positive"):
            divisor_bound_functional(sc, (-1, 1), (3, 0))

    def test_linear_in_prime(self, sc):
        rng = random.Random(17)
        for _ in range(50):
            p1 = (rng.randint(-5, 5), rng.randint(-5, 5))
            p2 = (rng.randint(-5, 5), rng.randint(-5, 5))
            a = rng.randint(0, 6)
            b = rng.randint(1, 6)
            combo = (a * p1[0] + b * p2[0], a * p1[1] + b * p2[1])
            ample = (rng.randint(1, 7), rng.randint(1, 7))
            l1 = divisor_bound_functional(sc, p1, ample)
            l2 = divisor_bound_functional(sc, p2, ample)
            lc = divisor_bound_functional(sc, combo, ample)
            assert lc == (a * l1[0] + b * l2[0], a * l1[1] + b * l2[1])

    def test_linear_in_ample(self, sc):
        rng = random.Random(23)
        for _ in range(50):
            prime = (rng.randint(-5, 5), rng.randint(-5, 5))
            a1 = (rng.randint(1, 7), rng.randint(1, 7))
            a2 = (rng.randint(1, 7), rng.randint(1, 7))
            c = rng.randint(1, 5)
            d = rng.randint(1, 5)
            combo = (c * a1[0] + d * a2[0], c * a1[1] + d * a2[1])
            l1 = divisor_bound_functional(sc, prime, a1)
            l2 = divisor_bound_functional(sc, prime, a2)
            lc = divisor_bound_functional(sc, prime, combo)
            assert lc == (c * l1[0] + d * l2[0], c * l1[1] + d * l2[1])


class TestGapReport:
    def test_quintic(self, sc):
        gr = gap_report(sc)
        assert gr.image_closure == cone_new((1, 0), (0, 1))
        assert gr.balanced_cone == cone_new((1, 0), (-1, 4))
        assert gr.strict
        assert gr.gap_generators == (Ray(0, 1), Ray(-1, 4))
        assert gr.witness == Ray(-1, 8)

    def test_witness_memberships(self, sc):
        gr = gap_report(sc)
        assert gr.balanced_cone.contains(gr.witness, "open")
        assert not gr.image_closure.contains(gr.witness)

    def test_nef_closure_gap(self, sc):
        gr = gap_report(with_effective(sc, cone_new((1, 0), (0, 1))))
        assert gr.strict
        assert gr.gap_generators == (Ray(0, 1), Ray(-5, 4))

    def test_inclusion_always_in_report(self, sc):
        gr = gap_report(sc)
        assert is_subcone(gr.image_closure, gr.balanced_cone)

    def test_inconsistent_effective_cone_rejected(self, sc):
        # 2*alpha - beta pairs negatively with the image ray alpha^beta
        bad = with_effective(sc, cone_new((2, -1), (-1, 1)))
        with pytest.raises(ComputationError, match="not contained"):
            gap_report(bad)


def random_product_scenario(rng):
    """Random two-factor complete intersection with nef closure as effective cone."""
    while True:
        a = rng.randint(1, 4)
        b = rng.randint(1, 5 - a) if a < 5 else 1
        space = AmbientSpace([a, b])
        m = rng.randint(0, max(0, a + b - 2))
        divisors = []
        for _ in range(m):
            d = (rng.randint(0, 2), rng.randint(0, 2))
            if d == (0, 0):
                d = (1, 0)
            divisors.append(d)
        try:
            ci = CompleteIntersection(space, divisors)
        except ValidationError:
            continue
        if ci.dim < 2:
            continue
        h0, h1 = space.generator(0), space.generator(1)
        n = ci.dim - 1
        candidates = [
            (f"h0^{i}*h1^{n - i}", (h0 ** i) * (h1 ** (n - i)))
            for i in range(n + 1)
            if not ((h0 ** i) * (h1 ** (n - i))).is_zero()
        ]
        quadrant = cone_new((1, 0), (0, 1))
        for (na, ca), (nb, cb) in combinations(candidates, 2):
            try:
                return Scenario(
                    ci=ci,
                    h11_names=("h0", "h1"),
                    h11_classes=(h0, h1),
                    codim_names=(na, nb),
                    codim_classes=(ca, cb),
                    kahler_cone=quadrant,
                    effective_cone=quadrant,
                )
            except ValidationError:
                continue


class TestRandomScenarios:
    def test_image_inside_balanced(self):
        rng = random.Random(31)
        checked = 0
        for _ in range(60):
            scenario = random_product_scenario(rng)
            try:
                image = balanced_image_closure(scenario)
            except ComputationError:
                continue  # image collapsed to a single ray; nothing to compare
            bal = balanced_cone(scenario)
            assert is_subcone(image, bal)
            gr = gap_report(scenario)
            if gr.strict:
                assert gr.balanced_cone.contains(gr.witness, "open")
                assert not gr.image_closure.contains(gr.witness)
            checked += 1
        assert checked >= 40
