"""End-to-end cone computations on a rank-2 complete-intersection scenario.

A scenario fixes a complete intersection, a 2-element basis of degree-1
classes, a 2-element basis of degree dim-1 classes, and two cones written in
degree-1 coordinates: the Kähler cone and the (pseudo-)effective cone.  The
effective cone is input, not derived; what the pipeline verifies about it is
arithmetic (pairing certificates), not geometry.

Degree dim-1 classes are handled only through their intersection numbers
against the degree-1 basis (numerical equivalence), so the codim coordinate
space is exactly what the pairing matrix sees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Optional, Tuple

from .cones import Cone2D, Pairing, Ray, cone_new, det2, dual_cone, is_subcone, ray_normalize
from .errors import ComputationError, DegeneratePairingError, ValidationError
from .ring import AmbientSpace, CohomClass, divisor_class, linear_combination
from .variety import CompleteIntersection, PairingMatrix


@dataclass(frozen=True)
class Scenario:
    """Input datum for the cone pipeline; immutable after validation."""

    ci: CompleteIntersection
    h11_names: Tuple[str, str]
    h11_classes: Tuple[CohomClass, CohomClass]
    codim_names: Tuple[str, str]
    codim_classes: Tuple[CohomClass, CohomClass]
    kahler_cone: Cone2D
    effective_cone: Cone2D
    prime_divisors: Tuple[Tuple[str, Tuple[int, int]], ...] = ()
    codim_exprs: Optional[Tuple[str, str]] = None
    pairing_matrix: PairingMatrix = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if len(self.h11_names) != 2 or len(self.h11_classes) != 2:
            raise ValidationError("scenario needs exactly two degree-1 basis classes")
        if len(self.codim_names) != 2 or len(self.codim_classes) != 2:
            raise ValidationError(
                f"scenario needs exactly two degree-{self.ci.dim - 1} basis classes"
            )
        pm = self.ci.pairing_matrix(self.h11_classes, self.codim_classes)
        if not pm.nondegenerate:
            raise ValidationError(
                "intersection pairing of the chosen bases is degenerate"
            )
        object.__setattr__(self, "pairing_matrix", pm)

    def intersection_pairing(self) -> Pairing:
        return Pairing(self.pairing_matrix.entries)

    def h11_combination(self, coords) -> CohomClass:
        """Ambient class with the given coordinates in the degree-1 basis."""
        return linear_combination(list(zip(coords, self.h11_classes)))

    def prime_divisor_coords(self, name: str) -> Tuple[int, int]:
        for n, coords in self.prime_divisors:
            if n == name:
                return coords
        raise ValidationError(f"scenario declares no prime divisor named {name!r}")


@dataclass(frozen=True)
class GapReport:
    """Comparison of the balanced-map image closure with the balanced cone.

    ``gap_generators`` are the two rays bounding the difference region,
    ordered (image-side ray, balanced-side ray); both are empty/None when
    the inclusion is not strict.
    """

    image_closure: Cone2D
    balanced_cone: Cone2D
    strict: bool
    gap_generators: Tuple[Ray, ...]
    witness: Optional[Ray]


def express_in_basis(ci, p, h11_basis, codim_basis) -> Tuple[Fraction, Fraction]:
    """Coordinates of a degree dim-1 class in the codim basis.

    Solves M c = w where M is the pairing of the bases and
    w_i = intersection number of h11_i with p.  The result c makes p
    numerically equivalent to c1*codim1 + c2*codim2 on the intersection.
    """
    h11_basis = tuple(h11_basis)
    codim_basis = tuple(codim_basis)
    if len(h11_basis) != 2 or len(codim_basis) != 2:
        raise ValidationError("coordinate expression needs rank-2 bases")
    pm = ci.pairing_matrix(h11_basis, codim_basis)
    det = pm.determinant
    if det == 0:
        raise DegeneratePairingError("codim basis does not span under pairing")
    w = tuple(ci.intersection_number([h, p]) for h in h11_basis)
    (m00, m01), (m10, m11) = pm.entries
    c1 = (w[0] * m11 - m01 * w[1]) / det
    c2 = (m00 * w[1] - w[0] * m10) / det
    return (c1, c2)


def _image_term_coordinates(scenario: Scenario):
    """Codim coordinates of the binomial terms of (s*u + t*v)^(dim-1).

    Ordered from the u-dominant exponent down to the v-dominant one, with
    the binomial coefficients included.
    """
    n = scenario.ci.dim - 1
    u = scenario.h11_combination(scenario.kahler_cone.r1.coords)
    v = scenario.h11_combination(scenario.kahler_cone.r2.coords)
    coords = []
    for j in range(n, -1, -1):
        term = (u ** j) * (v ** (n - j)) * comb(n, j)
        coords.append(
            express_in_basis(
                scenario.ci, term, scenario.h11_classes, scenario.codim_classes
            )
        )
    return coords


def balanced_image_closure(scenario: Scenario) -> Cone2D:
    """Closure of the image of the open Kähler cone under x -> x^(dim-1).

    The boundary rays are the first terms with non-zero codim coordinates
    scanning the binomial expansion from the u-dominant end and from the
    v-dominant end.  Leading non-zero terms, not boundary samples: a
    generator with u^(dim-1) = 0 still sends the boundary to the ray of the
    next surviving mixed term, and the scan captures that exactly.
    """
    coords = _image_term_coordinates(scenario)
    first = next((c for c in coords if any(c)), None)
    last = next((c for c in reversed(coords) if any(c)), None)
    if first is None:
        raise ComputationError("balanced map degenerate on this cone (all terms vanish)")
    try:
        return cone_new(first, last)
    except ValidationError as e:
        raise ComputationError(
            f"balanced-map image closure is not a planar cone: {e}"
        ) from e


def balanced_cone(scenario: Scenario) -> Cone2D:
    """Dual of the effective cone under the intersection pairing.

    Lives in codim coordinates; its boundary rays annihilate the boundary
    rays of the effective cone.
    """
    return dual_cone(scenario.effective_cone, scenario.intersection_pairing())


def divisor_bound_functional(scenario: Scenario, known_prime, ample) -> Tuple[Fraction, Fraction]:
    """Coefficients (l1, l2) of a1, a2 in the triple product against a known prime.

    For D = a1*h1 + a2*h2 the value of the integral of D ^ P ^ A equals
    l1*a1 + l2*a2, where P is the known prime divisor class and A the ample
    class, both given in degree-1 coordinates.  Non-negativity of this form
    on valid (a1, a2) certifies bounds on prime divisor classes.
    """
    a = tuple(Fraction(x) for x in ample)
    if len(a) != 2:
        raise ValidationError("ample class needs exactly two coordinates")
    if a[0] <= 0 or a[1] <= 0:
        raise ValidationError("ample coordinates must be strictly positive")
    kp = tuple(Fraction(x) for x in known_prime)
    if len(kp) != 2:
        raise ValidationError("prime divisor class needs exactly two coordinates")
    p_cls = scenario.h11_combination(kp)
    a_cls = scenario.h11_combination(a)
    return tuple(
        scenario.ci.intersection_number([h, p_cls, a_cls])
        for h in scenario.h11_classes
    )


def _gap_witness(image_ray: Ray, balanced_ray: Ray) -> Ray:
    # Sum after rescaling both rays to a common last coordinate, so the
    # witness agrees with the monic normalization of the boundary classes;
    # plain ray sum when that rescaling is undefined.
    if image_ray.y > 0 and balanced_ray.y > 0:
        m = lcm(image_ray.y, balanced_ray.y)
        v = (
            image_ray.x * (m // image_ray.y) + balanced_ray.x * (m // balanced_ray.y),
            2 * m,
        )
    else:
        v = (image_ray.x + balanced_ray.x, image_ray.y + balanced_ray.y)
    return ray_normalize(v)


def gap_report(scenario: Scenario) -> GapReport:
    """Image closure, balanced cone, and the gap between them.

    Raises a computation error if the image escapes the balanced cone,
    which signals an effective cone inconsistent with the pairing.
    """
    image = balanced_image_closure(scenario)
    bal = balanced_cone(scenario)
    if not is_subcone(image, bal):
        raise ComputationError(
            "balanced-map image is not contained in the balanced cone; "
            "the supplied effective cone is inconsistent with the pairing"
        )
    if not is_subcone(image, bal, strict=True):
        return GapReport(image, bal, False, (), None)
    outside = [g for g in bal.generators() if not image.contains(g)]
    gap_ray = next(
        (g for g in outside if det2(image.r2.coords, g.coords) > 0), None
    )
    if gap_ray is not None:
        pair = (image.r2, gap_ray)
    else:
        gap_ray = next(g for g in outside if det2(g.coords, image.r1.coords) > 0)
        pair = (image.r1, gap_ray)
    return GapReport(image, bal, True, pair, _gap_witness(*pair))


def quintic_conifold_scenario() -> Scenario:
    """Built-in scenario: the small resolution of the quintic conifold.

    The threefold sits in P^4 x P^1, cut out by equations of multidegree
    (1,1) and (4,1).  The degree-1 basis is (α, β) with α pulled back from
    P^1 and β from P^4; the degree-2 basis is (α∧β, β∧β).  The Kähler cone
    is the coordinate quadrant and the effective cone is spanned by α and
    β−α, with the prime divisors E1 = β−α and E2 = 4β−α recorded.
    """
    space = AmbientSpace([4, 1])
    ci = CompleteIntersection(space, [(1, 1), (4, 1)])
    alpha = divisor_class(space, (0, 1))
    beta = divisor_class(space, (1, 0))
    return Scenario(
        ci=ci,
        h11_names=("α", "β"),
        h11_classes=(alpha, beta),
        codim_names=("α∧β", "β∧β"),
        codim_classes=(alpha * beta, beta * beta),
        kahler_cone=cone_new((1, 0), (0, 1)),
        effective_cone=cone_new((1, 0), (-1, 1)),
        prime_divisors=(("E1", (-1, 1)), ("E2", (-1, 4))),
        codim_exprs=("α*β", "β*β"),
    )
