"""
Brute-force oracle for the orbit-marking argument.

If X is a principal homogeneous space for a group containing H and an
element g of N(H), and g leaves one H-orbit of X stable, then g lies in H.
The oracle decides orbit stability exactly and, for small degrees,
confirms the predicted membership by enumerating H.
"""
from __future__ import annotations

from typing import Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from shimforge.config.settings import BRUTE_FORCE_MAX_DEGREE
from shimforge.errors import NotNormalizing, PreconditionError, PrincipalHomogeneityViolated
from shimforge.utils.logger import log


def to_permutation(images: Sequence[int], n: int) -> Permutation:
    """Permutation from 1-based images of 1..n."""
    if sorted(images) != list(range(1, n + 1)):
        raise PreconditionError(f"{list(images)} is not a permutation of 1..{n}")
    return Permutation([i - 1 for i in images])


def orbit_marking_oracle(
    n: int,
    subgroup_generators: Sequence[Sequence[int]],
    normalizer_element: Sequence[int],
    orbit_representative: int,
) -> bool:
    """
    True iff the element maps the H-orbit of the representative onto itself.

    Raises:
        NotNormalizing: the element does not normalize H = <generators>
        PrincipalHomogeneityViolated: <H, element> does not act freely on 1..n
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if not 1 <= orbit_representative <= n:
        raise PreconditionError(f"orbit representative {orbit_representative} not in 1..{n}")

    identity = Permutation(list(range(n)))
    generators = [to_permutation(images, n) for images in subgroup_generators] or [identity]
    g = to_permutation(normalizer_element, n)
    subgroup = PermutationGroup(generators)

    for h in generators:
        if not subgroup.contains(~g * h * g):
            raise NotNormalizing(f"{list(normalizer_element)} does not normalize the subgroup")

    # Free action: every orbit of <H, g> has full size
    supergroup = PermutationGroup(generators + [g])
    order = supergroup.order()
    sizes = sorted(len(orbit) for orbit in supergroup.orbits())
    if any(size != order for size in sizes):
        raise PrincipalHomogeneityViolated(
            f"orbit sizes {sizes} of a group of order {order}; the action is not free"
        )

    orbit = subgroup.orbit(orbit_representative - 1)
    image = {g.array_form[x] for x in orbit}
    stable = image == set(orbit)

    if stable and n <= BRUTE_FORCE_MAX_DEGREE:
        members = {tuple(h.array_form) for h in subgroup.generate()}
        if tuple(g.array_form) not in members:
            raise RuntimeError("stable orbit under an element outside H in a free action")
        log.debug(f"orbit of {orbit_representative} stable; membership confirmed in |H|={len(members)}")
    return stable
