"""Finite permutation groups with explicit element enumeration.

Permutations are tuples `p` with `p[i]` the image of point `i`.  All
actions are right actions and products read left to right:
`compose(p, q)` applies `p` first, then `q`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError, ResourceLimitError

Perm = tuple[int, ...]

DEFAULT_ELEMENT_CAP = 10000


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def check_perm(mapping: Sequence[int], degree: int) -> Perm:
    p = tuple(int(i) for i in mapping)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise InputError(f"not a permutation of {degree} points: {list(mapping)!r}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """Product `apply p, then q`; point i goes to q[p[i]]."""
    return tuple(q[i] for i in p)


def invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class FiniteGroup:
    """A permutation group given by its full, deduplicated element list."""

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    index_of: dict[Perm, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for p in self.elements:
            check_perm(p, self.degree)
        index = {p: i for i, p in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise InputError("duplicate elements in group enumeration")
        object.__setattr__(self, "index_of", index)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return identity_perm(self.degree)

    def __contains__(self, p: Perm) -> bool:
        return p in self.index_of

    def mul(self, a: Perm, b: Perm) -> Perm:
        return compose(a, b)

    def inv(self, a: Perm) -> Perm:
        return invert_perm(a)


def closure(
    degree: int,
    generators: Iterable[Sequence[int]],
    cap: int = DEFAULT_ELEMENT_CAP,
) -> FiniteGroup:
    """Breadth-first closure of the generators under composition.

    Element order is the BFS insertion order (generators tried in the
    given order), so the identity always comes first.
    """
    gens = tuple(check_perm(g, degree) for g in generators)
    ident = identity_perm(degree)
    elements = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        e = queue.popleft()
        for g in gens:
            f = compose(e, g)
            if f not in seen:
                if len(elements) >= cap:
                    raise ResourceLimitError(
                        f"group closure exceeded the element cap of {cap}"
                    )
                seen.add(f)
                elements.append(f)
                queue.append(f)
    return FiniteGroup(degree, gens, tuple(elements))


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup of `parent` given by generators drawn from it."""

    parent: FiniteGroup
    generators: tuple[Perm, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g not in self.parent:
                raise InputError(
                    f"subgroup generator {list(g)!r} is not an element of the parent group"
                )


@dataclass(frozen=True)
class CosetSpace:
    """Right cosets Hg with coset 0 = H and first-seen representatives.

    Scanning the parent's element list guarantees the representative of
    coset 0 is the identity.  `rho[g]` is the permutation s -> s.g of
    coset indices; composing rho values left to right matches products
    in the parent.
    """

    group: FiniteGroup
    subgroup: FiniteGroup
    cosets: tuple[tuple[Perm, ...], ...]
    representatives: tuple[Perm, ...]
    coset_of: dict[Perm, int] = field(init=False, repr=False, compare=False)
    rho: dict[Perm, Perm] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        coset_of = {
            member: idx for idx, members in enumerate(self.cosets) for member in members
        }
        object.__setattr__(self, "coset_of", coset_of)
        rho = {
            g: tuple(coset_of[compose(r, g)] for r in self.representatives)
            for g in self.group.elements
        }
        object.__setattr__(self, "rho", rho)

    @property
    def num_cosets(self) -> int:
        return len(self.representatives)

    def rho_image(self, cap: int = DEFAULT_ELEMENT_CAP) -> FiniteGroup:
        """The image of the coset action as an enumerated permutation group."""
        return closure(self.num_cosets, tuple(self.rho[g] for g in self.group.generators), cap)


def right_cosets(group: FiniteGroup, subgroup: SubgroupSpec) -> CosetSpace:
    """Enumerate H\\G in first-seen order scanning the group's element list."""
    if subgroup.parent is not group and subgroup.parent != group:
        raise InputError("subgroup spec does not belong to the given group")
    h = closure(group.degree, subgroup.generators, cap=group.order)
    assigned: dict[Perm, int] = {}
    cosets: list[tuple[Perm, ...]] = []
    reps: list[Perm] = []
    for g in group.elements:
        if g in assigned:
            continue
        idx = len(reps)
        reps.append(g)
        members = tuple(compose(x, g) for x in h.elements)
        for member in members:
            if member not in group:
                raise InputError("subgroup closure left the parent group")
            assigned[member] = idx
        cosets.append(members)
    return CosetSpace(group, h, tuple(cosets), tuple(reps))


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("cyclic group order must be positive")
    return closure(n, (tuple((i + 1) % n for i in range(n)),))


def symmetric_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("symmetric group degree must be positive")
    if n == 1:
        return closure(1, ())
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    return closure(n, (swap, cycle))


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon acting on its vertices (order 2n)."""
    if n < 3:
        raise InputError("dihedral group needs at least 3 vertices")
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((n - i) % n for i in range(n))
    return closure(n, (rotation, reflection))


def group_from_dict(data: object, cap: int = DEFAULT_ELEMENT_CAP) -> FiniteGroup:
    """Build a group from `{"degree": n, "generators": [[...], ...]}`."""
    spec = _require_keys(data, required={"degree", "generators"}, optional=set())
    degree = _require_positive_int(spec["degree"], "degree")
    generators = spec["generators"]
    if not isinstance(generators, list):
        raise InputError("generators must be a list of permutation arrays")
    return closure(degree, tuple(check_perm(g, degree) for g in generators), cap)


def subgrouped_group_from_dict(
    data: object, cap: int = DEFAULT_ELEMENT_CAP
) -> tuple[FiniteGroup, SubgroupSpec]:
    """Like `group_from_dict` with an additional `subgroup_generators` key."""
    spec = _require_keys(
        data, required={"degree", "generators", "subgroup_generators"}, optional=set()
    )
    group = group_from_dict(
        {"degree": spec["degree"], "generators": spec["generators"]}, cap
    )
    sub_gens = spec["subgroup_generators"]
    if not isinstance(sub_gens, list):
        raise InputError("subgroup_generators must be a list of permutation arrays")
    subgroup = SubgroupSpec(
        group, tuple(check_perm(g, group.degree) for g in sub_gens)
    )
    return group, subgroup


def _require_keys(data: object, required: set, optional: set) -> dict:
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    missing = required - data.keys()
    if missing:
        raise InputError(f"missing keys: {sorted(missing)}")
    unknown = data.keys() - required - optional
    if unknown:
        raise InputError(f"unknown keys: {sorted(unknown)}")
    return data


def _require_positive_int(value: object, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InputError(f"{name} must be a positive integer")
    return value
