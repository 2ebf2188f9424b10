"""Wreath products of finite permutation groups and the coset-table
embedding of a group into H wr rho(G)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, InternalConsistencyError
from .groups import (
    CosetSpace,
    FiniteGroup,
    Perm,
    SubgroupSpec,
    closure,
    compose,
    identity_perm,
    invert_perm,
    right_cosets,
)


@dataclass(frozen=True)
class WreathContext:
    """Ambient data for A wr G acting on a finite index set.

    `base_point` is the index of the trivial coset, where the fiber
    projection reads off its value.
    """

    fiber_group: FiniteGroup
    sigma_size: int
    top_group: FiniteGroup
    base_point: int = 0

    def __post_init__(self) -> None:
        if self.top_group.degree != self.sigma_size:
            raise InputError("top group degree must equal the index-set size")
        if not 0 <= self.base_point < self.sigma_size:
            raise InputError("base point out of range")


@dataclass(frozen=True)
class WreathElement:
    """A pair (fiber values, top permutation)."""

    fiber: tuple[Perm, ...]
    top: Perm


def wreath_identity(ctx: WreathContext) -> WreathElement:
    one = identity_perm(ctx.fiber_group.degree)
    return WreathElement((one,) * ctx.sigma_size, identity_perm(ctx.sigma_size))


def _check_dims(ctx: WreathContext, element: WreathElement) -> None:
    if len(element.fiber) != ctx.sigma_size or len(element.top) != ctx.sigma_size:
        raise InputError("wreath element dimension mismatch")


def wmul(ctx: WreathContext, u: WreathElement, v: WreathElement) -> WreathElement:
    """Semidirect product: fiber s gets u.fiber[s] * v.fiber[s.u.top]."""
    _check_dims(ctx, u)
    _check_dims(ctx, v)
    fiber = tuple(
        compose(u.fiber[s], v.fiber[u.top[s]]) for s in range(ctx.sigma_size)
    )
    return WreathElement(fiber, compose(u.top, v.top))


def winv(ctx: WreathContext, u: WreathElement) -> WreathElement:
    _check_dims(ctx, u)
    top_inv = invert_perm(u.top)
    fiber = tuple(invert_perm(u.fiber[top_inv[s]]) for s in range(ctx.sigma_size))
    return WreathElement(fiber, top_inv)


def diagonal(ctx: WreathContext, a: Perm) -> tuple[Perm, ...]:
    """Constant fiber array with value a."""
    if a not in ctx.fiber_group:
        raise InputError("value is not an element of the fiber group")
    return (a,) * ctx.sigma_size


def project_pi(ctx: WreathContext, element: WreathElement) -> Perm:
    """Evaluate the fiber at the trivial coset."""
    _check_dims(ctx, element)
    return element.fiber[ctx.base_point]


@dataclass(frozen=True)
class Embedding:
    """The map g -> (s -> T(s).g.T(s.g)^-1, rho(g)) into H wr rho(G)."""

    coset_space: CosetSpace
    context: WreathContext
    phi: dict[Perm, WreathElement] = field(compare=False)


def embed(group: FiniteGroup, subgroup: SubgroupSpec) -> Embedding:
    cs = right_cosets(group, subgroup)
    m = cs.num_cosets
    reps = cs.representatives
    rep_invs = tuple(invert_perm(r) for r in reps)
    top = closure(m, tuple(cs.rho[g] for g in group.generators), cap=group.order)
    ctx = WreathContext(cs.subgroup, m, top)
    phi: dict[Perm, WreathElement] = {}
    for g in group.elements:
        rho_g = cs.rho[g]
        fiber = []
        for s in range(m):
            value = compose(compose(reps[s], g), rep_invs[rho_g[s]])
            if value not in cs.subgroup:
                raise InternalConsistencyError(
                    "coset representative product left the subgroup"
                )
            fiber.append(value)
        phi[g] = WreathElement(tuple(fiber), rho_g)
    return Embedding(cs, ctx, phi)
