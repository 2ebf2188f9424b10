"""Finite-index subgroups of a free group, given by coset actions.

A `PermRep` sends each generator to a permutation of {0,...,n-1}; the
subgroup it encodes is the set of words fixing the basepoint, and the
points are its right cosets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .groups import (
    DEFAULT_ELEMENT_CAP,
    FiniteGroup,
    Perm,
    check_perm,
    closure,
    invert_perm,
)
from .words import Alphabet, Word


@dataclass(frozen=True)
class PermRep:
    """A homomorphism from the free group into Sym(degree), with basepoint."""

    alphabet: Alphabet
    degree: int
    images: tuple[Perm, ...]
    basepoint: int = 0
    inverse_images: tuple[Perm, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InputError("degree must be a positive integer")
        if len(self.images) != len(self.alphabet):
            raise InputError(
                f"expected {len(self.alphabet)} generator images, got {len(self.images)}"
            )
        images = tuple(check_perm(p, self.degree) for p in self.images)
        object.__setattr__(self, "images", images)
        if not 0 <= self.basepoint < self.degree:
            raise InputError(f"basepoint {self.basepoint} out of range")
        object.__setattr__(
            self, "inverse_images", tuple(invert_perm(p) for p in images)
        )


def act(rep: PermRep, word: Word, point: int) -> int:
    """Apply the image permutations of the letters left to right (right action)."""
    if word.alphabet != rep.alphabet:
        raise InputError("alphabet mismatch between word and representation")
    if not 0 <= point < rep.degree:
        raise InputError(f"point {point} out of range for degree {rep.degree}")
    images = rep.images
    inverses = rep.inverse_images
    for gen, sign in word.letters:
        point = images[gen][point] if sign > 0 else inverses[gen][point]
    return point


def contains(rep: PermRep, word: Word) -> bool:
    """Whether the word lies in the subgroup (fixes the basepoint)."""
    return act(rep, word, rep.basepoint) == rep.basepoint


def orbit(rep: PermRep, point: int) -> set[int]:
    # Forward images suffice: a finite set closed under a bijection is
    # closed under its inverse.
    if not 0 <= point < rep.degree:
        raise InputError(f"point {point} out of range for degree {rep.degree}")
    seen = {point}
    stack = [point]
    while stack:
        p = stack.pop()
        for image in rep.images:
            q = image[p]
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def is_transitive(rep: PermRep) -> bool:
    return len(orbit(rep, rep.basepoint)) == rep.degree


def index(rep: PermRep) -> int:
    """The subgroup's index, i.e. the degree of a transitive coset action."""
    if not is_transitive(rep):
        raise InputError("coset action not transitive")
    return rep.degree


def normal_core_image(rep: PermRep, cap: int = DEFAULT_ELEMENT_CAP) -> FiniteGroup:
    """The image of the action: the finite quotient by the normal core."""
    return closure(rep.degree, rep.images, cap)


def rep_from_dict(data: object) -> PermRep:
    """Build a rep from the JSON subgroup spec.

    Expected shape: `{"alphabet": ["a", "b"], "degree": 3,
    "images": {"a": [1, 2, 0], "b": [0, 1, 2]}, "basepoint": 0}`.
    """
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    required = {"alphabet", "degree", "images"}
    missing = required - data.keys()
    if missing:
        raise InputError(f"missing keys: {sorted(missing)}")
    unknown = data.keys() - required - {"basepoint"}
    if unknown:
        raise InputError(f"unknown keys: {sorted(unknown)}")
    names = data["alphabet"]
    if not isinstance(names, list):
        raise InputError("alphabet must be a list of generator names")
    alphabet = Alphabet(tuple(names))
    degree = data["degree"]
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise InputError("degree must be a positive integer")
    images_spec = data["images"]
    if not isinstance(images_spec, dict):
        raise InputError("images must map generator names to permutation arrays")
    unknown_gens = images_spec.keys() - set(alphabet.names)
    if unknown_gens:
        raise InputError(f"images given for unknown generators: {sorted(unknown_gens)}")
    images = []
    for name in alphabet.names:
        if name not in images_spec:
            raise InputError(f"missing image for generator {name!r}")
        images.append(check_perm(images_spec[name], degree))
    basepoint = data.get("basepoint", 0)
    if not isinstance(basepoint, int) or isinstance(basepoint, bool):
        raise InputError("basepoint must be an integer")
    return PermRep(alphabet, degree, tuple(images), basepoint)


def rep_to_dict(rep: PermRep) -> dict:
    return {
        "alphabet": list(rep.alphabet.names),
        "degree": rep.degree,
        "images": {
            name: list(rep.images[i]) for i, name in enumerate(rep.alphabet.names)
        },
        "basepoint": rep.basepoint,
    }
