"""Extending a map on the Schreier basis to the whole subgroup.

Values assigned to basis elements are pushed through the wreath product:
each generator becomes a wreath element whose fiber reads off assigned
values along the transversal, words multiply out by the semidirect law,
and projecting at the basepoint recovers the extension on the subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .action import act, normal_core_image
from .errors import InputError, InternalConsistencyError
from .groups import FiniteGroup, Perm, check_perm, compose, invert_perm
from .schreier import Basis, rewrite
from .words import Alphabet, Letter, Word
from .wreath import (
    WreathContext,
    WreathElement,
    project_pi,
    winv,
    wmul,
    wreath_identity,
)


@dataclass(frozen=True)
class FiniteSupportMap:
    """Generator values in a finite group; unlisted generators map to identity."""

    alphabet: Alphabet
    target: FiniteGroup
    assignments: Mapping[int, Perm]

    def __post_init__(self) -> None:
        for gen, value in self.assignments.items():
            if not 0 <= gen < len(self.alphabet):
                raise InputError(f"generator index {gen} out of range")
            if value not in self.target:
                raise InputError(
                    f"assigned value {list(value)!r} is not an element of the target group"
                )

    def value(self, gen: int) -> Perm:
        return self.assignments.get(gen, self.target.identity)


def extend_free(m: FiniteSupportMap, word: Word) -> Perm:
    """Evaluate the unique homomorphic extension on a word."""
    if word.alphabet != m.alphabet:
        raise InputError("alphabet mismatch between word and assignment")
    result = m.target.identity
    for gen, sign in word.letters:
        value = m.value(gen)
        result = compose(result, value if sign > 0 else invert_perm(value))
    return result


@dataclass(frozen=True)
class BasisAssignment:
    """One target value per basis element (identity allowed)."""

    basis: Basis
    target: FiniteGroup
    values: tuple[Perm, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.basis.elements):
            raise InputError(
                f"expected {len(self.basis.elements)} values, got {len(self.values)}"
            )
        for value in self.values:
            if value not in self.target:
                raise InputError(
                    f"assigned value {list(value)!r} is not an element of the target group"
                )

    @cached_property
    def context(self) -> WreathContext:
        """Wreath context: action image on top, rep basepoint as trivial coset."""
        rep = self.basis.transversal.rep
        return WreathContext(
            self.target, rep.degree, normal_core_image(rep), base_point=rep.basepoint
        )

    @cached_property
    def _letter_table(self) -> tuple[tuple[WreathElement, WreathElement], ...]:
        ctx = self.context
        alphabet = self.basis.transversal.rep.alphabet
        table = []
        for gen in range(len(alphabet)):
            element = chi(self, gen)
            table.append((element, winv(ctx, element)))
        return tuple(table)


def chi(asg: BasisAssignment, gen: int) -> WreathElement:
    """The wreath element of a generator: assigned values along the fiber, image on top."""
    t = asg.basis.transversal
    rep = t.rep
    if not 0 <= gen < len(rep.alphabet):
        raise InputError(f"generator index {gen} out of range")
    image = rep.images[gen]
    one = asg.target.identity
    step = Word(rep.alphabet, (Letter(gen, 1),))
    fiber = []
    for p in range(rep.degree):
        schreier_word = t.words[p] * step * t.words[image[p]].inverse()
        if schreier_word.is_identity:
            fiber.append(one)
        else:
            idx = asg.basis.by_word.get(schreier_word)
            if idx is None:
                raise InternalConsistencyError(
                    f"word {schreier_word} at point {p} is neither trivial nor a "
                    "basis element; the transversal is corrupted"
                )
            fiber.append(asg.values[idx])
    return WreathElement(tuple(fiber), image)


def chi_letter(asg: BasisAssignment, letter: Letter) -> WreathElement:
    """chi on a signed letter (inverse letters give the wreath inverse)."""
    pair = asg._letter_table[letter.gen]
    return pair[0] if letter.sign > 0 else pair[1]


def tau(asg: BasisAssignment, word: Word) -> WreathElement:
    """Homomorphic extension of chi over the wreath group law."""
    rep = asg.basis.transversal.rep
    if word.alphabet != rep.alphabet:
        raise InputError("alphabet mismatch between word and assignment")
    ctx = asg.context
    table = asg._letter_table
    out = wreath_identity(ctx)
    for gen, sign in word.letters:
        out = wmul(ctx, out, table[gen][0] if sign > 0 else table[gen][1])
    return out


def psi(asg: BasisAssignment, word: Word) -> Perm:
    """The extension on the subgroup: project tau at the trivial coset."""
    rep = asg.basis.transversal.rep
    if act(rep, word, rep.basepoint) != rep.basepoint:
        raise InputError("not a subgroup element")
    return project_pi(asg.context, tau(asg, word))


def psi_by_rewrite(asg: BasisAssignment, word: Word) -> Perm:
    """Independent route: rewrite in the basis, then substitute assigned values."""
    result = asg.target.identity
    for idx, sign in rewrite(asg.basis, word):
        value = asg.values[idx]
        result = compose(result, value if sign > 0 else invert_perm(value))
    return result


def assignment_from_dict(
    basis_obj: Basis, target: FiniteGroup, data: object
) -> BasisAssignment:
    """Build an assignment from `{"values": {"0": [perm...], ...}}`.

    Keys are basis indices; unlisted indices get the identity.
    """
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    unknown = data.keys() - {"values"}
    if unknown:
        raise InputError(f"unknown keys: {sorted(unknown)}")
    raw = data.get("values", {})
    if not isinstance(raw, dict):
        raise InputError("values must map basis indices to permutation arrays")
    one = target.identity
    values = [one] * len(basis_obj.elements)
    for key, mapping in raw.items():
        try:
            idx = int(key)
        except (TypeError, ValueError):
            raise InputError(f"basis index {key!r} is not an integer") from None
        if not 0 <= idx < len(basis_obj.elements):
            raise InputError(f"basis index {idx} out of range")
        values[idx] = check_perm(mapping, target.degree)
    return BasisAssignment(basis_obj, target, tuple(values))
