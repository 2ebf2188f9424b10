"""Schreier transversals, the coset representative map, and the
Nielsen-Schreier basis with Reidemeister-Schreier rewriting."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .action import PermRep, act, is_transitive
from .errors import InputError
from .words import Letter, Word


@dataclass(frozen=True)
class Transversal:
    """Prefix-closed coset representatives, indexed by point.

    `words[p]` represents coset p, the basepoint's entry is the empty
    word, and `bfs_order` lists the points in discovery order.
    """

    rep: PermRep
    words: tuple[Word, ...]
    bfs_order: tuple[int, ...]


def transversal(rep: PermRep) -> Transversal:
    """Breadth-first transversal; letters tried positive-then-inverse per generator.

    First arrival assigns each point its word, so entries are shortest
    representatives and automatically prefix-closed.
    """
    if not is_transitive(rep):
        raise InputError("coset action not transitive")
    n = rep.degree
    words: list[Word | None] = [None] * n
    words[rep.basepoint] = Word(rep.alphabet)
    order = [rep.basepoint]
    queue = deque([rep.basepoint])
    while queue:
        p = queue.popleft()
        for gen in range(len(rep.alphabet)):
            for sign, image in ((1, rep.images[gen]), (-1, rep.inverse_images[gen])):
                q = image[p]
                if words[q] is None:
                    # A fresh BFS arrival never cancels against the parent word.
                    words[q] = Word(rep.alphabet, words[p].letters + (Letter(gen, sign),))
                    order.append(q)
                    queue.append(q)
    return Transversal(rep, tuple(words), tuple(order))


def mu(t: Transversal, word: Word) -> Word:
    """The representative of the word's right coset (H.word = H.mu(word))."""
    return t.words[act(t.rep, word, t.rep.basepoint)]


@dataclass(frozen=True)
class Basis:
    """Free generators t.x.mu(tx)^-1 of the subgroup, with their (t, x) labels."""

    transversal: Transversal
    elements: tuple[Word, ...]
    labels: tuple[tuple[int, int], ...]
    by_label: dict[tuple[int, int], int] = field(init=False, repr=False, compare=False)
    by_word: dict[Word, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "by_label", {label: i for i, label in enumerate(self.labels)}
        )
        object.__setattr__(
            self, "by_word", {word: i for i, word in enumerate(self.elements)}
        )


def basis(t: Transversal) -> Basis:
    """All nonidentity words t.x.mu(tx)^-1, ordered by (BFS index of t, generator)."""
    rep = t.rep
    elements = []
    labels = []
    for p in t.bfs_order:
        tw = t.words[p]
        for gen in range(len(rep.alphabet)):
            q = rep.images[gen][p]
            element = tw * Word(rep.alphabet, (Letter(gen, 1),)) * t.words[q].inverse()
            if not element.is_identity:
                elements.append(element)
                labels.append((p, gen))
    return Basis(t, tuple(elements), tuple(labels))


SignedIndex = tuple[int, int]


def rewrite(b: Basis, word: Word) -> tuple[SignedIndex, ...]:
    """Express a subgroup element in the basis as (index, sign) factors.

    Walks the word through the coset action; each position contributes
    the basis element carrying its Schreier pair unless that pair
    collapsed to the identity.
    """
    t = b.transversal
    rep = t.rep
    if act(rep, word, rep.basepoint) != rep.basepoint:
        raise InputError("not a subgroup element")
    out: list[SignedIndex] = []
    point = rep.basepoint
    for gen, sign in word.letters:
        if sign > 0:
            next_point = rep.images[gen][point]
            idx = b.by_label.get((point, gen))
        else:
            next_point = rep.inverse_images[gen][point]
            idx = b.by_label.get((next_point, gen))
        if idx is not None:
            out.append((idx, sign))
        point = next_point
    return tuple(out)


def evaluate(b: Basis, signed_indices: tuple[SignedIndex, ...] | list[SignedIndex]) -> Word:
    """Multiply out basis elements (inverting on negative sign)."""
    result = Word(b.transversal.rep.alphabet)
    for idx, sign in signed_indices:
        if not 0 <= idx < len(b.elements):
            raise InputError(f"basis index {idx} out of range")
        factor = b.elements[idx]
        result = result * (factor if sign > 0 else factor.inverse())
    return result
