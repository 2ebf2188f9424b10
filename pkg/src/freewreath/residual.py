"""Separating finite quotients: explicit permutation witnesses that a
nontrivial reduced word survives in a finite quotient."""

from __future__ import annotations

from typing import Sequence

from .action import PermRep
from .errors import InputError
from .words import Alphabet, Word


def witness(word: Word) -> PermRep:
    """A degree len(word)+1 rep moving the basepoint along the word's path.

    The letters lay out partial injections along 0 -> 1 -> ... -> m; each
    is completed to a permutation by matching unused domain points to
    unused codomain points in increasing order.
    """
    if word.is_identity:
        raise InputError("identity has no separating quotient")
    m = len(word.letters)
    degree = m + 1
    partial: list[dict[int, int]] = [dict() for _ in word.alphabet.names]
    used_cod: list[set[int]] = [set() for _ in word.alphabet.names]
    for i, (gen, sign) in enumerate(word.letters):
        src, dst = (i, i + 1) if sign > 0 else (i + 1, i)
        table = partial[gen]
        # A reduced word never revisits an edge incompatibly.
        assert src not in table, "path conflict on a reduced word"
        assert dst not in used_cod[gen], "path conflict on a reduced word"
        table[src] = dst
        used_cod[gen].add(dst)
    images = []
    for gen in range(len(word.alphabet)):
        table = dict(partial[gen])
        free_src = [p for p in range(degree) if p not in table]
        free_dst = [p for p in range(degree) if p not in used_cod[gen]]
        for src, dst in zip(free_src, free_dst):
            table[src] = dst
        images.append(tuple(table[p] for p in range(degree)))
    return PermRep(word.alphabet, degree, tuple(images), basepoint=0)


def separate_all(words: Sequence[Word], alphabet: Alphabet | None = None) -> PermRep:
    """Block-diagonal rep on which every given word acts nontrivially."""
    if not words:
        if alphabet is None:
            raise InputError("alphabet required for an empty word family")
        return PermRep(alphabet, 1, ((0,),) * len(alphabet), basepoint=0)
    alphabet = words[0].alphabet
    blocks = []
    for word in words:
        if word.alphabet != alphabet:
            raise InputError("all words must share one alphabet")
        blocks.append(witness(word))
    degree = sum(block.degree for block in blocks)
    images = []
    for gen in range(len(alphabet)):
        image = []
        offset = 0
        for block in blocks:
            image.extend(offset + q for q in block.images[gen])
            offset += block.degree
        images.append(tuple(image))
    return PermRep(alphabet, degree, tuple(images), basepoint=0)
