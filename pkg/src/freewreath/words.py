"""Free group elements as freely reduced words over a finite alphabet.

Words are immutable; multiplication concatenates and cancels at the
junction, so every `Word` in circulation is reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InputError

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


@dataclass(frozen=True)
class Alphabet:
    """Ordered, distinct generator names; the order is used for tie-breaking."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        for name in self.names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise InputError(f"bad generator name {name!r}")
        if len(set(self.names)) != len(self.names):
            raise InputError("generator names must be distinct")

    @classmethod
    def of(cls, *names: str) -> "Alphabet":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown generator {name!r}") from None


class Letter(NamedTuple):
    """A signed generator: `gen` indexes the alphabet, `sign` is +1 or -1."""

    gen: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


def _check_letter(alphabet: Alphabet, letter: Letter) -> Letter:
    gen, sign = letter
    if not 0 <= gen < len(alphabet):
        raise InputError(
            f"letter index {gen} out of range for alphabet of size {len(alphabet)}"
        )
    if sign not in (1, -1):
        raise InputError(f"letter sign must be +1 or -1, got {sign!r}")
    return Letter(gen, sign)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the group identity."""

    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for letter in self.letters:
            _check_letter(self.alphabet, letter)
            if prev is not None and prev.gen == letter.gen and prev.sign == -letter.sign:
                raise InputError("word is not freely reduced")
            prev = letter

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise InputError("alphabet mismatch between words")
        left, right = self.letters, other.letters
        i, j = len(left), 0
        while i > 0 and j < len(right) and left[i - 1] == right[j].inverse():
            i -= 1
            j += 1
        return Word(self.alphabet, left[:i] + right[j:])

    def inverse(self) -> "Word":
        return Word(
            self.alphabet, tuple(let.inverse() for let in reversed(self.letters))
        )

    def prefixes(self) -> list["Word"]:
        """All n+1 prefixes, from the empty word up to the word itself."""
        return [Word(self.alphabet, self.letters[:i]) for i in range(len(self.letters) + 1)]

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"<Word {format_word(self)!r}>"


def reduce_letters(alphabet: Alphabet, raw: Iterable[Letter]) -> Word:
    """Freely reduce a raw letter sequence with a single stack pass."""
    stack: list[Letter] = []
    for item in raw:
        letter = _check_letter(alphabet, Letter(*item))
        if stack and stack[-1].gen == letter.gen and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return Word(alphabet, tuple(stack))


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse whitespace-separated tokens `name` / `name^-1`; `1` is the identity."""
    tokens = text.split()
    if tokens == ["1"]:
        return Word(alphabet)
    letters = []
    for token in tokens:
        if token.endswith("^-1"):
            name, sign = token[:-3], -1
        elif "^" in token:
            raise InputError(f"malformed token {token!r}: only the ^-1 suffix is supported")
        else:
            name, sign = token, 1
        letters.append(Letter(alphabet.index(name), sign))
    return reduce_letters(alphabet, letters)


def format_word(word: Word) -> str:
    if word.is_identity:
        return "1"
    names = word.alphabet.names
    return " ".join(
        names[gen] + ("^-1" if sign < 0 else "") for gen, sign in word.letters
    )
