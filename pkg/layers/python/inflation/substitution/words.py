"""Words over {0,1} (and {a,b}) with a marked origin, and the fixed point of rho_m^2."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Tuple, Union

from inflation.exceptions import IllegalWordError, InvalidParameterError
from inflation.logger import get_logger
from inflation.substitution.rules import check_m

logger = get_logger("substitution")

BINARY = "01"
TILDE = "ab"

# Factor sets for the legality check are read from a window of this many letters.
LEGALITY_RADIUS = 100_000


@dataclass(frozen=True)
class Word:
    """
    Finite window of a (bi-infinite) word.

    ``origin_index`` is the position of the first letter right of the cut,
    so ``letters[:origin_index]`` lies left of the reference point.

    Construction only checks the alphabet and the origin. Whether the letters
    are a legal factor of the rho_m fixed point is checked by ``check_legal``.
    """

    letters: str
    origin_index: int = 0
    alphabet: str = BINARY

    def __post_init__(self) -> None:
        bad = set(self.letters) - set(self.alphabet)
        if bad:
            raise InvalidParameterError(f"Invalid letters {sorted(bad)} for alphabet {self.alphabet!r}")
        if not 0 <= self.origin_index <= len(self.letters):
            raise InvalidParameterError(f"origin_index {self.origin_index} outside word of length {len(self.letters)}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return f"{self.left}|{self.right}"

    @property
    def left(self) -> str:
        return self.letters[: self.origin_index]

    @property
    def right(self) -> str:
        return self.letters[self.origin_index :]

    def counts(self) -> Tuple[int, int]:
        first, second = self.alphabet
        return self.letters.count(first), self.letters.count(second)

    def window(self, n_letters: int) -> Word:
        """Central window with n//2 letters left of the cut."""
        n_left = n_letters // 2
        n_right = n_letters - n_left
        if n_left > self.origin_index or n_right > len(self.letters) - self.origin_index:
            raise InvalidParameterError(f"Word too short for a {n_letters}-letter window")
        start = self.origin_index - n_left
        return Word(self.letters[start : self.origin_index + n_right], n_left, self.alphabet)


def as_word(word: Union[Word, str], alphabet: str = BINARY) -> Word:
    if isinstance(word, Word):
        if word.alphabet != alphabet:
            raise InvalidParameterError(f"Expected a word over {alphabet!r}, got {word.alphabet!r}")
        return word
    return Word(str(word), 0, alphabet)


def _translation(images: dict) -> dict:
    return {ord(letter): image for letter, image in images.items()}


def apply_images(word: Word, images: dict, times: int) -> Word:
    if times < 0:
        raise InvalidParameterError("times must be non-negative")
    table = _translation(images)
    left, right = word.left, word.right
    for _ in range(times):
        left, right = left.translate(table), right.translate(table)
    return Word(left + right, len(left), word.alphabet)


def rho_images(m: int) -> dict:
    return {"0": "0" + "1" * m, "1": "0"}


def substitute(word: Union[Word, str], m: int, times: int = 1) -> Word:
    """Letterwise image of ``word`` under rho_m iterated ``times`` times."""
    m = check_m(m)
    return apply_images(as_word(word), rho_images(m), times)


def two_sided_fixed_point(images: dict, seed: Tuple[str, str], n_letters: int, alphabet: str) -> Word:
    """
    Window of the bi-infinite fixed point of the squared substitution with legal seed l|r.

    The right half is grown from ``r`` with the squared images, the left half
    from ``l`` with the reversed squared images.
    """
    if n_letters < 2:
        raise InvalidParameterError("n_letters must be >= 2")
    squared = {a: "".join(images[c] for c in images[a]) for a in images}
    n_left = n_letters // 2
    n_right = n_letters - n_left

    right_table = _translation(squared)
    right = seed[1]
    while len(right) < n_right:
        right = right.translate(right_table)

    left_table = _translation({a: image[::-1] for a, image in squared.items()})
    left_reversed = seed[0]
    while len(left_reversed) < n_left:
        left_reversed = left_reversed.translate(left_table)

    left = left_reversed[:n_left][::-1]
    return Word(left + right[:n_right], n_left, alphabet)


def fixed_point(m: int, n_letters: int) -> Word:
    """Central window of the rho_m^2 fixed point with seed 0|0."""
    m = check_m(m)
    return two_sided_fixed_point(rho_images(m), ("0", "0"), n_letters, BINARY)


def letter_frequencies(word: Union[Word, str]) -> Tuple[float, float]:
    word = as_word(word, word.alphabet if isinstance(word, Word) else BINARY)
    if not len(word):
        raise InvalidParameterError("Empty word has no letter frequencies")
    c0, c1 = word.counts()
    return c0 / len(word), c1 / len(word)


@lru_cache(maxsize=32)
def legal_factors(m: int, length: int, radius: int = LEGALITY_RADIUS) -> FrozenSet[str]:
    """All factors of the given length found in the central window of 2*radius letters."""
    letters = fixed_point(m, 2 * radius).letters
    logger.debug("Conjunto de factores construido", extra={"m": m, "length": length, "radius": radius})
    return frozenset(letters[i : i + length] for i in range(len(letters) - length + 1))


def check_legal(word: Union[Word, str], m: int, length: int = 2, radius: int = LEGALITY_RADIUS) -> None:
    """Raise IllegalWordError when a factor of ``word`` never occurs in the fixed point."""
    letters = as_word(word).letters
    length = min(length, len(letters))
    if length == 0:
        return
    known = legal_factors(check_m(m), length, radius)
    for i in range(len(letters) - length + 1):
        factor = letters[i : i + length]
        if factor not in known:
            raise IllegalWordError(f"Factor {factor!r} at position {i} is not legal for m={m}")
