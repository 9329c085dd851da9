"""
Constant-length rule a -> a b^l, b -> a^(l+1) and its recoding to rho_m, m = l(l+1).

With a = 0 and b = 1^(l+1) the two fixed points are the same sequence.
"""
from __future__ import annotations

import re
from typing import Tuple, Union

from inflation.exceptions import IllegalWordError, InvalidParameterError
from inflation.substitution.words import BINARY, TILDE, Word, apply_images, as_word, two_sided_fixed_point

_BINARY_TOKEN = re.compile(r"0|1+")
_HEAD_BLOCK = re.compile(r"1+")
_TAIL_BLOCK = re.compile(r"1+$")


def check_ell(ell: int) -> int:
    if isinstance(ell, bool) or int(ell) != ell or ell < 1:
        raise InvalidParameterError(f"ell must be a positive integer, got {ell!r}")
    return int(ell)


def tilde_images(ell: int) -> dict:
    return {"a": "a" + "b" * ell, "b": "a" * (ell + 1)}


def tilde_rule_substitute(word: Union[Word, str], ell: int, times: int = 1) -> Word:
    ell = check_ell(ell)
    return apply_images(as_word(word, TILDE), tilde_images(ell), times)


def tilde_fixed_point(ell: int, n_letters: int) -> Word:
    """Central window of the fixed point of the squared constant-length rule, seed a|a."""
    ell = check_ell(ell)
    return two_sided_fixed_point(tilde_images(ell), ("a", "a"), n_letters, TILDE)


def recode_to_binary(word: Union[Word, str], ell: int) -> Word:
    ell = check_ell(ell)
    word = as_word(word, TILDE)
    table = {ord("a"): "0", ord("b"): "1" * (ell + 1)}
    left = word.left.translate(table)
    right = word.right.translate(table)
    return Word(left + right, len(left), BINARY)


def _trimmed_span(letters: str, block: int) -> Tuple[int, int]:
    """Window [lo, hi) left after dropping truncated edge blocks together with their neighbouring 0."""
    lo, hi = 0, len(letters)
    head = _HEAD_BLOCK.match(letters)
    if head and len(head.group()) % block:
        lo = min(head.end() + 1, hi)
    tail = _TAIL_BLOCK.search(letters)
    if tail and tail.start() >= lo and len(tail.group()) % block:
        hi = max(tail.start() - 1, lo)
    return lo, hi


def recode_from_binary(word: Union[Word, str], ell: int) -> Word:
    """
    Inverse recoding 0 -> a, 1^(l+1) -> b.

    A 1-block touching either end of the window whose length is not a multiple
    of l+1 is a truncated block; it is dropped together with the adjacent 0, so
    the window shrinks by at most m + 1 letters on each side. Interior blocks of
    such length raise IllegalWordError. The origin stays on the letter right of
    the cut, or on the first kept letter after it.
    """
    ell = check_ell(ell)
    word = as_word(word, BINARY)
    block = ell + 1
    letters = word.letters
    cut = word.origin_index
    lo, hi = _trimmed_span(letters, block)
    out = []
    count = 0
    origin = None
    for token in _BINARY_TOKEN.finditer(letters, lo, hi):
        start, end = token.span()
        if origin is None and start >= cut:
            origin = count
        if token.group() == "0":
            out.append("a")
            count += 1
            continue
        length = end - start
        if length % block:
            raise IllegalWordError(f"1-block of length {length} at position {start} is not a multiple of {block}")
        if origin is None and end > cut:
            origin = count + (cut - start) // block
        out.append("b" * (length // block))
        count += length // block
    return Word("".join(out), count if origin is None else origin, TILDE)
