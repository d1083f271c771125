"""Encode integers as letter-words, decode letter-words, sum up phrases.

A canonical numeral word takes at most one letter from each rank band
(units 1..9, tens 10..90, hundreds 100..900, thousands 1000) and stores
them in ascending value order, so the units letter comes first in memory
and shows rightmost in right-to-left script.  "همرغ" is 5+40+200+1000 =
1245.  Arabic covers 1..1999, Hebrew 1..499; larger numbers have no single
agreed word form and are rejected.
"""

import unicodedata
from dataclasses import dataclass

from .alphabets import Alphabet, Letter, letter_by_value, letter_for_codepoint
from .errors import NonCanonical, OutOfRange, UnknownLetter, ZeroUnencodable

MAX_ENCODABLE = {Alphabet.ARABIC: 1999, Alphabet.HEBREW: 499}

# Tatweel, the Arabic elongation mark; carries no value, appears freely.
_TATWEEL = "ـ"

_RANK_BANDS = ((1, 9), (10, 90), (100, 900), (1000, 1000))


@dataclass(frozen=True)
class AbjadNumeral:
    """A canonical letter-word denoting `value` in one alphabet."""

    alphabet: Alphabet
    letters: tuple[Letter, ...]
    value: int

    @property
    def text(self) -> str:
        return "".join(letter.codepoint for letter in self.letters)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class GematriaResult:
    total: int
    per_word: tuple[tuple[str, int], ...]


def encode(n: int, alphabet: Alphabet) -> AbjadNumeral:
    """Encode 1 <= n <= 1999 (Arabic) or 1 <= n <= 499 (Hebrew) as a word.

    Each nonzero decimal rank contributes its letter: units digit d the
    letter of value d, tens digit t the letter of value 10t, hundreds digit
    h the letter of value 100h, and for Arabic a thousands part the letter
    of value 1000.  Letters come out in ascending value order.
    """
    if n == 0:
        raise ZeroUnencodable("zero is not a letter value and has no word form")
    limit = MAX_ENCODABLE[alphabet]
    if not 1 <= n <= limit:
        raise OutOfRange(f"{n} is outside 1..{limit} for {alphabet.value}")
    picked = []
    rest = n
    for scale in (1, 10, 100, 1000):
        digit = rest % 10
        rest //= 10
        if digit:
            picked.append(letter_by_value(alphabet, digit * scale))
    return AbjadNumeral(alphabet=alphabet, letters=tuple(picked), value=n)


def _strippable(ch: str) -> bool:
    return ch.isspace() or ch == _TATWEEL or unicodedata.combining(ch) != 0


def _word_letters(word: str, alphabet: Alphabet) -> list[Letter]:
    out = []
    for ch in word:
        if _strippable(ch):
            continue
        letter = letter_for_codepoint(ch)
        if letter.alphabet is not alphabet:
            raise UnknownLetter(f"{ch!r} is not a {alphabet.value} letter")
        out.append(letter)
    return out


def _band(value: int) -> int:
    for i, (lo, hi) in enumerate(_RANK_BANDS):
        if lo <= value <= hi:
            return i
    raise AssertionError(value)


def decode(word: str, alphabet: Alphabet, strict: bool = False) -> int:
    """Sum the letter values of `word` (diacritics and elongation ignored).

    Lax mode accepts the letters in any order and any multiplicity.  Strict
    mode additionally requires a canonical numeral: strictly ascending
    values, at most one letter per rank band.
    """
    found = _word_letters(word, alphabet)
    if not found:
        raise ValueError("empty word")
    if strict:
        values = [letter.value for letter in found]
        ascending = all(a < b for a, b in zip(values, values[1:]))
        bands = [_band(v) for v in values]
        if not ascending or len(set(bands)) != len(bands):
            raise NonCanonical(
                f"{word!r} is not a canonical numeral "
                "(ascending values, one letter per rank)"
            )
    return sum(letter.value for letter in found)


def gematria(phrase: str, alphabet: Alphabet, ignore: str = "") -> GematriaResult:
    """Per-word letter-value sums and the grand total of a phrase.

    Splits on whitespace; diacritics and the elongation mark never count.
    Codepoints listed in `ignore` (punctuation, typically) are skipped;
    anything else unmapped raises UnknownLetter.
    """
    per_word = []
    for token in phrase.split():
        value = 0
        for ch in token:
            if _strippable(ch) or ch in ignore:
                continue
            letter = letter_for_codepoint(ch)
            if letter.alphabet is not alphabet:
                raise UnknownLetter(f"{ch!r} is not a {alphabet.value} letter")
            value += letter.value
        per_word.append((token, value))
    return GematriaResult(
        total=sum(value for _, value in per_word), per_word=tuple(per_word)
    )
