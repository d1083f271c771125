"""Arabic and Hebrew letter tables in letter-value ("Abjadi") order.

The 28 Arabic letters carry the values {1..9, 10..90, 100..900, 1000}; the
22 Hebrew letters stop at 400.  Both tables ship as TSV files next to this
module (one line per letter: order, primary codepoint, comma-separated
variant codepoints, name, value) and are loaded once at import; everything
here is immutable afterwards.
"""

from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .errors import NotAnAbjadiValue, OutOfAlphabetRange, UnknownLetter

# The 28 letter values: units, tens, hundreds, then 1000.
ABJADI_SEQUENCE = tuple(
    list(range(1, 10)) + list(range(10, 100, 10)) + list(range(100, 1000, 100)) + [1000]
)


class Alphabet(Enum):
    ARABIC = "arabic"
    HEBREW = "hebrew"


@dataclass(frozen=True)
class Letter:
    """One letter with its value and place in the letter-value order."""

    codepoint: str
    variants: tuple[str, ...]
    name: str
    sound: str
    value: int
    order: int
    alphabet: Alphabet

    @property
    def codepoints(self) -> tuple[str, ...]:
        """Primary codepoint followed by all variant forms."""
        return (self.codepoint, *self.variants)


def _load(alphabet: Alphabet) -> tuple[Letter, ...]:
    path = resources.files(__package__) / "data" / f"{alphabet.value}.tsv"
    letters = []
    for line in path.read_text(encoding="utf-8").splitlines():
        order, primary, variants, name, value = line.split("\t")
        letters.append(
            Letter(
                codepoint=primary,
                variants=tuple(v for v in variants.split(",") if v),
                name=name,
                # the source tables carry one word per letter, naming its sound
                sound=name,
                value=int(value),
                order=int(order),
                alphabet=alphabet,
            )
        )
    letters.sort(key=lambda letter: letter.order)
    return tuple(letters)


_LETTERS = {alphabet: _load(alphabet) for alphabet in Alphabet}
_BY_VALUE = {
    alphabet: {letter.value: letter for letter in table}
    for alphabet, table in _LETTERS.items()
}
_BY_NAME = {
    alphabet: {letter.name: letter for letter in table}
    for alphabet, table in _LETTERS.items()
}
# Variant forms resolve to the same letter as the primary codepoint.
_BY_CODEPOINT: dict[str, Letter] = {}
for _table in _LETTERS.values():
    for _letter in _table:
        for _cp in _letter.codepoints:
            assert _cp not in _BY_CODEPOINT, _cp
            _BY_CODEPOINT[_cp] = _letter


def abjadi_sequence() -> tuple[int, ...]:
    """The fixed increasing sequence of the 28 letter values."""
    return ABJADI_SEQUENCE


def letters(alphabet: Alphabet) -> tuple[Letter, ...]:
    """All letters of one alphabet in letter-value order."""
    return _LETTERS[alphabet]


def max_letter_value(alphabet: Alphabet) -> int:
    return _LETTERS[alphabet][-1].value


def letter_by_value(alphabet: Alphabet, value: int) -> Letter:
    """The unique letter of `alphabet` carrying `value`.

    Raises NotAnAbjadiValue if no letter of any alphabet carries it, and
    OutOfAlphabetRange if the value exists but is past this alphabet's last
    letter (Hebrew stops at 400).
    """
    if value not in ABJADI_SEQUENCE:
        raise NotAnAbjadiValue(f"{value} is not a letter value")
    letter = _BY_VALUE[alphabet].get(value)
    if letter is None:
        raise OutOfAlphabetRange(
            f"{value} exceeds the last {alphabet.value} letter value "
            f"({max_letter_value(alphabet)})"
        )
    return letter


def letter_by_name(alphabet: Alphabet, name: str) -> Letter:
    return _BY_NAME[alphabet][name]


def letter_for_codepoint(codepoint: str) -> Letter:
    """Resolve a primary or variant codepoint to its letter."""
    letter = _BY_CODEPOINT.get(codepoint)
    if letter is None:
        raise UnknownLetter(f"{codepoint!r} is not a letter of either alphabet")
    return letter


def value_of_letter(codepoint: str) -> tuple[Alphabet, int]:
    """Owning alphabet and value of a letter codepoint (variants included)."""
    letter = letter_for_codepoint(codepoint)
    return letter.alphabet, letter.value
