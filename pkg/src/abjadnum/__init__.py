"""Historical Arabic/Hebrew numeral systems as a library.

Covers the letter-value ("Abjadi") tables of both alphabets, encoding and
decoding of numbers as letter-words, phrase gematria, the three digit
scripts (Western, Eastern "Mashreki", original Maghrebi) with per-digit
letter provenance and transliteration, grouped right-to-left/left-to-right
number readings, and year-level Hijri/Gregorian conversion.
"""

from .alphabets import (
    ABJADI_SEQUENCE,
    Alphabet,
    Letter,
    abjadi_sequence,
    letter_by_value,
    letters,
    max_letter_value,
    value_of_letter,
)
from .chronology import gregorian_to_hijri_year, hijri_to_gregorian_year
from .codec import MAX_ENCODABLE, AbjadNumeral, GematriaResult, decode, encode, gematria
from .digits import (
    SEPARATORS,
    DigitProvenance,
    DigitScript,
    base_digit_set,
    digit_provenance,
    parse_digits,
    render_digits,
    transliterate,
)
from .errors import (
    InsufficientLabels,
    InvalidGlyph,
    NonCanonical,
    NotAnAbjadiValue,
    NumeralError,
    OutOfAlphabetRange,
    OutOfRange,
    PreEpoch,
    UnknownLetter,
    UnsupportedBase,
    ZeroUnencodable,
)
from .reading import (
    DEFAULT_LABELS,
    LEFT_TO_RIGHT,
    RIGHT_TO_LEFT,
    Group,
    NumberReading,
    RankComponent,
    decompose,
    format_reading,
)

__version__ = "0.1.0"

__all__ = [
    "ABJADI_SEQUENCE",
    "Alphabet",
    "Letter",
    "abjadi_sequence",
    "letters",
    "letter_by_value",
    "max_letter_value",
    "value_of_letter",
    "AbjadNumeral",
    "GematriaResult",
    "MAX_ENCODABLE",
    "encode",
    "decode",
    "gematria",
    "DigitScript",
    "DigitProvenance",
    "SEPARATORS",
    "render_digits",
    "parse_digits",
    "transliterate",
    "digit_provenance",
    "base_digit_set",
    "NumberReading",
    "Group",
    "RankComponent",
    "DEFAULT_LABELS",
    "RIGHT_TO_LEFT",
    "LEFT_TO_RIGHT",
    "decompose",
    "format_reading",
    "hijri_to_gregorian_year",
    "gregorian_to_hijri_year",
    "NumeralError",
    "NotAnAbjadiValue",
    "OutOfAlphabetRange",
    "UnknownLetter",
    "OutOfRange",
    "ZeroUnencodable",
    "NonCanonical",
    "InvalidGlyph",
    "UnsupportedBase",
    "InsufficientLabels",
    "PreEpoch",
]
