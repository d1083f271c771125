"""Digit glyphs of three scripts, transliteration, and letter provenance.

Western digits are the ASCII block, the Eastern "Mashreki" digits the
Arabic-Indic block U+0660..U+0669.  The original Maghrebi digits predate
both and have no Unicode codepoints, so they are written with Western
proxy glyphs; the one machine-checkable difference survives: the glyphs of
4 and 5 are swapped relative to the modern shapes (value 4 looks like a
modern "5" and vice versa).  Strings of that script only mean what they
say together with the script tag.

Each digit of each script descends from one Arabic or Hebrew letter; the
provenance table ships as a TSV next to this module (script, digit, source
alphabet, source letter name, transformation note).
"""

from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .alphabets import Alphabet, Letter, letter_by_name
from .errors import InvalidGlyph, UnsupportedBase


class DigitScript(Enum):
    WESTERN = "western"
    MASHREKI_EASTERN = "mashreki"
    ORIGINAL_MAGHREBI = "original"


_GLYPHS = {
    DigitScript.WESTERN: "0123456789",
    DigitScript.MASHREKI_EASTERN: "٠١٢٣٤٥٦٧٨٩",  # U+0660..U+0669
    DigitScript.ORIGINAL_MAGHREBI: "0123546789",  # proxy glyphs, 4/5 swapped
}
_VALUES = {
    script: {glyph: value for value, glyph in enumerate(glyphs)}
    for script, glyphs in _GLYPHS.items()
}

# Non-digit codepoints passed through untouched by transliterate().
SEPARATORS = " .,-/"

_BASE16_GLYPHS = "0123456789ABCDEF"


@dataclass(frozen=True)
class DigitProvenance:
    """The source letter and reshaping behind one digit glyph."""

    digit: int
    script: DigitScript
    alphabet: Alphabet
    letter: Letter
    note: str


def _load_provenance() -> dict[tuple[DigitScript, int], DigitProvenance]:
    path = resources.files(__package__) / "data" / "digit_provenance.tsv"
    table = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        script, digit, alphabet, letter_name, note = line.split("\t")
        entry = DigitProvenance(
            digit=int(digit),
            script=DigitScript(script),
            alphabet=Alphabet(alphabet),
            letter=letter_by_name(Alphabet(alphabet), letter_name),
            note=note,
        )
        table[(entry.script, entry.digit)] = entry
    return table


_PROVENANCE = _load_provenance()


def render_digits(n: int, script: DigitScript) -> str:
    """Decimal digit string of n in the script's glyphs, big-endian."""
    if n < 0:
        raise ValueError("n must be non-negative")
    glyphs = _GLYPHS[script]
    return "".join(glyphs[int(d)] for d in str(n))


def parse_digits(text: str, script: DigitScript) -> int:
    """Inverse of render_digits; InvalidGlyph outside the script's glyph set."""
    if not text:
        raise ValueError("empty digit string")
    values = _VALUES[script]
    n = 0
    for ch in text:
        if ch not in values:
            raise InvalidGlyph(f"{ch!r} is not a {script.value} digit")
        n = n * 10 + values[ch]
    return n


def transliterate(text: str, src: DigitScript, dst: DigitScript) -> str:
    """Map digits of `src` to the value-equal glyphs of `dst`.

    Digit count and positions are preserved; the separators " .,-/" pass
    through unchanged (dates, folio labels).
    """
    values = _VALUES[src]
    glyphs = _GLYPHS[dst]
    out = []
    for ch in text:
        if ch in SEPARATORS:
            out.append(ch)
        elif ch in values:
            out.append(glyphs[values[ch]])
        else:
            raise InvalidGlyph(f"{ch!r} is not a {src.value} digit or separator")
    return "".join(out)


def digit_provenance(digit: int, script: DigitScript) -> DigitProvenance:
    """Source letter and transformation note of one digit glyph."""
    if not 0 <= digit <= 9:
        raise ValueError("digit must be 0..9")
    return _PROVENANCE[(script, digit)]


def base_digit_set(base: int) -> list[str]:
    """The first `base` glyphs of the canonical base-16 digit list."""
    if not 2 <= base <= 16:
        raise UnsupportedBase(f"base {base} is outside 2..16")
    return list(_BASE16_GLYPHS[:base])
