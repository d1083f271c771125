"""Year-level Hijri/Gregorian conversion, good to about one year.

The Hijri calendar is lunar: one Hijri year is about 0.970224 Gregorian
years, with year 1 AH starting in 622 CE.  Linear rounding at year
granularity is all the manuscript dates need; no month/day calendar here.
"""

from .errors import PreEpoch

# Lunar-to-solar year length ratio and the epoch offset in Gregorian years.
YEAR_RATIO = 0.970224
EPOCH_OFFSET = 621.5774

HIJRI_EPOCH_CE = 622


def hijri_to_gregorian_year(h: int) -> int:
    """Approximate Gregorian year of Hijri year h (may be off by one)."""
    if h < 1:
        raise ValueError("Hijri years start at 1")
    return round(YEAR_RATIO * h + EPOCH_OFFSET)


def gregorian_to_hijri_year(g: int) -> int:
    """Approximate Hijri year of Gregorian year g (may be off by one)."""
    if g < HIJRI_EPOCH_CE:
        raise PreEpoch(f"{g} CE precedes the first Hijri year ({HIJRI_EPOCH_CE} CE)")
    # 622 CE itself rounds to 0; Hijri years start at 1.
    return max(1, round((g - EPOCH_OFFSET) / YEAR_RATIO))
