"""Split integers into 3-digit groups and narrate them in either direction.

A right-to-left reader speaks the components of each group starting from
the units: 12457892 becomes "2 et 90 et 800 ; 7 et 50 et 400 mille ; 2 et
10 millions".  A left-to-right reader first regroups, then reads the group
values from the top: "12 millions 457 mille 892".
"""

from dataclasses import dataclass

from .errors import InsufficientLabels

RANKS = ("units", "tens", "hundreds")

DEFAULT_LABELS = ("", "mille", "millions", "milliards")

RIGHT_TO_LEFT = "rtl"
LEFT_TO_RIGHT = "ltr"


@dataclass(frozen=True)
class RankComponent:
    rank: str  # "units" | "tens" | "hundreds"
    value: int


@dataclass(frozen=True)
class Group:
    """One base-1000 group: value = group value, weight 1000**index."""

    index: int
    value: int
    components: tuple[RankComponent, ...]


@dataclass(frozen=True)
class NumberReading:
    value: int
    groups: tuple[Group, ...]  # least significant group first


def _components(group_value: int) -> tuple[RankComponent, ...]:
    out = []
    for rank, scale in zip(RANKS, (1, 10, 100)):
        digit = group_value // scale % 10
        if digit:
            out.append(RankComponent(rank=rank, value=digit * scale))
    return tuple(out)


def decompose(n: int) -> NumberReading:
    """Base-1000 groups of n, least significant first, zero parts omitted."""
    if n < 0:
        raise ValueError("n must be non-negative")
    groups = []
    rest = n
    while True:
        value = rest % 1000
        groups.append(Group(index=len(groups), value=value, components=_components(value)))
        rest //= 1000
        if rest == 0:
            break
    return NumberReading(value=n, groups=tuple(groups))


def format_reading(
    reading: NumberReading,
    direction: str = RIGHT_TO_LEFT,
    labels: tuple[str, ...] = DEFAULT_LABELS,
    figure_exact: bool = False,
) -> str:
    """Narrate a reading right-to-left (units first) or left-to-right.

    Right-to-left joins each group's components with " et " and appends the
    group's scale label; groups are separated by " ; ", or joined with
    " et " throughout when figure_exact is set.  Left-to-right emits each
    nonzero group's value and label from the most significant group down.
    Zero is "0" either way.
    """
    if len(reading.groups) > len(labels):
        raise InsufficientLabels(
            f"{len(reading.groups)} groups but only {len(labels)} labels"
        )
    if direction == RIGHT_TO_LEFT:
        parts = []
        for group in reading.groups:
            if not group.components:
                continue
            spoken = " et ".join(str(c.value) for c in group.components)
            label = labels[group.index]
            parts.append(f"{spoken} {label}" if label else spoken)
        joiner = " et " if figure_exact else " ; "
        return joiner.join(parts) if parts else "0"
    if direction == LEFT_TO_RIGHT:
        parts = []
        for group in reversed(reading.groups):
            if group.value == 0:
                continue
            label = labels[group.index]
            parts.append(f"{group.value} {label}" if label else str(group.value))
        return " ".join(parts) if parts else "0"
    raise ValueError(f"direction must be {RIGHT_TO_LEFT!r} or {LEFT_TO_RIGHT!r}")
