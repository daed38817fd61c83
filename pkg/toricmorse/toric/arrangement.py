"""
Complexified toric arrangements: finite lists of subtori
K_i = {x in R^d / Z^d : <alpha_i, x> = level_i mod 1} of the compact torus,
with primitive integer characters alpha_i and rational levels in [0, 1).
"""

from fractions import Fraction
import logging

import attr

from ..config import DEFAULT_CONFIG
from ..exception import InputError, ZeroCharacterError
from ..linalg.lattice import (
    content,
    coordinates,
    lattice_rank,
    normalize_sign,
    saturation,
)
from ..linalg.matrix import int_matrix
from ..utils.misc import format_fraction, frac_mod1, oneline

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class ToricItem:
    "The subtorus {<character, x> = level mod 1}."

    character = attr.ib(converter=lambda values: tuple(int(x) for x in values))
    level = attr.ib(converter=Fraction)

    def __str__(self):
        character = " ".join(str(x) for x in self.character)
        return f"{character} @ {format_fraction(self.level)}"


def _items(values):
    return tuple(
        item if isinstance(item, ToricItem) else ToricItem(*item) for item in values
    )


@attr.s(frozen=True)
class ToricArrangement:
    """
    An ordered list of distinct items in the torus of dimension ``dim``.
    Characters must be primitive with a positive first nonzero entry and
    levels must lie in [0, 1); use ``normalize`` for arbitrary input.
    """

    dim = attr.ib()
    items = attr.ib(converter=_items)

    @items.validator
    def _check_items(self, attribute, value):
        seen = set()
        for item in value:
            if len(item.character) != self.dim:
                raise InputError(
                    oneline(
                        f"""
                    Character {item.character!r} does not have
                    {self.dim} entries"""
                    )
                )
            if not any(item.character):
                raise ZeroCharacterError.for_vector(item.character)
            if content(item.character) != 1:
                raise InputError(
                    f"Character {item.character!r} is not primitive; use normalize()"
                )
            if normalize_sign(item.character)[1]:
                raise InputError(
                    oneline(
                        f"""
                    Character {item.character!r} must have a positive first
                    nonzero entry; use normalize()"""
                    )
                )
            if not 0 <= item.level < 1:
                raise InputError(f"Level {item.level} of {item} is not in [0, 1)")
            if item in seen:
                raise InputError(f"Item {item} appears twice; use normalize()")
            seen.add(item)

    def __len__(self):
        return len(self.items)

    @property
    def characters(self):
        return tuple(item.character for item in self.items)

    @property
    def levels(self):
        return tuple(item.level for item in self.items)

    @property
    def rank(self):
        return lattice_rank(int_matrix(self.characters, self.dim))

    @property
    def is_essential(self):
        return self.rank == self.dim

    @property
    def directions(self):
        "The distinct characters, in order of first appearance."
        found = []
        for character in self.characters:
            if character not in found:
                found.append(character)
        return tuple(found)

    @property
    def item_directions(self):
        directions = self.directions
        return tuple(directions.index(c) for c in self.characters)


@attr.s(frozen=True)
class NormalizedArrangement:
    """
    The result of ``normalize``.

    Attributes
    ----------
    arrangement: ToricArrangement
        An essential arrangement with primitive characters.
    original_dim: int
    deficiency: int
        d - l, where l is the rank of the input; the complement of the input is
        the complement of ``arrangement`` times (C*)^deficiency.
    notes: tuple of str
        What was changed, in order.
    """

    arrangement = attr.ib()
    original_dim = attr.ib()
    deficiency = attr.ib()
    notes = attr.ib(converter=tuple, default=())


def primitive_items(character, level, split):
    """
    Rewrites the subtorus {<k beta, x> = level} with beta primitive: as the k
    subtori {<beta, x> = (level + j) / k} when ``split`` is set, otherwise as
    {<beta, x> = level}. Characters come out sign-normalized.
    """
    character = tuple(int(x) for x in character)
    if not any(character):
        raise ZeroCharacterError.for_vector(character)
    k = content(character)
    beta = tuple(x // k for x in character)
    if split:
        levels = [frac_mod1((Fraction(level) + j) / k) for j in range(k)]
    else:
        levels = [frac_mod1(level)]
    beta, flipped = normalize_sign(beta)
    if flipped:
        levels = [frac_mod1(-q) for q in levels]
    return [ToricItem(beta, q) for q in levels]


def normalize(dim, pairs, config=DEFAULT_CONFIG):
    """
    Turns arbitrary (character, level) pairs into an essential
    ToricArrangement: characters are made primitive and sign-normalized,
    repeated items dropped, and an inessential arrangement is rewritten in
    coordinates of the saturated lattice spanned by its characters.
    """
    notes = []
    items = []
    for character, level in pairs:
        character = tuple(int(x) for x in character)
        rewritten = primitive_items(character, level, config.split_nonprimitive)
        k = content(character) if any(character) else 0
        if k > 1:
            verb = "split into" if config.split_nonprimitive else "replaced by"
            note = oneline(
                f"""
                non-primitive character {character!r} {verb}
                {', '.join(str(item) for item in rewritten)}"""
            )
            logger.warning(note)
            notes.append(note)
        items.extend(rewritten)

    unique = _dedupe(items, notes)
    rank = lattice_rank(int_matrix([item.character for item in unique], dim))
    if rank == dim:
        return NormalizedArrangement(ToricArrangement(dim, unique), dim, 0, notes)

    basis = saturation([item.character for item in unique], dim)
    essential = []
    for item in unique:
        coefficients = coordinates(item.character, basis, dim)
        character, flipped = normalize_sign(int(c) for c in coefficients)
        level = frac_mod1(-item.level) if flipped else item.level
        essential.append(ToricItem(character, level))
    note = oneline(
        f"""
        arrangement of rank {rank} in dimension {dim} rewritten in dimension
        {rank}; the Poincare polynomial gains a factor (1+t)^{dim - rank}"""
    )
    logger.warning(note)
    notes.append(note)
    return NormalizedArrangement(
        ToricArrangement(rank, essential), dim, dim - rank, notes
    )


def _dedupe(items, notes):
    unique = []
    for item in items:
        if item in unique:
            note = f"dropped repeated item {item}"
            logger.warning(note)
            notes.append(note)
            continue
        unique.append(item)
    return unique
