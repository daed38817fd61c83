"""
The text format for arrangements.

The first non-comment line is ``toric <d>``, ``affine <d>`` or ``central <d>``.
Every further line holds one item: ``<a_1> ... <a_d> @ <p>/<q>`` for a subtorus
of a toric arrangement (level p/q with 0 <= p/q < 1) or ``<a_1> ... <a_d> = <p>/<q>``
for a hyperplane (constant p/q, zero for central arrangements). ``#`` starts a
comment; blank lines and extra whitespace are ignored.
"""

from fractions import Fraction
import logging
import re

import attr

from ..config import DEFAULT_CONFIG
from ..exception import MalformedInputError
from ..hyperplane.arrangement import Arrangement, HalfspaceForm
from ..toric.arrangement import normalize

logger = logging.getLogger(__name__)

KINDS = ("toric", "affine", "central")

RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


@attr.s(frozen=True)
class InputSpec:
    """
    A parsed input file.

    Attributes
    ----------
    kind: str
        One of "toric", "affine" and "central".
    dim: int
    items: tuple of (tuple of int, Fraction)
        For each line, the integer vector and the level or constant.
    """

    kind = attr.ib()
    dim = attr.ib()
    items = attr.ib(converter=tuple)

    @property
    def is_toric(self):
        return self.kind == "toric"


def _parse_number(text, line_number, what):
    text = text.strip()
    if not RATIONAL.fullmatch(text):
        raise MalformedInputError(
            f"cannot read {what} {text!r} as a rational p/q", line_number
        )
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise MalformedInputError(
            f"{what} {text!r} has a zero denominator", line_number
        ) from e
    return value


def _parse_header(text, line_number):
    fields = text.split()
    if len(fields) != 2 or fields[0] not in KINDS:
        raise MalformedInputError(
            f"expected 'toric <d>', 'affine <d>' or 'central <d>'; got {text!r}",
            line_number,
        )
    try:
        dim = int(fields[1])
    except ValueError as e:
        raise MalformedInputError(
            f"dimension {fields[1]!r} is not an integer", line_number
        ) from e
    if dim < 0:
        raise MalformedInputError(f"dimension {dim} is negative", line_number)
    return fields[0], dim


def _parse_item(text, kind, dim, line_number):
    separator = "@" if kind == "toric" else "="
    other = "=" if kind == "toric" else "@"
    if other in text or text.count(separator) != 1:
        raise MalformedInputError(
            f"{kind} items have the form '<a_1> ... <a_{dim}> {separator} <p>/<q>'",
            line_number,
        )
    vector_text, constant_text = text.split(separator)
    try:
        vector = tuple(int(x) for x in vector_text.split())
    except ValueError as e:
        raise MalformedInputError(
            f"entries {vector_text.strip()!r} are not all integers", line_number
        ) from e
    if len(vector) != dim:
        raise MalformedInputError(
            f"expected {dim} entries before {separator!r}; got {len(vector)}",
            line_number,
        )
    if not any(vector):
        raise MalformedInputError(f"zero character {vector!r}", line_number)

    what = "level" if kind == "toric" else "constant"
    constant = _parse_number(constant_text, line_number, what)
    if kind == "toric" and not 0 <= constant < 1:
        raise MalformedInputError(f"level {constant} is outside [0, 1)", line_number)
    if kind == "central" and constant != 0:
        raise MalformedInputError(
            f"central arrangements need constant 0; got {constant}", line_number
        )
    return vector, constant


def parse(text):
    "Parses the text of an input file into an InputSpec."
    kind = dim = None
    items = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        if kind is None:
            kind, dim = _parse_header(content, line_number)
        else:
            items.append(_parse_item(content, kind, dim, line_number))
    if kind is None:
        raise MalformedInputError("the input has no header line")
    logger.debug("Parsed %d items of a %s arrangement", len(items), kind)
    return InputSpec(kind, dim, items)


def parse_file(path):
    with open(path) as f:
        return parse(f.read())


def _format_constant(value):
    return f"{value.numerator}/{value.denominator}"


def serialize(spec):
    "The canonical text of an InputSpec; ``parse`` reads it back unchanged."
    separator = "@" if spec.is_toric else "="
    lines = [f"{spec.kind} {spec.dim}"]
    for vector, constant in spec.items:
        entries = " ".join(str(x) for x in vector)
        lines.append(f"{entries} {separator} {_format_constant(constant)}")
    return "\n".join(lines) + "\n"


def to_toric(spec, config=DEFAULT_CONFIG):
    "The NormalizedArrangement of a toric input."
    return normalize(spec.dim, spec.items, config)


def to_arrangement(spec):
    "The hyperplane arrangement of an affine or central input."
    return Arrangement.from_forms(
        spec.dim, [HalfspaceForm(vector, constant) for vector, constant in spec.items]
    )
