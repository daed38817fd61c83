from fractions import Fraction

import pytest

from toricmorse.utils.misc import (
    format_fraction,
    format_signs,
    frac_mod1,
    groups_dict,
    oneline,
    parse_signs,
    sign,
    single_element,
)

from ..helpers import equal_when_sorted


def test_oneline():
    assert oneline("a") == "a"
    assert (
        oneline(
            """
        several
            lines   here
        """
        )
        == "several lines   here"
    )


def test_groups_dict():
    groups = groups_dict(range(7), lambda x: x % 3)
    assert equal_when_sorted(groups.keys(), [0, 1, 2])
    assert groups[0] == [0, 3, 6]
    assert groups[2] == [2, 5]


def test_single_element():
    assert single_element([5]) == 5
    with pytest.raises(ValueError):
        single_element([])
    with pytest.raises(ValueError):
        single_element([1, 2])


def test_signs():
    assert sign(Fraction(-1, 3)) == -1
    assert sign(0) == 0
    assert sign(7) == 1

    assert format_signs((-1, 0, 1)) == "-0+"
    assert parse_signs(" +-0") == (1, -1, 0)
    with pytest.raises(ValueError, match="Sign strings"):
        parse_signs("+x")


def test_fractions():
    assert format_fraction(Fraction(3, 1)) == "3"
    assert format_fraction(Fraction(-2, 4)) == "-1/2"

    assert frac_mod1(Fraction(5, 3)) == Fraction(2, 3)
    assert frac_mod1(Fraction(-1, 4)) == Fraction(3, 4)
    assert frac_mod1(2) == 0
