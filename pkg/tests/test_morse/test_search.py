import pytest

from toricmorse.config import DEFAULT_CONFIG
from toricmorse.datatypes import Morphism
from toricmorse.exception import MatchingSearchError
from toricmorse.morse.search import fiber_matching_one_critical, search_matching

from .test_matching import chain, circle, square


def test_perfect_matching_of_square():
    certificate = search_matching(square(), (0, 0, 0))
    assert certificate.census == (0, 0, 0)
    assert len(certificate.matching) == 2


def test_search_chain():
    assert search_matching(chain(), (0, 0, 1)).matching == {Morphism(0, 1)}
    assert search_matching(chain(), (1, 0, 0)).matching == {Morphism(1, 2)}
    assert search_matching(chain(), (1, 1, 1)).matching == frozenset()
    # Short censuses are padded with zeros.
    assert search_matching(chain(), (1,)).census == (1, 0, 0)


def test_impossible_census():
    with pytest.raises(MatchingSearchError) as info:
        search_matching(chain(), (0, 1, 0))
    assert info.value.exhaustive

    with pytest.raises(MatchingSearchError, match="asks for ranks above"):
        search_matching(chain(), (0, 0, 0, 1))


def test_search_budget():
    config = DEFAULT_CONFIG.set(exhaustive_limit=0, search_budget=1)
    with pytest.raises(MatchingSearchError, match="--search-budget") as info:
        search_matching(circle(), (1, 1), config)
    assert not info.value.exhaustive
    assert search_matching(circle(), (1, 1)).census == (1, 1)


def test_one_critical():
    assert fiber_matching_one_critical(chain()).critical == (2,)
    assert fiber_matching_one_critical(chain(), rank=0).critical == (0,)

    # A circle has Euler characteristic zero, so no single critical cell.
    with pytest.raises(MatchingSearchError):
        fiber_matching_one_critical(circle())
