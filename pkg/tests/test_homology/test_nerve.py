from toricmorse.charts.categories import face_category, salvetti_category
from toricmorse.homology.groups import check_euler_characteristic
from toricmorse.homology.nerve import nerve_chain_complex

from ..test_morse.test_matching import chain, circle


def test_nerve_of_chain():
    chains = nerve_chain_complex(chain())
    assert [len(basis) for basis in chains.bases] == [3, 3, 1]
    assert not chains.truncated
    assert chains.euler_characteristic() == 1
    assert chains.boundary(1).shape == (3, 3)
    assert chains.boundary(2).shape == (3, 1)
    # Each column of a boundary matrix has entries +1 and -1.
    assert sorted(chains.boundary(1)[:, 0].tolist()) == [-1, 0, 1]


def test_truncation():
    chains = nerve_chain_complex(chain(), max_deg=0)
    assert len(chains.bases) == 2
    assert chains.truncated
    assert check_euler_characteristic(chains, chain()) is None

    chains = nerve_chain_complex(circle(), max_deg=0)
    assert not chains.truncated


def test_rank_above_top_degree():
    chains = nerve_chain_complex(circle())
    assert chains.rank(1) == 4
    assert chains.rank(5) == 0


def test_euler_characteristic_matches_objects(running_structure):
    # Only holds for categories whose objects are cells of a regular complex.
    for category in (circle(), face_category(running_structure)):
        chains = nerve_chain_complex(category)
        expected = sum((-1) ** r for r in category.ranks.values())
        assert check_euler_characteristic(chains, category) == expected

    category = salvetti_category(running_structure)
    chains = nerve_chain_complex(category)
    assert check_euler_characteristic(chains, category) == 1 - 5 + 7
