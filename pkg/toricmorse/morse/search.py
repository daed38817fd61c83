"""
Backtracking search for acyclic matchings with a prescribed number of critical
objects in every rank.
"""

import logging

import networkx as nx

from ..config import DEFAULT_CONFIG
from ..exception import MatchingSearchError
from ..utils.misc import oneline
from .matching import validate_matching

logger = logging.getLogger(__name__)


class _MatchingSearch:
    """
    Decides the objects from the highest rank down. An undecided object is
    either matched with an unmatched object one rank below through its unique
    indecomposable morphism, or made critical. Acyclicity is kept
    incrementally on the Hasse diagram with the matched edges reversed.
    """

    def __init__(self, category, census, budget):
        self.category = category
        self.census = census
        self.budget = budget
        self.explored = 0

        ranks = category.ranks
        self.order = sorted(
            category.objects, key=lambda obj: (-ranks[obj], category.index(obj))
        )
        self.down = {obj: [] for obj in category.objects}
        for m in category.indecomposables:
            if ranks[m.source] + 1 != ranks[m.target]:
                continue
            if len(category.hom_set(m.source, m.target)) != 1:
                continue
            self.down[m.target].append(m)
        for candidates in self.down.values():
            candidates.sort(key=lambda m: category.index(m.source))

        self.graph = category.digraph(category.indecomposables)
        self.partner = {}
        self.critical = [0] * len(census)

    def _match(self, m):
        if m.source in self.partner:
            return False
        self.graph.remove_edge(m.source, m.target)
        if nx.has_path(self.graph, m.source, m.target):
            self.graph.add_edge(m.source, m.target)
            return False
        self.graph.add_edge(m.target, m.source)
        self.partner[m.source] = m
        self.partner[m.target] = m
        return True

    def _unmatch(self, m):
        self.graph.remove_edge(m.target, m.source)
        self.graph.add_edge(m.source, m.target)
        del self.partner[m.source]
        del self.partner[m.target]

    def _options(self, position):
        "Applies each choice for an object in turn, undoing it on resumption."
        obj = self.order[position]
        if obj in self.partner:
            yield
            return
        for m in self.down[obj]:
            if self._match(m):
                yield
                self._unmatch(m)
        rank = self.category.ranks[obj]
        if self.critical[rank] < self.census[rank]:
            self.critical[rank] += 1
            yield
            self.critical[rank] -= 1

    def _closed(self, position):
        "Whether the census holds for a rank once all its objects are decided."
        n = len(self.order)
        if position == n:
            return tuple(self.critical) == self.census
        rank = self.category.ranks[self.order[position - 1]]
        if self.category.ranks[self.order[position]] == rank:
            return True
        return self.critical[rank] == self.census[rank]

    def run(self):
        n = len(self.order)
        if n == 0:
            return set() if not any(self.census) else None
        stack = [self._options(0)]
        while stack:
            if self.budget is not None and self.explored >= self.budget:
                raise MatchingSearchError(
                    oneline(
                        f"""
                    search budget of {self.budget} steps exhausted on
                    {self.category.name}; raise --search-budget"""
                    ),
                    exhaustive=False,
                )
            try:
                next(stack[-1])
            except StopIteration:
                stack.pop()
                continue
            self.explored += 1
            position = len(stack)
            if not self._closed(position):
                continue
            if position == n:
                return set(self.partner.values())
            stack.append(self._options(position))
        return None


def search_matching(category, census, config=DEFAULT_CONFIG):
    """
    Finds an acyclic matching on ``category`` whose critical objects number
    ``census[k]`` in rank k. Categories with at most ``config.exhaustive_limit``
    objects are searched without a step budget. Returns a validated
    MatchingCertificate.
    """
    width = category.max_rank + 1
    census = tuple(census)
    if any(census[width:]):
        raise MatchingSearchError(
            f"census {census} asks for ranks above {category.max_rank}",
            exhaustive=True,
        )
    census = (census + (0,) * width)[:width]

    budget = None
    if len(category.objects) > config.exhaustive_limit:
        budget = config.search_budget
    search = _MatchingSearch(category, census, budget)
    matching = search.run()
    if matching is None:
        raise MatchingSearchError(
            oneline(
                f"""
            no acyclic matching of {category.name} has critical census
            {census}"""
            ),
            exhaustive=True,
        )
    logger.debug(
        "Found a matching of %s after %d steps", category.name, search.explored
    )
    return validate_matching(category, matching)


def fiber_matching_one_critical(category, rank=None, config=DEFAULT_CONFIG):
    """
    Finds an acyclic matching with a single critical object, placed in
    ``rank`` (by default the top rank of the category).
    """
    if rank is None:
        rank = category.max_rank
    census = [0] * (category.max_rank + 1)
    census[rank] = 1
    return search_matching(category, census, config)
