"""
Finite acyclic categories given by their objects, non-identity morphisms and a
composition function.
"""

from collections import defaultdict
import logging

import attr
import networkx as nx

from ..datatypes import Morphism
from ..exception import InternalVerificationError
from ..utils.misc import oneline

logger = logging.getLogger(__name__)


class AcyclicCategory:
    """
    A finite category whose only endomorphisms are identities.

    Identities are implicit: ``morphisms`` lists only the non-identity ones.
    Objects carry an integer rank; ``compose(first, second)`` returns the
    composite of ``first: x -> y`` followed by ``second: y -> z``.
    """

    def __init__(self, objects, morphisms, ranks, compose, name="category"):
        self.name = name
        self.objects = tuple(objects)
        self.ranks = dict(ranks)
        self.morphisms = tuple(morphisms)
        self._compose = compose

        self._index = {obj: i for i, obj in enumerate(self.objects)}
        self._from = defaultdict(list)
        self._to = defaultdict(list)
        self._hom = defaultdict(list)
        for m in self.morphisms:
            if m.source == m.target:
                raise InternalVerificationError.for_check(
                    "acyclic", f"{self.name} has an endomorphism {m!r}"
                )
            self._from[m.source].append(m)
            self._to[m.target].append(m)
            self._hom[(m.source, m.target)].append(m)

        self._indecomposables = None
        self._height = None

    def __repr__(self):
        return oneline(
            f"""
            AcyclicCategory({self.name!r}, {len(self.objects)} objects,
            {len(self.morphisms)} morphisms)"""
        )

    def __contains__(self, obj):
        return obj in self._index

    def index(self, obj):
        return self._index[obj]

    def morphisms_from(self, obj):
        return self._from[obj]

    def morphisms_to(self, obj):
        return self._to[obj]

    def hom_set(self, source, target):
        return self._hom.get((source, target), [])

    def compose(self, first, second):
        assert first.target == second.source
        return self._compose(first, second)

    @property
    def max_rank(self):
        return max(self.ranks.values()) if self.ranks else 0

    @property
    def indecomposables(self):
        "The morphisms that are not composites of two non-identity morphisms."
        if self._indecomposables is None:
            composites = set()
            for first in self.morphisms:
                for second in self._from[first.target]:
                    composites.add(self._compose(first, second))
            self._indecomposables = frozenset(
                m for m in self.morphisms if m not in composites
            )
        return self._indecomposables

    def digraph(self, morphisms=None):
        "A networkx DiGraph on the objects with an edge for each morphism."
        graph = nx.DiGraph()
        graph.add_nodes_from(self.objects)
        if morphisms is None:
            morphisms = self.morphisms
        graph.add_edges_from((m.source, m.target) for m in morphisms)
        return graph

    @property
    def height(self):
        "The length of the longest chain of composable non-identity morphisms."
        if self._height is None:
            self._height = nx.dag_longest_path_length(self.digraph(self.morphisms))
        return self._height

    def check_acyclic(self):
        if not nx.is_directed_acyclic_graph(self.digraph()):
            raise InternalVerificationError.for_check(
                "acyclic", f"{self.name} has a cycle of morphisms"
            )

    def census(self, objects):
        "Counts the given objects by rank 0, 1, ..., max_rank."
        counts = [0] * (self.max_rank + 1)
        for obj in objects:
            counts[self.ranks[obj]] += 1
        return tuple(counts)

    def full_subcategory(self, objects, name=None):
        members = set(objects)
        return AcyclicCategory(
            objects=[obj for obj in self.objects if obj in members],
            morphisms=[
                m
                for m in self.morphisms
                if m.source in members and m.target in members
            ],
            ranks={obj: self.ranks[obj] for obj in members},
            compose=self._compose,
            name=name or f"{self.name} (subcategory)",
        )

    @classmethod
    def from_poset(cls, elements, leq, ranks, name="poset"):
        """
        Builds the category of a finite poset, with one morphism for each
        strictly comparable pair.
        """
        elements = list(elements)
        morphisms = [
            Morphism(a, b)
            for a in elements
            for b in elements
            if a != b and leq(a, b)
        ]
        return cls(
            objects=elements,
            morphisms=morphisms,
            ranks=ranks,
            compose=_compose_poset,
            name=name,
        )


def _compose_poset(first, second):
    return Morphism(first.source, second.target)


@attr.s(frozen=True)
class CategoryIsomorphism:
    """
    An explicit isomorphism between acyclic categories, or from one to the
    opposite of another when ``opposite`` is set.
    """

    object_map = attr.ib()
    morphism_map = attr.ib()
    opposite = attr.ib(default=False)


def check_isomorphism(source, target, object_map, morphism_map, opposite=False):
    """
    Checks that the given maps form an isomorphism ``source -> target`` (or
    ``source -> target^op``): bijective on objects, bijective on every hom-set,
    and compatible with composition. Returns a CategoryIsomorphism.
    """

    def fail(detail):
        raise InternalVerificationError.for_check(
            "isomorphism", f"{source.name} -> {target.name}: {detail}"
        )

    images = [object_map[obj] for obj in source.objects]
    if len(set(images)) != len(images) or set(images) != set(target.objects):
        fail("not a bijection on objects")
    if len(morphism_map) != len(source.morphisms):
        fail("morphism map is incomplete")
    if len(target.morphisms) != len(source.morphisms):
        fail(
            oneline(
                f"""
            {len(source.morphisms)} morphisms are mapped onto
            {len(target.morphisms)}"""
            )
        )
    seen = set()
    for m in source.morphisms:
        image = morphism_map[m]
        if opposite:
            expected = (object_map[m.target], object_map[m.source])
        else:
            expected = (object_map[m.source], object_map[m.target])
        if (image.source, image.target) != expected:
            fail(f"{m!r} is not mapped between the images of its ends")
        if image not in target.hom_set(*expected):
            fail(f"{m!r} is mapped to a non-morphism {image!r}")
        if image in seen:
            fail(f"{m!r} is mapped onto an already used morphism")
        seen.add(image)

    for first in source.morphisms:
        for second in source.morphisms_from(first.target):
            composite = morphism_map[source.compose(first, second)]
            if opposite:
                expected = target.compose(morphism_map[second], morphism_map[first])
            else:
                expected = target.compose(morphism_map[first], morphism_map[second])
            if composite != expected:
                fail(f"composition is not preserved at {first!r}, {second!r}")

    return CategoryIsomorphism(object_map, morphism_map, opposite)
