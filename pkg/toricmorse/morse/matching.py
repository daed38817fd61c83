"""
Validation of acyclic matchings on acyclic categories, and the Patchwork
construction gluing matchings on the fibers of a functor.
"""

import logging

import networkx as nx

from ..datatypes import MatchingCertificate
from ..exception import InternalVerificationError, MatchingValidationError
from ..utils.misc import oneline

logger = logging.getLogger(__name__)


def _alternating_graph(category, matching):
    "The indecomposables as edges, with the matched ones reversed."
    graph = nx.DiGraph()
    graph.add_nodes_from(category.objects)
    for m in category.indecomposables:
        if m in matching:
            graph.add_edge(m.target, m.source)
        else:
            graph.add_edge(m.source, m.target)
    return graph


def _find_cycle(category, matching):
    try:
        edges = nx.find_cycle(_alternating_graph(category, matching))
    except nx.NetworkXNoCycle:
        return None
    return [source for source, _ in edges]


def _linear_extension(category, matching):
    """
    Contracts every matched pair to a single node and sorts the result
    topologically. Returns None if the contracted graph has a cycle.
    """
    node = {obj: category.index(obj) for obj in category.objects}
    members = {category.index(obj): [obj] for obj in category.objects}
    for m in matching:
        source_node = node[m.source]
        node[m.target] = source_node
        members[source_node] = [m.source, m.target]
        del members[category.index(m.target)]

    graph = nx.DiGraph()
    graph.add_nodes_from(members)
    graph.add_edges_from(
        (node[m.source], node[m.target])
        for m in category.morphisms
        if node[m.source] != node[m.target]
    )
    try:
        order = list(nx.lexicographical_topological_sort(graph))
    except nx.NetworkXUnfeasible:
        return None
    return [obj for n in order for obj in members[n]]


def validate_matching(category, matching):
    """
    Checks that a set of morphisms is an acyclic matching on ``category``:
    every morphism is indecomposable and the only morphism between its ends,
    no object is used twice, and there is no alternating cycle.

    Acyclicity is decided twice, by a cycle search on the Hasse diagram with
    the matched edges reversed and by building a linear extension in which
    matched ends are consecutive; the two must agree. Returns a
    MatchingCertificate.
    """
    matching = frozenset(matching)
    indecomposables = category.indecomposables

    used = set()
    for m in sorted(matching, key=lambda m: category.index(m.source)):
        if m not in indecomposables:
            raise MatchingValidationError(f"{m!r} is not an indecomposable morphism")
        if len(category.hom_set(m.source, m.target)) != 1:
            raise MatchingValidationError(
                f"{m!r} is not the only morphism between its ends"
            )
        for obj in (m.source, m.target):
            if obj in used:
                raise MatchingValidationError(
                    f"object {obj!r} is an end of two matched morphisms"
                )
            used.add(obj)

    cycle = _find_cycle(category, matching)
    linear_extension = _linear_extension(category, matching)
    if (cycle is None) != (linear_extension is not None):
        raise InternalVerificationError.for_check(
            "matching",
            oneline(
                f"""
            cycle search and linear extension disagree on a matching of
            {len(matching)} morphisms in {category.name}"""
            ),
        )
    if cycle is not None:
        raise MatchingValidationError(
            f"matching has an alternating cycle through {len(cycle)} objects",
            cycle=cycle,
        )

    critical = [obj for obj in linear_extension if obj not in used]
    certificate = MatchingCertificate(
        matching=matching,
        linear_extension=linear_extension,
        critical=critical,
        census=category.census(critical),
    )
    logger.debug(
        "Validated %d matched pairs in %s, critical census %s",
        len(matching),
        category.name,
        certificate.census,
    )
    return certificate


def patchwork(category, phi, target_leq, fiber_matchings):
    """
    Glues matchings on the fibers of a functor from ``category`` to a poset.

    ``phi`` maps each object to an element of the poset, ordered by
    ``target_leq``; ``fiber_matchings`` maps poset elements to matchings of
    their fibers. The union is validated on the whole category.
    """
    for m in category.morphisms:
        if not target_leq(phi[m.source], phi[m.target]):
            raise InternalVerificationError.for_check(
                "patchwork", f"{m!r} is not sent to a relation of the poset"
            )

    union = set()
    for value, matching in fiber_matchings.items():
        for m in matching:
            if phi[m.source] != value or phi[m.target] != value:
                raise InternalVerificationError.for_check(
                    "patchwork", f"{m!r} leaves the fiber over {value!r}"
                )
        fiber = [obj for obj in category.objects if phi[obj] == value]
        validate_matching(category.full_subcategory(fiber, name="fiber"), matching)
        union.update(matching)

    try:
        return validate_matching(category, union)
    except MatchingValidationError as e:
        raise InternalVerificationError.for_check(
            "patchwork", f"the union of the fiber matchings is invalid: {e}"
        ) from e
