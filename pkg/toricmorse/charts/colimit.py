"""
Rebuilds the face category and the Salvetti category of a face structure as
colimits of local data: the face posets F(A[F]) and the Salvetti posets
Sal(A[F]) glued along the maps i_m of the face-category morphisms m. The
quotients must match the categories built directly.
"""

import logging

import attr
import networkx as nx

from ..config import DEFAULT_CONFIG
from ..datatypes import Morphism
from ..exception import InternalVerificationError
from ..hyperplane.faces import compose_signs, face_leq
from ..utils.misc import groups_dict, oneline
from .categories import (
    face_category,
    face_map,
    restrict_to_zeros,
    salvetti_category,
)

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class ColimitReport:
    """
    The sizes of the verified quotients and the number of morphisms whose
    maps i_m were checked for geometricity.
    """

    face_classes = attr.ib()
    face_morphism_classes = attr.ib()
    salvetti_classes = attr.ib()
    salvetti_morphism_classes = attr.ib()
    sampled_morphisms = attr.ib()


def _fail(detail):
    raise InternalVerificationError.for_check("colimit", detail)


def _quotient(elements, identifications, realize, expected, what):
    """
    Glues ``elements`` along ``identifications`` and checks that ``realize``
    is constant on each class and induces a bijection onto ``expected``.
    """
    union_find = nx.utils.UnionFind(elements)
    for first, second in identifications:
        union_find.union(first, second)
    classes = groups_dict(elements, lambda element: union_find[element])

    realized = []
    for members in classes.values():
        images = {realize(element) for element in members}
        if len(images) != 1:
            _fail(f"a class of local {what} is glued from {len(images)} globals")
        realized.extend(images)
    if len(set(realized)) != len(realized) or set(realized) != set(expected):
        _fail(
            oneline(
                f"""
            {len(classes)} classes of local {what} do not match the
            {len(expected)} {what} built directly"""
            )
        )
    return len(classes)


class _LocalData:
    "Memoized local face posets and Salvetti cells of every face."

    def __init__(self, structure):
        self.structure = structure
        self._faces = {}
        self._cells = {}

    def faces(self, face):
        if face not in self._faces:
            local = self.structure.local_arrangement(face)
            self._faces[face] = self.structure.local_faces(local)
        return self._faces[face]

    def cells(self, face):
        if face not in self._cells:
            faces = self.faces(face)
            self._cells[face] = [
                (g.signs, c.signs)
                for g in faces
                for c in faces.chambers()
                if face_leq(g.signs, c.signs)
            ]
        return self._cells[face]


def check_geometric(structure, face_cat, maps, samples):
    """
    Checks, for the first ``samples`` face-category morphisms m: F -> G, that
    i_m preserves dimensions (so the diagram is rank-preserving), is injective
    with image the faces of A[F] above F_m, and composes as
    i_{n o m} = i_m o i_n with i_m(F_n) = F_{n o m}.
    """
    local = _LocalData(structure)
    sampled = face_cat.morphisms[:samples]
    for m in sampled:
        fm = maps[m]
        source_faces = local.faces(m.source)
        target_faces = local.faces(m.target)
        images = [fm.inclusion[h.signs] for h in target_faces]
        upper = {g.signs for g in source_faces if face_leq(fm.selected, g.signs)}
        if len(set(images)) != len(images) or set(images) != upper:
            _fail(f"i_m is not an isomorphism onto the faces above F_m for {m!r}")
        for h in target_faces:
            if source_faces[fm.inclusion[h.signs]].dim != h.dim:
                _fail(f"i_m does not preserve dimensions for {m!r}")

        for n in face_cat.morphisms_from(m.target):
            composite = maps[face_cat.compose(m, n)]
            fn = maps[n]
            for h in local.faces(n.target):
                if composite.inclusion[h.signs] != fm.inclusion[fn.inclusion[h.signs]]:
                    _fail(f"i_(n o m) differs from i_m o i_n for {m!r}, {n!r}")
            if fm.inclusion[fn.selected] != composite.selected:
                _fail(f"i_m(F_n) differs from F_(n o m) for {m!r}, {n!r}")
    return len(sampled)


def verify_colimit(structure, face_cat=None, sal_cat=None, config=DEFAULT_CONFIG):
    """
    Reconstructs the objects and morphisms of the face category and of the
    Salvetti category as quotients of the disjoint unions of local data, and
    checks them against the categories built directly.
    """
    if face_cat is None:
        face_cat = face_category(structure)
    if sal_cat is None:
        sal_cat = salvetti_category(structure)
    maps = {m: face_map(structure, m) for m in face_cat.morphisms}
    sampled = check_geometric(structure, face_cat, maps, config.colimit_samples)

    local = _LocalData(structure)
    q = structure.face_from_local

    # Faces: (F, g) for a face g of A[F], glued by (G, h) ~ (F, i_m(h)).
    faces = [(F, g.signs) for F in structure.faces for g in local.faces(F)]
    glue_faces = [
        ((m.target, h.signs), (m.source, maps[m].inclusion[h.signs]))
        for m in face_cat.morphisms
        for h in local.faces(m.target)
    ]
    n_faces = _quotient(
        faces,
        glue_faces,
        lambda e: q(e[0], e[1]),
        structure.faces,
        "faces",
    )

    # Face morphisms: (F, g, h) for g < h in F(A[F]).
    def local_morphisms(F):
        signs = [g.signs for g in local.faces(F)]
        return [(g, h) for g in signs for h in signs if g != h and face_leq(g, h)]

    morphisms = [(F, g, h) for F in structure.faces for g, h in local_morphisms(F)]
    glue_morphisms = [
        (
            (m.target, g, h),
            (m.source, maps[m].inclusion[g], maps[m].inclusion[h]),
        )
        for m in face_cat.morphisms
        for g, h in local_morphisms(m.target)
    ]
    n_morphisms = _quotient(
        morphisms,
        glue_morphisms,
        lambda e: Morphism(q(e[0], e[1]), q(e[0], e[2]), restrict_to_zeros(e[2], e[1])),
        face_cat.morphisms,
        "face morphisms",
    )

    # Salvetti cells: (F, g, c) for a cell [g, c] of Sal(A[F]).
    def salvetti_object(F, g, c):
        return (q(F, g), restrict_to_zeros(c, g))

    cells = [(F, g, c) for F in structure.faces for g, c in local.cells(F)]
    glue_cells = [
        (
            (m.target, g, c),
            (m.source, maps[m].inclusion[g], maps[m].inclusion[c]),
        )
        for m in face_cat.morphisms
        for g, c in local.cells(m.target)
    ]
    n_cells = _quotient(
        cells,
        glue_cells,
        lambda e: salvetti_object(*e),
        sal_cat.objects,
        "Salvetti cells",
    )

    # Salvetti morphisms: [g1, c1] < [g2, c2] in Sal(A[F]).
    def cell_morphisms(F):
        return [
            (g1, c1, g2, c2)
            for g1, c1 in local.cells(F)
            for g2, c2 in local.cells(F)
            if (g1, c1) != (g2, c2)
            and face_leq(g2, g1)
            and compose_signs(g1, c2) == c1
        ]

    def salvetti_morphism(F, g1, c1, g2, c2):
        return Morphism(
            salvetti_object(F, g1, c1),
            salvetti_object(F, g2, c2),
            restrict_to_zeros(g1, g2),
        )

    cell_pairs = [(F,) + pair for F in structure.faces for pair in cell_morphisms(F)]
    glue_pairs = [
        (
            (m.target,) + pair,
            (m.source,) + tuple(maps[m].inclusion[s] for s in pair),
        )
        for m in face_cat.morphisms
        for pair in cell_morphisms(m.target)
    ]
    n_cell_morphisms = _quotient(
        cell_pairs,
        glue_pairs,
        lambda e: salvetti_morphism(*e),
        sal_cat.morphisms,
        "Salvetti morphisms",
    )

    logger.info(
        "Colimits reproduce %d faces and %d Salvetti objects", n_faces, n_cells
    )
    return ColimitReport(
        face_classes=n_faces,
        face_morphism_classes=n_morphisms,
        salvetti_classes=n_cells,
        salvetti_morphism_classes=n_cell_morphisms,
        sampled_morphisms=sampled,
    )
