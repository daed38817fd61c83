"""
Report sections for the CLI commands, and their YAML and JSON renderings.

Each input kind has a session that computes (and remembers) the objects the
commands need. Sections are attrs records turned into plain trees by a cattrs
converter, so the output is stable and sorted.
"""

from fractions import Fraction
import json
import logging

import attr
import cattr
import yaml

from ..charts.categories import face_category, salvetti_category
from ..charts.colimit import verify_colimit
from ..charts.strata import stratify, verify_xi, verify_y_counts
from ..config import DEFAULT_CONFIG
from ..datatypes import Polynomial
from ..exception import InternalVerificationError
from ..homology.groups import (
    betti_numbers,
    check_euler_characteristic,
    homology,
    torsion_free_check,
)
from ..homology.nerve import nerve_chain_complex
from ..homology.poincare import poincare_hyperplane, poincare_toric
from ..hyperplane.affine import AffineFaceStructure, affine_minimal
from ..hyperplane.nbc import local_nbc, nbc
from ..hyperplane.salvetti import strata_central
from ..morse.salvetti import salvetti_matching
from ..morse.torus import binomial_census, torus_matching
from ..toric.faces import ToricFaceStructure
from ..toric.lift import verify_lift_quotient
from ..utils.misc import format_fraction, format_signs, oneline
from .parsing import to_arrangement, to_toric

logger = logging.getLogger(__name__)

try:
    YamlDumper = yaml.CSafeDumper
except AttributeError:
    YamlDumper = yaml.SafeDumper


# Sections.


@attr.s(frozen=True)
class InputSection:
    kind = attr.ib()
    dim = attr.ib()
    items = attr.ib()
    deficiency = attr.ib(default=0)
    notes = attr.ib(default=())


@attr.s(frozen=True)
class LayerRecord:
    description = attr.ib()
    dim = attr.ib()
    items = attr.ib()


@attr.s(frozen=True)
class LayersSection:
    counts = attr.ib()
    layers = attr.ib()


@attr.s(frozen=True)
class FacesSection:
    f_vector = attr.ib()
    euler_characteristic = attr.ib()
    morphisms = attr.ib()


@attr.s(frozen=True)
class NBCSection:
    counts = attr.ib()
    y_counts = attr.ib(default=None)


@attr.s(frozen=True)
class PoincareSection:
    polynomial = attr.ib()
    value_at_one = attr.ib()


@attr.s(frozen=True)
class SalvettiSection:
    objects = attr.ib()
    morphisms = attr.ib()
    objects_by_rank = attr.ib()
    strata = attr.ib()


@attr.s(frozen=True)
class MatchingSection:
    census = attr.ib()
    total = attr.ib()
    matched_pairs = attr.ib()
    critical = attr.ib()
    torus_census = attr.ib(default=None)
    used_fallback = attr.ib(default=False)


@attr.s(frozen=True)
class HomologySection:
    groups = attr.ib()
    betti = attr.ib()
    torsion_free = attr.ib()
    truncated = attr.ib()


@attr.s(frozen=True)
class CheckRecord:
    name = attr.ib()
    detail = attr.ib()


@attr.s(frozen=True)
class VerifySection:
    checks = attr.ib()


@attr.s(frozen=True)
class Report:
    input = attr.ib()
    layers = attr.ib(default=None)
    faces = attr.ib(default=None)
    nbc = attr.ib(default=None)
    poincare = attr.ib(default=None)
    salvetti = attr.ib(default=None)
    matching = attr.ib(default=None)
    homology = attr.ib(default=None)
    verify = attr.ib(default=None)


# Sessions.


class _Session:
    "Computes and remembers the objects shared by several sections."

    def __init__(self, spec, config):
        self.spec = spec
        self.config = config
        self._memo = {}

    def _get(self, name, compute):
        if name not in self._memo:
            self._memo[name] = compute()
        return self._memo[name]

    @property
    def face_category(self):
        return self._get("face_category", lambda: face_category(self.structure))

    @property
    def salvetti_category(self):
        return self._get(
            "salvetti_category", lambda: salvetti_category(self.structure)
        )

    @property
    def salvetti_homology(self):
        def compute():
            chains = nerve_chain_complex(self.salvetti_category, self.config.max_deg)
            return chains, homology(chains)

        return self._get("salvetti_homology", compute)

    def faces_section(self):
        structure = self.structure
        return FacesSection(
            f_vector=structure.f_vector(),
            euler_characteristic=structure.euler_characteristic(),
            morphisms=len(self.face_category.morphisms),
        )

    def poincare_section(self):
        polynomial = self.poincare
        return PoincareSection(polynomial=polynomial, value_at_one=polynomial(1))

    def salvetti_section(self):
        category = self.salvetti_category
        return SalvettiSection(
            objects=len(category.objects),
            morphisms=len(category.morphisms),
            objects_by_rank=category.census(category.objects),
            strata=len(self.stratification.strata),
        )

    def homology_section(self):
        chains, groups = self.salvetti_homology
        return HomologySection(
            groups=groups,
            betti=betti_numbers(groups),
            torsion_free=torsion_free_check(groups).torsion_free,
            truncated=chains.truncated,
        )

    def _matching_section(self, certificate, **kwargs):
        return MatchingSection(
            census=certificate.census,
            total=certificate.n_critical,
            matched_pairs=len(certificate.matching),
            critical=[self.describe_object(obj) for obj in certificate.critical],
            **kwargs,
        )

    def describe_object(self, obj):
        face, chamber = obj
        return f"{self.structure.describe_face(face)} / {format_signs(chamber)}"

    def _check_homology(self, checks):
        chains, groups = self.salvetti_homology
        betti = betti_numbers(groups)
        expected = self.nerve_poincare.coefficients[: len(betti)]
        expected = expected + (0,) * (len(betti) - len(expected))
        if betti != expected:
            raise InternalVerificationError.for_check(
                "betti",
                oneline(
                    f"""
                the nerve of the Salvetti category has Betti numbers {betti};
                the Poincaré polynomial gives {expected}"""
                ),
            )
        checks.append(CheckRecord("betti", f"Betti numbers {betti}"))

        report = torsion_free_check(groups)
        if not report.torsion_free:
            raise InternalVerificationError.for_check(
                "torsion", f"homology has torsion {report.offending}"
            )
        checks.append(CheckRecord("torsion", "integral homology is torsion free"))

        euler = check_euler_characteristic(chains, self.salvetti_category)
        if euler is not None:
            checks.append(CheckRecord("euler", f"nerve Euler characteristic {euler}"))

    def _check_colimit(self, checks):
        if self.config.skip_colimit:
            checks.append(CheckRecord("colimit", "skipped"))
            return
        colimit = verify_colimit(
            self.structure, self.face_category, self.salvetti_category, self.config
        )
        checks.append(
            CheckRecord(
                "colimit",
                oneline(
                    f"""
                {colimit.face_classes} faces and {colimit.salvetti_classes}
                Salvetti objects rebuilt from local data;
                {colimit.sampled_morphisms} morphisms checked for geometricity"""
                ),
            )
        )

    def report(self, command):
        sections = {"input": self.input_section()}
        builders = {
            "layers": self.layers_section,
            "faces": self.faces_section,
            "nbc": self.nbc_section,
            "poincare": self.poincare_section,
            "salvetti": self.salvetti_section,
            "matching": self.matching_section,
            "homology": self.homology_section,
            "verify": self.verify_section,
        }
        names = list(builders) if command == "report" else [command]
        for name in names:
            sections[name] = builders[name]()
        return Report(**sections)


class ToricSession(_Session):
    def __init__(self, spec, config=DEFAULT_CONFIG):
        super(ToricSession, self).__init__(spec, config)
        self.normalized = to_toric(spec, config)
        self.arrangement = self.normalized.arrangement

    @property
    def structure(self):
        return self._get("structure", lambda: ToricFaceStructure(self.arrangement))

    @property
    def stratification(self):
        return self._get(
            "stratification",
            lambda: stratify(self.structure, self.salvetti_category, self.config),
        )

    @property
    def poincare(self):
        return self._get(
            "poincare",
            lambda: poincare_toric(
                self.structure.layer_poset, self.normalized.deficiency
            ),
        )

    @property
    def nerve_poincare(self):
        "The essential part; the deficiency contributes a factor (1 + t)^k."
        return poincare_toric(self.structure.layer_poset)

    @property
    def torus_matching(self):
        return self._get(
            "torus_matching",
            lambda: torus_matching(self.structure, self.face_category, self.config),
        )

    @property
    def salvetti_matching(self):
        return self._get(
            "salvetti_matching",
            lambda: salvetti_matching(self.stratification, self.config),
        )

    def input_section(self):
        return InputSection(
            kind=self.spec.kind,
            dim=self.spec.dim,
            items=[str(item) for item in self.arrangement.items],
            deficiency=self.normalized.deficiency,
            notes=self.normalized.notes,
        )

    def layers_section(self):
        poset = self.structure.layer_poset
        return LayersSection(
            counts=poset.counts(),
            layers=[
                LayerRecord(str(layer), layer.dim, layer.items) for layer in poset
            ],
        )

    def nbc_section(self):
        return NBCSection(
            counts=local_nbc(self.structure.layer_poset).counts,
            y_counts=self.stratification.y_counts(),
        )

    def matching_section(self):
        matching = self.salvetti_matching
        torus = self.torus_matching
        return self._matching_section(
            matching.certificate,
            torus_census=torus.certificate.census,
            used_fallback=matching.used_fallback or torus.used_fallback,
        )

    def verify_section(self):
        checks = []
        structure = self.structure

        lift = verify_lift_quotient(structure)
        checks.append(
            CheckRecord(
                "lift",
                f"{lift.n_pieces} cube pieces cover the {lift.n_faces} faces",
            )
        )
        if structure.euler_characteristic() != 0:
            raise InternalVerificationError.for_check(
                "euler", "the torus decomposition has nonzero Euler characteristic"
            )
        checks.append(CheckRecord("faces", f"f-vector {structure.f_vector()}"))

        self._check_colimit(checks)

        stratification = self.stratification
        checks.append(
            CheckRecord(
                "strata",
                f"{len(stratification.strata)} strata isomorphic to F(A^Y)^op",
            )
        )
        verify_xi(stratification)
        checks.append(CheckRecord("xi", "xi_F is an order-preserving bijection"))
        y_counts = verify_y_counts(stratification)
        checks.append(CheckRecord("y_counts", f"Y by layer dimension {y_counts}"))

        torus = self.torus_matching
        checks.append(
            CheckRecord("torus_matching", f"critical census {torus.certificate.census}")
        )
        face_chains = nerve_chain_complex(self.face_category, self.config.max_deg)
        face_betti = betti_numbers(homology(face_chains))
        expected = binomial_census(structure.dim)[: len(face_betti)]
        if face_betti != expected:
            raise InternalVerificationError.for_check(
                "torus_homology",
                f"the face category nerve has Betti numbers {face_betti}",
            )
        checks.append(CheckRecord("torus_homology", f"Betti numbers {face_betti}"))

        matching = self.salvetti_matching
        checks.append(
            CheckRecord(
                "salvetti_matching",
                f"critical census {matching.certificate.census}",
            )
        )
        self._check_homology(checks)
        return VerifySection(checks)


class AffineSession(_Session):
    def __init__(self, spec, config=DEFAULT_CONFIG):
        super(AffineSession, self).__init__(spec, config)
        self.arrangement = to_arrangement(spec)

    @property
    def structure(self):
        return self._get("structure", lambda: AffineFaceStructure(self.arrangement))

    @property
    def minimal(self):
        return self._get(
            "minimal", lambda: affine_minimal(self.structure.arrangement, self.config)
        )

    @property
    def stratification(self):
        return self.minimal.stratification

    @property
    def salvetti_category(self):
        return self.minimal.stratification.category

    @property
    def poincare(self):
        return self._get(
            "poincare", lambda: poincare_hyperplane(self.structure.arrangement)
        )

    @property
    def nerve_poincare(self):
        return self.poincare

    def input_section(self):
        items = []
        for form in self.structure.arrangement.hyperplanes:
            normal = " ".join(str(x) for x in form.normal)
            items.append(f"{normal} = {format_fraction(form.b)}")
        return InputSection(kind=self.spec.kind, dim=self.spec.dim, items=items)

    def layers_section(self):
        structure = self.structure
        return LayersSection(
            counts=tuple(
                sum(1 for flat in structure.layers if structure.layer_dim(flat) == k)
                for k in range(structure.dim + 1)
            ),
            layers=[
                LayerRecord(
                    structure.describe_layer(flat), structure.layer_dim(flat), flat
                )
                for flat in structure.layers
            ],
        )

    def nbc_section(self):
        arrangement = self.structure.arrangement
        if arrangement.is_central:
            counts = nbc(arrangement).counts
        else:
            counts = local_nbc(self.structure).counts
        return NBCSection(counts=counts, y_counts=self.stratification.y_counts())

    def matching_section(self):
        return self._matching_section(self.minimal.matching.certificate)

    def verify_section(self):
        checks = []
        structure = self.structure
        arrangement = structure.arrangement

        expected_euler = (-1) ** structure.dim
        if structure.euler_characteristic() != expected_euler:
            raise InternalVerificationError.for_check(
                "euler", "the faces do not decompose R^d"
            )
        checks.append(CheckRecord("faces", f"f-vector {structure.f_vector()}"))

        chambers = len(structure.face_poset.chambers())
        if chambers != self.poincare(1):
            raise InternalVerificationError.for_check(
                "zaslavsky",
                f"{chambers} chambers but P(1) = {self.poincare(1)}",
            )
        checks.append(CheckRecord("zaslavsky", f"{chambers} chambers"))

        self._check_colimit(checks)

        minimal = self.minimal
        checks.append(
            CheckRecord(
                "strata",
                f"{len(minimal.stratification.strata)} strata isomorphic to F(A^Y)^op",
            )
        )
        verify_xi(minimal.stratification)
        checks.append(CheckRecord("xi", "xi_F is an order-preserving bijection"))
        if arrangement.is_central:
            central = strata_central(arrangement)
            checks.append(
                CheckRecord("central_strata", f"{len(central.blocks)} chamber strata")
            )
        checks.append(CheckRecord("minimal", f"critical census {minimal.census}"))
        self._check_homology(checks)
        return VerifySection(checks)


def session_for(spec, config=DEFAULT_CONFIG):
    if spec.is_toric:
        return ToricSession(spec, config)
    return AffineSession(spec, config)


# Rendering.

REPORT_CONVERTER = cattr.Converter()
REPORT_CONVERTER.register_unstructure_hook(Fraction, format_fraction)
REPORT_CONVERTER.register_unstructure_hook(
    tuple, lambda values: [REPORT_CONVERTER.unstructure(x) for x in values]
)
REPORT_CONVERTER.register_unstructure_hook(
    Polynomial,
    lambda p: {"text": str(p), "coefficients": list(p.coefficients)},
)


def to_tree(report):
    "Unstructures a Report into nested dicts, dropping absent sections."
    tree = REPORT_CONVERTER.unstructure(report)
    return {key: value for key, value in tree.items() if value is not None}


def render(report, as_json=False):
    tree = to_tree(report)
    if as_json:
        return json.dumps(tree, sort_keys=True, indent=2) + "\n"
    return yaml.dump(
        tree,
        default_flow_style=False,
        allow_unicode=True,
        Dumper=YamlDumper,
    )
