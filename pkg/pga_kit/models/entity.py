"""Tagged views of multivectors as points, lines and planes."""

from dataclasses import dataclass
from typing import Literal

from ..algebra.multivector import Multivector
from ..algebra.signature import SignatureError
from ..geometry.norms import is_ideal

EntityTag = Literal[
    "scalar",
    "point",
    "ideal-point",
    "line",
    "ideal-line",
    "plane",
    "ideal-plane",
    "bivector",
    "pseudoscalar",
    "multivector",
]

# Grade of each primitive in the dual algebra, keyed by dimension.
_GRADE_TAGS: dict[int, dict[int, tuple[EntityTag, EntityTag]]] = {
    2: {1: ("line", "ideal-line"), 2: ("point", "ideal-point")},
    3: {1: ("plane", "ideal-plane"), 2: ("line", "ideal-line"), 3: ("point", "ideal-point")},
}


@dataclass(frozen=True)
class GeometricEntity:
    """A multivector together with what it represents geometrically."""

    tag: EntityTag
    mv: Multivector

    @property
    def is_ideal(self) -> bool:
        return self.tag.startswith("ideal-")

    def __str__(self) -> str:
        return f"{self.tag}: {self.mv}"


def classify_entity(x: Multivector, tol: float = 1e-12) -> GeometricEntity:
    """Tag a homogeneous element of P(R*_{2,0,1}) or P(R*_{3,0,1}).

    Non-simple 3D bivectors are tagged `bivector`; mixed grades `multivector`.

    Raises:
        SignatureError: For algebras other than euclidean PGA in 2D or 3D.
    """
    sig = x.sig
    if not sig.is_euclidean_pga or sig.dimension not in _GRADE_TAGS:
        raise SignatureError(f"Entities are only classified in euclidean PGA, not {sig}")
    grades = x.grades(tol * max(x.max_abs(), 1.0))
    if grades in ([], [0]):
        return GeometricEntity("scalar", x)
    if len(grades) > 1:
        return GeometricEntity("multivector", x)
    k = grades[0]
    if k == sig.n_generators:
        return GeometricEntity("pseudoscalar", x)
    euclidean_tag, ideal_tag = _GRADE_TAGS[sig.dimension][k]
    if k == 2 and sig.dimension == 3 and abs(x.wedge(x).pseudoscalar) > tol * x.max_abs() ** 2:
        return GeometricEntity("bivector", x)
    return GeometricEntity(ideal_tag if is_ideal(x) else euclidean_tag, x)
