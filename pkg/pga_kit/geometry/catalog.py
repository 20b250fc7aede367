"""Registry of the named formulas, keyed by signature and kebab-case name."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Literal, Sequence

from ..algebra.multivector import Multivector
from ..errors import PGAError
from . import plane, space
from .motors import log_motor_closed_form

logger = logging.getLogger(__name__)

ArgKind = Literal["element", "number", "elements", "triangles"]


class UnknownFormulaError(PGAError, LookupError):
    """Raised when no formula is registered under a name."""

    pass


class FormulaArityError(PGAError, ValueError):
    """Raised when a formula gets the wrong number or kind of arguments."""

    pass


@dataclass(frozen=True)
class FormulaSpec:
    """One catalog row.

    `arg_kinds` drives argument parsing: `element` is one multivector,
    `number` a real, `elements` a variadic list of points and `triangles` a
    variadic list of points taken three at a time.
    """

    name: str
    func: Callable[..., Any]
    signature: str
    arg_kinds: tuple[ArgKind, ...]
    doc: str

    @property
    def arity(self) -> int:
        return len(self.arg_kinds)

    @property
    def variadic(self) -> bool:
        return bool(self.arg_kinds) and self.arg_kinds[-1] in ("elements", "triangles")

    def usage(self) -> str:
        names = {"element": "X", "number": "NUM", "elements": "P...", "triangles": "A B C ..."}
        return " ".join([self.name, *(names[kind] for kind in self.arg_kinds)])

    def __call__(self, *args: Any) -> Any:
        if self.variadic:
            fixed = list(args[: self.arity - 1])
            rest = list(args[self.arity - 1 :])
            if self.arg_kinds[-1] == "triangles":
                if len(rest) % 3:
                    raise FormulaArityError(f"{self.name} needs points in groups of three")
                rest = [tuple(rest[i : i + 3]) for i in range(0, len(rest), 3)]
            return self.func(*fixed, rest)
        if len(args) != self.arity:
            raise FormulaArityError(f"{self.name} takes {self.arity} arguments, got {len(args)}")
        return self.func(*args)


def _first_line(func: Callable[..., Any]) -> str:
    doc = (func.__doc__ or "").strip()
    return doc.splitlines()[0] if doc else ""


def _entries(
    signature: str, rows: Sequence[tuple[str, Callable[..., Any], tuple[ArgKind, ...]]]
) -> dict[str, FormulaSpec]:
    return {
        name: FormulaSpec(name, func, signature, kinds, _first_line(func))
        for name, func, kinds in rows
    }


E2: tuple[ArgKind, ...] = ("element", "element")
E3: tuple[ArgKind, ...] = ("element", "element", "element")
E4: tuple[ArgKind, ...] = ("element",) * 4
EN: tuple[ArgKind, ...] = ("element", "number")

CATALOG_2D = _entries(
    "d201",
    [
        ("meet-lines", plane.meet_lines, E2),
        ("angle-lines", plane.angle_lines, E2),
        ("angle-lines-sin", plane.angle_lines_sin, E2),
        ("dist-parallel-lines", plane.dist_parallel_lines, E2),
        ("join-points", plane.join_points, E2),
        ("perp-direction", plane.perp_direction, E2),
        ("dist-points", plane.dist_points, E2),
        ("dist-points-ideal", plane.dist_points_ideal, E2),
        ("oriented-dist-point-line", plane.oriented_dist_point_line, E2),
        ("angle-ideal-point-line", plane.angle_ideal_point_line, E2),
        ("perp-line-through-point", plane.perp_line_through_point, E2),
        ("nearest-point-on-line", plane.nearest_point_on_line, E2),
        ("parallel-through-point", plane.parallel_through_point, E2),
        ("triangle-area", plane.triangle_area, E3),
        ("loop-length", plane.loop_length, ("elements",)),
        ("loop-area", plane.loop_area, ("elements",)),
        ("reflect", plane.reflect, E2),
        ("rotor-about-point", plane.rotor_about_point, EN),
        ("translator", plane.translator, EN),
        ("motor-between-lines", plane.motor_between_lines, E2),
        ("log-2d-motor", plane.log_2d_motor, ("element",)),
        ("decompose-line", plane.decompose_line, E2),
    ],
)

CATALOG_3D = _entries(
    "d301",
    [
        ("meet-planes", space.meet_planes, E2),
        ("angle-planes", space.angle_planes, E2),
        ("angle-planes-sin", space.angle_planes_sin, E2),
        ("dist-parallel-planes", space.dist_parallel_planes, E2),
        ("join-points3", space.join_points3, E2),
        ("meet3-planes", space.meet3_planes, E3),
        ("join3-points", space.join3_points, E3),
        ("meet-line-plane", space.meet_line_plane, E2),
        ("join-point-line", space.join_point_line, E2),
        ("dist-point-plane", space.dist_point_plane, E2),
        ("angle-ideal-point-plane", space.angle_ideal_point_plane, E2),
        ("perp-line-to-join", space.perp_line_to_join, E2),
        ("dist-points3", space.dist_points3, E2),
        ("perp-line-point-plane", space.perp_line_point_plane, E2),
        ("project-point-plane", space.project_point_plane, E2),
        ("project-plane-point", space.project_plane_point, E2),
        ("plane-through-line-perp-plane", space.plane_through_line_perp_plane, E2),
        ("project-line-plane", space.project_line_plane, E2),
        ("project-plane-line", space.project_plane_line, E2),
        ("plane-through-point-perp-line", space.plane_through_point_perp_line, E2),
        ("project-point-line", space.project_point_line, E2),
        ("project-line-point", space.project_line_point, E2),
        ("perp-line-through-point", space.perp_line_through_point, E2),
        ("orthogonal-line-through-point", space.orthogonal_line_through_point, E2),
        ("tetra-volume", space.tetra_volume, E4),
        ("simplex-volume", space.simplex_volume, E4),
        ("mesh-area", space.mesh_area, ("triangles",)),
        ("mesh-volume", space.mesh_volume, ("triangles",)),
        ("common-normal", space.common_normal, E2),
        ("angle-between-lines", space.angle_between_lines, E2),
        ("dist-between-lines", space.dist_between_lines_safe, E2),
        ("common-plane", space.common_plane, E2),
        ("common-point", space.common_point, E2),
        ("reflect-in-plane", space.reflect_in_plane, E2),
        ("rotor-about-axis", space.rotor_about_axis, EN),
        ("translator-3d", space.translator_3d, EN),
        ("screw", space.screw, ("element", "number", "number")),
        ("log-motor-closed-form", log_motor_closed_form, ("element",)),
    ],
)

CATALOGS: dict[str, dict[str, FormulaSpec]] = {"d201": CATALOG_2D, "d301": CATALOG_3D}


def formulas_for(signature: str) -> dict[str, FormulaSpec]:
    """Formulas available in an algebra; empty for algebras without a catalog."""
    return CATALOGS.get(signature, {})


def get_formula(signature: str, name: str) -> FormulaSpec:
    """Look up a formula by exact kebab-case name.

    Raises:
        UnknownFormulaError: If the algebra has no formula of that name.
    """
    catalog = formulas_for(signature)
    key = name.strip().lower().replace("_", "-")
    if key not in catalog:
        raise UnknownFormulaError(f"No formula named {name!r} for {signature}")
    return catalog[key]


def call_formula(signature: str, name: str, *args: Multivector | float) -> Any:
    """Look up and evaluate a formula."""
    spec = get_formula(signature, name)
    logger.debug("Calling formula %s with %d arguments", spec.name, len(args))
    return spec(*args)
