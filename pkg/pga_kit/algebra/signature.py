"""Metric signatures (p, m, z) and their shorthand names."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from ..errors import PGAError

logger = logging.getLogger(__name__)

MAX_GENERATORS = 12

# Shorthands for the three algebras the catalogs are written against.
NAMED_SIGNATURES: dict[str, tuple[int, int, int, bool]] = {
    "d201": (2, 0, 1, True),
    "d301": (3, 0, 1, True),
    "r300": (3, 0, 0, False),
}


class SignatureError(PGAError, ValueError):
    """Raised for malformed or unsupported signatures."""

    pass


class SignatureMismatchError(PGAError, ValueError):
    """Raised when two multivectors from different algebras are combined."""

    pass


@dataclass(frozen=True)
class Signature:
    """Metric descriptor fixing a geometric algebra.

    Generators are ordered degenerate first, then positive, then negative, so
    that in P(R*_{n,0,1}) the generator e0 is the one squaring to zero.

    Attributes:
        p: Number of generators squaring to +1.
        m: Number of generators squaring to -1.
        z: Number of generators squaring to 0.
        dual: Whether 1-vectors are read as hyperplanes (naming only).
    """

    p: int
    m: int = 0
    z: int = 0
    dual: bool = False

    def __post_init__(self) -> None:
        """Validate generator counts."""
        if min(self.p, self.m, self.z) < 0:
            raise SignatureError(f"Negative generator count in ({self.p},{self.m},{self.z})")
        total = self.p + self.m + self.z
        if total == 0:
            raise SignatureError("Signature needs at least one generator")
        if total > MAX_GENERATORS:
            raise SignatureError(f"At most {MAX_GENERATORS} generators supported, got {total}")

    @classmethod
    def parse(cls, name: str) -> Signature:
        """Parse `d201`, `d301`, `r300` or `custom:p,m,z[,dual]`.

        Raises:
            SignatureError: If the name is not recognised.
        """
        key = name.strip().lower()
        if key in NAMED_SIGNATURES:
            return cls(*NAMED_SIGNATURES[key])
        if key.startswith("custom:"):
            parts = [part.strip() for part in key[len("custom:") :].split(",")]
            if len(parts) not in (3, 4):
                raise SignatureError(f"Expected custom:p,m,z[,dual], got {name!r}")
            try:
                p, m, z = (int(part) for part in parts[:3])
            except ValueError as e:
                raise SignatureError(f"Non-integer count in {name!r}") from e
            dual = len(parts) == 4 and parts[3] in ("dual", "1", "true", "yes")
            return cls(p, m, z, dual)
        raise SignatureError(f"Unknown signature {name!r} (use d201, d301, r300 or custom:p,m,z)")

    @property
    def n_generators(self) -> int:
        """Number of basis 1-vectors, n+1."""
        return self.p + self.m + self.z

    @property
    def dimension(self) -> int:
        """Dimension n of the modeled projective space."""
        return self.n_generators - 1

    @property
    def size(self) -> int:
        """Number of basis blades, 2^(n+1)."""
        return 1 << self.n_generators

    @property
    def pseudoscalar_bits(self) -> int:
        """Bitmask of the pseudoscalar blade."""
        return self.size - 1

    @cached_property
    def metric(self) -> tuple[float, ...]:
        """Diagonal of the metric, indexed by generator."""
        return (0.0,) * self.z + (1.0,) * self.p + (-1.0,) * self.m

    @property
    def is_euclidean_pga(self) -> bool:
        """True for P(R*_{n,0,1}), the algebras with a typed formula catalog."""
        return self.z == 1 and self.m == 0 and self.dual

    @property
    def name(self) -> str:
        """Shorthand name, reversible through `parse`."""
        for key, value in NAMED_SIGNATURES.items():
            if value == (self.p, self.m, self.z, self.dual):
                return key
        suffix = ",dual" if self.dual else ""
        return f"custom:{self.p},{self.m},{self.z}{suffix}"

    def __str__(self) -> str:
        star = "*" if self.dual else ""
        return f"P(R{star}_({self.p},{self.m},{self.z}))"
