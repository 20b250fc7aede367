"""Precomputed product tables, cached per signature.

Every bilinear product is stored as the list of blade pairs with a non-zero
result, so a product of two dense coefficient vectors is one `numpy.bincount`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .blades import blade_product, grade, reorder_sign
from .signature import Signature

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProductTable:
    """Sparse bilinear form over basis blades: out[target] += sign * a[left] * b[right]."""

    left: np.ndarray
    right: np.ndarray
    target: np.ndarray
    sign: np.ndarray
    size: int

    def apply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Evaluate the product on two dense coefficient vectors."""
        weights = self.sign * a[self.left] * b[self.right]
        return np.bincount(self.target, weights=weights, minlength=self.size)

    def entry(self, i: int, j: int) -> tuple[float, int]:
        """(sign, target) of the product of blades i and j, sign 0 when it vanishes."""
        hits = np.nonzero((self.left == i) & (self.right == j))[0]
        if hits.size == 0:
            return 0.0, i ^ j
        k = hits[0]
        return float(self.sign[k]), int(self.target[k])


def _build_table(pairs: list[tuple[int, int, int, float]], size: int) -> ProductTable:
    if pairs:
        left, right, target, sign = (np.array(col) for col in zip(*pairs))
    else:
        left = right = target = np.zeros(0, dtype=np.int64)
        sign = np.zeros(0)
    return ProductTable(
        left=left.astype(np.int64),
        right=right.astype(np.int64),
        target=target.astype(np.int64),
        sign=sign.astype(float),
        size=size,
    )


@dataclass(frozen=True, eq=False)
class CayleyTables:
    """All per-signature lookup data used by `Multivector`."""

    sig: Signature
    grades: np.ndarray
    geometric: ProductTable
    wedge: ProductTable
    inner: ProductTable
    reverse_signs: np.ndarray
    involution_signs: np.ndarray
    complement: np.ndarray
    dual_signs: np.ndarray

    def grade_mask(self, k: int) -> np.ndarray:
        """Boolean mask of the blades of grade k."""
        return self.grades == k


@lru_cache(maxsize=None)
def tables_for(sig: Signature) -> CayleyTables:
    """Build (once per signature) the product and duality tables."""
    size = sig.size
    metric = sig.metric
    logger.debug("Building Cayley tables for %s (%d blades)", sig, size)

    geometric_pairs = []
    wedge_pairs = []
    inner_pairs = []
    for i in range(size):
        gi = grade(i)
        for j in range(size):
            sign, target = blade_product(i, j, metric)
            if sign == 0.0:
                continue
            geometric_pairs.append((i, j, target, sign))
            gj = grade(j)
            if i & j == 0:
                wedge_pairs.append((i, j, target, sign))
            if grade(target) == abs(gi - gj):
                inner_pairs.append((i, j, target, sign))

    grades = np.array([grade(i) for i in range(size)], dtype=np.int64)
    reverse_signs = np.array([(-1.0) ** (g * (g - 1) // 2) for g in grades])
    involution_signs = np.array([(-1.0) ** g for g in grades])
    full = sig.pseudoscalar_bits
    complement = np.array([full ^ i for i in range(size)], dtype=np.int64)
    # J(e_i) = s_i e_~i with e_i ^ (s_i e_~i) = +I
    dual_signs = np.array([float(reorder_sign(i, full ^ i)) for i in range(size)])

    return CayleyTables(
        sig=sig,
        grades=grades,
        geometric=_build_table(geometric_pairs, size),
        wedge=_build_table(wedge_pairs, size),
        inner=_build_table(inner_pairs, size),
        reverse_signs=reverse_signs,
        involution_signs=involution_signs,
        complement=complement,
        dual_signs=dual_signs,
    )
