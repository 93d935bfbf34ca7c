"""Existential image, inverse image and power relator.

The existential image of R: X -> Y is the mapping pow(X) -> pow(Y) sending a
subset A to {y | some x in A has R(x, y)}. It is built directly by subset
doubling; the symmetric-quotient formula is kept alongside so the two can be
checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ensure
from .finset import Power
from .powerset import membership
from .relcore import Relation, is_mapping, syq


def _subset_images(r: Relation) -> np.ndarray:
    """Row A holds the image of subset A, for A in binary-counting order."""
    n, m = r.src.size, r.tgt.size
    img = np.zeros((2**n, m), dtype=bool)
    for k in range(n):
        lo = 2**k
        img[lo : 2 * lo] = img[:lo] | r.bits[k]
    return img


def _as_mapping(src_power, tgt_power, rows: np.ndarray) -> Relation:
    m = rows.shape[1]
    weights = (1 << np.arange(m, dtype=np.int64)) if m else np.zeros(0, dtype=np.int64)
    idx = rows.astype(np.int64) @ weights
    a = np.zeros((src_power.size, tgt_power.size), dtype=bool)
    a[np.arange(src_power.size), idx] = True
    return Relation._wrap(src_power, tgt_power, a)


def existential_image(r: Relation) -> Relation:
    return _as_mapping(Power(r.src), Power(r.tgt), _subset_images(r))


def inverse_image(r: Relation) -> Relation:
    return existential_image(r.T)


def existential_image_syq(r: Relation) -> Relation:
    e, e2 = membership(r.src).epsilon, membership(r.tgt).epsilon
    return syq(r.T @ e, e2)


def inverse_image_syq(r: Relation) -> Relation:
    e, e2 = membership(r.src).epsilon, membership(r.tgt).epsilon
    return syq(r @ e2, e)


def power_relator(r: Relation) -> Relation:
    """A ~ B when every member of A reaches B and every member of B is reached from A."""
    e, e2 = membership(r.src).epsilon, membership(r.tgt).epsilon
    return ~(e.T @ ~(r @ e2)) & ~(~(e.T @ r) @ e2)


@dataclass(frozen=True)
class ImageBundle:
    R: Relation
    theta: Relation
    theta_conv: Relation
    zeta: Relation


def image_bundle(r: Relation) -> ImageBundle:
    b = ImageBundle(r, existential_image(r), inverse_image(r), power_relator(r))
    e, e2 = membership(r.src).epsilon, membership(r.tgt).epsilon
    ensure(is_mapping(b.theta) and is_mapping(b.theta_conv), "images must be mappings")
    ensure(e.T @ r == b.theta @ e2.T, "existential image does not simulate R")
    ensure(r @ e2 == e @ b.theta_conv.T, "inverse image does not simulate R")
    return b
