"""Importing this module registers every law."""

from . import (
    imaging,  # noqa: F401
    lattice,  # noqa: F401
    operations,  # noqa: F401
    powersets,  # noqa: F401
    products,  # noqa: F401
    relations,  # noqa: F401
)
