"""Certification of MOLS constructions from permutation codes and difference
matrices.

The heavy lifting happens in the C++ extension; this package re-exports its
surface.
"""

from molscert._core import (
    Permutation,
    build_mols,
    build_mols_text,
    dataset_text,
    list_datasets,
    verify_dm,
    verify_mols_text,
    verify_pa,
)

__all__ = [
    "Permutation",
    "build_mols",
    "build_mols_text",
    "dataset_text",
    "list_datasets",
    "verify_dm",
    "verify_mols_text",
    "verify_pa",
]
