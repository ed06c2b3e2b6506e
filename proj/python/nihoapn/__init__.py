"""Differential and boomerang spectra of power functions over GF(2^n).

Report-producing functions return the same JSON structures the command-line
tool writes, decoded into Python dicts.
"""

import json

from ._core import (
    DomainError,
    Field,
    NihoParams,
    ParamError,
    __version__,
    bct_row,
    build_niho,
    ddt_row,
    exponent_orbit,
    gcd_criterion,
    inv_mod,
    is_permutation_exponent,
)
from . import _core


def spectrum(n, d, modulus=None, jobs=1):
    """Differential and boomerang spectra of x^d over GF(2^n)."""
    return json.loads(_core._spectrum_json(n, d, modulus, jobs))


def verify_theorems(m, k, jobs=1):
    """Closed-form spectra against brute force for the Niho exponent (m, k)."""
    return json.loads(_core._verify_json(m, k, jobs))


def survey(m, jobs=1, cyclotomic_shifts=False):
    """Locally-APN sweep over s in [1, 2^m]."""
    return json.loads(_core._survey_json(m, jobs, cyclotomic_shifts))


def lemmas(seed=1, samples=10000, only=()):
    """Run the lemma checkers; `only` takes names like "lemma4" or "phi"."""
    return json.loads(_core._lemmas_json(seed, samples, list(only)))


__all__ = [
    "DomainError",
    "Field",
    "NihoParams",
    "ParamError",
    "__version__",
    "bct_row",
    "build_niho",
    "ddt_row",
    "exponent_orbit",
    "gcd_criterion",
    "inv_mod",
    "is_permutation_exponent",
    "lemmas",
    "spectrum",
    "survey",
    "verify_theorems",
]
