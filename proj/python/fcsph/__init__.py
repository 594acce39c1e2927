"""Fully commutative Weyl group elements and spherical nilpotent orbits."""

import json

from ._fcsph import (
    BudgetExceeded,
    code_version,
    height,
    ideal_element,
    ideals,
    inversion_set,
    is_commutative,
    is_fully_commutative,
    is_spherical,
    pairing,
    pairing_nonneg,
    positive_roots,
    reduced_word,
    run_cli,
    schema_version,
    verify_json,
    weyl_order,
)

__version__ = code_version

__all__ = [
    "BudgetExceeded",
    "atlas",
    "height",
    "ideal_element",
    "ideals",
    "inspect_ideal",
    "inspect_word",
    "inversion_set",
    "is_commutative",
    "is_fully_commutative",
    "is_spherical",
    "pairing",
    "pairing_nonneg",
    "positive_roots",
    "reduced_word",
    "run_cli",
    "verify",
    "weyl_order",
]


def verify(target, type, seed=0, workers=1, trials=5):
    """Run one exhaustive verifier and return its report as a dict."""
    return json.loads(verify_json(target, type, seed=seed, workers=workers, trials=trials))


def _cli_json(args):
    code, out, err = run_cli(args)
    if code != 0:
        raise ValueError(err.strip() or f"fcsph exited with status {code}")
    return json.loads(out)


def inspect_word(type, word, seed=0):
    """Inspect the Weyl group element of a word of 1-based simple indices."""
    return _cli_json(["inspect", "--type", type, "--word", ",".join(map(str, word)), "--seed", str(seed)])


def inspect_ideal(type, generators, seed=0):
    """Inspect the ad-nilpotent ideal generated by roots given as coordinate lists."""
    gens = ";".join(",".join(map(str, g)) for g in generators)
    return _cli_json(["inspect", "--type", type, "--ideal-gen", gens, "--seed", str(seed)])


def atlas(kind, type):
    """Atlas of FC elements or ideals as a dict with count and records."""
    return _cli_json(["atlas", kind, "--type", type, "--format", "json"])
