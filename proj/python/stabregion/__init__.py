"""Exact classification of the length-4 collection stability region.

Thin wrapper over the compiled core. Collections are dicts like
``{"k01": 0, ..., "k23": 0}`` (values are ints or the string ``"inf"``);
points are sequences of four exact rationals written as strings
(``"p/q"`` or integers). All results come back as plain dicts/lists.
"""

import json as _json

from stabregion import _stabregion as _core

__all__ = [
    "preset_quadric",
    "derive_bounds",
    "classify",
    "relation_profile",
    "candidate_shifts",
    "delta_membership",
    "sample_stratum",
    "verify",
]

__version__ = "0.1.0"


def _collection_json(collection):
    if isinstance(collection, str):
        return collection
    return _json.dumps(collection)


def _point(point):
    return [str(c) for c in point]


def preset_quadric():
    """The built-in collection: every minimal hom degree is 0."""
    return _json.loads(_core.preset_quadric())


def derive_bounds(collection):
    """The collection spec together with the derived bounds K02, K13, K03."""
    return _json.loads(_core.derive_bounds(_collection_json(collection)))


def classify(collection, point):
    """Region verdict for one point.

    Returns a dict with ``verdict`` one of ``"NotInTheta1"``, ``"InDelta"``,
    ``"InTheta2"`` or ``"NoWitness"``, plus the verdict's payload fields.
    """
    return _json.loads(_core.classify(_collection_json(collection), _point(point)))


def relation_profile(point):
    """The floor-relation exponents (a12, a13, a23) of a point."""
    return tuple(_json.loads(_core.relation_profile(_point(point))))


def candidate_shifts(point):
    """The 8 admissible-shift candidates of a point."""
    return _json.loads(_core.candidate_shifts(_point(point)))


def delta_membership(collection, point, per_case=False):
    """Stratum labels containing the point (requires the point in Theta1)."""
    return _json.loads(
        _core.delta_membership(_collection_json(collection), _point(point), per_case)
    )


def sample_stratum(collection, label, seed=1):
    """Constructive sample on one stratum: dict with status/point/attempts."""
    return _json.loads(_core.sample_stratum(_collection_json(collection), label, seed))


def verify(collection, generic=1000, integrality=1000, delta=48, seed=1):
    """Run the differential certification checks; returns the full report."""
    return _json.loads(
        _core.verify(_collection_json(collection), generic, integrality, delta, seed)
    )
