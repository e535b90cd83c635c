"""Finite-category Ramsey engine: arrow relations, Ramsey degrees and the
categorical constructions that transport them."""

import json as _json

try:
    from ramseycat._ramseycat import *  # noqa: F401,F403  (installed wheel)
    from ramseycat import _ramseycat as _impl
except ImportError:  # build-tree layout: the module sits on PYTHONPATH
    from _ramseycat import *  # noqa: F401,F403
    import _ramseycat as _impl

__all__ = [
    "Category",
    "category_from_json",
    "validate_category",
    "chains",
    "rigid_surjection_chains",
    "opposite",
    "product",
    "slice",
    "check_arrow",
    "check_arrow_oracle",
    "degree_exact",
    "verify_multiplicativity",
    "verify_aut_factor",
    "rigid_surjections_count",
    "count_embeddings",
    "chain_structure",
    "example_two_object_pair",
    "example_aut2",
    "example_one_object",
]


def _parsed(text):
    return _json.loads(text)


def validate_category(data):
    """Run the category-law checks on a dict or JSON string; returns a dict."""
    if not isinstance(data, str):
        data = _json.dumps(data)
    return _parsed(_impl.validate_category_json(data))


def category_from_json(data):
    """Build a validated category from a dict or JSON string."""
    if not isinstance(data, str):
        data = _json.dumps(data)
    return _impl.category_from_json(data)


def check_arrow(category, variant, A, B, C, k, t, symmetry=False, workers=1):
    """Decide C -> (B)^A_{k,t}; returns the verdict with its certificate."""
    return _parsed(_impl.check_arrow(category, variant, A, B, C, k, t, symmetry, workers))


def check_arrow_oracle(category, variant, A, B, C, k, t):
    """Exhaustive enumeration of all k^|domain| colorings."""
    return _parsed(_impl.check_arrow_oracle(category, variant, A, B, C, k, t))


def degree_exact(category, A, variant="embedding"):
    """Exact Ramsey degree of an object in a finite category."""
    return _parsed(_impl.degree_exact(category, A, variant))


def verify_multiplicativity(c1, c2, A1, A2):
    return _parsed(_impl.verify_multiplicativity(c1, c2, A1, A2))


def verify_aut_factor(category, A):
    return _parsed(_impl.verify_aut_factor(category, A))


def chain_structure(n):
    """The n-element chain as a structure dict."""
    return _parsed(_impl.chain_structure_json(n))
