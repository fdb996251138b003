"""Named fault injections for the meta checks.

Each mutation flips exactly one convention deep inside the sequence layer.
The law suites must fail under every one of them; that a checker can fail
is the only evidence that it checks anything.  Mutations are process-global
and not thread safe; they exist for the meta tests and the CLI's
self-check, nothing else.
"""

from contextlib import contextmanager

from . import freesmc

MUTATIONS = {
    "gamma-transpose-direction": (
        "the interchange cell carries the inverted permutation"
    ),
    "mu-block-order": (
        "flattening combines outer and inner permutations on the wrong side"
    ),
    "strength-slot-index": (
        "the n-ary strength drops its freed entry one slot over"
    ),
    "compose-reindexing": (
        "composition pairs components without re-indexing through the first"
        " permutation"
    ),
    "strength-entry-order": (
        "the n-ary strength walks its sequence slot back to front"
    ),
}


@contextmanager
def inject(name: str):
    """Activate one mutation for the duration of the block."""
    if name not in MUTATIONS:
        raise KeyError(f"unknown mutation {name!r}")
    if freesmc._ACTIVE_MUTATION is not None:
        raise RuntimeError("a mutation is already active")
    freesmc._ACTIVE_MUTATION = name
    try:
        yield
    finally:
        freesmc._ACTIVE_MUTATION = None
