"""
Built-in invariant suites. Importing this package registers every suite.
"""

from . import (  # noqa: F401
    axioms,
    coreflections,
    determinism,
    gluing,
    identities,
    invariance,
    limit_theorem,
    min_gauge,
    min_limit,
    minimal,
    oracles,
    simplicity,
)
