"""
Instances module — generation and file I/O for instance bundles.
"""

from .generator import (
    BUILTIN_PROFILES,
    GenerationProfile,
    generate,
    load_profiles,
    random_law,
    random_space,
    resolve_profile,
)
from .loader import (
    InstanceBundle,
    InstanceDocument,
    SequenceRef,
    dump_instance,
    load_instance,
    parse_instance,
    print_instance,
)

__all__ = [
    "InstanceBundle",
    "InstanceDocument",
    "SequenceRef",
    "parse_instance",
    "print_instance",
    "load_instance",
    "dump_instance",
    "GenerationProfile",
    "BUILTIN_PROFILES",
    "generate",
    "load_profiles",
    "resolve_profile",
    "random_law",
    "random_space",
]
