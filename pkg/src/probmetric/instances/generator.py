"""
Instance generator — deterministic random bundles from a seed and a profile.

Spaces are distinct points of the grid {0, 1/8, ..., 1}² with L1 distances, so
every distance is a rational with denominator at most 8 and the triangle
inequality holds exactly. Laws have denominators dividing 64; random variables
come from a random joint law with denominator 32, realized and then reshuffled
(midpoint splits keep endpoint denominators within 64).
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import numpy as np
import yaml

from ..errors import InfeasibleProfileError
from ..models import Cell, ChainLaw, FinMetricSpace, Law, make_chain, make_space
from ..probability import realize_chain, shuffle_layout
from .loader import InstanceBundle, SequenceRef

logger = logging.getLogger(__name__)

GRID = 8
MAX_DENOMINATOR = 64
MAX_POINTS = 12
RV_DENOMINATOR = 32


@dataclass(frozen=True)
class GenerationProfile:
    """
    Size bounds for generated bundles.

    Attributes:
        name: Profile name.
        min_points, max_points: Bounds on |X|.
        laws: Number of named laws.
        rvs: Number of named random variables (drawn jointly).
        sequences: Number of named sequences.
        max_prefix: Longest sequence prefix.
        max_cycle: Longest sequence cycle.
        max_denominator: Bound on law denominators.
        max_atoms: Cells of the random joint law behind the random variables.
    """

    name: str
    min_points: int = 2
    max_points: int = 6
    laws: int = 3
    rvs: int = 3
    sequences: int = 1
    max_prefix: int = 2
    max_cycle: int = 3
    max_denominator: int = MAX_DENOMINATOR
    max_atoms: int = 6

    def __post_init__(self) -> None:
        if not 1 <= self.min_points <= self.max_points:
            raise InfeasibleProfileError(
                f"profile '{self.name}': need 1 <= min_points <= max_points"
            )
        if self.max_points > MAX_POINTS:
            raise InfeasibleProfileError(
                f"profile '{self.name}': max_points {self.max_points} exceeds {MAX_POINTS}"
            )
        if not 1 <= self.max_denominator <= MAX_DENOMINATOR:
            raise InfeasibleProfileError(
                f"profile '{self.name}': max_denominator must lie in [1, {MAX_DENOMINATOR}]"
            )
        if self.laws < 0 or self.rvs < 1 or self.sequences < 0:
            raise InfeasibleProfileError(f"profile '{self.name}': bad member counts")
        if self.max_prefix < 0 or self.max_cycle < 1 or self.max_atoms < 1:
            raise InfeasibleProfileError(f"profile '{self.name}': bad sequence bounds")

    def to_dict(self) -> dict:
        return asdict(self)


BUILTIN_PROFILES: dict[str, GenerationProfile] = {
    "minimal": GenerationProfile(
        name="minimal", min_points=1, max_points=1, laws=2, rvs=2, max_prefix=0, max_cycle=1
    ),
    "small": GenerationProfile(name="small", min_points=2, max_points=4),
    "default": GenerationProfile(name="default", min_points=2, max_points=6),
    "prokhorov": GenerationProfile(
        name="prokhorov", min_points=7, max_points=12, laws=3, rvs=2, sequences=0
    ),
    "chain": GenerationProfile(
        name="chain", min_points=2, max_points=5, laws=2, rvs=4, max_prefix=2, max_cycle=6
    ),
}


def load_profiles(path: Union[str, Path]) -> dict[str, GenerationProfile]:
    """
    Load extra profiles from YAML: a mapping of name -> profile fields.

    A top-level `profiles:` key is accepted as well.
    """
    data = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    if isinstance(data, dict) and "profiles" in data:
        data = data["profiles"]
    if not isinstance(data, dict):
        raise InfeasibleProfileError(f"{path}: expected a mapping of profiles")
    known = {f.name for f in fields(GenerationProfile)}
    profiles = {}
    for name, spec in data.items():
        spec = dict(spec or {})
        unknown = set(spec) - known
        if unknown:
            raise InfeasibleProfileError(f"profile '{name}': unknown fields {sorted(unknown)}")
        spec["name"] = str(name)
        profiles[str(name)] = GenerationProfile(**spec)
    logger.info("Loaded %d generation profiles from %s", len(profiles), path)
    return profiles


def resolve_profile(
    name: str, extra: Optional[dict[str, GenerationProfile]] = None
) -> GenerationProfile:
    table = {**BUILTIN_PROFILES, **(extra or {})}
    try:
        return table[name]
    except KeyError:
        known = ", ".join(sorted(table))
        raise InfeasibleProfileError(f"unknown profile '{name}' (known: {known})") from None


# ── Random members ───────────────────────────────────────────────────


def random_space(rng: np.random.Generator, n: int) -> FinMetricSpace:
    cells = rng.choice((GRID + 1) ** 2, size=n, replace=False)
    coords = [(int(c) // (GRID + 1), int(c) % (GRID + 1)) for c in cells]
    dist = [
        [Fraction(abs(a[0] - b[0]) + abs(a[1] - b[1]), GRID) for b in coords] for a in coords
    ]
    return make_space([f"x{i}" for i in range(n)], dist)


def _random_counts(rng: np.random.Generator, total: int, k: int) -> list[int]:
    """k nonnegative integers summing to total; sparse about half the time."""
    if rng.random() < 0.5 and k > 1:
        active = rng.random(k) < 0.5
        if not active.any():
            active[int(rng.integers(k))] = True
        probs = active / active.sum()
    else:
        probs = np.full(k, 1.0 / k)
    return [int(c) for c in rng.multinomial(total, probs)]


def random_law(rng: np.random.Generator, space: FinMetricSpace, denominator: int) -> Law:
    counts = _random_counts(rng, denominator, space.size)
    return Law(space=space, weights=tuple(Fraction(c, denominator) for c in counts))


def random_chain(
    rng: np.random.Generator, space: FinMetricSpace, rank: int, atoms: int, denominator: int
) -> ChainLaw:
    """A random joint law on X^rank with at most `atoms` cells."""
    mass: dict[Cell, Fraction] = {}
    cells = [tuple(int(x) for x in rng.integers(space.size, size=rank)) for _ in range(atoms)]
    for cell, c in zip(cells, _random_counts(rng, denominator, atoms)):
        if c:
            mass[cell] = mass.get(cell, Fraction(0)) + Fraction(c, denominator)
    return make_chain((space,) * rank, mass)


def _pick(rng: np.random.Generator, names: list[str], m: int) -> tuple[str, ...]:
    return tuple(names[int(i)] for i in rng.integers(len(names), size=m))


def generate(seed: int, profile: Union[str, GenerationProfile] = "default") -> InstanceBundle:
    """
    Deterministic bundle for a seed: same seed and profile, same bundle.

    Raises:
        InfeasibleProfileError: for unknown or infeasible profiles.
    """
    if isinstance(profile, str):
        profile = resolve_profile(profile)
    rng = np.random.default_rng(seed)
    n = int(rng.integers(profile.min_points, profile.max_points + 1))
    space = random_space(rng, n)

    laws = {f"P{k}": random_law(rng, space, profile.max_denominator) for k in range(profile.laws)}

    denominator = min(RV_DENOMINATOR, profile.max_denominator)
    chain = random_chain(rng, space, profile.rvs, profile.max_atoms, denominator)
    variables = shuffle_layout(realize_chain(chain), rng)
    rvs = {f"xi{k}": rv for k, rv in enumerate(variables)}

    names = sorted(rvs)
    sequences: dict[str, SequenceRef] = {}
    for k in range(profile.sequences):
        prefix_len = int(rng.integers(0, profile.max_prefix + 1))
        cycle_len = int(rng.integers(1, profile.max_cycle + 1))
        sequences[f"s{k}"] = SequenceRef(
            prefix=_pick(rng, names, prefix_len), cycle=_pick(rng, names, cycle_len)
        )

    bundle = InstanceBundle(
        space=space,
        laws=laws,
        rvs=rvs,
        sequences=sequences,
        seed=seed,
        provenance=f"generated seed={seed} profile={profile.name}",
    )
    logger.debug("generated bundle seed=%d profile=%s |X|=%d", seed, profile.name, n)
    return bundle
