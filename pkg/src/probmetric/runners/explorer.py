"""
Gap explorer — searches seeded bundles for minimal limit gaps and writes
candidate instances to disk.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from ..gauges import Gauge, GapReport, min_limit_gap
from ..instances.generator import generate
from ..instances.loader import InstanceBundle, dump_instance
from ..metrics import Indicator, LInf, Lp

logger = logging.getLogger(__name__)


def default_gauges() -> list[Gauge]:
    return [
        Gauge.ky_fan(),
        Gauge.finite(Lp(1)),
        Gauge.finite(Lp(2)),
        Gauge.finite(Indicator(), LInf()),
    ]


@dataclass(frozen=True)
class GapFinding:
    sequence: str
    gauge: str
    report: GapReport
    instance_file: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence,
            "gauge": self.gauge,
            "instance_file": self.instance_file,
            **self.report.to_dict(),
        }


def explore_gaps(
    seed: int,
    budget: int,
    out_dir: Union[str, Path],
    gauges: Optional[Sequence[Gauge]] = None,
    profile: str = "default",
) -> list[GapFinding]:
    """
    Report (L, U, U - L) for every sequence of the bundle for `seed`.

    Bundles with candidate gaps are written to `out_dir` together with a
    summary file `gap-seed<S>.json`.
    """
    out = Path(out_dir)
    bundle = generate(seed, profile)
    rng = np.random.default_rng([seed, 0x6A9])
    target = sorted(bundle.rvs)[0]
    xi = bundle.rv(target)
    findings = []
    for name in sorted(bundle.sequences):
        seq = bundle.sequence(name)
        for g in gauges or default_gauges():
            report = min_limit_gap(g, seq, xi, budget=budget, rng=rng)
            path = None
            if report.candidate:
                path = str(_dump_candidate(bundle, out, seed, name, g))
            findings.append(GapFinding(name, g.spec(), report, path))

    out.mkdir(parents=True, exist_ok=True)
    summary = out / f"gap-seed{seed}.json"
    payload = {
        "seed": seed,
        "budget": budget,
        "target": target,
        "findings": [f.to_dict() for f in findings],
    }
    summary.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info(
        "Gap exploration seed=%d: %d reports, %d candidates",
        seed,
        len(findings),
        sum(1 for f in findings if f.report.candidate),
    )
    return findings


def _dump_candidate(bundle: InstanceBundle, out: Path, seed: int, seq: str, g: Gauge) -> Path:
    tag = g.spec().replace(":", "-").replace("(", "-").replace(")", "").replace(",", "-")
    return dump_instance(bundle, out / f"gap-seed{seed}-{seq}-{tag}.json")
