"""
Runners module — orchestrates suite execution and gap exploration.
"""

from .explorer import GapFinding, explore_gaps
from .runner import SuiteRunner, run_suite

__all__ = ["SuiteRunner", "run_suite", "explore_gaps", "GapFinding"]
