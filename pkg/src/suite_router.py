"""Routes verify suite names to their runners."""

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from src.config_manager import LabConfig
from src.families import FamilySpecError
from src.graph_core import GraphError
from src.models import TheoremCheck
from src.search import SearchSettings
from src.verify import (
    comparison_specs,
    run_comparison_suite,
    run_corona_join_suite,
    run_family_suite,
    run_fixture_suite,
    run_tree_suite,
)

logger = logging.getLogger(__name__)

SuiteRunner = Callable[[], list[TheoremCheck]]

SUITE_NAMES: tuple[str, ...] = (
    "families",
    "corona-join",
    "fixtures",
    "comparison",
    "trees",
)


@dataclass
class SuiteRun:
    """Checks from the suites that ran and the names of those that failed."""

    checks: list[TheoremCheck] = field(default_factory=list)
    completed: list[str] = field(default_factory=list)
    failed: list[str] = field(default_factory=list)


class SuiteRouter:
    """Maps suite names to runners bound to one lab configuration."""

    def __init__(self, config: LabConfig) -> None:
        """Initialize router with the effective configuration.

        Args:
            config: Lab configuration after command-line overrides.
        """
        self.config = config
        self.settings = SearchSettings.from_config(config.solver)
        self.runners: dict[str, SuiteRunner] = {
            name: self._create_runner(name) for name in SUITE_NAMES
        }
        logger.debug("Registered suites: %s", ", ".join(self.runners))

    def _create_runner(self, name: str) -> SuiteRunner:
        """Create the runner for a suite name.

        Raises:
            ValueError: If the suite name is unknown.
        """
        config, settings = self.config, self.settings
        if name == "families":
            return lambda: run_family_suite(
                config.family_ranges, settings, config.bipartite_max_order
            )
        if name == "corona-join":
            return lambda: run_corona_join_suite(config.pairs, settings)
        if name == "fixtures":
            return lambda: run_fixture_suite(settings)
        if name == "comparison":
            return lambda: run_comparison_suite(
                comparison_specs(config.family_ranges, config.bipartite_max_order),
                settings,
            )
        if name == "trees":
            trees = config.trees
            return lambda: run_tree_suite(trees.count, trees.max_n, trees.seed, settings)
        raise ValueError(f"Unknown suite: '{name}'")

    def resolve(self, selection: Iterable[str]) -> list[str]:
        """Expand "all" and check names, keeping registration order.

        Raises:
            ValueError: If a suite name is unknown.
        """
        names = set()
        for name in selection:
            if name == "all":
                names.update(SUITE_NAMES)
            elif name in self.runners:
                names.add(name)
            else:
                raise ValueError(
                    f"Unknown suite: '{name}' (choose from all, {', '.join(SUITE_NAMES)})"
                )
        return [name for name in SUITE_NAMES if name in names]

    def run(self, selection: Iterable[str]) -> SuiteRun:
        """Run the selected suites; a suite that errors is logged and skipped."""
        outcome = SuiteRun()
        for name in self.resolve(selection):
            logger.info("Running suite: %s", name)
            try:
                checks = self.runners[name]()
            except (GraphError, FamilySpecError):
                logger.exception("Error running suite %s", name)
                outcome.failed.append(name)
                continue
            outcome.checks.extend(checks)
            outcome.completed.append(name)
            logger.info(
                "Suite %s produced %d check(s)",
                name,
                len(checks),
                extra={"suite": name, "checks": len(checks)},
            )
        return outcome
