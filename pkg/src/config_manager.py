"""Lab configuration loaded from YAML."""

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml

from src.config import ENV_CONFIG_PATH, get_env_var
from src.utils import parse_range

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/lab.yaml"
DEFAULT_CORPUS_PATH = "data/corpus-n6.g6"

# Largest random tree order the tree suite accepts.
MAX_TREE_ORDER = 12


@dataclass
class SolverConfig:
    """Settings shared by every exact search.

    Attributes:
        max_vertices: Largest graph order the solvers accept
        time_budget_seconds: Wall-clock budget shared by the searches of one instance
        workers: Process count for fanning out one cardinality level
        parallel_threshold: Smallest level size (in combinations) worth
            sending to the process pool
    """

    max_vertices: int = 64
    time_budget_seconds: float = 60.0
    workers: int = 1
    parallel_threshold: int = 200_000

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SolverConfig":
        defaults = cls()
        return cls(
            max_vertices=int(data.get("max_vertices", defaults.max_vertices)),
            time_budget_seconds=float(
                data.get("time_budget_seconds", defaults.time_budget_seconds)
            ),
            workers=int(data.get("workers", defaults.workers)),
            parallel_threshold=int(
                data.get("parallel_threshold", defaults.parallel_threshold)
            ),
        )


@dataclass
class TreeSuiteConfig:
    """Random tree corpus settings."""

    count: int = 200
    max_n: int = MAX_TREE_ORDER
    seed: int = 7

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "TreeSuiteConfig":
        defaults = cls()
        return cls(
            count=int(data.get("count", defaults.count)),
            max_n=int(data.get("max_n", defaults.max_n)),
            seed=int(data.get("seed", defaults.seed)),
        )


@dataclass
class FamilyRange:
    """Inclusive n-range for one family in the family suite."""

    name: str
    start: int
    stop: int

    def values(self) -> range:
        return range(self.start, self.stop + 1)


def _default_family_ranges() -> list[FamilyRange]:
    return [
        FamilyRange("path", 2, 16),
        FamilyRange("cycle", 3, 16),
        FamilyRange("complete", 2, 8),
        FamilyRange("star", 3, 8),
        FamilyRange("wheel", 5, 10),
        FamilyRange("fan", 5, 10),
        FamilyRange("grid2", 1, 10),
        FamilyRange("prism2", 4, 10),
    ]


def _default_pairs() -> list[tuple[str, str]]:
    return [
        ("path:2", "path:2"),
        ("path:3", "path:2"),
        ("cycle:3", "path:2"),
        ("path:2", "path:3"),
    ]


@dataclass
class LabConfig:
    """Complete lab configuration.

    Attributes:
        solver: Exact search settings
        trees: Random tree suite settings
        family_ranges: Per-family n-ranges for the family suite
        bipartite_max_order: Largest n+m for complete bipartite instances
        corpus_path: Newline-delimited graph6 corpus for exhaustive scans
        pairs: Operand spec pairs for the corona and join suite
    """

    solver: SolverConfig = field(default_factory=SolverConfig)
    trees: TreeSuiteConfig = field(default_factory=TreeSuiteConfig)
    family_ranges: list[FamilyRange] = field(default_factory=_default_family_ranges)
    bipartite_max_order: int = 9
    corpus_path: str = DEFAULT_CORPUS_PATH
    pairs: list[tuple[str, str]] = field(default_factory=_default_pairs)

    @classmethod
    def from_dict(cls, data: dict[str, Any] | None) -> "LabConfig":
        data = data or {}
        defaults = cls()

        family_ranges = defaults.family_ranges
        if "families" in data:
            family_ranges = []
            for name, text in data["families"].items():
                start, stop = parse_range(str(text))
                family_ranges.append(FamilyRange(name, start, stop))

        pairs = defaults.pairs
        if "pairs" in data:
            pairs = [(str(left), str(right)) for left, right in data["pairs"]]

        config = cls(
            solver=SolverConfig.from_dict(data.get("solver", {})),
            trees=TreeSuiteConfig.from_dict(data.get("trees", {})),
            family_ranges=family_ranges,
            bipartite_max_order=int(
                data.get("bipartite_max_order", defaults.bipartite_max_order)
            ),
            corpus_path=str(data.get("corpus_path", defaults.corpus_path)),
            pairs=pairs,
        )
        config.validate()
        return config

    @classmethod
    def from_yaml(cls, yaml_path: Path) -> "LabConfig":
        """Load configuration from a YAML file.

        Args:
            yaml_path: Path to the YAML configuration file

        Returns:
            LabConfig populated from the YAML file

        Raises:
            FileNotFoundError: If the YAML file does not exist
            ValueError: If a value is out of range
        """
        with open(yaml_path) as f:
            data = yaml.safe_load(f)
        return cls.from_dict(data)

    def validate(self) -> None:
        """Check value ranges.

        Raises:
            ValueError: If any setting is out of range
        """
        if self.solver.time_budget_seconds <= 0:
            raise ValueError(
                f"time budget must be positive, got {self.solver.time_budget_seconds}"
            )
        if self.solver.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.solver.workers}")
        if self.solver.max_vertices < 1:
            raise ValueError(
                f"max_vertices must be at least 1, got {self.solver.max_vertices}"
            )
        if not 1 <= self.trees.max_n <= MAX_TREE_ORDER:
            raise ValueError(
                f"tree max_n must be in 1..{MAX_TREE_ORDER}, got {self.trees.max_n}"
            )
        if self.trees.count < 0:
            raise ValueError(f"tree count must be non-negative, got {self.trees.count}")

    def to_dict(self) -> dict[str, Any]:
        """Plain representation for report metadata."""
        return {
            "solver": {
                "max_vertices": self.solver.max_vertices,
                "time_budget_seconds": self.solver.time_budget_seconds,
                "workers": self.solver.workers,
            },
            "trees": {
                "count": self.trees.count,
                "max_n": self.trees.max_n,
                "seed": self.trees.seed,
            },
            "families": {
                r.name: f"{r.start}..{r.stop}" for r in self.family_ranges
            },
            "bipartite_max_order": self.bipartite_max_order,
            "corpus_path": self.corpus_path,
            "pairs": [list(pair) for pair in self.pairs],
        }

    def with_overrides(
        self,
        budget: float | None = None,
        workers: int | None = None,
        seed: int | None = None,
        max_n: int | None = None,
        count: int | None = None,
    ) -> "LabConfig":
        """Return a copy with command-line values applied on top."""
        solver = replace(
            self.solver,
            time_budget_seconds=(
                budget if budget is not None else self.solver.time_budget_seconds
            ),
            workers=workers if workers is not None else self.solver.workers,
        )
        trees = replace(
            self.trees,
            seed=seed if seed is not None else self.trees.seed,
            max_n=(
                min(max_n, MAX_TREE_ORDER) if max_n is not None else self.trees.max_n
            ),
            count=count if count is not None else self.trees.count,
        )
        family_ranges = self.family_ranges
        if max_n is not None:
            family_ranges = [
                FamilyRange(r.name, r.start, min(r.stop, max_n))
                for r in self.family_ranges
                if r.start <= max_n
            ]
        config = replace(
            self, solver=solver, trees=trees, family_ranges=family_ranges
        )
        config.validate()
        return config


class ConfigManager:
    """Locates and loads the lab configuration file.

    Attributes:
        config_path: Path of the YAML file consulted by load()
    """

    def __init__(self, config_path: str | None = None) -> None:
        """Initialize ConfigManager.

        Args:
            config_path: Explicit YAML path. Defaults to EMD_LAB_CONFIG or
                config/lab.yaml.
        """
        self.config_path = Path(
            config_path or get_env_var(ENV_CONFIG_PATH, DEFAULT_CONFIG_PATH)
        )

    def load(self) -> LabConfig:
        """Load the configuration, falling back to built-in defaults.

        Returns:
            LabConfig for this run
        """
        if not self.config_path.exists():
            logger.info(
                "No configuration at %s, using built-in defaults", self.config_path
            )
            return LabConfig()
        logger.info("Loading lab configuration from %s", self.config_path)
        config = LabConfig.from_yaml(self.config_path)
        logger.debug(
            "Loaded config (budget %.1fs, workers %d, %d family range(s))",
            config.solver.time_budget_seconds,
            config.solver.workers,
            len(config.family_ranges),
        )
        return config
