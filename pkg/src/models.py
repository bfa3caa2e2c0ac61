"""Data models shared by the solvers, the formulas and the harness."""

from dataclasses import dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)
from typing import Any


class Parameter(StrEnum):
    """The six graph parameters the lab computes."""

    BETA = "beta"
    BETA_E = "beta_e"
    GAMMA = "gamma"
    GAMMA_VE = "gamma_ve"
    GAMMA_MD = "gamma_md"
    GAMMA_EMD = "gamma_emd"

    @property
    def uses_edges(self) -> bool:
        return self in (Parameter.BETA_E, Parameter.GAMMA_VE, Parameter.GAMMA_EMD)

    @property
    def flag(self) -> str:
        """Command-line flag selecting this parameter (e.g. --gamma-emd)."""
        return "--" + self.value.replace("_", "-")


# Display and computation order; later parameters reuse earlier results.
PARAMETER_ORDER: tuple[Parameter, ...] = (
    Parameter.BETA,
    Parameter.BETA_E,
    Parameter.GAMMA,
    Parameter.GAMMA_VE,
    Parameter.GAMMA_MD,
    Parameter.GAMMA_EMD,
)


class Method(StrEnum):
    EXACT_SEARCH = "exact-search"
    CLOSED_FORM = "closed-form"


class CheckStatus(StrEnum):
    MATCH = "match"
    MISMATCH = "mismatch"
    OUT_OF_DOMAIN = "out-of-domain"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchStats:
    """Work done by one exact search.

    Attributes:
        combinations_examined: Candidate sets evaluated
        elapsed: Wall-clock seconds (logged, never serialized)
    """

    combinations_examined: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class ParamResult:
    """Value of a parameter together with a minimum witness set."""

    parameter: str
    value: int
    witness: tuple[int, ...]
    method: Method = Method.EXACT_SEARCH
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self) -> dict[str, Any]:
        return {
            "parameter": str(self.parameter),
            "value": self.value,
            "witness": list(self.witness),
            "method": str(self.method),
            "combinations_examined": self.stats.combinations_examined,
        }


@dataclass(frozen=True)
class BoundCheck:
    """One inequality or implication evaluated on one graph.

    Attributes:
        bound_id: Stable identifier (e.g. "sandwich-emd-upper")
        holds: Whether the statement is true on the graph
        slack: Distance from tightness; negative exactly when violated
        statement: Human-readable form of the evaluated statement
    """

    bound_id: str
    holds: bool
    slack: int
    statement: str = ""


@dataclass
class TheoremCheck:
    """One verification record: a claim, an instance and the verdict."""

    theorem_id: str
    instance: str
    predicted: int | str | None
    computed: int | str | dict[str, int] | None
    status: CheckStatus
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    note: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "predicted": self.predicted,
            "computed": self.computed,
            "status": str(self.status),
            "witnesses": self.witnesses,
            "note": self.note,
        }


@dataclass(frozen=True)
class ComparisonRow:
    """γ_md against γ_emd for one family instance."""

    family: str
    gamma_md: int
    gamma_emd: int
    relation: str
    expected_relation: str | None = None

    @property
    def consistent(self) -> bool | None:
        """Whether the computed relation satisfies the published one."""
        if self.expected_relation is None:
            return None
        if self.expected_relation == ">=":
            return self.relation in (">", "=")
        return self.relation == self.expected_relation

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "gamma_md": self.gamma_md,
            "gamma_emd": self.gamma_emd,
            "relation": self.relation,
            "expected_relation": self.expected_relation,
        }


def relation_of(left: int, right: int) -> str:
    """Return "<", "=" or ">" comparing left with right."""
    if left < right:
        return "<"
    if left > right:
        return ">"
    return "="
