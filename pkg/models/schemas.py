from enum import Enum
from typing import Literal

from pydantic import BaseModel, Field


class GreenSide(str, Enum):
    """Side of a Green preorder."""
    L = "L"  # x in S^1 y
    R = "R"  # x in y S^1


class Subcommand(str, Enum):
    """CLI subcommands."""
    CHECK_SFS = "check-sfs"
    D_CATEGORY = "d-category"
    FREYD = "freyd"
    SIGMA = "sigma"
    ROUNDTRIP = "roundtrip"
    CONJUGATIONS = "conjugations"
    MORITA = "morita"
    CORPUS = "corpus"


class OutputFormat(str, Enum):
    """Report rendering."""
    TEXT = "text"
    MACHINE = "machine"


class ExampleKind(str, Enum):
    """What a corpus example builds."""
    SEMIGROUP = "semigroup"
    CATEGORY = "category"
    BUNDLE = "bundle"
    DOCUMENTATION = "documentation"


# =============================================================================
# Verification Reports
# =============================================================================

class Violation(BaseModel):
    """A single failed check with the elements or arrows that witness it."""

    check: str = Field(
        ...,
        description="Name of the violated property"
    )
    witness: list[int] = Field(
        default_factory=list,
        description="Indices witnessing the failure"
    )
    detail: str = Field(
        default="",
        description="Human-readable explanation"
    )


class CheckReport(BaseModel):
    """Outcome of a report-style verification."""

    name: str = Field(
        ...,
        description="What was verified"
    )
    violations: list[Violation] = Field(
        default_factory=list,
        description="Every violation found, in index order"
    )

    @property
    def passed(self) -> bool:
        return not self.violations

    def failed_checks(self) -> set[str]:
        return {v.check for v in self.violations}

    def add(self, check: str, witness: tuple[int, ...] | list[int] = (), detail: str = "") -> None:
        self.violations.append(Violation(check=check, witness=list(witness), detail=detail))


class SfsReport(CheckReport):
    """verify_sfs result, carrying the factorization map when it passes."""

    factorization: dict[int, tuple[int, int]] = Field(
        default_factory=dict,
        description="Arrow index to its (E-arrow, M-arrow) factorization"
    )


class FunctorReport(CheckReport):
    """check_functor result with one verdict per requested flag."""

    sfs_preserving: bool | None = Field(
        default=None,
        description="H(E) in E' and H(M) in M', if requested"
    )
    pointed: bool | None = Field(
        default=None,
        description="H(unit) = unit', if requested"
    )
    semi_pointed: bool | None = Field(
        default=None,
        description="H(unit) -> unit' -> H(unit) is the identity, if requested"
    )


class SfsCertificate(BaseModel):
    """The five checks behind a unital, complete and thin SFS."""

    unique_factorization: bool
    thin_e: bool
    thin_m: bool
    unital: bool
    complete: bool
    unit: int | None = Field(
        default=None,
        description="Object at which unitality was checked"
    )

    @property
    def all_pass(self) -> bool:
        return all((self.unique_factorization, self.thin_e, self.thin_m, self.unital, self.complete))

    def failures(self) -> list[str]:
        names = ["unique_factorization", "thin_e", "thin_m", "unital", "complete"]
        return [name for name in names if not getattr(self, name)]


class GreenClasses(BaseModel):
    """Green's equivalence classes of a finite semigroup."""

    l_classes: list[list[int]]
    r_classes: list[list[int]]
    h_classes: list[list[int]]
    d_classes: list[list[int]]


# =============================================================================
# Search Witnesses
# =============================================================================

class MoritaWitness(BaseModel):
    """Replayable evidence that two monoids are Morita equivalent."""

    side: Literal["source", "target"] = Field(
        ...,
        description="Monoid holding the enlargement idempotent"
    )
    idempotent: int = Field(
        ...,
        description="Enlargement idempotent e with MeM = M"
    )
    corner_elements: list[int] = Field(
        ...,
        description="Carrier of eMe as indices into the monoid holding e"
    )
    isomorphism: list[int] = Field(
        ...,
        description="Corner index to element of the other monoid"
    )


# =============================================================================
# Corpus
# =============================================================================

class ExampleSpec(BaseModel):
    """A request for a registered corpus example."""

    name: str = Field(
        ...,
        description="Registered example name"
    )
    params: tuple[int, ...] = Field(
        default=(),
        description="Small integer parameters"
    )


class ExampleInfo(BaseModel):
    """Registry entry describing a corpus example."""

    name: str
    kind: ExampleKind
    description: str
    param_bounds: list[tuple[int, int]] = Field(
        default_factory=list,
        description="Inclusive (low, high) bounds per parameter"
    )


# =============================================================================
# CLI Models
# =============================================================================

class Command(BaseModel):
    """A parsed CLI invocation."""

    subcommand: Subcommand
    inputs: list[str] = Field(
        default_factory=list,
        description="Input file paths or corpus arguments"
    )
    out: str | None = None
    debug_witness_check: bool = False
    budget: int | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    f_map: str | None = None
    g_map: str | None = None


class ReportLine(BaseModel):
    """One key/value line of a command report."""

    key: str
    value: str
    verdict: bool = Field(
        default=False,
        description="Part of the one-line summary in text output"
    )
    name: str | None = Field(
        default=None,
        description="Key used in machine output, derived from `key` when omitted"
    )

    @property
    def machine_key(self) -> str:
        return self.name or self.key.replace(" ", "_")


class CommandReport(BaseModel):
    """Everything a command prints, plus its exit status."""

    command: Subcommand
    exit_code: int = 0
    lines: list[ReportLine] = Field(default_factory=list)
    body: str = Field(
        default="",
        description="Free-form payload such as a dumped structure"
    )

    def add(self, key: str, value, verdict: bool = False, name: str | None = None) -> None:
        self.lines.append(ReportLine(key=key, value=str(value), verdict=verdict, name=name))


# =============================================================================
# API Request/Response Models
# =============================================================================

class SemigroupRequest(BaseModel):
    """A Cayley table submitted for analysis."""

    table: list[list[int]] = Field(
        ...,
        description="Square grid, row i holds the products i*j"
    )
    identity: int | None = Field(
        default=None,
        description="Declared identity, detected when omitted"
    )


class SemigroupSummary(BaseModel):
    """Response model for /api/semigroups/analyze."""

    size: int
    identity: int | None
    idempotents: list[int]
    l_class_count: int
    r_class_count: int
    d_class_count: int


class DCategoryResponse(BaseModel):
    """Response model for /api/d-category."""

    object_count: int
    arrow_count: int
    certificate: SfsCertificate | None = Field(
        default=None,
        description="Present only when the semigroup is a monoid"
    )


class RoundTripResponse(BaseModel):
    """Response model for /api/roundtrip."""

    identical: bool
    size: int


class MoritaRequest(BaseModel):
    """Two monoids to compare."""

    left: SemigroupRequest
    right: SemigroupRequest
    budget: int | None = Field(
        default=None,
        ge=1,
        description="Candidate budget for the search"
    )


class MoritaResponse(BaseModel):
    """Response model for /api/morita."""

    equivalent: bool
    witness: MoritaWitness | None = None
