from .schemas import (
    CheckReport,
    Command,
    CommandReport,
    DCategoryResponse,
    ExampleInfo,
    ExampleKind,
    ExampleSpec,
    FunctorReport,
    GreenClasses,
    GreenSide,
    MoritaRequest,
    MoritaResponse,
    MoritaWitness,
    OutputFormat,
    ReportLine,
    RoundTripResponse,
    SemigroupRequest,
    SemigroupSummary,
    SfsCertificate,
    SfsReport,
    Subcommand,
    Violation,
)

__all__ = [
    "CheckReport",
    "Command",
    "CommandReport",
    "DCategoryResponse",
    "ExampleInfo",
    "ExampleKind",
    "ExampleSpec",
    "FunctorReport",
    "GreenClasses",
    "GreenSide",
    "MoritaRequest",
    "MoritaResponse",
    "MoritaWitness",
    "OutputFormat",
    "ReportLine",
    "RoundTripResponse",
    "SemigroupRequest",
    "SemigroupSummary",
    "SfsCertificate",
    "SfsReport",
    "Subcommand",
    "Violation",
]
