"""Pydantic models for CLI input and every JSON payload the CLI writes."""

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..algebra.fields import PrimeField, field_from_name
from ..config.settings import DEFAULT_CONFIG
from ..errors import KoszulLabError

Number = Union[int, str]  # integers stay JSON integers, other rationals are "p/q"

COMMANDS = ("present", "complete", "hilbert", "koszul", "verify-paper")
STATUSES = ("PASS", "FAIL", "WARN", "SKIP", "DIFF")


class RunConfig(BaseModel):
    """Validated command-line configuration."""
    command: str
    source: Optional[str] = None
    order: Optional[str] = None
    cap: int = DEFAULT_CONFIG.default_cap
    n_max: int = DEFAULT_CONFIG.default_nmax
    field: str = "rational"
    out: Optional[str] = None
    mode: Optional[str] = None
    patterns: Optional[str] = None
    strict_paper: bool = False
    verbose: bool = False

    @field_validator("command")
    @classmethod
    def known_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"unknown command {value!r}")
        return value

    @field_validator("cap")
    @classmethod
    def cap_at_least_two(cls, value: int) -> int:
        if value < 2:
            raise ValueError(f"cap must be at least 2, got {value}")
        return value

    @field_validator("n_max")
    @classmethod
    def n_max_non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"nmax must be non-negative, got {value}")
        return value

    @field_validator("field")
    @classmethod
    def known_field(cls, value: str) -> str:
        try:
            field_from_name(value, DEFAULT_CONFIG.default_prime)
        except KoszulLabError as e:
            raise ValueError(str(e)) from None
        return value

    @model_validator(mode="after")
    def command_constraints(self) -> 'RunConfig':
        if self.command == "koszul" and self.n_max > DEFAULT_CONFIG.nmax_limit:
            raise ValueError(f"nmax {self.n_max} exceeds the limit {DEFAULT_CONFIG.nmax_limit}")
        if self.command == "verify-paper":
            field = field_from_name(self.field, DEFAULT_CONFIG.default_prime)
            if isinstance(field, PrimeField) and field.p % 3 != 1:
                raise ValueError(f"cyclotomic checks over F_{field.p} need p ≡ 1 (mod 3)")
        return self


class SeriesReport(BaseModel):
    source: str
    patterns: List[str]
    counts: List[int]
    recurrence: Optional[List[Number]] = None
    offset: Optional[int] = None
    numerator: Optional[List[Number]] = None
    denominator: Optional[List[Number]] = None
    rational_function: Optional[str] = None
    verified_through: int
    error: Optional[str] = None


class CellDims(BaseModel):
    X: int
    Y: int
    Z: int
    median_left: int
    median_right: int


class CellReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    n: int
    a: int
    weight: Optional[List[int]] = None
    dims: CellDims
    passed: bool = Field(alias="pass")


class CertificateReport(BaseModel):
    presentation: str
    field: str
    mode: str
    n_max: int
    cells: List[CellReport]
    primal_dims: List[int]
    dual_dims: List[int]
    convolution: List[int]
    passed: bool
    statement: str


class CheckResult(BaseModel):
    id: str
    description: str
    location: str
    status: str
    computed: str
    printed: Optional[str] = None

    @field_validator("status")
    @classmethod
    def known_status(cls, value: str) -> str:
        if value not in STATUSES:
            raise ValueError(f"unknown status {value!r}")
        return value


class VerifyReport(BaseModel):
    n_max: int
    field: str
    strict: bool
    checks: List[CheckResult]
    summary: dict
    exit_code: int


class AmbiguityRecordModel(BaseModel):
    word: str
    kind: str
    left: str
    right: str
    offset: int
    degree: int
    status: str
    new_lhs: Optional[str] = None


class CompletionLogReport(BaseModel):
    presentation: str
    order: str
    cap: int
    field: str
    rule_count: int
    lhs: List[str]
    records: List[AmbiguityRecordModel]
    unresolved: List[str]
    families: List[str] = []
