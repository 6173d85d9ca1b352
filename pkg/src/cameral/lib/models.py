from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from .errors import InvalidCurveError, InvalidRootDatumError, UsageError
from .glncover import SpectralAlgebra, spectral_from_coeffs
from .hyperelliptic import DEFAULT_MAX_ENUM, HyperCurve
from .rootdata import RootDatum, datum_from_json


class RootDatumInput(BaseModel):
    rank: int = Field(ge=1)
    simple_roots: List[List[int]] = Field(default=[])
    simple_coroots: List[List[int]] = Field(default=[])
    type_tag: Optional[str] = Field(default="custom")
    n: Optional[int] = Field(default=None)

    def to_datum(self, max_enum: int) -> RootDatum:
        return datum_from_json(self.model_dump(), max_enum)


class CoverInput(BaseModel):
    """
    Spectral cover Y^n + a_{n-1} Y^{n-1} + ... + a_0; `a` lists a_0 first.
    Rationals may be given as strings such as "-3/2".
    """

    n: int = Field(ge=1)
    a: List[Union[int, str]] = Field(default=[])

    @model_validator(mode="after")
    def check_length(self) -> "CoverInput":
        if len(self.a) != self.n:
            raise ValueError(f"{len(self.a)} coefficients for a degree {self.n} cover")
        return self

    def to_spectral(self) -> SpectralAlgebra:
        return spectral_from_coeffs(self.n, list(self.a))


class CurveInput(BaseModel):
    q: int
    f: Optional[List[int]] = Field(default=None)
    expression: Optional[str] = Field(default=None)

    def to_curve(self, max_enum: int = DEFAULT_MAX_ENUM) -> HyperCurve:
        if self.f is not None:
            return HyperCurve(self.q, self.f, max_enum)
        if self.expression is not None:
            return HyperCurve.from_expression(self.q, self.expression, max_enum)
        raise InvalidCurveError("curve input needs either f or expression")


class CheckResult(BaseModel):
    name: str
    passed: bool


class ErrorReport(BaseModel):
    kind: str
    message: str
    exit_code: int


class RunReport(BaseModel):
    command: str
    inputs: Dict[str, Any] = Field(default={})
    seed: int = Field(default=0)
    results: Dict[str, Any] = Field(default={})
    checks: List[CheckResult] = Field(default=[])
    passed: bool = Field(default=False)
    error: Optional[ErrorReport] = Field(default=None)
    duration_seconds: Optional[float] = Field(default=None)

    def to_json(self) -> dict:
        return self.model_dump(exclude_none=True)


def parse_input(model: type, content: Any, error: type = UsageError):
    """
    Validate raw JSON content against a pydantic input model.

    Raises:
        UsageError: (or the given subclass) the content does not match the schema.
    """

    try:
        return model.model_validate(content)
    except ValidationError as e:
        raise error(f"invalid {model.__name__}: {e.errors()[0]['msg']}")


def datum_input(content: Any, max_enum: int) -> RootDatum:
    return parse_input(RootDatumInput, content, InvalidRootDatumError).to_datum(max_enum)


def cover_input(content: Any) -> SpectralAlgebra:
    return parse_input(CoverInput, content).to_spectral()
