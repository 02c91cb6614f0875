"""Run configuration: one JSON file, individual fields overridable from the command line."""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..kernel.params import ParamSet
from ..oracle.grid import Grid
from ..polynomials.rational import to_rational
from ..polynomials.ypolynomial import YPolynomial

logger = logging.getLogger(__name__)

RationalField = Union[str, int]


def _as_float(value):
    # "1/2" style strings are accepted wherever a float is expected
    if isinstance(value, str):
        return float(Fraction(value.strip()))
    return value


class _Block(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GridConfig(_Block):
    y_min: float = -2.0
    y_max: float = 2.0
    ny: int = 401
    z_start: float = 0.05
    z_end: float = 1.0
    nz: int = 9500
    theta: float = Field(0.5, ge=0.0, le=1.0)
    damping_steps: int = Field(0, ge=0)
    retain_every: int = Field(50, ge=1)
    source: Literal["closed_form", "series"] = "closed_form"
    sensitivity_widen: Optional[float] = Field(2.0, gt=1.0)

    @field_validator("y_min", "y_max", "z_start", "z_end", "theta", mode="before")
    @classmethod
    def fraction_strings(cls, value):
        return _as_float(value)

    @model_validator(mode="after")
    def check_grid(self):
        self.to_grid()
        return self

    def to_grid(self) -> Grid:
        return Grid(self.y_min, self.y_max, self.ny, self.z_start, self.z_end, self.nz)


class SweepConfig(_Block):
    orders: List[int] = [4, 8, 16]
    z_values: List[float] = [0.1, 0.25, 0.5, 1.0]

    @field_validator("orders")
    @classmethod
    def non_negative(cls, orders):
        if any(N < 0 for N in orders):
            raise ValueError("sweep orders must be non-negative")
        return orders


class ConvergenceConfig(_Block):
    y_min: float = -5.0
    y_max: float = 5.0
    ny: int = 101
    z_start: float = 0.1
    z_end: float = 0.6
    nz: int = 200
    refinement_levels: int = Field(3, ge=3)
    damping_steps: int = Field(2, ge=0)

    @model_validator(mode="after")
    def check_grid(self):
        self.to_grid()
        return self

    def to_grid(self) -> Grid:
        return Grid(self.y_min, self.y_max, self.ny, self.z_start, self.z_end, self.nz)


class OutputConfig(_Block):
    series: str = "series.json"
    report: str = "report.json"
    out_dir: str = "oracle_out"


class RunConfig(_Block):
    k1: RationalField
    k2: RationalField
    f0: Union[str, List[RationalField]] = "y"
    order: int = Field(12, ge=0)
    grid: GridConfig = GridConfig()
    sweep: SweepConfig = SweepConfig()
    convergence: ConvergenceConfig = ConvergenceConfig()
    output: OutputConfig = OutputConfig()

    @field_validator("k1", "k2")
    @classmethod
    def exact_rational(cls, value):
        to_rational(value)
        return value

    @field_validator("f0")
    @classmethod
    def initial_profile(cls, value):
        if isinstance(value, str):
            if value.strip() != "y":
                raise ValueError(f"f0 must be 'y' or a list of coefficients, got {value!r}")
            return value
        for c in value:
            to_rational(c)
        return value

    def params(self) -> ParamSet:
        return ParamSet.of(self.k1, self.k2)

    def initial(self) -> YPolynomial:
        if isinstance(self.f0, str):
            return YPolynomial.y()
        return YPolynomial(tuple(to_rational(c) for c in self.f0))


def _set_dotted(data: Dict[str, Any], dotted: str, value: Any) -> None:
    *parents, leaf = dotted.split(".")
    node = data
    for key in parents:
        node = node.setdefault(key, {})
        if not isinstance(node, dict):
            raise ValueError(f"cannot override {dotted}: {key} is not a block")
    node[leaf] = value


def load_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Read the JSON config (if any) and apply dotted-key overrides before validation."""
    data: Dict[str, Any] = {}
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError(f"{path} must hold a JSON object")
    for key, value in (overrides or {}).items():
        if value is not None:
            _set_dotted(data, key, value)
    config = RunConfig.model_validate(data)
    logger.debug("loaded config: %s", config.model_dump())
    return config
