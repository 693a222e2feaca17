"""
Core data models for bcndata
"""
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from .exceptions import ValidationError


class OutputFormat(str, Enum):
    """Report formats"""
    HUMAN = "human"
    JSON = "json"


class AnalysisKind(str, Enum):
    """Data analyses exposed by ``bcndata analyze``"""
    IDENTIFIABILITY = "identifiability"
    IDENTIFY = "identify"
    EQUILIBRIA = "equilibria"
    LTOT = "ltot"
    MASK = "mask"
    REACH = "reach"
    BASIN = "basin"
    TARGETS = "targets"
    CYCLES = "cycles"


@dataclass(frozen=True)
class ExperimentTrace:
    """
    One recorded experiment: states x(0..T), inputs u(0..T-1), outputs y(0..T-1).

    All entries are 1-based canonical indices. ``outputs`` is None for
    output-free data.
    """
    states: Tuple[int, ...]
    inputs: Tuple[int, ...]
    outputs: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'states', tuple(int(s) for s in self.states))
        object.__setattr__(self, 'inputs', tuple(int(u) for u in self.inputs))
        if self.outputs is not None:
            object.__setattr__(self, 'outputs', tuple(int(y) for y in self.outputs))

        if len(self.states) != len(self.inputs) + 1:
            raise ValidationError(
                f"A trace with {len(self.inputs)} inputs needs {len(self.inputs) + 1} states, "
                f"got {len(self.states)}", "states", len(self.states))
        if self.outputs is not None and len(self.outputs) != len(self.inputs):
            raise ValidationError(
                f"A trace with {len(self.inputs)} inputs needs as many outputs, got {len(self.outputs)}",
                "outputs", len(self.outputs))

    @property
    def length(self) -> int:
        """Number of recorded transitions T_i"""
        return len(self.inputs)

    @property
    def has_outputs(self) -> bool:
        return self.outputs is not None


# File schemas (JSON model and trace files)

class ModelFile(BaseModel):
    """On-disk form of a BCN: column indices of L and H, 1-based"""
    N: int = Field(..., ge=1, description="Number of states")
    M: int = Field(..., ge=1, description="Number of inputs")
    P: int = Field(default=1, ge=1, description="Number of outputs")
    L: List[int] = Field(..., description="Successor index of every column of L, length N*M")
    H: Optional[List[int]] = Field(default=None, description="Output index of every state, length N")

    @model_validator(mode='after')
    def _check_columns(self) -> "ModelFile":
        if len(self.L) != self.N * self.M:
            raise ValueError(f"L must have N*M = {self.N * self.M} entries, got {len(self.L)}")
        if any(not 1 <= c <= self.N for c in self.L):
            raise ValueError(f"L entries must lie in [1, {self.N}]")
        if self.H is None:
            self.H = [1] * self.N
        if len(self.H) != self.N:
            raise ValueError(f"H must have N = {self.N} entries, got {len(self.H)}")
        if any(not 1 <= c <= self.P for c in self.H):
            raise ValueError(f"H entries must lie in [1, {self.P}]")
        return self


class ExperimentRecord(BaseModel):
    """One experiment inside a trace file"""
    x: List[int] = Field(..., min_length=1, description="States x(0..T)")
    u: List[int] = Field(..., description="Inputs u(0..T-1)")
    y: Optional[List[int]] = Field(default=None, description="Outputs y(0..T-1)")

    @model_validator(mode='after')
    def _check_lengths(self) -> "ExperimentRecord":
        if len(self.x) != len(self.u) + 1:
            raise ValueError(f"x must have len(u) + 1 = {len(self.u) + 1} entries, got {len(self.x)}")
        if self.y is not None and len(self.y) != len(self.u):
            raise ValueError(f"y must have len(u) = {len(self.u)} entries, got {len(self.y)}")
        return self

    def to_trace(self) -> ExperimentTrace:
        return ExperimentTrace(tuple(self.x), tuple(self.u), tuple(self.y) if self.y is not None else None)


class TraceFile(BaseModel):
    """On-disk form of a data set"""
    N: int = Field(..., ge=1, description="Number of states")
    M: int = Field(..., ge=1, description="Number of inputs")
    P: Optional[int] = Field(default=None, ge=1, description="Number of outputs, absent for output-free data")
    experiments: List[ExperimentRecord] = Field(..., min_length=1)

    @model_validator(mode='after')
    def _check_ranges(self) -> "TraceFile":
        with_outputs = [e.y is not None for e in self.experiments]
        if any(with_outputs) and not all(with_outputs):
            raise ValueError("Either every experiment records outputs or none does")
        if any(with_outputs) and self.P is None:
            raise ValueError("Outputs are recorded but P is missing")
        for number, experiment in enumerate(self.experiments, start=1):
            if any(not 1 <= x <= self.N for x in experiment.x):
                raise ValueError(f"Experiment {number}: states must lie in [1, {self.N}]")
            if any(not 1 <= u <= self.M for u in experiment.u):
                raise ValueError(f"Experiment {number}: inputs must lie in [1, {self.M}]")
            if experiment.y is not None and any(not 1 <= y <= (self.P or 1) for y in experiment.y):
                raise ValueError(f"Experiment {number}: outputs must lie in [1, {self.P}]")
        return self

    @property
    def has_outputs(self) -> bool:
        return self.experiments[0].y is not None


class RunConfig(BaseModel):
    """Validated arguments of one CLI invocation"""
    command: str = Field(..., description="simulate | analyze | synthesize-safe | synthesize-regulate")
    input_path: Path = Field(..., description="Model file for simulate, trace file otherwise")
    analysis: Optional[AnalysisKind] = Field(default=None)
    target: Optional[List[int]] = Field(default=None, description="Target state set")
    unsafe: Optional[List[int]] = Field(default=None, description="Unsafe state set")
    y_star: Optional[int] = Field(default=None, ge=1, description="Desired output index")
    x0: Optional[int] = Field(default=None, ge=1)
    inputs: Optional[List[int]] = Field(default=None)
    length: Optional[int] = Field(default=None, ge=0)
    seed: Optional[int] = Field(default=None)
    verify_budget: Optional[int] = Field(default=None, ge=1)
    output_format: OutputFormat = Field(default=OutputFormat.HUMAN)
    out: Optional[Path] = Field(default=None)

    @model_validator(mode='after')
    def _check_flags(self) -> "RunConfig":
        if self.command == "simulate":
            if self.x0 is None:
                raise ValueError("simulate requires --x0")
            if (self.inputs is None) == (self.length is None):
                raise ValueError("simulate requires exactly one of --inputs and --length")
        elif self.command == "analyze":
            if self.analysis is None:
                raise ValueError("analyze requires an analysis name")
            if self.analysis in (AnalysisKind.REACH, AnalysisKind.BASIN) and not self.target:
                raise ValueError(f"analyze {self.analysis.value} requires --target")
            if self.analysis in (AnalysisKind.TARGETS, AnalysisKind.CYCLES) and self.y_star is None:
                raise ValueError(f"analyze {self.analysis.value} requires --ystar")
        elif self.command == "synthesize-safe":
            if self.unsafe is None:
                raise ValueError("synthesize safe requires --unsafe")
        elif self.command == "synthesize-regulate":
            if self.y_star is None:
                raise ValueError("synthesize regulate requires --ystar")
        else:
            raise ValueError(f"Unknown command: {self.command}")
        return self


# Configuration sections

class AnalysisConfig(BaseModel):
    """Analysis settings"""
    cycle_cap: int = Field(default=1_000_000, ge=1, description="Maximum number of simple cycles to enumerate")
    check_consistency: bool = Field(default=True, description="Reject data no deterministic BCN can produce")


class VerificationConfig(BaseModel):
    """Settings of the compatible-model verification battery"""
    enabled: bool = Field(default=False, description="Verify synthesized feedbacks even without --verify")
    budget: int = Field(default=1000, ge=1, description="Models enumerated or sampled per check")
    seed: int = Field(default=0, description="Sampling seed")


class OutputConfig(BaseModel):
    """Report settings"""
    format: OutputFormat = Field(default=OutputFormat.HUMAN, description="Report format")
    indent: int = Field(default=2, ge=0, description="JSON indentation")
