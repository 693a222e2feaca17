"""
JSON model, trace and report files
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

from pydantic import ValidationError as PydanticValidationError

from ..core.exceptions import FileFormatError
from ..core.models import ExperimentTrace, ModelFile, TraceFile
from ..data.dataset import DataSet, assemble
from ..network.bcn import Bcn

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _read_text(path: PathLike, kind: str) -> str:
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise FileFormatError(f"Cannot read {kind} file: {e}", str(path), kind)


def _validate(schema, text: str, path: PathLike, kind: str):
    try:
        return schema.model_validate_json(text)
    except PydanticValidationError as e:
        first = e.errors()[0]
        location = '.'.join(str(part) for part in first['loc']) or kind
        raise FileFormatError(f"Invalid {kind} file ({location}): {first['msg']}", str(path), kind)


def model_to_dict(bcn: Bcn) -> Dict[str, Any]:
    return {
        'N': bcn.n_states,
        'M': bcn.n_inputs,
        'P': bcn.n_outputs,
        'L': list(bcn.L.columns),
        'H': list(bcn.H.columns),
    }


def model_from_schema(schema: ModelFile) -> Bcn:
    return Bcn.from_columns(schema.N, schema.M, schema.L, schema.H, schema.P)


def load_model(path: PathLike) -> Bcn:
    """Read a model file {"N","M","P","L","H"}"""
    schema = _validate(ModelFile, _read_text(path, "model"), path, "model")
    logger.debug(f"Loaded model N={schema.N}, M={schema.M}, P={schema.P} from {path}")
    return model_from_schema(schema)


def trace_to_dict(n_states: int, n_inputs: int, n_outputs: Optional[int],
                  traces: Sequence[ExperimentTrace]) -> Dict[str, Any]:
    experiments = []
    for trace in traces:
        record: Dict[str, Any] = {'x': list(trace.states), 'u': list(trace.inputs)}
        if trace.outputs is not None:
            record['y'] = list(trace.outputs)
        experiments.append(record)
    data: Dict[str, Any] = {'N': n_states, 'M': n_inputs}
    if n_outputs is not None:
        data['P'] = n_outputs
    data['experiments'] = experiments
    return data


def dataset_from_schema(schema: TraceFile, check_consistency: bool = True) -> DataSet:
    traces = [record.to_trace() for record in schema.experiments]
    return assemble(traces, schema.N, schema.M, schema.P if schema.has_outputs else None,
                    check_consistency=check_consistency)


def load_trace(path: PathLike, check_consistency: bool = True) -> DataSet:
    """
    Read a trace file and assemble it.

    Shape errors surface as FileFormatError; data-level errors
    (an experiment without transitions, inconsistent data) keep their own type.
    """
    schema = _validate(TraceFile, _read_text(path, "trace"), path, "trace")
    logger.debug(f"Loaded {len(schema.experiments)} experiments from {path}")
    return dataset_from_schema(schema, check_consistency)


def dumps(data: Dict[str, Any], indent: int = 2) -> str:
    return json.dumps(data, indent=indent)


def write_json(data: Dict[str, Any], path: PathLike, indent: int = 2) -> None:
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(dumps(data, indent) + "\n", encoding='utf-8')
    except OSError as e:
        raise FileFormatError(f"Cannot write {path}: {e}", str(path), "report")
