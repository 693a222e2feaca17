"""
Closed-loop checks of a feedback against compatible models
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import ValidationError
from ..data.dataset import DataSet
from ..network.bcn import Bcn, FeedbackMatrix, closed_loop
from ..synthesis.regulation import RegulationResult
from ..synthesis.safe_control import SafeControlResult
from .family import adversarial_completion, compatible_family, enumerate_or_sample

logger = logging.getLogger(__name__)

DEFAULT_FEEDBACK_LIMIT = 4096

FeedbackLike = Union[FeedbackMatrix, Sequence[int]]


@dataclass(frozen=True)
class Counterexample:
    """A model and initial state on which the feedback fails, with the closed-loop trace"""
    model: Bcn
    x0: int
    trace: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'model': {
                'N': self.model.n_states,
                'M': self.model.n_inputs,
                'P': self.model.n_outputs,
                'L': list(self.model.L.columns),
                'H': list(self.model.H.columns),
            },
            'x0': self.x0,
            'trace': list(self.trace),
        }


@dataclass(frozen=True)
class Verdict:
    passed: bool
    models_checked: int
    counterexample: Optional[Counterexample] = None
    seed: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pass': self.passed,
            'models_checked': self.models_checked,
            'counterexample': self.counterexample.to_dict() if self.counterexample is not None else None,
            'seed': self.seed,
        }


def _feedback(k: FeedbackLike, model: Bcn) -> FeedbackMatrix:
    if isinstance(k, FeedbackMatrix):
        return k
    return FeedbackMatrix.from_inputs(model.n_inputs, k)


def safe_control_failure(model: Bcn, k: FeedbackLike, unsafe: Iterable[int]) -> Optional[Counterexample]:
    """
    First initial state whose closed-loop trajectory fails to enter X_s within
    N steps or leaves it afterwards, or None when K is safe for ``model``.
    """
    unsafe = frozenset(unsafe)
    n = model.n_states
    loop = closed_loop(model, _feedback(k, model))
    for x0 in range(1, n + 1):
        orbit = loop.orbit(x0, 2 * n)
        entry = next((t for t, state in enumerate(orbit) if state not in unsafe), None)
        if entry is None or entry > n or any(state in unsafe for state in orbit[entry:]):
            return Counterexample(model, x0, tuple(orbit))
    return None


def regulation_failure(model: Bcn, k: FeedbackLike, y_star: int) -> Optional[Counterexample]:
    """
    First initial state whose closed-loop trajectory does not settle within N
    steps on a periodic orbit with output y*, or None.
    """
    n = model.n_states
    loop = closed_loop(model, _feedback(k, model))
    for x0 in range(1, n + 1):
        orbit = loop.orbit(x0, 2 * n)
        # orbit[n:] covers the whole limit cycle
        if any(model.output(state) != y_star for state in orbit[n:]):
            return Counterexample(model, x0, tuple(orbit))
    return None


def _check(models: Iterable[Bcn], failure: Callable[[Bcn], Optional[Counterexample]],
           seed: Optional[int]) -> Verdict:
    checked = 0
    for model in models:
        checked += 1
        counterexample = failure(model)
        if counterexample is not None:
            logger.info(f"Feedback fails on model {checked} from state {counterexample.x0}")
            return Verdict(False, checked, counterexample, seed)
    return Verdict(True, checked, None, seed)


def check_safe_control(models: Iterable[Bcn], k: FeedbackLike, unsafe: Iterable[int],
                       seed: Optional[int] = None) -> Verdict:
    unsafe = frozenset(unsafe)
    return _check(models, lambda model: safe_control_failure(model, k, unsafe), seed)


def check_output_regulation(models: Iterable[Bcn], k: FeedbackLike, y_star: int,
                            seed: Optional[int] = None) -> Verdict:
    return _check(models, lambda model: regulation_failure(model, k, y_star), seed)


def safe_control_models(ds: DataSet, unsafe: Iterable[int], budget: int, seed: int = 0) -> List[Bcn]:
    """Enumerated or sampled family members plus the safe-control adversary"""
    unsafe = frozenset(unsafe)
    fam = compatible_family(ds, seed)
    safe = frozenset(range(1, ds.n_states + 1)) - unsafe
    return enumerate_or_sample(fam, budget) + [adversarial_completion(fam, avoid=safe)]


def regulation_models(ds: DataSet, result: RegulationResult, budget: int, seed: int = 0) -> List[Bcn]:
    """Enumerated or sampled family members plus the regulation adversary"""
    fam = compatible_family(ds, seed)
    adversary = adversarial_completion(fam, avoid=result.target_states, y_star=result.y_star,
                                       anchor=result.cycles.nodes or None)
    return enumerate_or_sample(fam, budget) + [adversary]


def verify_safe_control(ds: DataSet, result: SafeControlResult, budget: int = 1000, seed: int = 0) -> Verdict:
    """Check a synthesized safe-control feedback on compatible models"""
    if result.K is None:
        raise ValidationError("Only a solvable safe-control result carries a feedback to verify", "K")
    models = safe_control_models(ds, result.unsafe, budget, seed)
    verdict = check_safe_control(models, result.K, result.unsafe, seed)
    logger.info(f"Safe-control verification: pass={verdict.passed} on {verdict.models_checked} models")
    return verdict


def verify_output_regulation(ds: DataSet, result: RegulationResult, budget: int = 1000,
                             seed: int = 0) -> Verdict:
    """Check a synthesized regulating feedback on compatible models"""
    if result.K is None:
        raise ValidationError("Only a solvable regulation result carries a feedback to verify", "K")
    models = regulation_models(ds, result, budget, seed)
    verdict = check_output_regulation(models, result.K, result.y_star, seed)
    logger.info(f"Regulation verification: pass={verdict.passed} on {verdict.models_checked} models")
    return verdict


def all_feedbacks(n_inputs: int, n_states: int, limit: int = DEFAULT_FEEDBACK_LIMIT) -> Iterator[FeedbackMatrix]:
    """Every M x N state feedback; refuses when there are more than ``limit``"""
    count = n_inputs ** n_states
    if count > limit:
        raise ValidationError(f"{count} feedbacks exceed the search limit {limit}", "limit", limit)
    for inputs in itertools.product(range(1, n_inputs + 1), repeat=n_states):
        yield FeedbackMatrix.from_inputs(n_inputs, inputs)


def find_feedback(models: Sequence[Bcn], works: Callable[[Bcn, FeedbackMatrix], bool],
                  limit: int = DEFAULT_FEEDBACK_LIMIT) -> Optional[FeedbackMatrix]:
    """First feedback (in lexicographic order) that ``works`` on every model"""
    if not models:
        raise ValidationError("Feedback search needs at least one model", "models")
    first = models[0]
    for k in all_feedbacks(first.n_inputs, first.n_states, limit):
        if all(works(model, k) for model in models):
            return k
    return None
