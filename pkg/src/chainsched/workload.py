"""Problem instances: chains of unit-time multiprocessor tasks on M processors.

A chain is a tuple of per-task processor requirements; task j+1 of a chain
may only start after task j has finished.  A TaskSystem bundles N chains with
the processor count and the splitable/non-splitable execution mode.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from enum import Enum


class ChainClass(str, Enum):
    UNIFORM = "uniform"
    NON_INCREASING = "nonincreasing"
    NON_DECREASING = "nondecreasing"
    ARBITRARY = "arbitrary"


@dataclass(frozen=True)
class TaskSystem:
    """A scheduling problem instance.

    chains holds one tuple of processor requirements per application;
    requirements are integers in [1, processors].  splitable selects whether
    a task may receive its processors in integer pieces over several slots.
    """

    processors: int
    chains: tuple[tuple[int, ...], ...]
    splitable: bool

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(tuple(c) for c in self.chains))

    @property
    def total_work(self) -> int:
        return sum(sum(c) for c in self.chains)

    def reversed_chains(self) -> "TaskSystem":
        """Same system with every chain's task order reversed."""
        return TaskSystem(self.processors, tuple(c[::-1] for c in self.chains),
                          self.splitable)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_system(system: TaskSystem) -> ValidationReport:
    """Check all TaskSystem invariants; violations name chain index and rule."""
    v = []
    if system.processors < 1:
        v.append("processors: must be >= 1")
    if not system.chains:
        v.append("chains: at least one chain required")
    for i, chain in enumerate(system.chains):
        if len(chain) < 1:
            v.append(f"chain {i}: empty chain (length must be >= 1)")
            continue
        for j, p in enumerate(chain):
            if p < 1:
                v.append(f"chain {i} task {j}: requirement {p} below 1")
            elif p > system.processors:
                v.append(f"chain {i} task {j}: requirement {p} exceeds "
                         f"{system.processors} processors")
    return ValidationReport(tuple(v))


def classify_chain(tasks) -> ChainClass:
    """Most specific class of a chain; a constant chain is Uniform."""
    tasks = tuple(tasks)
    if all(p == tasks[0] for p in tasks):
        return ChainClass.UNIFORM
    if all(a >= b for a, b in zip(tasks, tasks[1:])):
        return ChainClass.NON_INCREASING
    if all(a <= b for a, b in zip(tasks, tasks[1:])):
        return ChainClass.NON_DECREASING
    return ChainClass.ARBITRARY


@dataclass(frozen=True)
class GeneratorConfig:
    """Seeded random-instance parameters.

    phase_variation engages a +/-variation window around the midpoint of
    [min_len, max_len]; at 0.0 lengths are drawn uniformly from the range
    itself.  Identical config (seed included) always yields the identical
    TaskSystem; the random source is Python's Mersenne Twister
    (random.Random) so fixtures stay portable across platforms.
    """

    seed: int
    num_chains: int
    processors: int
    chain_class: ChainClass
    min_len: int
    max_len: int
    min_req: int
    max_req: int
    phase_variation: float = 0.0
    splitable: bool = False


def _check_config(config: GeneratorConfig) -> None:
    if not (1 <= config.min_len <= config.max_len):
        raise ValueError("length range must satisfy 1 <= min_len <= max_len")
    if not (1 <= config.min_req <= config.max_req <= config.processors):
        raise ValueError("requirement range must satisfy "
                         "1 <= min_req <= max_req <= processors")
    if config.num_chains < 1:
        raise ValueError("num_chains must be >= 1")
    if not (0.0 <= config.phase_variation <= 1.0):
        raise ValueError("phase_variation must lie in [0, 1]")


def _draw_length(rng: random.Random, config: GeneratorConfig) -> int:
    v = config.phase_variation
    if v == 0.0:
        return rng.randint(config.min_len, config.max_len)
    base = (config.min_len + config.max_len) / 2
    lo = max(1, math.ceil(base * (1 - v)))
    hi = max(lo, math.floor(base * (1 + v)))
    return rng.randint(lo, hi)


def generate(config: GeneratorConfig) -> TaskSystem:
    """Generate a random TaskSystem of the requested chain class."""
    _check_config(config)
    rng = random.Random(config.seed)
    chains = []
    for _ in range(config.num_chains):
        length = _draw_length(rng, config)
        reqs = [rng.randint(config.min_req, config.max_req)
                for _ in range(length)]
        cls = config.chain_class
        if cls is ChainClass.UNIFORM:
            reqs = [reqs[0]] * length
        elif cls is ChainClass.NON_INCREASING:
            reqs.sort(reverse=True)
        elif cls is ChainClass.NON_DECREASING:
            reqs.sort()
        chains.append(tuple(reqs))
    return TaskSystem(config.processors, tuple(chains), config.splitable)


class InstanceFormatError(ValueError):
    """Raised when an instance document cannot be parsed."""


def write_system(system: TaskSystem) -> str:
    """Canonical instance document: processors, splitable, chains in order."""
    doc = {
        "processors": system.processors,
        "splitable": system.splitable,
        "chains": [list(c) for c in system.chains],
    }
    return json.dumps(doc, indent=2) + "\n"


def read_system(text: str) -> TaskSystem:
    """Parse an instance document; structural errors name the offending field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("top-level document must be an object")
    for field in ("processors", "splitable", "chains"):
        if field not in doc:
            raise InstanceFormatError(f"missing field: {field}")
    processors = doc["processors"]
    if not isinstance(processors, int) or isinstance(processors, bool):
        raise InstanceFormatError("field 'processors' must be an integer")
    splitable = doc["splitable"]
    if not isinstance(splitable, bool):
        raise InstanceFormatError("field 'splitable' must be a boolean")
    chains = doc["chains"]
    if not isinstance(chains, list):
        raise InstanceFormatError("field 'chains' must be a list of lists")
    parsed = []
    for i, chain in enumerate(chains):
        if not isinstance(chain, list):
            raise InstanceFormatError(f"field 'chains[{i}]' must be a list")
        for j, p in enumerate(chain):
            if not isinstance(p, int) or isinstance(p, bool):
                raise InstanceFormatError(
                    f"field 'chains[{i}][{j}]' must be an integer")
        parsed.append(tuple(chain))
    return TaskSystem(processors, tuple(parsed), splitable)
