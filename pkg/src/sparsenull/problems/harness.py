"""Randomized verification that a reduction is exact.

For every sampled source instance x the harness checks, on random target
solutions y:

* (2) the back-mapped solution is feasible for x;
* (3) its source objective equals the target objective of y;
* (4) the exhaustive optimum of x is at least that of the mapped instance.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    objective: Callable[[Any, Any], int]
    feasible: Callable[[Any, Any], bool]
    optimum: Callable[[Any], Any]            # exhaustive optimal solution
    sample: Callable[[Any, random.Random], Any]  # random feasible solution

    def optimal_value(self, inst) -> int:
        return self.objective(inst, self.optimum(inst))


@dataclass(frozen=True)
class ReductionWitness:
    """A forward map t1 with its solution back-map t2.

    ``forward(x)`` returns ``(t1(x), back)`` with ``back(y) = t2(x, y)``; a
    ``None`` target marks a degenerate instance whose only solution is empty.
    """

    name: str
    source: ProblemSpec
    target: ProblemSpec
    forward: Callable[[Any], tuple]


@dataclass(frozen=True)
class Violation:
    trial: int
    item: int
    detail: str
    instance: Any


@dataclass
class ReductionReport:
    name: str
    trials: int = 0
    checked_solutions: int = 0
    violations: list = field(default_factory=list)
    optima: list = field(default_factory=list)   # (source optimum, target optimum)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def optima_equal(self) -> bool:
        return all(a == b for a, b in self.optima)


def verify_exact_reduction(reduction: ReductionWitness, sampler: Callable[[random.Random], Any],
                           trials: int, seed: int = 0,
                           solutions_per_trial: int = 4) -> ReductionReport:
    rng = random.Random(seed)
    src, tgt = reduction.source, reduction.target
    report = ReductionReport(reduction.name)
    for t in range(trials):
        x = sampler(rng)
        report.trials += 1
        target, back = reduction.forward(x)
        if target is None:
            sol = back(None)
            opt_src = src.optimal_value(x)
            report.optima.append((opt_src, 0))
            if not src.feasible(x, sol):
                report.violations.append(Violation(t, 2, "degenerate back-map infeasible", x))
            elif src.objective(x, sol) != 0 or opt_src != 0:
                report.violations.append(Violation(t, 3, "degenerate case has nonzero objective", x))
            continue
        y_opt = tgt.optimum(target)
        candidates = [y_opt] + [tgt.sample(target, rng) for _ in range(solutions_per_trial)]
        for y in candidates:
            report.checked_solutions += 1
            mapped = back(y)
            if not src.feasible(x, mapped):
                report.violations.append(Violation(t, 2, f"back-mapped solution infeasible: {mapped}", x))
                continue
            a, b = src.objective(x, mapped), tgt.objective(target, y)
            if a != b:
                report.violations.append(Violation(t, 3, f"source objective {a} != target objective {b}", x))
        opt_src, opt_tgt = src.optimal_value(x), tgt.objective(target, y_opt)
        report.optima.append((opt_src, opt_tgt))
        if opt_src < opt_tgt:
            report.violations.append(Violation(t, 4, f"source optimum {opt_src} < target optimum {opt_tgt}", x))
    return report
