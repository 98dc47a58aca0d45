"""Experiment driver: perturbation stability runs, witness experiments,
and the bounds table.

Reports are deterministic: for fixed inputs and seed the report body is
byte-identical across runs and platforms (trial streams derive from
(seed, trial index) via `prng.derive_seed`, dict key order is fixed, and
wall time lives outside the body).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import dieudonne, kernel, minimal, newton, relation
from .dieudonne import DieudonneModule
from .newton import NewtonPolygon
from .prng import derive_seed
from .wittring import WittRing, make_ring

REPORT_SCHEMA = "dvg-report/1"


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    polygon: NewtonPolygon
    differs: bool


@dataclass(frozen=True)
class ExperimentReport:
    subject: dict
    level: int
    trials: int
    seed: int
    subject_polygon: NewtonPolygon
    outcomes: tuple[TrialOutcome, ...]
    verdict: str
    wall_time: float
    witness: dict | None = None

    def body(self) -> dict:
        data = {
            "subject": self.subject,
            "level": self.level,
            "trials": self.trials,
            "seed": self.seed,
            "subject_polygon": newton.polygon_to_json(self.subject_polygon),
            "outcomes": [
                {
                    "trial": o.trial,
                    "polygon": newton.polygon_to_json(o.polygon),
                    "differs": o.differs,
                }
                for o in self.outcomes
            ],
            "verdict": self.verdict,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return data

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "body": self.body(),
            "wall_time_s": self.wall_time,
        }


ALL_STABLE = "all-stable"
COUNTEREXAMPLE = "counterexample-found"


def _subject_info(module: DieudonneModule, provenance: str) -> dict:
    params = module.ring.params
    return {
        "provenance": provenance,
        "c": module.codim,
        "d": module.dim,
        "p": params.p,
        "deg": params.deg,
        "precision": params.precision,
        "rank": module.rank,
    }


def verify_cutoff_upper(module: DieudonneModule, level: int, trials: int,
                        seed: int, inject=None,
                        provenance: str = "input") -> ExperimentReport:
    """Perturb `trials` times at the given level and compare polygons.

    Each trial perturbs with the stream derived from (seed, trial index).
    When `inject` is given (a unit matrix G congruent to the identity),
    trial 0 applies it instead of a random perturbation; witness
    experiments use this to exhibit an explicit polygon change.
    """
    start = time.perf_counter()
    base_np = newton.np_of_module(module)
    outcomes = []
    for t in range(trials):
        if t == 0 and inject is not None:
            perturbed = dieudonne.make_module(
                module.ring, kernel.mat_mul(module.ring, inject, module.phi))
        else:
            perturbed, _ = dieudonne.perturb(module, level, derive_seed(seed, t))
        poly = newton.np_of_module(perturbed)
        outcomes.append(TrialOutcome(trial=t, polygon=poly,
                                     differs=poly != base_np))
    verdict = COUNTEREXAMPLE if any(o.differs for o in outcomes) else ALL_STABLE
    return ExperimentReport(
        subject=_subject_info(module, provenance),
        level=level, trials=trials, seed=seed,
        subject_polygon=base_np, outcomes=tuple(outcomes), verdict=verdict,
        wall_time=time.perf_counter() - start,
    )


def default_precision(c: int, d: int, deg: int = 1) -> int:
    """Smallest exact-safe precision with margin: deg*d + cutoff + 4."""
    j = newton.bounds(c, d).isogeny_cutoff if c >= 1 and d >= 1 else 0
    return deg * d + j + 4


def witness_lower(c: int, d: int, p: int, deg: int = 1, trials: int = 8,
                  seed: int = 0, precision: int | None = None) -> ExperimentReport:
    """Exhibit the explicit congruent pair whose polygons differ.

    Builds the witness pair, checks the congruence at level cutoff - 1,
    computes every polygon twice (linearization and annihilating relation)
    and runs a perturbation experiment on the base module with the exact
    twist injected as trial 0; the expected verdict is counterexample-found.
    Additional random trials at level cutoff - 1 are observational.
    """
    if precision is None:
        precision = default_precision(c, d, deg)
    ring = make_ring(p, deg, precision)
    pair = minimal.build_traverso_witness(ring, c, d)
    j1 = pair.congruence_level
    r = c + d
    for i in range(r):
        for j in range(r):
            diff = pair.base.phi[i][j] - pair.twisted.phi[i][j]
            if diff.valuation() < j1:
                raise AssertionError("witness matrices not congruent at level")
    base_lin = newton.np_of_module(pair.base)
    twisted_lin = newton.np_of_module(pair.twisted)
    base_rel = relation.relation_coefficients(
        pair.base, relation.find_cyclic_vector(pair.base, budget=64)).polygon
    twisted_rel = relation.relation_coefficients(
        pair.twisted, relation.find_cyclic_vector(pair.twisted, budget=64)).polygon
    if base_lin != base_rel or twisted_lin != twisted_rel:
        raise AssertionError("polygon double-entry mismatch")
    if base_lin != pair.expected_base_np or twisted_lin != pair.expected_twisted_np:
        raise AssertionError("witness polygons do not match the slope formulas")
    if base_lin == twisted_lin:
        raise AssertionError("witness polygons unexpectedly equal")
    # the explicit twist: G = I + p^(j-1) E_(0,c), so that G . base = twisted
    one, zero = ring.one(), ring.zero()
    g = [[one if i == k else zero for k in range(r)] for i in range(r)]
    g[0][c] = ring.from_int(p ** j1)
    report = verify_cutoff_upper(pair.base, level=j1, trials=max(trials, 1),
                                 seed=seed, inject=tuple(tuple(row) for row in g),
                                 provenance="traverso-witness-base")
    witness_data = {
        "congruence_level": j1,
        "base_polygon_linearized": newton.polygon_to_json(base_lin),
        "base_polygon_relation": newton.polygon_to_json(base_rel),
        "twisted_polygon_linearized": newton.polygon_to_json(twisted_lin),
        "twisted_polygon_relation": newton.polygon_to_json(twisted_rel),
    }
    if not report.outcomes[0].differs:
        raise AssertionError("injected twist did not change the polygon")
    return ExperimentReport(
        subject=report.subject, level=report.level, trials=report.trials,
        seed=report.seed, subject_polygon=report.subject_polygon,
        outcomes=report.outcomes, verdict=report.verdict,
        wall_time=report.wall_time, witness=witness_data,
    )


@dataclass(frozen=True)
class BoundsTable:
    rows: tuple[newton.CutoffBounds, ...]

    def to_json(self) -> dict:
        return {
            "rows": [
                {
                    "c": b.c,
                    "d": b.d,
                    "j": b.isogeny_cutoff,
                    "n_bound": b.isomorphism_bound,
                    "witness_available": b.isogeny_cutoff >= 2,
                }
                for b in self.rows
            ]
        }


def run_table(c_max: int, d_max: int) -> BoundsTable:
    if c_max < 1 or d_max < 1:
        from .errors import MalformedInput
        raise MalformedInput("bounds must be >= 1")
    rows = tuple(newton.bounds(c, d)
                 for c in range(1, c_max + 1) for d in range(1, d_max + 1))
    return BoundsTable(rows=rows)


def report_to_text(report: ExperimentReport) -> str:
    return json.dumps(report.to_json(), indent=2)
