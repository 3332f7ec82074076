"""JSON state files and report documents.

State files come in two shapes::

    {"kind": "ensemble", "m": 2, "n": 2,
     "members": [{"weight": 1.0, "coeffs": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}]}

    {"kind": "density", "m": 2, "n": 2, "matrix": [[[re, im], ...], ...]}

Complex numbers are ``[re, im]`` pairs. Errors name the JSON path of the
offending field (``$.members[1].weight``).
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Union

import numpy as np

from .bounds import BoundReport
from .errors import InvalidInputError, StateFormatError
from .generic import SamplerConfig, TrialSummary
from .linalg import ToleranceConfig
from .states import DensityMatrix, PureState, WeightedEnsemble

SCHEMA_VERSION = 1

State = Union[WeightedEnsemble, DensityMatrix]


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _positive_int(doc: dict, key: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise StateFormatError(f"$.{key}", f"expected a positive integer, got {value!r}")
    return value


def _complex_matrix(raw, rows: int, cols: int, path: str) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != rows:
        raise StateFormatError(path, f"expected a list of {rows} rows")
    out = np.empty((rows, cols), dtype=complex)
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != cols:
            raise StateFormatError(f"{path}[{i}]", f"expected a list of {cols} entries")
        for j, entry in enumerate(row):
            if not (isinstance(entry, list) and len(entry) == 2 and all(_is_number(x) for x in entry)):
                raise StateFormatError(f"{path}[{i}][{j}]", "expected a [re, im] pair of numbers")
            out[i, j] = complex(entry[0], entry[1])
    if not np.all(np.isfinite(out)):
        raise StateFormatError(path, "non-finite entry")
    return out


def _encode_matrix(M) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M)]


def parse_state(doc) -> State:
    """Build a validated state from an already-decoded JSON document."""
    if not isinstance(doc, dict):
        raise StateFormatError("$", "expected a JSON object")
    kind = doc.get("kind")
    m, n = _positive_int(doc, "m"), _positive_int(doc, "n")
    if kind == "ensemble":
        raw_members = doc.get("members")
        if not isinstance(raw_members, list) or not raw_members:
            raise StateFormatError("$.members", "expected a non-empty list")
        members = []
        for k, raw in enumerate(raw_members):
            path = f"$.members[{k}]"
            if not isinstance(raw, dict):
                raise StateFormatError(path, "expected an object")
            weight = raw.get("weight")
            if not _is_number(weight) or not weight > 0:
                raise StateFormatError(f"{path}.weight", f"expected a positive number, got {weight!r}")
            A = _complex_matrix(raw.get("coeffs"), m, n, f"{path}.coeffs")
            try:
                members.append((float(weight), PureState(m, n, A)))
            except InvalidInputError as exc:
                raise StateFormatError(f"{path}.coeffs", str(exc)) from None
        try:
            return WeightedEnsemble(m, n, tuple(members))
        except InvalidInputError as exc:
            raise StateFormatError("$.members", str(exc)) from None
    if kind == "density":
        mat = _complex_matrix(doc.get("matrix"), m * n, m * n, "$.matrix")
        try:
            return DensityMatrix(m, n, mat)
        except InvalidInputError as exc:
            raise StateFormatError("$.matrix", str(exc)) from None
    raise StateFormatError("$.kind", f"unknown kind {kind!r}; expected 'ensemble' or 'density'")


def parse_state_file(path) -> State:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError("$", f"malformed JSON: {exc}") from None
    return parse_state(doc)


def state_to_json(state: State) -> dict:
    if isinstance(state, WeightedEnsemble):
        return {
            "kind": "ensemble",
            "m": state.m,
            "n": state.n,
            "members": [{"weight": p, "coeffs": _encode_matrix(s.coeffs)} for p, s in state.members],
        }
    if isinstance(state, DensityMatrix):
        return {"kind": "density", "m": state.m, "n": state.n, "matrix": _encode_matrix(state.mat)}
    raise TypeError(f"cannot serialize {type(state).__name__}")


def write_state_file(state: State, path) -> None:
    Path(path).write_text(json.dumps(state_to_json(state)), encoding="utf-8")


def report_to_dict(report: BoundReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "bound_report",
        "m": report.m,
        "n": report.n,
        "r": report.r,
        "t": report.t,
        "rank_T1": report.rank_T1,
        "rank_T2": report.rank_T2,
        "dim_LA": report.dim_LA,
        "dim_LB": report.dim_LB,
        "lower_bound": report.lower_bound,
        "upper_bound": report.upper_bound,
        "exact": report.exact,
        "tolerance": report.tolerance.as_dict(),
        "member_schmidt_ranks": list(report.member_schmidt_ranks),
        "upper_source": report.upper_source,
    }


def report_from_dict(doc: dict) -> BoundReport:
    fields = {k: doc[k] for k in (
        "m", "n", "r", "t", "rank_T1", "rank_T2", "dim_LA", "dim_LB",
        "lower_bound", "upper_bound", "exact", "upper_source",
    )}
    return BoundReport(
        **fields,
        tolerance=ToleranceConfig(**doc["tolerance"]),
        member_schmidt_ranks=tuple(doc["member_schmidt_ranks"]),
    )


def summary_to_dict(summary: TrialSummary) -> dict:
    c = summary.config
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "trial_summary",
        "config": {"m": c.m, "n": c.n, "r": c.r, "trials": c.trials, "seed": c.seed},
        "successes": summary.successes,
        "failures": list(summary.failures),
        "min_observed_bound": summary.min_observed_bound,
        "full_rank_fraction": summary.full_rank_fraction,
        "required_bound": summary.required_bound,
        "bound_quotient": summary.bound_quotient,
        "tolerance": summary.tolerance.as_dict(),
        "rng_algorithm": summary.rng_algorithm,
    }


def summary_from_dict(doc: dict) -> TrialSummary:
    return TrialSummary(
        config=SamplerConfig(**doc["config"]),
        successes=doc["successes"],
        failures=tuple(doc["failures"]),
        min_observed_bound=doc["min_observed_bound"],
        full_rank_fraction=doc["full_rank_fraction"],
        required_bound=doc["required_bound"],
        bound_quotient=doc["bound_quotient"],
        tolerance=ToleranceConfig(**doc["tolerance"]),
        rng_algorithm=doc["rng_algorithm"],
    )


def load_report_schema() -> dict:
    """JSON Schema covering every document printed with ``--json``."""
    text = resources.files("schmidtnum").joinpath("schemas/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
