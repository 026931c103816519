"""Row assembly and CSV/JSON serialization for the command-line surface.

Every subcommand's output is a header plus homogeneous rows of plain Python
values (float/int/bool/str/None or lists of floats).  CSV renders floats
with 17 significant digits ('.' decimal separator, '\\n' line endings,
RFC-4180-style quoting); JSON keeps native doubles so a re-parse reproduces
the report exactly.  Row keys equal the CSV header names.
"""

from __future__ import annotations

import json

import numpy as np

from .correlation import CorrelationReport
from .gamespace import CommutatorAudit, OperatorSet, PayoffVariance
from .roundwaves import ComparisonReport, DensityGrid, DivergenceReport, PeakSet


def format_field(value) -> str:
    """One CSV field, before quoting."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, (list, tuple, np.ndarray)):
        return ",".join(format_field(v) for v in value)
    return str(value)


def _escape(field: str) -> str:
    if any(ch in field for ch in (",", '"', "\n")):
        return '"' + field.replace('"', '""') + '"'
    return field


def write_csv(header: list[str], rows: list[dict]) -> str:
    lines = [",".join(_escape(h) for h in header)]
    for row in rows:
        lines.append(",".join(_escape(format_field(row[h])) for h in header))
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def write_json(config: dict, rows: list[dict], audit: dict | None = None) -> str:
    payload = {"config": _jsonable(config), "rows": _jsonable(rows)}
    if audit is not None:
        payload["audit"] = _jsonable(audit)
    return json.dumps(payload, indent=2) + "\n"


def matrix_json(m: np.ndarray) -> dict:
    """Complex matrix as parallel nested lists of real and imaginary parts."""
    a = np.asarray(m, dtype=complex)
    return {"re": a.real.tolist(), "im": a.imag.tolist()}


OPERATOR_HEADER = ["matrix", "row", "col", "re", "im"]
OPERATOR_ORDER = ("a_plus", "a_minus", "number", "pi1", "pi2", "precorrelation")


def operator_rows(ops: OperatorSet) -> list[dict]:
    rows = []
    for name in OPERATOR_ORDER:
        m = getattr(ops, name)
        for i in range(m.shape[0]):
            for j in range(m.shape[1]):
                rows.append(
                    {
                        "matrix": name,
                        "row": i,
                        "col": j,
                        "re": float(m[i, j].real),
                        "im": float(m[i, j].imag),
                    }
                )
    return rows


AUDIT_HEADER = ["metric", "value"]


def audit_rows(audit: CommutatorAudit) -> list[dict]:
    rows = [
        {"metric": "ladder_trace_re", "value": float(audit.ladder_trace.real)},
        {"metric": "ladder_trace_im", "value": float(audit.ladder_trace.imag)},
    ]
    for name in sorted(audit.pattern_max_deviation):
        rows.append(
            {
                "metric": f"ladder_pattern_{name}_max_deviation",
                "value": audit.pattern_max_deviation[name],
            }
        )
    rows.extend(
        [
            {"metric": "payoff_interior_max_deviation", "value": audit.interior_max_deviation},
            {"metric": "payoff_sign", "value": audit.payoff_sign},
            {"metric": "zero_sector_re", "value": float(audit.zero_sector_value.real)},
            {"metric": "zero_sector_im", "value": float(audit.zero_sector_value.imag)},
        ]
    )
    return rows


def audit_detail(audit: CommutatorAudit) -> dict:
    return {
        "ladder_commutator": matrix_json(audit.ladder_commutator),
        "payoff_commutator": matrix_json(audit.payoff_commutator),
        "pattern_entry_deviation": {
            name: dev.tolist() for name, dev in sorted(audit.pattern_entry_deviation.items())
        },
    }


SPECTRUM_HEADER = [
    "index",
    "eigenvalue",
    "parity",
    "exp_pi1",
    "exp_pi2",
    "sigma1",
    "sigma2",
    "correlation",
    "pearson",
    "sign_class",
]


def spectrum_rows(report: CorrelationReport, rounds: int | None = None) -> list[dict]:
    rows = []
    for r in report.rows:
        row = {
            "index": r.index,
            "eigenvalue": r.eigenvalue,
            "parity": r.parity,
            "exp_pi1": r.exp_pi1,
            "exp_pi2": r.exp_pi2,
            "sigma1": r.sigma1,
            "sigma2": r.sigma2,
            "correlation": r.correlation,
            "pearson": r.pearson,
            "sign_class": r.sign_class,
        }
        if rounds is not None:
            row = {"rounds": rounds, **row}
        rows.append(row)
    return rows


VARIANCE_HEADER = ["rounds", "n", "player", "kappa", "value", "interior"]


def variance_rows(rounds: int, n: int, player: int, kappa: float, pv: PayoffVariance) -> list[dict]:
    return [
        {
            "rounds": rounds,
            "n": n,
            "player": player,
            "kappa": kappa,
            "value": pv.value,
            "interior": pv.interior,
        }
    ]


DENSITY_HEADER = ["xi", "psi", "density"]


def density_rows(grid: DensityGrid) -> list[dict]:
    return [
        {"xi": float(x), "psi": float(p), "density": float(d)}
        for x, p, d in zip(grid.xi, grid.psi, grid.density)
    ]


PEAKS_HEADER = ["n", "maxima", "classical_centers"]


def peaks_rows(ps: PeakSet) -> list[dict]:
    return [
        {
            "n": ps.n,
            "maxima": [float(x) for x in ps.maxima],
            "classical_centers": [float(x) for x in ps.classical_centers],
        }
    ]


CLASSICAL_HEADER = ["xi", "density"]


def classical_rows(xi: np.ndarray, density: np.ndarray) -> list[dict]:
    return [{"xi": float(x), "density": float(d)} for x, d in zip(xi, density)]


COMPARE_HEADER = [
    "n",
    "quantum_peaks",
    "classical_centers",
    "quantum_center_density",
    "classical_center_density",
    "quantum_minimum_deeper",
    "quantum_variance",
    "classical_variance",
    "outermost_quantum_peak",
    "outermost_classical_center",
]


def compare_rows(rep: ComparisonReport) -> list[dict]:
    return [
        {
            "n": rep.n,
            "quantum_peaks": [float(x) for x in rep.quantum_peaks],
            "classical_centers": [float(x) for x in rep.classical_centers],
            "quantum_center_density": rep.quantum_center_density,
            "classical_center_density": rep.classical_center_density,
            "quantum_minimum_deeper": rep.quantum_minimum_deeper,
            "quantum_variance": rep.quantum_variance,
            "classical_variance": rep.classical_variance,
            "outermost_quantum_peak": rep.outermost_quantum_peak,
            "outermost_classical_center": rep.outermost_classical_center,
        }
    ]


CORR_EIGEN_HEADER = ["xi", "re", "im", "abs"]


def correigen_rows(xi: np.ndarray, values: np.ndarray) -> list[dict]:
    return [
        {"xi": float(x), "re": float(v.real), "im": float(v.imag), "abs": float(abs(v))}
        for x, v in zip(xi, values)
    ]


DIVERGE_HEADER = [
    "kind",
    "classification",
    "linear_residual",
    "log_residual",
    "cutoffs",
    "integrals",
]


def diverge_rows(rep: DivergenceReport) -> list[dict]:
    return [
        {
            "kind": rep.kind,
            "classification": rep.classification,
            "linear_residual": rep.linear_residual,
            "log_residual": rep.log_residual,
            "cutoffs": [float(x) for x in rep.cutoffs],
            "integrals": [float(x) for x in rep.integrals],
        }
    ]
