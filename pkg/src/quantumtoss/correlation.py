"""Spectrum of the symmetrized pay-off product and per-eigenstate statistics.

In finite mode the pre-correlation matrix couples only round states two
apart, so it splits into even and odd blocks; diagonalizing block-wise keeps
every eigenstate parity-pure, which is what forces both pay-off expectations
to vanish.  Periodic wrap couplings can break parity, so that mode is
diagonalized whole and labelled "mixed".
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import StructureError
from .gamespace import GameSpace, build_operators
from .numerics import as_matrix, as_state, expectation, hermitian_eigen

ZERO_BAND = 1e-10
PEARSON_MIN_SPREAD = 1e-12
_PATTERN_TOL = 1e-12


@dataclass(frozen=True)
class ParityBlocks:
    """Even/odd-index blocks of a |m-n| in {0, 2} coupled matrix."""

    even: np.ndarray
    odd: np.ndarray
    even_index: tuple[int, ...]
    odd_index: tuple[int, ...]


def parity_blocks(pc) -> ParityBlocks:
    """Split a matrix coupling only |m-n| in {0, 2} into parity blocks.

    Raises StructureError naming the first offending entry if any coupling
    outside that pattern exceeds the structural tolerance.
    """
    pc = as_matrix(pc)
    dim = pc.shape[0]
    tol = _PATTERN_TOL * max(1.0, float(np.max(np.abs(pc))))
    for m in range(dim):
        for n in range(dim):
            if abs(m - n) not in (0, 2) and abs(pc[m, n]) > tol:
                raise StructureError(
                    f"unexpected coupling at entry ({m}, {n}): {pc[m, n]!r}"
                )
    even_index = tuple(range(0, dim, 2))
    odd_index = tuple(range(1, dim, 2))
    even = pc[np.ix_(even_index, even_index)].copy()
    odd = pc[np.ix_(odd_index, odd_index)].copy()
    return ParityBlocks(even=even, odd=odd, even_index=even_index, odd_index=odd_index)


def correlation_value(state, pi1, pi2, pc) -> float:
    """<PC> - <pi1><pi2> in a unit state; real because PC is Hermitian."""
    pc = as_matrix(pc)
    state = as_state(state, pc.shape[0])
    mean_pc = expectation(state, pc).real
    e1 = expectation(state, pi1).real
    e2 = expectation(state, pi2).real
    return float(mean_pc - e1 * e2)


def classify_signs(eigenvalues) -> np.ndarray:
    """Map each eigenvalue to -1, 0 or +1 with a noise band around zero.

    The band is ZERO_BAND * max(1, |lambda|_max): far above eigensolver
    residuals, far below the smallest genuine nonzero eigenvalue.
    """
    lam = np.asarray(eigenvalues, dtype=float)
    band = ZERO_BAND * max(1.0, float(np.max(np.abs(lam))) if lam.size else 1.0)
    signs = np.zeros(lam.shape, dtype=int)
    signs[lam > band] = 1
    signs[lam < -band] = -1
    return signs


@dataclass(frozen=True, eq=False)
class CorrelationRow:
    """One pre-correlation eigenstate and its pay-off statistics."""

    index: int
    eigenvalue: float
    parity: str
    exp_pi1: float
    exp_pi2: float
    sigma1: float
    sigma2: float
    correlation: float
    pearson: float | None
    sign_class: int
    vector: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class CorrelationReport:
    """Eigenvalue-ascending rows for one game space."""

    gamespace: GameSpace
    rows: tuple[CorrelationRow, ...]

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([row.eigenvalue for row in self.rows])


def sign_classification(report: CorrelationReport) -> tuple[int, ...]:
    """Sign classes of the report's spectrum, in row order."""
    return tuple(int(s) for s in classify_signs(report.eigenvalues))


def correlation_spectrum(gs: GameSpace) -> CorrelationReport:
    """Diagonalize the pre-correlation operator and fill every row.

    Finite mode diagonalizes the parity blocks separately (eigenstates come
    out parity-pure, pay-off expectations vanish); periodic mode
    diagonalizes the full matrix and labels rows "mixed".
    """
    ops = build_operators(gs)
    pc = ops.precorrelation
    dim = gs.dim

    states: list[tuple[float, str, np.ndarray]] = []
    if gs.mode == "finite":
        blocks = parity_blocks(pc)
        for label, block, index in (
            ("even", blocks.even, blocks.even_index),
            ("odd", blocks.odd, blocks.odd_index),
        ):
            if block.shape[0] == 0:
                continue
            dec = hermitian_eigen(block)
            for k in range(block.shape[0]):
                vec = np.zeros(dim, dtype=complex)
                vec[list(index)] = dec.vectors[:, k]
                states.append((float(dec.eigenvalues[k]), label, vec))
    else:
        dec = hermitian_eigen(pc)
        for k in range(dim):
            states.append((float(dec.eigenvalues[k]), "mixed", dec.vectors[:, k]))

    states.sort(key=lambda item: item[0])
    eigenvalues = np.array([lam for lam, _, _ in states])
    signs = classify_signs(eigenvalues)

    rows = []
    for k, (lam, parity, vec) in enumerate(states):
        e1 = expectation(vec, ops.pi1).real
        e2 = expectation(vec, ops.pi2).real
        var1 = expectation(vec, ops.pi1 @ ops.pi1).real - e1 * e1
        var2 = expectation(vec, ops.pi2 @ ops.pi2).real - e2 * e2
        sigma1 = float(np.sqrt(max(var1, 0.0)))
        sigma2 = float(np.sqrt(max(var2, 0.0)))
        corr = float(expectation(vec, pc).real - e1 * e2)
        spread = sigma1 * sigma2
        pearson = corr / spread if spread > PEARSON_MIN_SPREAD else None
        rows.append(
            CorrelationRow(
                index=k,
                eigenvalue=lam,
                parity=parity,
                exp_pi1=float(e1),
                exp_pi2=float(e2),
                sigma1=sigma1,
                sigma2=sigma2,
                correlation=corr,
                pearson=pearson,
                sign_class=int(signs[k]),
                vector=vec,
            )
        )
    return CorrelationReport(gamespace=gs, rows=tuple(rows))
