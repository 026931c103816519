"""Independent reference computations used only by the tests.

The eigenvalue oracle goes through the characteristic polynomial
(Faddeev-LeVerrier) and a derivative-chain bisection root finder, with
inverse iteration for eigenvectors; it shares no code with the package's
Jacobi solver.  Intended for dimension <= 4 with (at most doubly)
degenerate spectra.
"""

import numpy as np


def char_poly(m):
    """Coefficients of det(lambda I - M), descending powers, real parts.

    Faddeev-LeVerrier: A_1 = M, c_1 = -tr A_1,
    A_k = M (A_{k-1} + c_{k-1} I), c_k = -tr(A_k) / k.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    coeffs = [1.0]
    a = m.copy()
    c = -np.trace(a)
    coeffs.append(c)
    for k in range(2, n + 1):
        a = m @ (a + c * np.eye(n))
        c = -np.trace(a) / k
        coeffs.append(c)
    out = []
    for c in coeffs:
        assert abs(complex(c).imag) < 1e-9 * (1 + abs(c))
        out.append(float(complex(c).real))
    return out


def poly_eval(coeffs, x):
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_derivative(coeffs):
    deg = len(coeffs) - 1
    return [c * (deg - i) for i, c in enumerate(coeffs[:-1])]


def _bisect_poly(coeffs, lo, hi):
    flo = poly_eval(coeffs, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = poly_eval(coeffs, mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def all_real_roots(coeffs):
    """All roots of a polynomial known to have only real roots, ascending.

    Brackets come from the recursively computed critical points plus the
    Cauchy bound.  A critical point where the polynomial itself (nearly)
    vanishes is a double root.
    """
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [-coeffs[1] / coeffs[0]]
    crit = sorted(all_real_roots(poly_derivative(coeffs)))
    bound = 1.0 + max(abs(c / coeffs[0]) for c in coeffs[1:])
    pts = [-bound] + crit + [bound]
    scale = max(1.0, max(abs(c) for c in coeffs))
    roots = []
    for c in crit:
        if abs(poly_eval(coeffs, c)) <= 1e-7 * scale:
            roots.extend([c, c])
    for a, b in zip(pts, pts[1:]):
        fa = poly_eval(coeffs, a)
        fb = poly_eval(coeffs, b)
        if abs(fa) <= 1e-7 * scale or abs(fb) <= 1e-7 * scale:
            continue  # a double root sits on this endpoint
        if (fa > 0) != (fb > 0):
            roots.append(_bisect_poly(coeffs, a, b))
    roots.sort()
    assert len(roots) == deg, f"found {len(roots)} of {deg} roots"
    return roots


def eigenvalues_oracle(m):
    """Ascending eigenvalues of a small Hermitian matrix via its char poly."""
    return np.array(all_real_roots(char_poly(m)))


def eigenvector_oracle(m, eigenvalue):
    """Unit eigenvector by shifted inverse iteration (simple eigenvalues)."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    shift = eigenvalue + 1e-9 * (1.0 + abs(eigenvalue))
    vec = np.ones(n, dtype=complex) / np.sqrt(n)
    for _ in range(3):
        vec = np.linalg.solve(m - shift * np.eye(n), vec)
        vec = vec / np.linalg.norm(vec)
    return vec


def scan_density_maxima(density, lo, hi, step=1e-4):
    """Local maxima of a sampled function with parabolic refinement.

    A crest sampled symmetrically yields two exactly equal neighbours, so
    the left-biased comparison (strict against the left, non-strict against
    the right) flags each plateau exactly once.
    """
    samples = int(round((hi - lo) / step)) + 1
    xs = np.linspace(lo, hi, samples)
    ys = density(xs)
    inner = (ys[1:-1] > ys[:-2]) & (ys[1:-1] >= ys[2:])
    out = []
    for i in np.nonzero(inner)[0] + 1:
        denom = ys[i - 1] - 2.0 * ys[i] + ys[i + 1]
        offset = 0.5 * (ys[i - 1] - ys[i + 1]) / denom if denom != 0 else 0.0
        out.append(xs[i] + offset * (xs[1] - xs[0]))
    return np.array(out)
