"""Pure-numpy implementations of the hot training kernels.

Reference path; also serves as the fallback when numba is unavailable or
disabled via FUZZYVERB_NUMBA=0.  Signatures must stay in sync with
_kernels_numba.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"

_TINY = 1e-300


def firing(X, M, S, mask):
    """Product-of-Gaussians firing strengths.

    X: (n, p) inputs; M, S: (R, p) Gaussian cores/spreads; mask: (R, p)
    booleans marking which attributes a rule's premise actually uses.
    Returns (n, R).
    """
    S_safe = np.where(mask, S, 1.0)
    Z = (X[:, None, :] - M[None, :, :]) ** 2 / (2.0 * S_safe**2)
    Z = np.where(mask[None, :, :], Z, 0.0)
    return np.exp(-Z.sum(axis=2))


def premise_grad(X, t, M, S, mask, W, B, A):
    """Gradient of the mean squared error with respect to premise parameters.

    The model output is y = sum_r G_r * A_r * C_r / sum_r G_r * A_r with
    C_r = X @ W_r + B_r.  Rows whose denominator underflows to zero
    contribute nothing to the gradient (the inference fallback value is
    piecewise constant there).  Returns (dM, dS), each (R, p).
    """
    n = X.shape[0]
    S_safe = np.where(mask, S, 1.0)
    G = firing(X, M, S, mask)
    C = X @ W.T + B[None, :]
    GA = G * A[None, :]
    D = GA.sum(axis=1)
    ok = D > _TINY
    D_safe = np.where(ok, D, 1.0)
    y = np.where(ok, (GA * C).sum(axis=1) / D_safe, C.mean(axis=1))
    err = np.where(ok, y - t, 0.0)
    # e * A_r * (C_r - y) * G_r / D, per sample and rule
    core = (err / D_safe)[:, None] * A[None, :] * (C - y[:, None]) * G
    diff = (X[:, None, :] - M[None, :, :]) * mask[None, :, :]
    dM = (2.0 / n) * np.einsum("nr,nrj->rj", core, diff / S_safe**2)
    dS = (2.0 / n) * np.einsum("nr,nrj->rj", core, diff**2 / S_safe**3)
    return dM, dS


def fcm(X, U0, fuzzifier, max_iter, tol):
    """Fuzzy c-means; returns (centers (R, p), memberships (n, R)).

    Stops when the maximum centroid shift drops below tol or after
    max_iter iterations.
    """
    U = U0
    exponent = 2.0 / (fuzzifier - 1.0)
    prev = None
    for _ in range(max_iter):
        Wm = U**fuzzifier
        centers = (Wm.T @ X) / Wm.sum(axis=0)[:, None]
        if prev is not None and np.abs(centers - prev).max() < tol:
            prev = centers
            break
        prev = centers
        d2 = ((X[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        d2 = np.maximum(d2, 1e-12)
        ratio = d2 ** (exponent / 2.0)
        U = 1.0 / (ratio * (1.0 / ratio).sum(axis=1, keepdims=True))
    return prev, U
