"""Numba-compiled training kernels; same contracts as _kernels_numpy."""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND = "numba"

_TINY = 1e-300


@njit(cache=True)
def firing(X, M, S, mask):
    n, p = X.shape
    R = M.shape[0]
    G = np.empty((n, R))
    for i in range(n):
        for r in range(R):
            z = 0.0
            for j in range(p):
                if mask[r, j]:
                    d = X[i, j] - M[r, j]
                    z += d * d / (2.0 * S[r, j] * S[r, j])
            G[i, r] = np.exp(-z)
    return G


@njit(cache=True)
def premise_grad(X, t, M, S, mask, W, B, A):
    n, p = X.shape
    R = M.shape[0]
    G = firing(X, M, S, mask)
    dM = np.zeros((R, p))
    dS = np.zeros((R, p))
    C = np.empty(R)
    for i in range(n):
        den = 0.0
        num = 0.0
        for r in range(R):
            c = B[r]
            for j in range(p):
                c += W[r, j] * X[i, j]
            C[r] = c
            ga = G[i, r] * A[r]
            den += ga
            num += ga * c
        if den <= _TINY:
            continue
        y = num / den
        e = y - t[i]
        for r in range(R):
            core = e * A[r] * (C[r] - y) * G[i, r] / den
            for j in range(p):
                if mask[r, j]:
                    d = X[i, j] - M[r, j]
                    s2 = S[r, j] * S[r, j]
                    dM[r, j] += core * d / s2
                    dS[r, j] += core * d * d / (s2 * S[r, j])
    scale = 2.0 / n
    for r in range(R):
        for j in range(p):
            dM[r, j] *= scale
            dS[r, j] *= scale
    return dM, dS


@njit(cache=True)
def fcm(X, U0, fuzzifier, max_iter, tol):
    n, p = X.shape
    R = U0.shape[1]
    U = U0.copy()
    exponent = 1.0 / (fuzzifier - 1.0)
    centers = np.zeros((R, p))
    prev = np.zeros((R, p))
    have_prev = False
    for _ in range(max_iter):
        wsum = np.zeros(R)
        centers = np.zeros((R, p))
        for i in range(n):
            for r in range(R):
                u = U[i, r]
                w = u * u if fuzzifier == 2.0 else u**fuzzifier
                wsum[r] += w
                for j in range(p):
                    centers[r, j] += w * X[i, j]
        for r in range(R):
            for j in range(p):
                centers[r, j] /= wsum[r]
        if have_prev:
            shift = 0.0
            for r in range(R):
                for j in range(p):
                    s = abs(centers[r, j] - prev[r, j])
                    if s > shift:
                        shift = s
            if shift < tol:
                break
        prev = centers.copy()
        have_prev = True
        pw = np.empty(R)
        for i in range(n):
            total = 0.0
            for r in range(R):
                acc = 0.0
                for j in range(p):
                    d = X[i, j] - centers[r, j]
                    acc += d * d
                d2 = max(acc, 1e-12)
                w = 1.0 / d2 if exponent == 1.0 else d2**-exponent
                pw[r] = w
                total += w
            for r in range(R):
                U[i, r] = pw[r] / total
    return centers, U
