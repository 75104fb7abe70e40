"""Fredholm-determinant oracle for the soft-edge laws.

Nyström discretization with Gauss–Legendre nodes, independent of the
Painlevé route used by the library. Prints the values frozen in the tests.
"""
import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import brentq
from scipy.special import airy

NODES = 120
LENGTH = 18.0


def airy_kernel_matrix(s):
    t, w = leggauss(NODES)
    x = s + (t + 1) * LENGTH / 2
    w = w * LENGTH / 2
    ai, aip, _, _ = airy(x)
    X, Y = np.meshgrid(x, x, indexing="ij")
    with np.errstate(divide="ignore", invalid="ignore"):
        K = (np.outer(ai, aip) - np.outer(aip, ai)) / (X - Y)
    K[np.diag_indices(NODES)] = aip**2 - x * ai**2
    sw = np.sqrt(w)
    return sw[:, None] * K * sw[None, :]


def gue_gap_coefficients(s, count):
    """E2(s, k), k < count: coefficients of det(I - (1 - z) K) in powers of z."""
    mu = np.linalg.eigvalsh(airy_kernel_matrix(s))
    poly = np.array([1.0])
    for m in mu:
        poly = np.convolve(poly, [1.0 - m, m])[: count]
    return poly


def F2(s, m=1):
    return float(np.sum(gue_gap_coefficients(s, m)))


def D2(s, lam):
    return float(np.prod(1.0 - lam * np.linalg.eigvalsh(airy_kernel_matrix(s))))


def F1(s):
    t, w = leggauss(NODES)
    x = (t + 1) * LENGTH / 2
    w = w * LENGTH / 2
    sw = np.sqrt(w)
    A = sw[:, None] * airy(x[:, None] + x[None, :] + s)[0] * sw[None, :]
    return float(np.linalg.det(np.eye(NODES) - A))


if __name__ == "__main__":
    print(f"d2(-2, 1)   = {D2(-2.0, 1.0):.15f}")
    print(f"d2(-2, 0.5) = {D2(-2.0, 0.5):.15f}")
    print(f"d1(-1, 1)   = {F1(-1.0) ** 2:.15f}")
    print(f"F1(-1)      = {F1(-1.0):.15f}")
    q = brentq(lambda s: F1(s) - 0.95, -2.0, 3.0, xtol=1e-13)
    print(f"F1 quantile 0.95 = {q:.12f}")
    for s0 in (-4.0, -2.0, 0.0):
        # q² = -(log F2)'' by a five-point difference.
        h = 0.02
        L = [np.log(F2(s0 + k * h)) for k in (-2, -1, 0, 1, 2)]
        q2 = -(-L[0] + 16 * L[1] - 30 * L[2] + 16 * L[3] - L[4]) / (12 * h * h)
        print(f"q(x={s0}) = {np.sqrt(q2):.12f}")
    for s in (-6.0, -4.0, -3.0, -2.0, -1.0, 0.0, 1.0):
        print(f"F2 s={s:5.1f}", " ".join(f"{F2(s, m):.15e}" for m in range(1, 6)))
