"""
Tridiagonal matrix algorithm
"""
import numpy as np


def thomas_solve(lower: np.ndarray, diag: np.ndarray, upper: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solves A x = rhs for tridiagonal A without pivoting.

    Parameters:
        lower (ndarray) : sub-diagonal, lower[i] multiplies x[i-1]; lower[0] is ignored
        diag (ndarray) : diagonal entries
        upper (ndarray) : super-diagonal, upper[i] multiplies x[i+1]; upper[-1] is ignored
        rhs (ndarray) : right hand side

    Returns:
        x (ndarray) : solution
    """
    n = len(diag)
    if not (len(lower) == len(upper) == len(rhs) == n):
        raise ValueError("lower, diag, upper and rhs must have the same length")
    if n == 0:
        return np.zeros(0)

    # plain floats keep the sequential sweeps fast
    a, b, c, d = lower.tolist(), diag.tolist(), upper.tolist(), rhs.tolist()
    c_prime = [0.0] * n
    d_prime = [0.0] * n

    c_prime[0] = c[0] / b[0]
    d_prime[0] = d[0] / b[0]
    for i in range(1, n):
        denom = b[i] - a[i] * c_prime[i - 1]
        c_prime[i] = c[i] / denom
        d_prime[i] = (d[i] - a[i] * d_prime[i - 1]) / denom

    x = [0.0] * n
    x[-1] = d_prime[-1]
    for i in range(n - 2, -1, -1):
        x[i] = d_prime[i] - c_prime[i] * x[i + 1]
    return np.array(x)
