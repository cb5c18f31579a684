"""Dense linear algebra for the small Laplacian systems of a season"""
import math

import numpy as np
from scipy import linalg as sla
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

from . import constants
from .errors import SingularSystem

def off_diagonal_norm(a):
    return math.sqrt(max(0.0, float(np.sum(a * a) - np.sum(np.diag(a) ** 2))))

def _rotate(a, v, p, q):
    """Apply the Jacobi rotation that zeroes a[p, q] (a is updated in place)"""
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    if abs(theta) > 1e150:
        t = 1.0 / (2.0 * theta)
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q

def jacobi_eigh(matrix, tol=constants.JACOBI_TOLERANCE, max_sweeps=constants.JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Sweeps visit every (p, q) pair above the diagonal until the off-diagonal
    Frobenius norm falls below tol * max(1, ||matrix||_F).

    Returns (eigenvalues ascending, eigenvectors as columns).
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError('matrix must be square')
    if not np.allclose(a, a.T):
        raise ValueError('matrix must be symmetric')
    v = np.identity(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        if off_diagonal_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, v, p, q)
    else:
        if off_diagonal_norm(a) >= threshold:
            raise SingularSystem('Jacobi sweeps did not converge in {} sweeps'.format(max_sweeps))
    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind='stable')
    return eigenvalues[order], v[:, order]

def jacobi_eigenvalues(matrix, **kwargs):
    return jacobi_eigh(matrix, **kwargs)[0]

def connected_components(adjacency):
    """Number of connected components and per-node labels of a weighted graph"""
    n = adjacency.shape[0]
    if n == 0:
        return 0, np.zeros(0, dtype=int)
    graph = csr_matrix((np.asarray(adjacency) > 0).astype(int))
    count, labels = _csgraph_components(graph, directed=False)
    return int(count), labels

def solve_zero_sum(matrix, rhs, tol=constants.RESIDUAL_TOLERANCE):
    """Solve the singular Laplacian system M r = p subject to sum(r) = 0.

    The last equation is replaced by the normalization e^T r = 0, the usual
    Massey adjustment. The replaced matrix is factored by Cholesky when it is
    symmetric and by LU otherwise. Requires a connected graph; the residual
    of the original system is checked against tol * max(1, ||p||).
    """
    m = np.array(matrix, dtype=float)
    p = np.array(rhs, dtype=float)
    n = m.shape[0]
    if n == 0:
        return np.zeros(0)
    adjusted = m.copy()
    adjusted_rhs = p.copy()
    adjusted[-1, :] = 1.0
    adjusted_rhs[-1] = 0.0
    try:
        if np.allclose(adjusted, adjusted.T):
            r = sla.cho_solve(sla.cho_factor(adjusted), adjusted_rhs)
        else:
            r = sla.lu_solve(sla.lu_factor(adjusted, check_finite=True), adjusted_rhs)
    except (np.linalg.LinAlgError, sla.LinAlgError) as err:
        raise SingularSystem('Cannot factor the normal equations: {}'.format(err))
    if not np.all(np.isfinite(r)):
        raise SingularSystem('Normal equations are singular')
    residual = np.linalg.norm(m @ r - p)
    if residual > tol * max(1.0, float(np.linalg.norm(p))):
        raise SingularSystem('Residual {:.3e} exceeds tolerance'.format(residual))
    return r
