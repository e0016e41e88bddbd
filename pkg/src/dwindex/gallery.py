"""Constructors for the polyhedral spaces with known or bounded indices.

All constructors return fully validated :class:`~dwindex.polytope.PolyhedralSpace`
objects.  The two-parameter hexagon and octagon families are genuine 2-d
spaces here; their 3-d variants are obtained through :func:`prism_space`.
"""

from __future__ import annotations

import numpy as np

from .errors import BadParameter
from .polytope import DEFAULT_TOL, PolyhedralSpace, build_space


def regular_polygon_space(n: int, tol: float = DEFAULT_TOL) -> PolyhedralSpace:
    """Regular 2n-gon with vertices (cos((j-1)pi/n), sin((j-1)pi/n)), j = 1..2n.

    n = 2 gives the square with vertices (+-1, 0), (0, +-1).
    """
    if int(n) != n or n < 2:
        raise BadParameter(f"polygon parameter must be an integer >= 2, got {n}")
    n = int(n)
    angles = np.arange(2 * n) * np.pi / n
    verts = np.column_stack([np.cos(angles), np.sin(angles)])
    return build_space(verts, tol=tol)


def prism_space(base: PolyhedralSpace, h: float, tol: float = DEFAULT_TOL) -> PolyhedralSpace:
    """Right prism over a 2-d base: base vertices lifted to heights +-h."""
    if base.dim != 2:
        raise BadParameter(f"prism base must be 2-dimensional, got dim {base.dim}")
    if not (np.isfinite(h) and h > 0):
        raise BadParameter(f"prism half-height must be positive, got {h}")
    top = np.column_stack([base.vertices, np.full(base.vertex_count, float(h))])
    bottom = np.column_stack([base.vertices, np.full(base.vertex_count, -float(h))])
    return build_space(np.vstack([top, bottom]), tol=tol)


def pyramid_prism_space(tol: float = DEFAULT_TOL) -> PolyhedralSpace:
    """Unit cube with a pyramid apex glued on the top and bottom faces:
    vertices +-(1,1,1), +-(-1,1,1), +-(-1,-1,1), +-(1,-1,1), +-(0,0,2)."""
    half = np.array(
        [(1, 1, 1), (-1, 1, 1), (-1, -1, 1), (1, -1, 1), (0, 0, 2)], dtype=float
    )
    return build_space(np.vstack([half, -half]), tol=tol)


def drum_space(n: int, tol: float = DEFAULT_TOL) -> PolyhedralSpace:
    """Prism over a regular 2n-gon at heights +-1 with apexes at (0,0,+-2)."""
    if int(n) != n or n < 3:
        raise BadParameter(f"drum parameter must be an integer >= 3, got {n}")
    n = int(n)
    angles = np.arange(2 * n) * np.pi / n
    ring = np.column_stack([np.cos(angles), np.sin(angles)])
    top = np.column_stack([ring, np.ones(2 * n)])
    bottom = np.column_stack([ring, -np.ones(2 * n)])
    apexes = np.array([(0.0, 0.0, 2.0), (0.0, 0.0, -2.0)])
    return build_space(np.vstack([top, bottom, apexes]), tol=tol)


def hexagon_gamma_space(gamma: float, tol: float = DEFAULT_TOL) -> PolyhedralSpace:
    """Hexagon with vertices +-(gamma, 1), +-(1, 0), +-(gamma, -1).

    Its norm is max(|y|, |x| + (1 - gamma)|y|).
    """
    if not (np.isfinite(gamma) and 0.0 < gamma < 1.0):
        raise BadParameter(f"gamma must lie in (0, 1), got {gamma}")
    half = np.array([(gamma, 1.0), (1.0, 0.0), (gamma, -1.0)])
    return build_space(np.vstack([half, -half]), tol=tol)


def octagon_xi_space(xi: float, tol: float = DEFAULT_TOL) -> PolyhedralSpace:
    """Octagon with vertices +-(1, xi), +-(1, -xi), +-(xi, 1), +-(xi, -1).

    Its norm is max(|x|, |y|, (|x| + |y|) / (1 + xi)).
    """
    if not (np.isfinite(xi) and 0.0 < xi < 1.0):
        raise BadParameter(f"xi must lie in (0, 1), got {xi}")
    half = np.array([(1.0, xi), (1.0, -xi), (xi, 1.0), (xi, -1.0)])
    return build_space(np.vstack([half, -half]), tol=tol)


def hexagon_gamma_norm(gamma: float, x, y) -> float:
    """Closed-form norm of the gamma-hexagon, for cross-checks."""
    return max(abs(y), abs(x) + (1.0 - gamma) * abs(y))


def octagon_xi_norm(xi: float, x, y) -> float:
    """Closed-form norm of the xi-octagon, for cross-checks."""
    return max(abs(x), abs(y), (abs(x) + abs(y)) / (1.0 + xi))
