"""Finite-dimensional real polyhedral normed spaces.

A space is described by the extreme points of its unit ball (``vertices``,
a symmetric finite set spanning R^d).  Facets of the ball are enumerated by
brute force; the supporting functional of each facet is exactly an extreme
point of the dual unit ball, so norms, dual norms and supporting-functional
sets all reduce to finite maxima over the two vertex lists.

Points and functionals are plain 1-d ``float`` numpy arrays of length
``dim``; the pairing ``f(x)`` is the dot product.  Spaces are immutable
after :func:`build_space` and every operation here is pure.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import Degenerate, DimensionMismatch, NonSymmetric, NotExtreme, NotUnitNorm

DEFAULT_TOL = 1e-9
#: max-coordinate distance below which two facet functionals are merged
DEDUP_TOL = 1e-7


@dataclass(frozen=True)
class Facet:
    """One facet of the unit ball.

    ``functional`` is the supporting functional of the facet (dual norm 1,
    value 1 on the facet); ``vertex_ids`` indexes the vertices lying on it.
    """

    functional: np.ndarray
    vertex_ids: tuple[int, ...]


@dataclass(frozen=True)
class SupportSet:
    """Extreme supporting functionals at a unit-norm point.

    The full set of supporting functionals at ``base_point`` is the convex
    hull of ``functionals``; each entry attains 1 at the base point and has
    dual norm 1.
    """

    base_point: np.ndarray
    functionals: tuple[np.ndarray, ...]
    facet_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.functionals)


@dataclass(frozen=True)
class ExtremePairSet:
    """All (vertex_id, facet_id) pairs with the facet functional equal to 1
    at the vertex; the finite skeleton over which radii are maximized."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class PolyhedralSpace:
    """A polyhedral space: unit-ball vertices plus the derived facet data.

    Instances are produced by :func:`build_space` and are immutable; the
    arrays are marked read-only so they can be shared across threads.
    """

    dim: int
    vertices: np.ndarray
    facets: tuple[Facet, ...]
    tol: float
    functionals: np.ndarray = field(repr=False)
    incidence: np.ndarray = field(repr=False)
    pair_vertices: np.ndarray = field(repr=False)
    pair_facets: np.ndarray = field(repr=False)
    vertex_negation: np.ndarray = field(repr=False)
    facet_negation: np.ndarray = field(repr=False)
    rep_vertex_ids: tuple[int, ...] = field(repr=False)
    rep_facet_ids: tuple[int, ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.vertices.shape[0]

    @property
    def facet_count(self) -> int:
        return len(self.facets)


def _find_negation(points: np.ndarray, tol: float) -> np.ndarray:
    """Index of -p for each row p, or -1 where the negation is missing."""
    n = points.shape[0]
    out = np.full(n, -1, dtype=int)
    for i in range(n):
        dist = np.abs(points + points[i]).max(axis=1)
        j = int(np.argmin(dist))
        if dist[j] <= tol:
            out[i] = j
    return out


def _enumerate_facets(vertices: np.ndarray, tol: float) -> list[np.ndarray]:
    """Supporting functionals of all facets, by brute force.

    Every d-subset of vertices determines at most one hyperplane f(.) = 1;
    the hyperplane is kept when the whole vertex set lies on its inner
    side.  Duplicates (the same facet reached through different subsets)
    are merged by max-coordinate distance.
    """
    n, d = vertices.shape
    ones = np.ones(d)
    kept: list[np.ndarray] = []
    for subset in itertools.combinations(range(n), d):
        m = vertices[list(subset)]
        if np.linalg.cond(m) > 1e10:
            continue
        f = np.linalg.solve(m, ones)
        if not np.all(np.isfinite(f)):
            continue
        if np.max(vertices @ f) > 1.0 + tol:
            continue
        for g in kept:
            if np.abs(f - g).max() < DEDUP_TOL:
                break
        else:
            kept.append(f)
    return kept


def build_space(vertices, tol: float = DEFAULT_TOL) -> PolyhedralSpace:
    """Build a polyhedral space from the extreme points of its unit ball.

    The vertex list must be symmetric (closed under negation), span R^d,
    contain at least 2d points and consist of mutually extreme points.
    Facets are enumerated exhaustively and validated; the resulting space
    evaluates its norm as the maximum of the facet functionals.

    Raises :class:`NonSymmetric`, :class:`Degenerate` or
    :class:`NotExtreme` when the input violates those requirements.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    v = np.array(vertices, dtype=float)
    if v.ndim != 2:
        raise Degenerate("vertices must be a 2-d array of shape (count, dim)")
    n, d = v.shape
    if d < 2:
        raise Degenerate(f"dimension must be >= 2, got {d}")
    if not np.all(np.isfinite(v)):
        raise Degenerate("vertices must have finite coordinates")
    if n < 2 * d:
        raise Degenerate(f"need at least {2 * d} vertices in dimension {d}, got {n}")

    negation = _find_negation(v, tol)
    if np.any(negation < 0):
        missing = int(np.nonzero(negation < 0)[0][0])
        raise NonSymmetric(f"vertex {missing} has no negation in the list")

    for i in range(n):
        dist = np.abs(v - v[i]).max(axis=1)
        dist[i] = np.inf
        if dist.min() <= tol:
            raise NotExtreme(f"vertex {i} appears more than once")

    if np.linalg.matrix_rank(v) < d:
        raise Degenerate("vertices do not span the ambient space")

    functionals = _enumerate_facets(v, tol)
    if not functionals:
        raise Degenerate("no supporting hyperplanes found")
    fmat = np.array(functionals)

    vals = v @ fmat.T
    maxvals = vals.max(axis=1)
    if np.any(maxvals < 1.0 - tol):
        inside = int(np.nonzero(maxvals < 1.0 - tol)[0][0])
        raise NotExtreme(f"vertex {inside} lies strictly inside the hull of the others")

    incidence = vals >= 1.0 - tol
    for i in range(n):
        inc = fmat[incidence[i]]
        if inc.shape[0] < d or np.linalg.matrix_rank(inc) < d:
            raise NotExtreme(
                f"vertex {i} is on the boundary but not extreme "
                f"(incident facet functionals do not span)"
            )

    facet_negation = _find_negation(fmat, DEDUP_TOL)
    if np.any(facet_negation < 0):
        raise Degenerate("facet list is not closed under negation")

    facets = []
    for j, f in enumerate(functionals):
        ids = tuple(int(i) for i in np.nonzero(incidence[:, j])[0])
        span = v[list(ids)] - v[ids[0]]
        if np.linalg.matrix_rank(span) != d - 1:
            raise Degenerate(f"facet {j} does not have affine dimension {d - 1}")
        f = f.copy()
        f.setflags(write=False)
        facets.append(Facet(functional=f, vertex_ids=ids))

    pair_v, pair_f = np.nonzero(incidence)
    rep_vertex_ids = tuple(int(i) for i in range(n) if i <= negation[i])
    rep_facet_ids = tuple(int(j) for j in range(len(facets)) if j <= facet_negation[j])

    for arr in (v, fmat, incidence, pair_v, pair_f, negation, facet_negation):
        arr.setflags(write=False)

    return PolyhedralSpace(
        dim=d,
        vertices=v,
        facets=tuple(facets),
        tol=tol,
        functionals=fmat,
        incidence=incidence,
        pair_vertices=pair_v,
        pair_facets=pair_f,
        vertex_negation=negation,
        facet_negation=facet_negation,
        rep_vertex_ids=rep_vertex_ids,
        rep_facet_ids=rep_facet_ids,
    )


def _as_point(space: PolyhedralSpace, x, what: str = "point") -> np.ndarray:
    p = np.asarray(x, dtype=float)
    if p.shape != (space.dim,):
        raise DimensionMismatch(
            f"{what} of shape {p.shape} does not match space dimension {space.dim}"
        )
    return p


def norm(space: PolyhedralSpace, x) -> float:
    """Norm of ``x``: the maximum of the facet functionals at ``x``."""
    p = _as_point(space, x)
    return float(np.max(space.functionals @ p))


def dual_norm(space: PolyhedralSpace, f) -> float:
    """Dual norm of the functional ``f``: its maximum over the vertices."""
    g = _as_point(space, f, what="functional")
    return float(np.max(space.vertices @ g))


def support_set(space: PolyhedralSpace, x) -> SupportSet:
    """All extreme supporting functionals at the unit-norm point ``x``.

    These are the facet functionals attaining 1 at ``x``; the set of
    every norm-one functional attaining 1 there is their convex hull.
    """
    p = _as_point(space, x)
    vals = space.functionals @ p
    if abs(float(vals.max()) - 1.0) > space.tol:
        raise NotUnitNorm(f"point has norm {vals.max():.12g}, expected 1")
    ids = tuple(int(j) for j in np.nonzero(vals >= 1.0 - space.tol)[0])
    return SupportSet(
        base_point=p,
        functionals=tuple(space.facets[j].functional for j in ids),
        facet_ids=ids,
    )


def is_smooth_point(space: PolyhedralSpace, x) -> bool:
    """True when exactly one supporting functional attains 1 at ``x``."""
    return len(support_set(space, x)) == 1


def extreme_pairs(space: PolyhedralSpace) -> ExtremePairSet:
    """All (vertex, facet) pairs with the facet functional equal to 1 at
    the vertex, ordered by vertex then facet index."""
    pairs = tuple(
        (int(i), int(j)) for i, j in zip(space.pair_vertices, space.pair_facets)
    )
    return ExtremePairSet(pairs=pairs)


def space_to_json(space: PolyhedralSpace) -> dict:
    """JSON-ready description; vertices keep their build order."""
    return {
        "dim": space.dim,
        "vertices": [[float(c) for c in row] for row in space.vertices],
        "tol": space.tol,
    }


def space_from_json(obj: dict) -> PolyhedralSpace:
    """Build a space from its JSON description.

    Expected keys: ``dim``, ``vertices`` (list of coordinate lists),
    optional ``tol`` (default 1e-9) and optional ``symmetrize``; with
    ``symmetrize`` true the negation of every listed vertex is appended.
    """
    verts = [list(map(float, row)) for row in obj["vertices"]]
    if obj.get("symmetrize", False):
        verts = verts + [[-c for c in row] for row in verts]
    dim = int(obj["dim"])
    if any(len(row) != dim for row in verts):
        raise DimensionMismatch("vertex length does not match dim")
    return build_space(verts, tol=float(obj.get("tol", DEFAULT_TOL)))


def save_space(space: PolyhedralSpace, path) -> None:
    with open(path, "w") as fh:
        json.dump(space_to_json(space), fh, indent=2)
        fh.write("\n")


def load_space(path) -> PolyhedralSpace:
    with open(path) as fh:
        return space_from_json(json.load(fh))
