"""Operator norm, numerical radius and Davis-Wielandt radii on a polyhedral space.

Operators are dense d x d real matrices acting on points by matrix-vector
product.  On a polyhedral space every radius computed here reduces to a
finite maximum over the extreme (vertex, facet) pairs: the per-facet
objectives are convex, so their suprema over the sphere are attained at
ball vertices paired with incident facet functionals.  :func:`sampled_dw`
provides an independent Monte-Carlo oracle over the sphere for validating
that reduction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, DimensionMismatch
from .polytope import PolyhedralSpace, support_set

#: a pair witnesses a radius when its value is this close to the maximum
WITNESS_TOL = 1e-7

RADIUS_KINDS = ("w", "dw", "dwstar", "opnorm")

_SAMPLE_CHUNK = 20_000


@dataclass(frozen=True)
class Segment:
    """The Davis-Wielandt set at a point: a horizontal segment at height
    ``level`` = norm(Tx)^2 spanning the supporting-functional values."""

    lo: float
    hi: float
    level: float


@dataclass(frozen=True)
class RadiusReport:
    """A radius value together with the extreme pairs attaining it."""

    kind: str
    value: float
    witnesses: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "witnesses": [list(p) for p in self.witnesses],
        }


def as_operator(space: PolyhedralSpace, matrix) -> np.ndarray:
    t = np.asarray(matrix, dtype=float)
    if t.shape != (space.dim, space.dim):
        raise DimensionMismatch(
            f"operator of shape {t.shape} does not match space dimension {space.dim}"
        )
    if not np.all(np.isfinite(t)):
        raise DimensionMismatch("operator entries must be finite")
    return t


def _pair_table(space: PolyhedralSpace, t: np.ndarray):
    """f_j(T v_i) for all vertices and facets, plus norm(T v_i)."""
    images = space.vertices @ t.T
    table = images @ space.functionals.T
    image_norms = table.max(axis=1)
    return table, image_norms


def operator_norm(space: PolyhedralSpace, matrix) -> RadiusReport:
    """max over vertices of norm(Tv); witnesses are the (vertex, facet)
    pairs with f(Tv) at the maximum, so the witness vertices form the norm
    attainment set restricted to extreme points."""
    t = as_operator(space, matrix)
    table, image_norms = _pair_table(space, t)
    value = float(image_norms.max())
    ids_v, ids_f = np.nonzero(table >= value - WITNESS_TOL)
    witnesses = tuple((int(i), int(j)) for i, j in zip(ids_v, ids_f))
    return RadiusReport(kind="opnorm", value=value, witnesses=witnesses)


def _extreme_pair_report(space, kind, pair_values) -> RadiusReport:
    value = float(pair_values.max())
    hit = np.nonzero(pair_values >= value - WITNESS_TOL)[0]
    witnesses = tuple(
        (int(space.pair_vertices[k]), int(space.pair_facets[k])) for k in hit
    )
    return RadiusReport(kind=kind, value=value, witnesses=witnesses)


def numerical_radius(space: PolyhedralSpace, matrix) -> RadiusReport:
    """max of |f(Tv)| over extreme pairs (v, f)."""
    t = as_operator(space, matrix)
    table, _ = _pair_table(space, t)
    vals = np.abs(table[space.pair_vertices, space.pair_facets])
    return _extreme_pair_report(space, "w", vals)


def dw_radius(space: PolyhedralSpace, matrix) -> RadiusReport:
    """max of sqrt(f(Tv)^2 + norm(Tv)^4) over extreme pairs."""
    t = as_operator(space, matrix)
    table, image_norms = _pair_table(space, t)
    pv = table[space.pair_vertices, space.pair_facets]
    vals = np.sqrt(pv**2 + image_norms[space.pair_vertices] ** 4)
    return _extreme_pair_report(space, "dw", vals)


def dw_star_radius(space: PolyhedralSpace, matrix) -> RadiusReport:
    """max of sqrt(f(Tv)^2 + norm(Tv)^2) over extreme pairs."""
    t = as_operator(space, matrix)
    table, image_norms = _pair_table(space, t)
    pv = table[space.pair_vertices, space.pair_facets]
    vals = np.sqrt(pv**2 + image_norms[space.pair_vertices] ** 2)
    return _extreme_pair_report(space, "dwstar", vals)


def radius(space: PolyhedralSpace, matrix, kind: str) -> RadiusReport:
    """Dispatch over the radius kinds ``w``, ``dw``, ``dwstar``, ``opnorm``."""
    if kind == "w":
        return numerical_radius(space, matrix)
    if kind == "dw":
        return dw_radius(space, matrix)
    if kind == "dwstar":
        return dw_star_radius(space, matrix)
    if kind == "opnorm":
        return operator_norm(space, matrix)
    raise BadParameter(f"unknown radius kind {kind!r}; expected one of {RADIUS_KINDS}")


def dw_set_at(space: PolyhedralSpace, matrix, x) -> Segment:
    """Davis-Wielandt set of T at the unit-norm point x.

    The set is the segment between the extreme values of f(Tx) over the
    supporting functionals at x, at height norm(Tx)^2; it is a single
    point exactly when x is a smooth point or the functionals agree on Tx.
    """
    t = as_operator(space, matrix)
    sup = support_set(space, x)
    tx = t @ sup.base_point
    vals = [float(f @ tx) for f in sup.functionals]
    level = float(np.max(space.functionals @ tx)) ** 2
    return Segment(lo=min(vals), hi=max(vals), level=level)


def dw_upper_bound_G(space: PolyhedralSpace, matrix) -> float:
    """max of sqrt(f(Tv)^2 + ||T||^4) over extreme pairs; dominates dw_radius."""
    t = as_operator(space, matrix)
    table, image_norms = _pair_table(space, t)
    pv = table[space.pair_vertices, space.pair_facets]
    opnorm = float(image_norms.max())
    return float(np.sqrt((pv**2 + opnorm**4).max()))


def sampled_dw(
    space: PolyhedralSpace,
    matrix,
    kind: str,
    samples: int,
    seed: int,
) -> float:
    """Monte-Carlo lower oracle for the ``w``, ``dw`` and ``dwstar`` radii.

    Draws uniform random directions, scales them onto the unit sphere of
    the space, evaluates the kind's expression over the supporting
    functionals at each point and returns the running maximum.  The result
    never exceeds the corresponding finite radius and converges to it from
    below; it is deterministic for a fixed seed.
    """
    if kind not in ("w", "dw", "dwstar"):
        raise BadParameter(f"sampled_dw supports kinds w/dw/dwstar, got {kind!r}")
    if samples < 1:
        raise BadParameter(f"samples must be >= 1, got {samples}")
    t = as_operator(space, matrix)
    f_mat = space.functionals
    rng = np.random.default_rng(seed)
    best = 0.0
    left = int(samples)
    while left > 0:
        chunk = min(left, _SAMPLE_CHUNK)
        left -= chunk
        dirs = rng.standard_normal((chunk, space.dim))
        norms = (dirs @ f_mat.T).max(axis=1)
        x = dirs / norms[:, None]
        active = (x @ f_mat.T) >= 1.0 - space.tol
        table = (x @ t.T) @ f_mat.T
        pairing = np.where(active, np.abs(table), -np.inf).max(axis=1)
        if kind == "w":
            vals = pairing
        else:
            image_norms = table.max(axis=1)
            power = 4 if kind == "dw" else 2
            vals = np.sqrt(pairing**2 + image_norms**power)
        best = max(best, float(vals.max()))
    return best


def operator_to_json(matrix) -> dict:
    return {"matrix": [[float(c) for c in row] for row in np.asarray(matrix, float)]}


def operator_from_json(obj: dict) -> np.ndarray:
    return np.array(obj["matrix"], dtype=float)


def save_operator(matrix, path) -> None:
    with open(path, "w") as fh:
        json.dump(operator_to_json(matrix), fh, indent=2)
        fh.write("\n")


def load_operator(path) -> np.ndarray:
    with open(path) as fh:
        return operator_from_json(json.load(fh))
