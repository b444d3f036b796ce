"""Grid-restricted local search for simplices in the cube with small xi.

Vertex coordinates live on the grid ``k / D``. Candidate moves are screened
in double precision in batches; the chosen move is re-evaluated exactly and
kept only if the exact key ``(xi, facet sum)`` strictly drops, so the
incumbent's xi never increases.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .cube import Certificate, certify
from .simplex import Simplex, lagrange_basis, neg_lambda_table

log = logging.getLogger(__name__)

SCREEN_TOL = 1e-9


class SearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    """Search budget and grid.

    ``max_steps`` bounds each descent; ``kicks`` is the number of random
    perturbations of ``kick_size`` moves tried from each restart's incumbent.
    With ``centroid_lock`` every coordinate of the vertex sum is pinned to
    ``(n + 1) / 2``, the centroid condition any simplex with xi = n must meet.
    """

    n: int
    grid_denominator: int = 2
    restarts: int = 1
    max_steps: int = 200
    seed: int = 0
    centroid_lock: bool = False
    kicks: int = 0
    kick_size: int = 3

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if self.grid_denominator < 1:
            raise ValueError("grid_denominator must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_steps < 0 or self.kicks < 0 or self.kick_size < 1:
            raise ValueError("max_steps and kicks must be >= 0, kick_size >= 1")
        if self.centroid_lock and (self.grid_denominator * (self.n + 1)) % 2:
            raise ValueError("centroid lock needs D*(n+1) even to center the simplex on the grid")


@dataclass
class SearchResult:
    best: Simplex
    xi_float: float
    xi_exact: Fraction
    trace: list[tuple[int, Fraction]] = field(default_factory=list)
    restart: int = 0


def _cube_points(n: int) -> np.ndarray:
    idx = np.arange(1 << n)
    pts = ((idx[:, None] >> np.arange(n)[None, :]) & 1).astype(float)
    return np.hstack([pts, np.ones((1 << n, 1))])


def _screen(grids: np.ndarray, denom: int, cube: np.ndarray) -> np.ndarray:
    """Float (xi, facet sum) for a batch of grid simplices of shape (B, n+1, n).

    The facet sum adds up the per-facet maxima of ``-lambda_j``, which is
    ``alpha - 1``; it ranks moves on a plateau of xi. Degenerate simplices
    get ``inf``. The integer matrix ``[K | D]`` has an integer determinant,
    so anything below 1/2 in magnitude is singular.
    """
    b, k, n = grids.shape
    ints = np.concatenate([grids, np.full((b, k, 1), denom)], axis=2).astype(float)
    out = np.full((b, 2), np.inf)
    ok = np.abs(np.linalg.det(ints)) > 0.5
    if not ok.any():
        return out
    inv = np.linalg.inv(ints[ok] / denom)
    facet_max = np.max(-np.einsum("vi,bij->bvj", cube, inv), axis=1)
    out[ok, 0] = np.maximum((n + 1) * facet_max.max(axis=1) + 1, 1.0)
    out[ok, 1] = facet_max.sum(axis=1)
    return out


def _to_simplex(grid: np.ndarray, denom: int) -> Simplex:
    return Simplex([[Fraction(int(c), denom) for c in row] for row in grid])


def _nondegenerate(grid: np.ndarray, denom: int) -> bool:
    ints = np.hstack([grid, np.full((grid.shape[0], 1), denom)]).astype(float)
    return abs(np.linalg.det(ints)) > 0.5


def _exact_key(g: np.ndarray, denom: int) -> tuple[Fraction, Fraction]:
    s = _to_simplex(g, denom)
    table = neg_lambda_table(lagrange_basis(s))
    facet_max = [max(col) for col in zip(*table)]
    return max(Fraction(1), (s.n + 1) * max(facet_max) + 1), sum(facet_max, Fraction(0))


def _recenter(rng: np.random.Generator, g: np.ndarray, denom: int) -> None:
    """Adjust entries in place so every coordinate sums to D*(n+1)/2."""
    k = g.shape[0]
    target = denom * k // 2
    for i in range(g.shape[1]):
        diff = target - int(g[:, i].sum())
        while diff:
            j = int(rng.integers(k))
            if diff > 0 and g[j, i] < denom:
                step = min(diff, denom - int(g[j, i]))
                g[j, i] += step
                diff -= step
            elif diff < 0 and g[j, i] > 0:
                step = min(-diff, int(g[j, i]))
                g[j, i] -= step
                diff += step


def _random_grid(rng: np.random.Generator, n: int, denom: int, centroid_lock: bool,
                 retries: int = 1000) -> np.ndarray:
    for _ in range(retries):
        g = rng.integers(0, denom + 1, size=(n + 1, n))
        if centroid_lock:
            _recenter(rng, g, denom)
        if _nondegenerate(g, denom):
            return g
    raise SearchError(f"no nondegenerate simplex on the 1/{denom} grid after {retries} draws")


def random_simplex(n: int, grid_denominator: int, seed: int) -> Simplex:
    """Uniform grid vertices, redrawn until the simplex is nondegenerate."""
    rng = np.random.default_rng(seed)
    return _to_simplex(_random_grid(rng, n, grid_denominator, False), grid_denominator)


def _neighbors(g: np.ndarray, denom: int, centroid_lock: bool) -> np.ndarray:
    k, n = g.shape
    out = []
    if not centroid_lock:
        for j in range(k):
            for i in range(n):
                for val in range(denom + 1):
                    if val != g[j, i]:
                        h = g.copy()
                        h[j, i] = val
                        out.append(h)
    else:
        # shift coordinate i from vertex b to vertex a; the column sum is unchanged
        for i in range(n):
            for a in range(k):
                for b in range(k):
                    if a == b:
                        continue
                    for step in range(1, min(denom - int(g[a, i]), int(g[b, i])) + 1):
                        h = g.copy()
                        h[a, i] += step
                        h[b, i] -= step
                        out.append(h)
    if not out:
        return np.empty((0, k, n), dtype=g.dtype)
    return np.stack(out)


def _kick(rng: np.random.Generator, g: np.ndarray, cfg: SearchConfig) -> np.ndarray:
    d = cfg.grid_denominator
    h = g.copy()
    k, n = h.shape
    for _ in range(cfg.kick_size):
        i = int(rng.integers(n))
        if cfg.centroid_lock:
            a, b = (int(x) for x in rng.choice(k, 2, replace=False))
            room = min(d - int(h[a, i]), int(h[b, i]))
            if room:
                step = int(rng.integers(1, room + 1))
                h[a, i] += step
                h[b, i] -= step
        else:
            h[int(rng.integers(k)), i] = int(rng.integers(0, d + 1))
    return h


def _key(g: np.ndarray) -> tuple:
    return tuple(int(x) for x in g.ravel())


def _descend(g: np.ndarray, key: tuple[Fraction, Fraction], cfg: SearchConfig,
             cube: np.ndarray) -> tuple[np.ndarray, tuple[Fraction, Fraction], int]:
    """Steepest descent on the exact key; returns final grid, key and steps taken."""
    d = cfg.grid_denominator
    steps = 0
    while steps < cfg.max_steps and key[0] > cfg.n:
        cand = _neighbors(g, d, cfg.centroid_lock)
        if not len(cand):
            break
        vals = _screen(cand, d, cube)
        xi_f, sum_f = vals[:, 0], vals[:, 1]
        cx, cs = float(key[0]), float(key[1])
        better = (xi_f < cx - SCREEN_TOL) | ((xi_f <= cx + SCREEN_TOL) & (sum_f < cs - SCREEN_TOL))
        if not better.any():
            break
        idx = np.flatnonzero(better)
        order = idx[np.lexsort((sum_f[idx], xi_f[idx]))]
        top = order[0]
        tied = [int(o) for o in order
                if xi_f[o] <= xi_f[top] + SCREEN_TOL and sum_f[o] <= sum_f[top] + SCREEN_TOL]
        new_key, _, o = min((_exact_key(cand[o], d), _key(cand[o]), o) for o in tied)
        if not new_key < key:
            break
        g, key = cand[o], new_key
        steps += 1
    return g, key, steps


def _run_restart(cfg: SearchConfig, r: int, cube: np.ndarray):
    rng = np.random.default_rng([cfg.seed, r])
    d = cfg.grid_denominator
    g = _random_grid(rng, cfg.n, d, cfg.centroid_lock)
    key = _exact_key(g, d)
    trace = [(0, key[0])]
    g, new_key, total = _descend(g, key, cfg, cube)
    if new_key[0] < key[0]:
        trace.append((total, new_key[0]))
    key = new_key
    for _ in range(cfg.kicks):
        if key[0] <= cfg.n:
            break
        h = _kick(rng, g, cfg)
        if not _nondegenerate(h, d):
            continue
        h, hkey, steps = _descend(h, _exact_key(h, d), cfg, cube)
        total += steps + 1
        if hkey < key:
            if hkey[0] < key[0]:
                trace.append((total, hkey[0]))
            g, key = h, hkey
    return g, key[0], trace


def local_search(cfg: SearchConfig) -> SearchResult:
    """Best-of-restarts descent on xi over single-coordinate grid moves.

    Restart ``r`` draws from ``default_rng([seed, r])``, so each restart is
    reproducible on its own. Equal xi across restarts is broken toward the
    lexicographically smaller vertex matrix. Restarts stop early once
    ``xi = n`` is reached, the lower bound for simplices in the cube.
    """
    cube = _cube_points(cfg.n)
    d = cfg.grid_denominator
    best = None
    for r in range(cfg.restarts):
        g, xi, trace = _run_restart(cfg, r, cube)
        if xi < cfg.n:
            raise SearchError(f"xi {xi} below the lower bound {cfg.n}: arithmetic bug")
        log.debug("restart %d: xi=%s", r, xi)
        cand = (xi, _key(g))
        if best is None or cand < best[0]:
            best = (cand, g, trace, r)
        if xi == cfg.n:
            break
    (xi, _), g, trace, r = best
    xf = float(_screen(g[None], d, cube)[0, 0])
    if abs(xf - float(xi)) >= 1e-6:
        raise SearchError(f"float screen {xf} disagrees with exact xi {xi}")
    return SearchResult(best=_to_simplex(g, d), xi_float=xf, xi_exact=xi, trace=trace, restart=r)


def confirm(s: Simplex, xi_n: Optional[Fraction] = None) -> Certificate:
    """Exact certificate for a float-screened candidate."""
    return certify(s, xi_n)
