"""Marching squares for the zero set of a polynomial on a rectangular grid."""

from __future__ import annotations

import numpy as np

# edges: 0 bottom (c0-c1), 1 right (c1-c2), 2 top (c2-c3), 3 left (c3-c0)
# corners: c0 (i, j), c1 (i+1, j), c2 (i+1, j+1), c3 (i, j+1)
_CASES = {
    0: (), 15: (),
    1: ((3, 0),), 14: ((3, 0),),
    2: ((0, 1),), 13: ((0, 1),),
    3: ((3, 1),), 12: ((3, 1),),
    4: ((1, 2),), 11: ((1, 2),),
    6: ((0, 2),), 9: ((0, 2),),
    7: ((3, 2),), 8: ((3, 2),),
}
_EDGE_CORNERS = ((0, 1), (1, 2), (2, 3), (3, 0))


def sample_grid(p, region, n: int):
    xmin, xmax, ymin, ymax = region
    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    return xs, ys, np.asarray(p.eval_f(X, Y), dtype=float) * np.ones_like(X)


def marching_squares(values: np.ndarray, xs: np.ndarray, ys: np.ndarray):
    """Zero-level segments of a grid function; values[i, j] sits at (xs[i], ys[j])."""
    pos = values >= 0
    idx = (
        pos[:-1, :-1].astype(np.uint8)
        | (pos[1:, :-1].astype(np.uint8) << 1)
        | (pos[1:, 1:].astype(np.uint8) << 2)
        | (pos[:-1, 1:].astype(np.uint8) << 3)
    )
    segments = []
    for i, j in zip(*np.nonzero((idx != 0) & (idx != 15))):
        case = int(idx[i, j])
        corners = (
            (xs[i], ys[j], values[i, j]),
            (xs[i + 1], ys[j], values[i + 1, j]),
            (xs[i + 1], ys[j + 1], values[i + 1, j + 1]),
            (xs[i], ys[j + 1], values[i, j + 1]),
        )

        def cross(edge):
            a, b = (corners[k] for k in _EDGE_CORNERS[edge])
            den = a[2] - b[2]
            t = 0.5 if den == 0 else min(max(a[2] / den, 0.0), 1.0)
            return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))

        if case in (5, 10):
            centre = sum(c[2] for c in corners) / 4.0
            # saddle: connect so the centre's sign region stays joined
            if (case == 5) == (centre >= 0):
                pairs = ((0, 1), (2, 3))
            else:
                pairs = ((3, 0), (1, 2))
        else:
            pairs = _CASES[case]
        for e0, e1 in pairs:
            segments.append((cross(e0), cross(e1)))
    return segments


def zero_set_segments(p, region, n: int = 512):
    xs, ys, vals = sample_grid(p, region, n)
    return marching_squares(vals, xs, ys)
