"""Independent reference implementations used to cross-check the library.

Everything here is deliberately written from scratch (scalar Python,
generic polygon math) so tests compare two unrelated code paths.
"""

from __future__ import annotations

import math


class ScriptedSource:
    """Random source stub that hands out a fixed list of draws."""

    def __init__(self, draws):
        self._draws = list(draws)
        self.consumed = 0

    def next_uniform(self) -> float:
        u = self._draws[self.consumed]
        self.consumed += 1
        return u


def point_on_segment(px, py, ax, ay, bx, by) -> bool:
    cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    if cross != 0.0:
        return False
    return (min(ax, bx) <= px <= max(ax, bx)) and (min(ay, by) <= py <= max(ay, by))


def point_in_closed_polygon(px, py, vertices) -> bool:
    """Boundary-inclusive point-in-polygon via ray casting."""
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        if point_on_segment(px, py, ax, ay, bx, by):
            return True
    inside = False
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        if (ay > py) != (by > py):
            x_int = ax + (py - ay) * (bx - ax) / (by - ay)
            if px < x_int:
                inside = not inside
    return inside


def brute_force_mask(corners, width: int, height: int):
    """Rasterize a polygon by testing every pixel center independently."""
    return [[point_in_closed_polygon(x + 0.5, y + 0.5, corners)
             for x in range(width)] for y in range(height)]


def ref_quantize(value: float) -> int:
    """Round half away from zero, clamp to [0, 255]."""
    rounded = math.floor(abs(value) + 0.5) * (1 if value >= 0 else -1)
    return min(255, max(0, rounded))


def ref_scale(u: float, lo: float, hi: float) -> float:
    return lo + u * (hi - lo)


def mc_clipped_band_mean(samples: int = 400_000, seed: int = 314159) -> float:
    """Monte-Carlo mean of the image fraction a default band covers.

    Samples corner draws and an abscissa jointly in normalized
    coordinates and averages the clipped band height min(bottom, 1) - top.
    Independent of the library's sampling and rasterization code.
    """
    import numpy as np

    gen = np.random.default_rng(seed)
    u = gen.random((samples, 5))
    top_left = u[:, 1] * 0.3
    top_right = u[:, 3] * 0.3
    bottom_left = top_left + 0.4 + 0.4 * u[:, 0]
    bottom_right = top_right + 0.4 + 0.4 * u[:, 2]
    x = u[:, 4]
    top = top_left + (top_right - top_left) * x
    bottom = bottom_left + (bottom_right - bottom_left) * x
    return float(np.mean(np.minimum(bottom, 1.0) - top))
