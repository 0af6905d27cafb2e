"""Trapezoid sampling and mask rasterization.

The shadow region is a filled quadrilateral whose parallel vertical
sides sit on the image borders ``x = 0`` and ``x = W``.  Two corner
ordinates per side are sampled as fractions of the image height, so the
same parameters scale to any image size.

Rasterization uses pixel centers: pixel ``(x, y)`` is inside the mask
iff its center ``(x + 0.5, y + 0.5)`` lies between the top and bottom
edges, both boundaries inclusive.  The edges are interpolated linearly
across ``[0, W]`` in double precision; parts of the trapezoid outside
the image are clipped implicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import RandomSource, RangeOutOfBounds, RshParams, ValidationError, scale_unit

Mask = np.ndarray  # boolean (H, W), True = inside the shadow contour


@dataclass(frozen=True)
class Trapezoid:
    """Corner geometry in pixel units, width-independent.

    ``left_top``/``right_top`` are the ordinates of the upper corners;
    ``left_height``/``right_height`` the vertical extent of each side,
    so the lower corners sit at ``top + height``.  All four are
    non-negative, hence the bottom edge is never above the top edge.
    """

    left_top: float
    left_height: float
    right_top: float
    right_height: float

    def __post_init__(self):
        for name in ("left_top", "left_height", "right_top", "right_height"):
            if getattr(self, name) < 0:
                raise RangeOutOfBounds(f"{name}: {getattr(self, name)} is negative")

    def corners(self, width: float) -> tuple[tuple[float, float], ...]:
        """Corner points in order top-left, top-right, bottom-right, bottom-left."""
        return (
            (0.0, self.left_top),
            (float(width), self.right_top),
            (float(width), self.right_top + self.right_height),
            (0.0, self.left_top + self.left_height),
        )

    def top_edge(self, x, width: float):
        """Ordinate of the top edge at abscissa ``x`` (affine in x)."""
        t = np.asarray(x, dtype=np.float64) / float(width)
        return self.left_top + (self.right_top - self.left_top) * t

    def bottom_edge(self, x, width: float):
        """Ordinate of the bottom edge at abscissa ``x`` (affine in x)."""
        bl = self.left_top + self.left_height
        br = self.right_top + self.right_height
        t = np.asarray(x, dtype=np.float64) / float(width)
        return bl + (br - bl) * t


def trapezoid_from_draws(params: RshParams, height: int,
                         draws: tuple[float, float, float, float]) -> Trapezoid:
    """Build the trapezoid from four unit draws.

    Draw order is left height, left top, right height, right top; each
    scaled range value is multiplied by the image height.  The batch
    pipeline uses this to reconstruct geometry from manifest draws.
    """
    u_lh, u_lt, u_rh, u_rt = draws
    return Trapezoid(
        left_top=scale_unit(u_lt, *params.left_upper) * height,
        left_height=scale_unit(u_lh, *params.left_lower) * height,
        right_top=scale_unit(u_rt, *params.right_upper) * height,
        right_height=scale_unit(u_rh, *params.right_lower) * height,
    )


def sample_trapezoid(params: RshParams, height: int, rng: RandomSource) -> Trapezoid:
    """Sample trapezoid corners, consuming exactly four uniform draws."""
    draws = (rng.next_uniform(), rng.next_uniform(),
             rng.next_uniform(), rng.next_uniform())
    return trapezoid_from_draws(params, height, draws)


def rasterize_mask(trap: Trapezoid, width: int, height: int) -> Mask:
    """Fill the trapezoid into a boolean (H, W) mask via pixel centers."""
    if width < 1 or height < 1:
        raise RangeOutOfBounds(f"mask size {width}x{height} must be at least 1x1")
    xs = np.arange(width, dtype=np.float64) + 0.5
    y_top = trap.top_edge(xs, width)
    y_bot = trap.bottom_edge(xs, width)
    yc = (np.arange(height, dtype=np.float64) + 0.5)[:, None]
    return (y_top[None, :] <= yc) & (yc <= y_bot[None, :])


def invert_mask(mask: Mask) -> Mask:
    """Bitwise complement, same dimensions."""
    _ensure_mask(mask)
    return ~mask


def mask_area_fraction(mask: Mask) -> float:
    """Fraction of pixels inside the mask: count(True) / (W*H)."""
    _ensure_mask(mask)
    return float(mask.mean())


def _ensure_mask(mask: Mask) -> None:
    if not (isinstance(mask, np.ndarray) and mask.dtype == np.bool_ and mask.ndim == 2):
        raise ValidationError("mask must be a 2-D boolean array")
