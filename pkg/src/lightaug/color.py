"""Pixel color math: luma and vectorized RGB/HSV conversion.

Conversions operate on float64 arrays with RGB in ``[0, 1]``.  Hue is
kept in degrees ``[0, 360)`` so wrap-around shifts are a plain modulo.
The piecewise definition matches the classic hexcone model (same
branch precedence as ``colorsys``), which the test-suite cross-checks.
"""

from __future__ import annotations

import numpy as np

# Rec. 601 weights, used by contrast and saturation adjustments.
LUMA_WEIGHTS = (0.299, 0.587, 0.114)


def luma(img: np.ndarray) -> np.ndarray:
    """Weighted grayscale value per pixel as float64, shape (H, W)."""
    r, g, b = (img[..., i].astype(np.float64) for i in range(3))
    wr, wg, wb = LUMA_WEIGHTS
    return wr * r + wg * g + wb * b


def rgb_to_hsv(rgb: np.ndarray) -> np.ndarray:
    """RGB in [0, 1] -> HSV with H in degrees [0, 360), S and V in [0, 1]."""
    rgb = np.asarray(rgb, dtype=np.float64)
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    maxc = rgb.max(axis=-1)
    minc = rgb.min(axis=-1)
    delta = maxc - minc

    h = np.zeros_like(maxc)
    nz = delta > 0
    rmax = nz & (maxc == r)
    gmax = nz & ~rmax & (maxc == g)
    bmax = nz & ~rmax & ~gmax
    np.divide(g - b, delta, out=h, where=rmax)
    h[rmax] %= 6.0
    hg = np.divide(b - r, delta, out=np.zeros_like(h), where=gmax)
    h[gmax] = hg[gmax] + 2.0
    hb = np.divide(r - g, delta, out=np.zeros_like(h), where=bmax)
    h[bmax] = hb[bmax] + 4.0
    h *= 60.0

    s = np.zeros_like(maxc)
    np.divide(delta, maxc, out=s, where=maxc > 0)
    return np.stack([h, s, maxc], axis=-1)


def hsv_to_rgb(hsv: np.ndarray) -> np.ndarray:
    """HSV (H in degrees, S/V in [0, 1]) -> RGB in [0, 1]."""
    hsv = np.asarray(hsv, dtype=np.float64)
    h, s, v = hsv[..., 0], hsv[..., 1], hsv[..., 2]
    h6 = (h / 60.0) % 6.0
    i = np.floor(h6).astype(np.int64) % 6
    f = h6 - np.floor(h6)
    p = v * (1.0 - s)
    q = v * (1.0 - f * s)
    t = v * (1.0 - (1.0 - f) * s)

    r = np.choose(i, [v, q, p, p, t, v])
    g = np.choose(i, [t, v, v, q, p, p])
    b = np.choose(i, [p, p, t, v, v, q])
    return np.stack([r, g, b], axis=-1)
