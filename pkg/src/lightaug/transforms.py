"""Lighting transforms as pure functions of (image, params, draws).

All transforms share the gating contract: the first draw ``p1`` decides
whether anything happens.  ``p1 >= p`` returns the input unchanged
(one draw consumed), so ``p=1`` always fires and ``p=0`` never does.
Each transform consumes a fixed number of draws when it fires, which is
what makes manifests replayable:

========  =====================================================
rsh       7 draws: p1, four trapezoid corners, shadow, highlight
gamma     2 draws: p1, exponent
jitter    5 draws: p1, brightness, contrast, saturation, hue
disk      5 draws: p1, center x, center y, radius, factor
========  =====================================================

Inputs are never modified; every transform returns a fresh array of the
same shape and dtype.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .color import hsv_to_rgb, luma, rgb_to_hsv
from .core import (
    ChannelMismatch,
    NegativeFactor,
    RandomSource,
    Range,
    RangeOutOfBounds,
    RshParams,
    _check_pair,
    _check_probability,
    ensure_image,
    quantize,
    uniform_in,
)
from .geometry import rasterize_mask, sample_trapezoid


@dataclass(frozen=True)
class GammaParams:
    """Random gamma curve: each channel v -> 255 * (v/255)**gamma."""

    gamma_range: Range = (0.0, 1.5)
    p: float = 0.5

    def validate(self) -> "GammaParams":
        _check_probability("p", self.p)
        _check_pair("gamma_range", self.gamma_range, low_error=NegativeFactor)
        return self


@dataclass(frozen=True)
class JitterParams:
    """Random brightness/contrast/saturation/hue jitter.

    Factor ranges are multiplicative; the hue range is a fraction of a
    full color-wheel revolution, so (-0.5, 0.5) spans the whole wheel.
    """

    brightness_range: Range = (0.0, 2.0)
    contrast_range: Range = (0.0, 2.0)
    saturation_range: Range = (0.0, 2.0)
    hue_range: Range = (-0.5, 0.5)
    p: float = 0.5

    def validate(self) -> "JitterParams":
        _check_probability("p", self.p)
        _check_pair("brightness_range", self.brightness_range, low_error=NegativeFactor)
        _check_pair("contrast_range", self.contrast_range, low_error=NegativeFactor)
        _check_pair("saturation_range", self.saturation_range, low_error=NegativeFactor)
        _check_pair("hue_range", self.hue_range, bounds=(-0.5, 0.5))
        return self


@dataclass(frozen=True)
class DiskParams:
    """Hard-edged brightness disk at a uniform random center.

    The radius is drawn as a fraction of min(W, H).  This is a plain
    reconstruction of the "illumination circle" idea used as a
    comparison baseline; the defaults below are this package's own.
    """

    radius_range: Range = (0.25, 0.75)
    factor_range: Range = (0.0, 2.0)
    p: float = 0.5

    def validate(self) -> "DiskParams":
        _check_probability("p", self.p)
        _check_pair("radius_range", self.radius_range, low_error=RangeOutOfBounds)
        _check_pair("factor_range", self.factor_range, low_error=NegativeFactor)
        return self


def adjust_brightness(img: np.ndarray, factor: float) -> np.ndarray:
    """Scale every channel value by ``factor`` and quantize."""
    if factor < 0:
        raise NegativeFactor(f"brightness factor {factor} is negative")
    ensure_image(img)
    return quantize(img.astype(np.float64) * factor)


def apply_rsh(img: np.ndarray, params: RshParams, rng: RandomSource) -> np.ndarray:
    """Random shadows & highlights.

    When gated on, a trapezoidal region spanning the full image width is
    darkened by a factor drawn from ``shadow_range`` while its
    complement is brightened by a factor from ``highlight_range``.
    """
    params.validate()
    ensure_image(img)
    p1 = rng.next_uniform()
    if p1 >= params.p:
        return img.copy()
    height, width = img.shape[:2]
    trap = sample_trapezoid(params, height, rng)
    mask = rasterize_mask(trap, width, height)
    shadow_factor = uniform_in(rng, *params.shadow_range)
    highlight_factor = uniform_in(rng, *params.highlight_range)
    shadow = adjust_brightness(img, shadow_factor)
    highlight = adjust_brightness(img, highlight_factor)
    return np.where(mask[:, :, None], shadow, highlight)


def random_gamma(img: np.ndarray, params: GammaParams, rng: RandomSource) -> np.ndarray:
    """Gamma-curve the image with a random exponent.

    Zero input stays zero for every exponent; with gamma 0 all other
    values saturate to 255 (the limit of the curve).
    """
    params.validate()
    ensure_image(img)
    p1 = rng.next_uniform()
    if p1 >= params.p:
        return img.copy()
    gamma = uniform_in(rng, *params.gamma_range)
    levels = np.arange(256, dtype=np.float64) / 255.0
    lut = quantize(255.0 * np.power(levels, gamma))
    lut[0] = 0
    return lut[img]


def color_jitter(img: np.ndarray, params: JitterParams, rng: RandomSource) -> np.ndarray:
    """Jitter brightness, contrast, saturation and hue, in that order.

    The order is fixed so a recorded draw sequence replays to the same
    image.  Requires an RGB input (saturation and hue are undefined on
    grayscale).
    """
    params.validate()
    ensure_image(img)
    if img.shape[2] != 3:
        raise ChannelMismatch("color jitter needs 3 channels; got grayscale")
    p1 = rng.next_uniform()
    if p1 >= params.p:
        return img.copy()
    out = adjust_brightness(img, uniform_in(rng, *params.brightness_range))
    out = _adjust_contrast(out, uniform_in(rng, *params.contrast_range))
    out = _adjust_saturation(out, uniform_in(rng, *params.saturation_range))
    out = _shift_hue(out, uniform_in(rng, *params.hue_range))
    return out


def _adjust_contrast(img: np.ndarray, factor: float) -> np.ndarray:
    # blend toward the scalar mean luma of the whole image
    mean = luma(img).mean()
    return quantize(mean + (img.astype(np.float64) - mean) * factor)


def _adjust_saturation(img: np.ndarray, factor: float) -> np.ndarray:
    # blend each pixel toward its own luma
    gray = luma(img)[:, :, None]
    return quantize(gray + (img.astype(np.float64) - gray) * factor)


def _shift_hue(img: np.ndarray, revolutions: float) -> np.ndarray:
    hsv = rgb_to_hsv(img.astype(np.float64) / 255.0)
    hsv[..., 0] = (hsv[..., 0] + revolutions * 360.0) % 360.0
    return quantize(hsv_to_rgb(hsv) * 255.0)


def disk_illumination(img: np.ndarray, params: DiskParams, rng: RandomSource) -> np.ndarray:
    """Scale brightness inside a random disk; outside stays untouched.

    A pixel is inside when its center is strictly closer to the disk
    center than the radius, so a zero radius is the identity.
    """
    params.validate()
    ensure_image(img)
    p1 = rng.next_uniform()
    if p1 >= params.p:
        return img.copy()
    height, width = img.shape[:2]
    cx = rng.next_uniform() * width
    cy = rng.next_uniform() * height
    radius = uniform_in(rng, *params.radius_range) * min(width, height)
    factor = uniform_in(rng, *params.factor_range)
    xs = np.arange(width, dtype=np.float64) + 0.5
    ys = np.arange(height, dtype=np.float64) + 0.5
    dist2 = (xs[None, :] - cx) ** 2 + (ys[:, None] - cy) ** 2
    inside = dist2 < radius * radius
    return np.where(inside[:, :, None], adjust_brightness(img, factor), img)
