"""Core value types, validation, quantization and the randomness contract.

Every source of randomness in this package is a :class:`RandomSource`:
a seeded stream of uniform draws in ``[0, 1)``.  The generator is
CPython's Mersenne Twister (``random.Random``), whose ``random()``
sequence for a given integer seed is guaranteed by the language not to
change across versions, so a recorded seed replays to the identical
draw sequence on any platform.  Nothing in this package ever consults
the wall clock or global RNG state.

Images are plain numpy arrays of shape ``(H, W, C)`` with ``C`` in
``{1, 3}`` and dtype ``uint8``.  Transforms compute in float64 and
quantize once at the end (round half away from zero, clamp to
``[0, 255]``).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF

Range = tuple[float, float]


class AugmentError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AugmentError):
    """A parameter set or input value violates its contract."""


class RangeInverted(ValidationError):
    """A (lo, hi) range with lo > hi."""


class RangeOutOfBounds(ValidationError):
    """A range that leaves its permitted interval."""


class NegativeFactor(ValidationError):
    """A brightness-style factor below zero."""


class BadProbability(ValidationError):
    """A gating probability outside [0, 1]."""


class InvalidImage(ValidationError):
    """An array that is not a (H, W, C) uint8 image with C in {1, 3}."""


class ChannelMismatch(AugmentError):
    """An operation that needs RGB was given a grayscale image."""


class RandomSource:
    """Seeded uniform stream; the sole source of nondeterminism.

    ``next_uniform()`` yields doubles in the half-open interval
    ``[0, 1)``.  Seeds are taken modulo 2**64 so that any integer maps
    onto the documented 64-bit seed space.  Instances are single-owner
    mutable state: give each concurrent work unit its own.
    """

    __slots__ = ("_rng",)

    def __init__(self, seed: int):
        self._rng = random.Random(seed & _MASK64)

    def next_uniform(self) -> float:
        """Next draw, uniform in [0, 1)."""
        return self._rng.random()


class RecordingSource(RandomSource):
    """RandomSource that remembers every draw it hands out.

    Used by the batch pipeline to log the consumed uniforms into the
    manifest, and by tests to count draws.
    """

    __slots__ = ("draws",)

    def __init__(self, seed: int):
        super().__init__(seed)
        self.draws: list[float] = []

    def next_uniform(self) -> float:
        u = super().next_uniform()
        self.draws.append(u)
        return u


def scale_unit(u: float, lo: float, hi: float) -> float:
    """Map a unit draw ``u`` in [0, 1) onto [lo, hi).

    This is the one place a raw draw becomes a ranged value; manifest
    replay reuses it so recorded draws reconstruct sampled quantities
    exactly.  The guard keeps the top end open even if rounding of
    ``lo + u*(hi - lo)`` lands on ``hi``.
    """
    v = lo + u * (hi - lo)
    if lo < hi and v >= hi:
        v = math.nextafter(hi, lo)
    return v


def uniform_in(rng: RandomSource, lo: float, hi: float) -> float:
    """Draw a uniform value in [lo, hi), consuming exactly one draw.

    A zero-width range returns ``lo`` exactly (the draw is still
    consumed, which keeps per-operation draw counts constant).
    """
    if lo > hi:
        raise RangeInverted(f"range ({lo}, {hi}): lower bound exceeds upper bound")
    return scale_unit(rng.next_uniform(), lo, hi)


def quantize(values: np.ndarray) -> np.ndarray:
    """Quantize float pixel data to uint8.

    Round to nearest integer with ties away from zero, then clamp to
    [0, 255].  All transforms funnel through this so golden outputs are
    bit-exact.
    """
    v = np.asarray(values, dtype=np.float64)
    rounded = np.floor(np.abs(v) + 0.5) * np.sign(v)
    return np.clip(rounded, 0.0, 255.0).astype(np.uint8)


def ensure_image(img: np.ndarray) -> np.ndarray:
    """Check the (H, W, C) uint8 image convention; return the array."""
    if not isinstance(img, np.ndarray):
        raise InvalidImage(f"expected numpy array, got {type(img).__name__}")
    if img.dtype != np.uint8:
        raise InvalidImage(f"expected uint8 pixels, got dtype {img.dtype}")
    if img.ndim != 3:
        raise InvalidImage(f"expected shape (H, W, C), got {img.shape}")
    h, w, c = img.shape
    if c not in (1, 3):
        raise InvalidImage(f"expected 1 or 3 channels, got {c}")
    if h < 1 or w < 1:
        raise InvalidImage(f"empty image of shape {img.shape}")
    return img


def _check_pair(name: str, pair: Range, low_error: type[ValidationError] | None = None,
                bounds: Range | None = None) -> None:
    lo, hi = pair
    if lo > hi:
        raise RangeInverted(f"{name}: lower bound {lo} exceeds upper bound {hi}")
    if low_error is not None and lo < 0:
        raise low_error(f"{name}: lower bound {lo} is negative")
    if bounds is not None and (lo < bounds[0] or hi > bounds[1]):
        raise RangeOutOfBounds(f"{name}: ({lo}, {hi}) outside [{bounds[0]}, {bounds[1]}]")


def _check_probability(name: str, p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise BadProbability(f"{name}: {p} outside [0, 1]")


@dataclass(frozen=True)
class RshParams:
    """Parameters of the random shadows & highlights transform.

    The four edge ranges are fractions of the image height used to
    place the trapezoid corners; shadow/highlight ranges are
    multiplicative brightness factors; ``p`` gates whether the
    transform fires at all.
    """

    p: float = 0.5
    highlight_range: Range = (1.0, 2.0)
    shadow_range: Range = (0.0, 1.0)
    left_upper: Range = (0.0, 0.3)
    left_lower: Range = (0.4, 0.8)
    right_upper: Range = (0.0, 0.3)
    right_lower: Range = (0.4, 0.8)

    def validate(self) -> "RshParams":
        _check_probability("p", self.p)
        _check_pair("highlight_range", self.highlight_range, low_error=NegativeFactor)
        _check_pair("shadow_range", self.shadow_range, low_error=NegativeFactor)
        _check_pair("left_upper", self.left_upper, low_error=RangeOutOfBounds)
        _check_pair("left_lower", self.left_lower, low_error=RangeOutOfBounds)
        _check_pair("right_upper", self.right_upper, low_error=RangeOutOfBounds)
        _check_pair("right_lower", self.right_lower, low_error=RangeOutOfBounds)
        return self


def validate_params(params):
    """Validate any parameter object; returns it unchanged on success."""
    return params.validate()
