"""Deterministic, seedable lighting augmentations.

A small numpy library plus batch CLI for lighting-robustness work:
darken a random full-width trapezoid and brighten its complement, or
apply the gamma / color-jitter / disk-illumination baselines, over
single images or whole directory trees with exact per-seed replay.
"""

from ._version import __version__
from .core import (
    AugmentError,
    BadProbability,
    ChannelMismatch,
    InvalidImage,
    NegativeFactor,
    RandomSource,
    Range,
    RangeInverted,
    RangeOutOfBounds,
    RecordingSource,
    RshParams,
    ValidationError,
    ensure_image,
    quantize,
    scale_unit,
    uniform_in,
    validate_params,
)
from .geometry import (
    Trapezoid,
    invert_mask,
    mask_area_fraction,
    rasterize_mask,
    sample_trapezoid,
    trapezoid_from_draws,
)
from .color import hsv_to_rgb, luma, rgb_to_hsv
from .transforms import (
    DiskParams,
    GammaParams,
    JitterParams,
    adjust_brightness,
    apply_rsh,
    color_jitter,
    disk_illumination,
    random_gamma,
)
from .imgio import (
    CorruptFile,
    IoFailure,
    SUPPORTED_EXTENSIONS,
    UnsupportedDepth,
    UnsupportedFormat,
    list_dataset,
    load_image,
    save_image,
)
from .pipeline import (
    EmptyDatasetError,
    JobConfig,
    ManifestRecord,
    OPS,
    apply_op,
    compute_ttd,
    default_params,
    derive_seed,
    output_relative_path,
    process_dataset,
    process_image,
    summarize_records,
)

__all__ = [
    "__version__",
    "AugmentError", "ValidationError", "RangeInverted", "RangeOutOfBounds",
    "NegativeFactor", "BadProbability", "InvalidImage", "ChannelMismatch",
    "RandomSource", "RecordingSource", "Range", "RshParams",
    "ensure_image", "quantize", "scale_unit", "uniform_in", "validate_params",
    "Trapezoid", "sample_trapezoid", "trapezoid_from_draws",
    "rasterize_mask", "invert_mask", "mask_area_fraction",
    "luma", "rgb_to_hsv", "hsv_to_rgb",
    "GammaParams", "JitterParams", "DiskParams",
    "adjust_brightness", "apply_rsh", "random_gamma", "color_jitter",
    "disk_illumination",
    "UnsupportedFormat", "CorruptFile", "UnsupportedDepth", "IoFailure",
    "SUPPORTED_EXTENSIONS", "load_image", "save_image", "list_dataset",
    "EmptyDatasetError", "JobConfig", "ManifestRecord", "OPS",
    "apply_op", "default_params", "derive_seed", "output_relative_path",
    "process_image", "process_dataset", "summarize_records", "compute_ttd",
]
