"""Dataset-scale application: per-image seeds, parallel workers, manifests.

Each image gets its own RandomSource seeded from ``derive_seed(base,
relative_path)``, so outputs do not depend on traversal order, worker
count, or which other files happen to be present.  A run produces a
manifest recording, per image, the derived seed, the consumed draws and
content digests; replaying any record with its seed reproduces the
output byte for byte.

Seed derivation is pinned: SHA-256 over the 8-byte little-endian base
seed followed by the UTF-8 relative path, taking the first 8 digest
bytes as a little-endian integer.
"""

from __future__ import annotations

import hashlib
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from pathlib import Path

import numpy as np

from ._version import __version__
from .core import (
    AugmentError,
    RangeOutOfBounds,
    RecordingSource,
    RshParams,
    ValidationError,
)
from .geometry import mask_area_fraction, rasterize_mask, trapezoid_from_draws
from .imgio import list_dataset, load_image, save_image
from .transforms import (
    DiskParams,
    GammaParams,
    JitterParams,
    apply_rsh,
    color_jitter,
    disk_illumination,
    random_gamma,
)

OPS = ("rsh", "gamma", "jitter", "disk", "none")

_MASK64 = 0xFFFFFFFFFFFFFFFF


class EmptyDatasetError(AugmentError):
    """Input tree holds no decodable image."""


def derive_seed(base_seed: int, relative_path: str) -> int:
    """Stable per-file 64-bit seed from (base seed, relative path)."""
    payload = struct.pack("<Q", base_seed & _MASK64) + relative_path.encode("utf-8")
    digest = hashlib.sha256(payload).digest()
    return int.from_bytes(digest[:8], "little")


def default_params(op: str):
    """Default parameter object for an op name (None for 'none')."""
    defaults = {
        "rsh": RshParams,
        "gamma": GammaParams,
        "jitter": JitterParams,
        "disk": DiskParams,
        "none": lambda: None,
    }
    if op not in defaults:
        raise ValidationError(f"unknown op {op!r}; expected one of {', '.join(OPS)}")
    return defaults[op]()


def apply_op(img: np.ndarray, op: str, params, rng) -> np.ndarray:
    """Dispatch a single transform by op name."""
    if op == "rsh":
        return apply_rsh(img, params, rng)
    if op == "gamma":
        return random_gamma(img, params, rng)
    if op == "jitter":
        return color_jitter(img, params, rng)
    if op == "disk":
        return disk_illumination(img, params, rng)
    if op == "none":
        return img.copy()
    raise ValidationError(f"unknown op {op!r}; expected one of {', '.join(OPS)}")


@dataclass(frozen=True)
class JobConfig:
    """One batch run over a directory tree."""

    input_root: Path
    output_root: Path
    op: str
    params: object | None = None
    base_seed: int = 0
    jobs: int = 1

    def resolved_params(self):
        if self.op == "none":
            return None
        params = self.params if self.params is not None else default_params(self.op)
        return params.validate()


@dataclass
class ManifestRecord:
    """Everything needed to replay one image of a run."""

    relative_path: str
    derived_seed: int
    applied: bool
    draws: list[float]
    input_digest: str
    output_digest: str
    mask_area_fraction: float | None = None

    def to_dict(self) -> dict:
        d = {
            "relative_path": self.relative_path,
            "derived_seed": self.derived_seed,
            "applied": self.applied,
            "draws": self.draws,
            "input_digest": self.input_digest,
            "output_digest": self.output_digest,
        }
        if self.mask_area_fraction is not None:
            d["mask_area_fraction"] = self.mask_area_fraction
        return d


@dataclass
class DatasetResult:
    manifest: dict
    summary: dict
    records: list[ManifestRecord] = field(default_factory=list)


def output_relative_path(relative_path: str, op: str) -> str:
    """Where a transformed image lands relative to the output root.

    Lossy inputs come back as PNG because only lossless formats are
    written; the passthrough op copies bytes, so it keeps the name.
    """
    if op == "none":
        return relative_path
    lower = relative_path.lower()
    for ext in (".jpg", ".jpeg"):
        if lower.endswith(ext):
            return relative_path[: -len(ext)] + ".png"
    return relative_path


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def process_image(input_path: Path, output_path: Path, op: str, params,
                  seed: int, relative_path: str = "") -> ManifestRecord:
    """Transform one file with an explicit seed and record the evidence."""
    input_bytes = Path(input_path).read_bytes()
    input_digest = _sha256(input_bytes)
    img = load_image(input_path)
    if op == "none":
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_bytes(input_bytes)
        return ManifestRecord(
            relative_path=relative_path, derived_seed=seed, applied=False,
            draws=[], input_digest=input_digest, output_digest=input_digest)
    rng = RecordingSource(seed)
    out = apply_op(img, op, params, rng)
    save_image(out, output_path)
    output_digest = _sha256(Path(output_path).read_bytes())
    applied = rng.draws[0] < params.p
    area = None
    if op == "rsh" and applied:
        height, width = img.shape[:2]
        trap = trapezoid_from_draws(params, height, tuple(rng.draws[1:5]))
        area = mask_area_fraction(rasterize_mask(trap, width, height))
    return ManifestRecord(
        relative_path=relative_path, derived_seed=seed, applied=applied,
        draws=list(rng.draws), input_digest=input_digest,
        output_digest=output_digest, mask_area_fraction=area)


def process_dataset(cfg: JobConfig) -> DatasetResult:
    """Apply one op to every image under a tree, mirroring its layout.

    Per-file decode failures are recorded and skipped; an input with no
    decodable image at all is a hard error.  The result is byte-identical
    for equal (base_seed, input set) regardless of worker count.
    """
    params = cfg.resolved_params()  # validated before any file is touched
    input_root = Path(cfg.input_root)
    output_root = Path(cfg.output_root)
    paths = list_dataset(input_root)
    if not paths:
        raise EmptyDatasetError(f"{input_root}: no supported images found")

    def work(rel: str):
        seed = derive_seed(cfg.base_seed, rel)
        out_rel = output_relative_path(rel, cfg.op)
        try:
            record = process_image(input_root / rel, output_root / out_rel,
                                   cfg.op, params, seed, relative_path=rel)
        except AugmentError as exc:
            return rel, None, str(exc)
        return rel, record, None

    jobs = max(1, int(cfg.jobs))
    if jobs == 1:
        outcomes = [work(rel) for rel in paths]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(work, paths))

    records = [rec for _, rec, err in outcomes if err is None]
    failures = [{"relative_path": rel, "error": err}
                for rel, _, err in outcomes if err is not None]
    if not records:
        raise EmptyDatasetError(f"{input_root}: no decodable images "
                                f"({len(failures)} failures)")
    records.sort(key=lambda r: r.relative_path)
    failures.sort(key=lambda f: f["relative_path"])

    manifest = {
        "tool": "lightaug",
        "tool_version": __version__,
        # execution details (roots, worker count) are deliberately not
        # echoed: equal (op, seed, params, inputs) must give equal manifests
        "config": {
            "op": cfg.op,
            "base_seed": cfg.base_seed,
            "params": None if params is None else asdict(params),
        },
        "records": [r.to_dict() for r in records],
        "failures": failures,
    }
    summary = summarize_records(manifest)
    return DatasetResult(manifest=manifest, summary=summary, records=records)


def summarize_records(manifest: dict) -> dict:
    """Gating rate, mask-area distribution and failure list of a manifest."""
    records = manifest.get("records", [])
    if not records:
        raise EmptyDatasetError("manifest has no records")
    applied = sum(1 for r in records if r["applied"])
    areas = [r["mask_area_fraction"] for r in records
             if r.get("mask_area_fraction") is not None]
    mask_area = None
    if areas:
        arr = np.asarray(areas, dtype=np.float64)
        mask_area = {
            "count": len(areas),
            "mean": float(arr.mean()),
            "stddev": float(arr.std()),
            "histogram": _histogram(arr),
        }
    draws_per_record = [len(r["draws"]) for r in records]
    first_draws = [r["draws"][0] for r in records if r["draws"]]
    return {
        "images": len(records),
        "applied": applied,
        "gating_rate": applied / len(records),
        "mask_area": mask_area,
        "draws": {
            "total": int(sum(draws_per_record)),
            "mean_per_image": float(np.mean(draws_per_record)),
            "gate_draw_mean": float(np.mean(first_draws)) if first_draws else None,
        },
        "failures": manifest.get("failures", []),
    }


def _histogram(values: np.ndarray, bins: int = 10) -> list[int]:
    counts, _ = np.histogram(values, bins=bins, range=(0.0, 1.0))
    return counts.tolist()


def compute_ttd(train_error: float, test_error: float) -> float:
    """Train/test difference of error rates: test minus train.

    Positive values indicate over-fitting; negative values indicate
    over-regularization.
    """
    for name, value in (("train_error", train_error), ("test_error", test_error)):
        if not 0.0 <= value <= 1.0:
            raise RangeOutOfBounds(f"{name}: {value} outside [0, 1]")
    return test_error - train_error
