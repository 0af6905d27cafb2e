"""Replay a manifest record and verify it byte-for-byte.

A run manifest stores, per image, the derived seed and the SHA-256 of
the bytes that were written.  Re-running the transform with that seed
must reproduce the digest exactly; this is the invariant that makes a
corrupted dataset auditable long after the run.
"""

import hashlib
from pathlib import Path

import numpy as np

from lightaug import (
    GammaParams,
    JobConfig,
    RandomSource,
    apply_op,
    derive_seed,
    load_image,
    process_dataset,
    save_image,
)

root = Path("demo_output/replay")
gen = np.random.default_rng(9)
for i in range(8):
    img = gen.integers(0, 256, size=(24, 24, 3), dtype=np.uint8)
    save_image(img, root / "in" / f"img{i}.ppm")

params = GammaParams(p=1.0)
cfg = JobConfig(root / "in", root / "out", "gamma", params, base_seed=42)
result = process_dataset(cfg)

for record in result.records:
    # derive the seed from scratch; it depends only on (base_seed, path)
    seed = derive_seed(42, record.relative_path)
    assert seed == record.derived_seed

    img = load_image(root / "in" / record.relative_path)
    out = apply_op(img, "gamma", params, RandomSource(seed))
    save_image(out, root / "replayed.ppm")
    digest = hashlib.sha256((root / "replayed.ppm").read_bytes()).hexdigest()
    status = "ok" if digest == record.output_digest else "MISMATCH"
    print(f"{record.relative_path}: {status} ({digest[:16]}...)")
