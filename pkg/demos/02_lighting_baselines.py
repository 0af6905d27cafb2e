"""The three comparison lighting transforms on one image.

Gamma correction bends the tone curve, color jitter perturbs
brightness/contrast/saturation/hue, and disk illumination brightens or
darkens a circular spot.  All three share the gating-and-draws contract
of the shadows/highlights transform, so batch runs of any of them are
replayable from their manifests.
"""

import numpy as np

from lightaug import (
    DiskParams,
    GammaParams,
    JitterParams,
    RecordingSource,
    color_jitter,
    disk_illumination,
    random_gamma,
    save_image,
)

gen = np.random.default_rng(7)
photo = gen.integers(30, 220, size=(96, 96, 3), dtype=np.uint8)
save_image(photo, "demo_output/baseline_input.ppm")

# Gamma: exponent drawn from [0, 1.5); below 1 lifts shadows, above darkens.
rng = RecordingSource(11)
out = random_gamma(photo, GammaParams(p=1.0), rng)
save_image(out, "demo_output/gamma.ppm")
print(f"gamma exponent: {rng.draws[1] * 1.5:.3f}")

# Jitter: four factor draws in a fixed order (brightness, contrast,
# saturation, hue) so the sequence replays deterministically.
rng = RecordingSource(12)
out = color_jitter(photo, JitterParams(p=1.0), rng)
save_image(out, "demo_output/jitter.ppm")
names = ("brightness", "contrast", "saturation", "hue")
print("jitter draws:", {n: round(u, 3) for n, u in zip(names, rng.draws[1:])})

# Disk: center, radius (fraction of the short side) and factor.
rng = RecordingSource(13)
out = disk_illumination(photo, DiskParams(p=1.0), rng)
save_image(out, "demo_output/disk.ppm")
print(f"disk center draws: ({rng.draws[1]:.3f}, {rng.draws[2]:.3f})")
