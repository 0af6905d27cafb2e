"""Command line surface: apply, dataset, preview, stats.

All randomness flows from ``--seed`` (there is no wall-clock fallback);
the same invocation always produces the same bytes.  Parameters come
from a JSON config file with one object per op; unknown keys are hard
errors so a typo cannot silently corrupt an experiment.

Exit codes: 0 success, 1 I/O or decode failure, 2 bad flags or config.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
from pathlib import Path

import numpy as np

from ._version import __version__
from .core import AugmentError, RecordingSource, RshParams, ValidationError
from .imgio import load_image, save_image
from .pipeline import (
    OPS,
    JobConfig,
    apply_op,
    derive_seed,
    process_dataset,
    summarize_records,
)
from .transforms import DiskParams, GammaParams, JitterParams


class ConfigError(AugmentError):
    """Malformed config file or flag combination."""


_PARAM_TYPES = {"rsh": RshParams, "gamma": GammaParams,
                "jitter": JitterParams, "disk": DiskParams}


def load_config(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    unknown = set(cfg) - set(_PARAM_TYPES)
    if unknown:
        raise ConfigError(f"config {path}: unknown section(s) {sorted(unknown)}; "
                          f"expected {sorted(_PARAM_TYPES)}")
    return cfg


def params_from_config(op: str, config: dict | None):
    """Build the op's parameter object from its config section."""
    if op == "none":
        return None
    cls = _PARAM_TYPES[op]
    section = (config or {}).get(op, {})
    if not isinstance(section, dict):
        raise ConfigError(f"config section {op!r} must be a JSON object")
    fields = {f.name: f for f in dataclasses.fields(cls)}
    unknown = set(section) - set(fields)
    if unknown:
        raise ConfigError(f"config section {op!r}: unknown key(s) {sorted(unknown)}; "
                          f"expected {sorted(fields)}")
    kwargs = {}
    for key, value in section.items():
        if key == "p":
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f"{op}.p must be a number, got {value!r}")
            kwargs[key] = float(value)
        else:
            if (not isinstance(value, (list, tuple)) or len(value) != 2
                    or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                               for v in value)):
                raise ConfigError(f"{op}.{key} must be a [lo, hi] pair, got {value!r}")
            kwargs[key] = (float(value[0]), float(value[1]))
    return cls(**kwargs)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lightaug",
        description="Deterministic lighting augmentations and batch corruption runs.")
    parser.add_argument("--version", action="version", version=f"lightaug {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    p_apply = sub.add_parser(
        "apply", formatter_class=fmt,
        help="transform a single image",
        description="Transform one image. Defaults: shadows darken by a factor in "
                    "[0,1), highlights brighten by [1,2), trapezoid edges drawn from "
                    "top fraction [0,0.3) and span [0.4,0.8) of the height.")
    p_apply.add_argument("-i", "--input", required=True, help="input image path")
    p_apply.add_argument("-o", "--output", required=True,
                         help="output image path (.png/.ppm/.pgm)")
    p_apply.add_argument("--op", required=True, choices=OPS, help="transform to apply")
    p_apply.add_argument("--seed", type=int, default=0, help="RandomSource seed")
    p_apply.add_argument("--force", action="store_true",
                         help="override gating probability p to 1")
    p_apply.add_argument("--config", help="JSON parameter file (defaults used if absent)")
    p_apply.add_argument("--verbose", action="store_true",
                         help="print the consumed uniform draws")

    p_dataset = sub.add_parser(
        "dataset", formatter_class=fmt,
        help="transform a whole directory tree",
        description="Mirror an image tree through one transform with per-file "
                    "derived seeds; use --p 1 to build a corrupted copy of a "
                    "test set. Parameter defaults without --config: rsh shadows "
                    "[0,1) / highlights [1,2), edges [0,0.3) and [0.4,0.8); "
                    "gamma [0,1.5); jitter factors [0,2) with hue [-0.5,0.5).")
    p_dataset.add_argument("--input", required=True, help="input directory")
    p_dataset.add_argument("--output", required=True, help="output directory")
    p_dataset.add_argument("--op", required=True, choices=OPS, help="transform to apply")
    p_dataset.add_argument("--p", type=float, default=None,
                           help="override gating probability (1 = corrupt every image)")
    p_dataset.add_argument("--seed", type=int, default=0, help="base seed")
    p_dataset.add_argument("--jobs", type=int, default=1, help="worker count")
    p_dataset.add_argument("--manifest", help="write the run manifest JSON here")
    p_dataset.add_argument("--config", help="JSON parameter file")

    p_preview = sub.add_parser(
        "preview", formatter_class=fmt,
        help="montage of independently seeded shadow/highlight samples",
        description="Render an RxC grid of shadow/highlight variants of one "
                    "image (gating forced on; cell i is seeded with "
                    "derive_seed(seed, 'cell/i')).")
    p_preview.add_argument("-i", "--input", required=True, help="input image path")
    p_preview.add_argument("-o", "--output", required=True, help="montage output path")
    p_preview.add_argument("--grid", default="3x3", help="grid as RxC, e.g. 3x4")
    p_preview.add_argument("--seed", type=int, default=0, help="base seed")
    p_preview.add_argument("--config", help="JSON parameter file (rsh section)")

    p_stats = sub.add_parser(
        "stats", formatter_class=fmt,
        help="summarize an existing run manifest",
        description="Print gating rate, mask-area distribution and draw "
                    "summaries from a manifest.")
    p_stats.add_argument("--manifest", required=True, help="manifest JSON path")
    p_stats.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def cmd_apply(args) -> int:
    config = load_config(args.config) if args.config else None
    params = params_from_config(args.op, config)
    if args.force and params is not None:
        params = dataclasses.replace(params, p=1.0)
    if params is not None:
        params.validate()
    img = load_image(args.input)
    rng = RecordingSource(args.seed)
    out = apply_op(img, args.op, params, rng)
    save_image(out, args.output)
    if args.verbose:
        applied = params is not None and rng.draws[0] < params.p
        print(f"applied: {applied}")
        print(f"draws: {rng.draws}")
    return 0


def cmd_dataset(args) -> int:
    config = load_config(args.config) if args.config else None
    params = params_from_config(args.op, config)
    if args.p is not None and params is not None:
        params = dataclasses.replace(params, p=args.p)
    cfg = JobConfig(input_root=Path(args.input), output_root=Path(args.output),
                    op=args.op, params=params, base_seed=args.seed, jobs=args.jobs)
    result = process_dataset(cfg)
    if args.manifest:
        manifest_path = Path(args.manifest)
        manifest_path.parent.mkdir(parents=True, exist_ok=True)
        manifest_path.write_text(json.dumps(result.manifest, indent=2) + "\n",
                                 encoding="utf-8")
    _print_summary(result.summary, args.output)
    return 0


def _print_summary(summary: dict, output_root: str) -> None:
    print("summary:")
    print(f"  images:  {summary['images']} processed, "
          f"{len(summary['failures'])} failed")
    print(f"  applied: {summary['applied']}/{summary['images']} "
          f"(gating rate {summary['gating_rate']:.3f})")
    if summary["mask_area"] is not None:
        ma = summary["mask_area"]
        print(f"  mask area: mean {ma['mean']:.4f}, stddev {ma['stddev']:.4f} "
              f"over {ma['count']} applied images")
    print(f"  draws:   {summary['draws']['total']} total, "
          f"{summary['draws']['mean_per_image']:.2f} per image")
    print(f"  output:  {output_root}")
    for failure in summary["failures"]:
        print(f"  FAILED {failure['relative_path']}: {failure['error']}")


_GRID_RE = re.compile(r"^(\d+)x(\d+)$")


def cmd_preview(args) -> int:
    match = _GRID_RE.match(args.grid)
    if match is None:
        raise ConfigError(f"--grid must look like 3x3, got {args.grid!r}")
    rows, cols = int(match.group(1)), int(match.group(2))
    if rows < 1 or cols < 1:
        raise ConfigError(f"--grid needs at least 1x1, got {args.grid!r}")
    config = load_config(args.config) if args.config else None
    params = params_from_config("rsh", config)
    params = dataclasses.replace(params, p=1.0).validate()
    img = load_image(args.input)
    cells = []
    for i in range(rows * cols):
        rng = RecordingSource(derive_seed(args.seed, f"cell/{i}"))
        cells.append(apply_op(img, "rsh", params, rng))
    grid = np.concatenate(
        [np.concatenate(cells[r * cols:(r + 1) * cols], axis=1) for r in range(rows)],
        axis=0)
    save_image(grid, args.output)
    return 0


def cmd_stats(args) -> int:
    try:
        manifest = json.loads(Path(args.manifest).read_text(encoding="utf-8"))
        if not isinstance(manifest, dict) or not isinstance(manifest.get("records"), list):
            raise ValueError("not a run manifest")
        summary = summarize_records(manifest)
    except (OSError, ValueError, KeyError, TypeError, AugmentError) as exc:
        print(f"error: cannot summarize {args.manifest}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(summary, indent=2))
        return 0
    print(f"records:     {summary['images']} ({len(summary['failures'])} failures)")
    print(f"gating rate: {summary['gating_rate']:.4f}")
    if summary["mask_area"] is not None:
        ma = summary["mask_area"]
        print(f"mask area:   mean {ma['mean']:.4f}, stddev {ma['stddev']:.4f}")
        width = max(ma["histogram"]) or 1
        for i, count in enumerate(ma["histogram"]):
            bar = "#" * round(40 * count / width)
            print(f"  [{i/10:.1f},{(i+1)/10:.1f}) {count:6d} {bar}")
    gate_mean = summary["draws"]["gate_draw_mean"]
    print(f"draws:       {summary['draws']['total']} total, "
          f"{summary['draws']['mean_per_image']:.2f} per image, "
          f"gate draw mean {'n/a' if gate_mean is None else f'{gate_mean:.4f}'}")
    return 0


_COMMANDS = {"apply": cmd_apply, "dataset": cmd_dataset,
             "preview": cmd_preview, "stats": cmd_stats}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AugmentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
