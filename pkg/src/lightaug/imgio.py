"""Image decode/encode and dataset traversal.

Supported on the way in: PNG and JPEG (via Pillow) plus binary PPM (P6)
and PGM (P5) with maxval 255.  On the way out only lossless formats are
written (PNG, PPM, PGM); JPEG output is refused on purpose, because a
lossy encoder would break digest-based replay of batch runs.  16-bit
sources are rejected rather than silently downsampled.
"""

from __future__ import annotations

import io
import os
import re
from pathlib import Path

import numpy as np
import PIL.Image

from .core import AugmentError, ensure_image

SUPPORTED_EXTENSIONS = {".png", ".jpg", ".jpeg", ".ppm", ".pgm"}

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"
_JPEG_MAGIC = b"\xff\xd8"


class UnsupportedFormat(AugmentError):
    """File format or pixel layout outside the supported set."""


class CorruptFile(AugmentError):
    """File recognized but not decodable."""


class UnsupportedDepth(AugmentError):
    """More than 8 bits per channel."""


class IoFailure(AugmentError):
    """Underlying filesystem error."""


def load_image(path) -> np.ndarray:
    """Decode a PNG, JPEG, PPM (P6) or PGM (P5) file to a uint8 array."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    if data.startswith(_PNG_MAGIC) or data.startswith(_JPEG_MAGIC):
        return _decode_pillow(data, path)
    if data[:2] in (b"P6", b"P5"):
        return _decode_pnm(data, path)
    raise UnsupportedFormat(f"{path}: not a PNG, JPEG, PPM (P6) or PGM (P5) file")


def _decode_pillow(data: bytes, path: Path) -> np.ndarray:
    try:
        with PIL.Image.open(io.BytesIO(data)) as im:
            im.load()
            mode = im.mode
            if mode in ("I", "I;16", "I;16B", "I;16L", "I;16N"):
                raise UnsupportedDepth(f"{path}: 16-bit images are not supported")
            if mode in ("LA", "RGBA", "PA") or (mode == "P" and "transparency" in im.info):
                raise UnsupportedFormat(f"{path}: alpha channels are not supported")
            if mode == "1":
                im = im.convert("L")
            elif mode == "P":
                im = im.convert("RGB")  # palette entries are 8-bit RGB
            if im.mode == "L":
                arr = np.asarray(im, dtype=np.uint8)[:, :, None]
            elif im.mode == "RGB":
                arr = np.asarray(im, dtype=np.uint8)
            else:
                raise UnsupportedFormat(f"{path}: unsupported pixel mode {mode!r}")
    except AugmentError:
        raise
    except Exception as exc:  # Pillow raises a mix of OSError/SyntaxError subclasses
        raise CorruptFile(f"{path}: {exc}") from exc
    return np.ascontiguousarray(arr)


_PNM_HEADER = re.compile(
    rb"^(P[56])\s(?:\s*(?:#[^\n]*\n)?)*\s*(\d+)\s(?:\s*(?:#[^\n]*\n)?)*\s*(\d+)"
    rb"\s(?:\s*(?:#[^\n]*\n)?)*\s*(\d+)\s"
)


def _decode_pnm(data: bytes, path: Path) -> np.ndarray:
    match = _PNM_HEADER.match(data)
    if match is None:
        raise CorruptFile(f"{path}: malformed PNM header")
    magic, width, height, maxval = (match.group(1), int(match.group(2)),
                                    int(match.group(3)), int(match.group(4)))
    channels = 3 if magic == b"P6" else 1
    if maxval > 255:
        raise UnsupportedDepth(f"{path}: maxval {maxval} exceeds 8 bits")
    if maxval != 255:
        raise UnsupportedFormat(f"{path}: only maxval 255 is supported, got {maxval}")
    if width < 1 or height < 1:
        raise CorruptFile(f"{path}: bad dimensions {width}x{height}")
    raster = data[match.end():]
    expected = width * height * channels
    if len(raster) < expected:
        raise CorruptFile(f"{path}: raster truncated ({len(raster)} of {expected} bytes)")
    pixels = np.frombuffer(raster[:expected], dtype=np.uint8)
    return pixels.reshape(height, width, channels).copy()


def save_image(img: np.ndarray, path) -> None:
    """Encode to PNG, PPM or PGM chosen by extension; lossless only."""
    ensure_image(img)
    path = Path(path)
    ext = path.suffix.lower()
    if ext in (".jpg", ".jpeg"):
        raise UnsupportedFormat(
            f"{path}: JPEG output is not supported (lossy encoding would break "
            "manifest replay); use .png, .ppm or .pgm")
    if ext == ".png":
        payload = _encode_png(img)
    elif ext == ".ppm":
        if img.shape[2] != 3:
            raise UnsupportedFormat(f"{path}: PPM (P6) needs 3 channels, image has {img.shape[2]}")
        payload = _pnm_header(b"P6", img) + img.tobytes()
    elif ext == ".pgm":
        if img.shape[2] != 1:
            raise UnsupportedFormat(f"{path}: PGM (P5) needs 1 channel, image has {img.shape[2]}")
        payload = _pnm_header(b"P5", img) + img.tobytes()
    else:
        raise UnsupportedFormat(f"{path}: unsupported output extension {ext!r}")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def _pnm_header(magic: bytes, img: np.ndarray) -> bytes:
    h, w = img.shape[:2]
    return b"%s\n%d %d\n255\n" % (magic, w, h)


def _encode_png(img: np.ndarray) -> bytes:
    if img.shape[2] == 1:
        pil = PIL.Image.fromarray(img[:, :, 0], mode="L")
    else:
        pil = PIL.Image.fromarray(img, mode="RGB")
    buf = io.BytesIO()
    # fixed encoder settings keep equal pixels -> equal bytes within a run
    pil.save(buf, format="PNG", compress_level=6, optimize=False)
    return buf.getvalue()


def list_dataset(root) -> list[str]:
    """Recursively list supported images, sorted by relative posix path.

    Symlinks are not followed; the result is independent of filesystem
    enumeration order.
    """
    root = Path(root)
    if not root.is_dir():
        raise IoFailure(f"{root}: not a directory")
    found: list[str] = []
    for dirpath, dirnames, filenames in os.walk(root, followlinks=False):
        dirnames.sort()
        for name in filenames:
            full = Path(dirpath) / name
            if full.is_symlink():
                continue
            if full.suffix.lower() in SUPPORTED_EXTENSIONS:
                found.append(full.relative_to(root).as_posix())
    return sorted(found)
