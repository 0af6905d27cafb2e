import numpy as np
import pytest

from lightaug import save_image


@pytest.fixture
def rgb_image():
    gen = np.random.default_rng(1234)
    return gen.integers(0, 256, size=(24, 32, 3), dtype=np.uint8)


@pytest.fixture
def gray_image():
    gen = np.random.default_rng(5678)
    return gen.integers(0, 256, size=(16, 20, 1), dtype=np.uint8)


def random_image(gen, max_side=32, min_side=1, channels=None):
    h = int(gen.integers(min_side, max_side + 1))
    w = int(gen.integers(min_side, max_side + 1))
    c = channels if channels is not None else int(gen.choice([1, 3]))
    return gen.integers(0, 256, size=(h, w, c), dtype=np.uint8)


def write_tree(root, count, gen, ext=".ppm", size=(6, 8), nested=True):
    """Write `count` small synthetic images under `root`; returns rel paths."""
    rels = []
    for i in range(count):
        sub = f"sub{i % 3}/" if nested and i % 2 else ""
        rel = f"{sub}img{i:04d}{ext}"
        img = gen.integers(0, 256, size=(size[0], size[1], 3), dtype=np.uint8)
        save_image(img, root / rel)
        rels.append(rel)
    return sorted(rels)
