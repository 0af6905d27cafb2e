import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightaug import (
    BadProbability,
    NegativeFactor,
    RandomSource,
    RangeInverted,
    RecordingSource,
    RshParams,
    ensure_image,
    InvalidImage,
    quantize,
    uniform_in,
    validate_params,
)

from helpers import ScriptedSource


class TestRandomSource:
    def test_equal_seeds_equal_sequences(self):
        a = RandomSource(987654321)
        b = RandomSource(987654321)
        assert [a.next_uniform() for _ in range(1_000_000)] == \
               [b.next_uniform() for _ in range(1_000_000)]

    def test_different_seeds_diverge(self):
        a = [RandomSource(1).next_uniform() for _ in range(10)]
        b = [RandomSource(2).next_uniform() for _ in range(10)]
        assert a != b

    def test_draws_in_unit_interval(self):
        rng = RandomSource(0)
        for _ in range(10_000):
            u = rng.next_uniform()
            assert 0.0 <= u < 1.0

    def test_seed_masked_to_64_bits(self):
        wide = RandomSource(2**64 + 5)
        narrow = RandomSource(5)
        assert wide.next_uniform() == narrow.next_uniform()

    def test_recording_source_logs_draws(self):
        rec = RecordingSource(3)
        plain = RandomSource(3)
        values = [rec.next_uniform() for _ in range(5)]
        assert rec.draws == values == [plain.next_uniform() for _ in range(5)]


class TestUniformIn:
    def test_zero_width_range_returns_lo(self):
        rng = ScriptedSource([0.77])
        assert uniform_in(rng, 0.4, 0.4) == 0.4
        assert rng.consumed == 1  # degenerate range still costs a draw

    def test_midpoint_draw(self):
        v = uniform_in(ScriptedSource([0.5]), 0.4, 0.8)
        assert v == 0.4 + 0.5 * (0.8 - 0.4)  # same direct arithmetic, bit for bit
        assert v == pytest.approx(0.6)

    def test_zero_draw_hits_lower_bound(self):
        assert uniform_in(ScriptedSource([0.0]), 1.0, 2.0) == 1.0

    def test_inverted_range_rejected(self):
        with pytest.raises(RangeInverted):
            uniform_in(RandomSource(0), 2.0, 1.0)

    @settings(max_examples=200)
    @given(
        lo=st.floats(-1e6, 1e6),
        span=st.floats(0, 1e6),
        seed=st.integers(0, 2**64 - 1),
    )
    def test_result_always_in_half_open_range(self, lo, span, seed):
        hi = lo + span
        rng = RandomSource(seed)
        for _ in range(20):
            v = uniform_in(rng, lo, hi)
            assert lo <= v
            assert v < hi or (lo == hi and v == lo)

    def test_top_end_stays_open_even_for_max_draw(self):
        v = uniform_in(ScriptedSource([math.nextafter(1.0, 0.0)]), 1.0, 2.0)
        assert v < 2.0


class TestQuantize:
    def test_round_half_away_from_zero(self):
        vals = np.array([0.4, 0.5, 1.5, 2.5, 127.49, 127.5])
        assert quantize(vals).tolist() == [0, 1, 2, 3, 127, 128]

    def test_clamps_to_channel_bounds(self):
        assert quantize(np.array([-3.2, 270.0, 255.49, 255.5])).tolist() == \
            [0, 255, 255, 255]

    def test_identity_on_integers(self):
        v = np.arange(256, dtype=np.float64)
        assert np.array_equal(quantize(v), np.arange(256, dtype=np.uint8))


class TestRshParams:
    def test_default_values(self):
        p = RshParams()
        assert p.highlight_range == (1.0, 2.0)
        assert p.shadow_range == (0.0, 1.0)
        assert p.left_upper == (0.0, 0.3)
        assert p.right_upper == (0.0, 0.3)
        assert p.left_lower == (0.4, 0.8)
        assert p.right_lower == (0.4, 0.8)

    def test_defaults_validate(self):
        p = RshParams()
        assert validate_params(p) is p

    def test_degenerate_but_legal(self):
        zero = (0.0, 0.0)
        p = RshParams(p=0.0, highlight_range=zero, shadow_range=zero,
                      left_upper=zero, left_lower=zero,
                      right_upper=zero, right_lower=zero)
        assert p.validate() is p

    def test_inverted_range_rejected(self):
        with pytest.raises(RangeInverted, match="shadow_range"):
            RshParams(shadow_range=(0.5, 0.2)).validate()

    def test_negative_factor_rejected(self):
        with pytest.raises(NegativeFactor, match="shadow_range"):
            RshParams(shadow_range=(-0.1, 0.5)).validate()
        with pytest.raises(NegativeFactor, match="highlight_range"):
            RshParams(highlight_range=(-1.0, 2.0)).validate()

    @pytest.mark.parametrize("p", [-0.01, 1.01, 7.0])
    def test_bad_probability_rejected(self, p):
        with pytest.raises(BadProbability, match="p"):
            RshParams(p=p).validate()


class TestEnsureImage:
    def test_accepts_gray_and_rgb(self, rgb_image, gray_image):
        assert ensure_image(rgb_image) is rgb_image
        assert ensure_image(gray_image) is gray_image

    @pytest.mark.parametrize("bad", [
        np.zeros((4, 4), np.uint8),            # missing channel axis
        np.zeros((4, 4, 2), np.uint8),         # bad channel count
        np.zeros((4, 4, 3), np.float64),       # wrong dtype
        np.zeros((0, 4, 3), np.uint8),         # empty
    ])
    def test_rejects_malformed(self, bad):
        with pytest.raises(InvalidImage):
            ensure_image(bad)
