from __future__ import annotations

import numpy as np
import pytest

from ratmap.errors import ConfigError
from ratmap.poly import Polynomial
from ratmap.rational import RationalMap
from ratmap.render import max_iteration_mask, render_julia
from ratmap.report import RenderConfig


def test_ppm_header_and_size():
    r = RationalMap(Polynomial([1, 0, 0]), Polynomial([1]))
    cfg = RenderConfig(width=64, height=48, window=(-1.5, 1.5, -1.5, 1.5), max_iter=40)
    data = render_julia(r, cfg)
    assert data.startswith(b"P6\n64 48\n255\n")
    header = len(b"P6\n64 48\n255\n")
    assert len(data) - header == 64 * 48 * 3


def test_render_deterministic():
    r = RationalMap(Polynomial([1, 0, -2]), Polynomial([1]))
    cfg = RenderConfig(width=50, height=50, window=(-2.2, 2.2, -2.2, 2.2), max_iter=50)
    assert render_julia(r, cfg) == render_julia(r, cfg)


def test_degenerate_window_rejected():
    r = RationalMap(Polynomial([1, 0, 0]), Polynomial([1]))
    cfg = RenderConfig(width=10, height=10, window=(0.0, 0.0, -1.0, 1.0))
    with pytest.raises(ConfigError):
        render_julia(r, cfg)


def test_unit_circle_locus_small():
    # z^2 at modest resolution: uncaptured pixels hug the unit circle.
    # the iteration budget is matched to the pixel scale; a much larger
    # budget captures everything except the measure-zero circle itself
    r = RationalMap(Polynomial([1, 0, 0]), Polynomial([1]))
    cfg = RenderConfig(width=160, height=160, window=(-1.5, 1.5, -1.5, 1.5), max_iter=8)
    mask = max_iteration_mask(r, cfg)
    ys, xs = np.nonzero(mask)
    assert len(xs) > 0
    cx = -1.5 + 3.0 * (xs + 0.5) / 160
    cy = 1.5 - 3.0 * (ys + 0.5) / 160
    z = cx + 1j * cy
    radius_err = np.abs(np.abs(z) - 1.0)
    assert (radius_err < 0.05).mean() > 0.9
