"""Render escape/attraction-time pictures to binary PPM files.

The iteration budget is deliberately modest: pixels are colored by the
time it takes their orbit to be captured by an attracting cycle (or to
reach the neighbourhood of infinity), and pixels surviving the whole
budget trace the Julia set at the pixel scale.
"""

from ratmap.poly import Polynomial
from ratmap.rational import RationalMap
from ratmap.render import render_julia
from ratmap.report import RenderConfig

jobs = [
    ("chebyshev.ppm", RationalMap(Polynomial([1, 0, -2]), Polynomial([1])),
     RenderConfig(width=400, height=400, window=(-2.2, 2.2, -2.2, 2.2), max_iter=12)),
    ("circle.ppm", RationalMap(Polynomial([1, 0, 0]), Polynomial([1])),
     RenderConfig(width=400, height=400, window=(-1.5, 1.5, -1.5, 1.5), max_iter=10)),
    ("basilica.ppm", RationalMap(Polynomial([1, 0, -1]), Polynomial([1])),
     RenderConfig(width=400, height=400, window=(-1.8, 1.8, -1.4, 1.4), max_iter=30)),
]

for name, r, cfg in jobs:
    data = render_julia(r, cfg)
    with open(name, "wb") as fh:
        fh.write(data)
    print(f"wrote {name} ({len(data)} bytes, {cfg.width}x{cfg.height})")
