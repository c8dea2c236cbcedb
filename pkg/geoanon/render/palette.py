import colorsys
from matplotlib import colors

GOLDEN_RATIO_CONJUGATE = 0.618033988749895
LIGHTNESS = 0.55
SATURATION = 0.65


def region_color(index: int) -> str:
    """Fixed hex colour of an aggregated region, spread by Fibonacci hashing."""
    hue = (index * GOLDEN_RATIO_CONJUGATE) % 1.0
    return colors.to_hex(colorsys.hls_to_rgb(hue, LIGHTNESS, SATURATION))
