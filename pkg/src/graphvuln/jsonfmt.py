"""Diff-stable JSON number rendering.

Real values are rounded through a 12-significant-digit decimal so their
JSON text is stable across runs and platforms; integers pass through
untouched and infinities become the strings "inf"/"-inf" (JSON has no
infinity literal).
"""

import math


def fmt_real(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return float(f"{float(x):.12g}")


def fmt_metric(x):
    """Render a numeric field: ints stay ints, reals get 12-digit rounding."""
    if x is None or isinstance(x, bool) or isinstance(x, int):
        return x
    return fmt_real(x)
