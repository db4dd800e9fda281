"""Scalar helpers shared by every geometric kernel.

All kernels are written against plain arithmetic operators so they run
unchanged on Python floats (the standard 53-bit path) or on mpmath
floats (the extended path used after a nudge).  Only the handful of
transcendental calls need dispatching, which happens here.
"""

import math

import mpmath

# Extended scalars carry at least the mantissa width of IEEE binary128
# so that eps128-sized nudges stay resolvable.
EXTENDED_PRECISION_BITS = 128

_mp_ext = mpmath.mp.clone()
_mp_ext.prec = EXTENDED_PRECISION_BITS

EPS64 = 2.0 ** -52
EPS128 = 2.0 ** -112


def sqrt(x):
    if type(x) is float:
        return math.sqrt(x)
    return mpmath.sqrt(x)


def atan(x):
    if type(x) is float:
        return math.atan(x)
    return mpmath.atan(x)


def atan2(y, x):
    if type(y) is float and type(x) is float:
        return math.atan2(y, x)
    return mpmath.atan2(y, x)


def atanh(x):
    if type(x) is float:
        return math.atanh(x)
    return mpmath.atanh(x)


def asinh(x):
    if type(x) is float:
        return math.asinh(x)
    return mpmath.asinh(x)


def fabs(x):
    if type(x) is float:
        return math.fabs(x)
    return abs(x)


def copysign(x, y):
    if type(x) is float and type(y) is float:
        return math.copysign(x, y)
    return abs(x) if y >= 0 else -abs(x)


def is_finite(x):
    if type(x) is float:
        return math.isfinite(x)
    return mpmath.isfinite(x)


def to_float(x):
    """Round any supported scalar to a plain double."""
    return float(x)


def extended(x):
    """Lift a float (or exact string/int) into the extended scalar type."""
    return _mp_ext.mpf(x)


def extended_context():
    return _mp_ext
