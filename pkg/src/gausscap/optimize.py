"""Bounded one-dimensional minimization by golden-section search."""

import math

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(f, a, b, xtol=1e-12, maxiter=300):
    """Minimize a unimodal f on [a, b]; returns (x, f(x)).

    Interval shrinks by the golden ratio each step; xtol is absolute in x.
    """
    if b < a:
        a, b = b, a
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if b - a <= xtol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def golden_section_max(f, a, b, xtol=1e-12, maxiter=300):
    """Maximize a unimodal f on [a, b]; returns (x, f(x))."""
    x, fneg = golden_section_min(lambda t: -f(t), a, b, xtol, maxiter)
    return x, -fneg
